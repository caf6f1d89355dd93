#ifndef UNCOMMON_RENDER_HPP
#define UNCOMMON_RENDER_HPP

#include "uncommon/imgcore.hpp"
#include "uncommon/saliency.hpp"
#include "uncommon/segmenter.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace uncommon {

struct Rgb8 {
  std::uint8_t r, g, b;
};

/// Colour per segment rank; index 0 is the unsegmented colour (black).
inline constexpr std::array<Rgb8, kMaxPeaks + 1> kSegmentPalette{{
    {0, 0, 0},       // unsegmented
    {255, 0, 0},     // red
    {0, 0, 255},     // blue
    {128, 0, 128},   // purple
    {0, 255, 0},     // green
    {0, 255, 255},   // cyan
    {255, 255, 0},   // yellow
    {255, 255, 255}, // white
    {255, 165, 0},   // orange
}};

/// Box colours by interest rank: green, blue, red.
inline constexpr std::array<Rgb8, 3> kInterestPalette{{{0, 255, 0}, {0, 0, 255}, {255, 0, 0}}};

RgbImage render_segmentation(const SegmentationMap &seg);

/// Unit-range plane to 8 bits.
Grid<std::uint8_t> render_unit(const GridD &values);

/// Linear scaling so the map maximum becomes 255; all-zero when max <= 0.
Grid<std::uint8_t> render_scaled(const GridD &values);

/// log(1 + count) scaled to 0..255; row = first-pixel bin, column = partner bin.
Grid<std::uint8_t> render_histogram(const CooccurrenceHistogram &hist);

/// Draws 2-pixel box outlines of box_w x box_h centred on each point.
RgbImage annotate(const RgbImage &base, std::span<const InterestPoint> points, int box_w, int box_h);

} // namespace uncommon

#endif // UNCOMMON_RENDER_HPP
