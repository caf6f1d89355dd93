#ifndef UNCOMMON_SEGMENTER_HPP
#define UNCOMMON_SEGMENTER_HPP

#include "uncommon/imgcore.hpp"
#include "uncommon/preprocess.hpp"
#include "uncommon/tile_grid.hpp"

#include <cstdint>
#include <vector>

namespace uncommon {

/// Displacement from a pixel to its partner in a co-occurrence pair.
struct PairOffset {
  int dx = 1, dy = 0;

  void validate() const {
    if (dx == 0 && dy == 0)
      throw std::invalid_argument("pair offset must be non-zero");
  }
};

using CountGrid = Grid<std::int64_t>;

/// counts(u, v) = number of pairs whose first pixel has bin u and whose
/// partner has bin v.
struct CooccurrenceHistogram {
  CountGrid counts;

  int levels() const { return static_cast<int>(counts.rows()); }
  std::int64_t total() const { return counts.sum(); }
};

struct Peak {
  int u = 0, v = 0;
  std::int64_t height = 0; // bin count when located
  std::int64_t mass = 0;   // pairs inside the w-disk, filled by rank_peaks
  int discovery = 0;       // order in which locate_peaks found it
};

/// Peaks ordered by non-increasing mass; rank s is index s-1.
struct RankedPeakSet {
  std::vector<Peak> peaks;
  double w = 15.0;

  int size() const { return static_cast<int>(peaks.size()); }
};

/// Per-pixel segment rank, 0 for unsegmented (no disk, conflicting disks, or
/// no partner pixel inside the same tile).
struct SegmentationMap {
  GridI labels;
  int segments = 0; // number of ranked peaks the labels refer to

  int width() const { return static_cast<int>(labels.cols()); }
  int height() const { return static_cast<int>(labels.rows()); }
};

inline constexpr int kMaxPeaks = 8;

/// True when bin (u, v) lies within Euclidean distance w of the peak.
inline bool in_disk(int u, int v, const Peak &p, double w) {
  const double du = u - p.u, dv = v - p.v;
  return du * du + dv * dv <= w * w;
}

CooccurrenceHistogram cooccurrence(const StretchedPlane &plane, PairOffset offset, const TileGrid &tiles);

inline CooccurrenceHistogram cooccurrence(const StretchedPlane &plane, PairOffset offset = {}) {
  return cooccurrence(plane, offset, TileGrid::single(plane.width(), plane.height()));
}

/// Greedy peak search: repeatedly takes the largest unmasked bin (ties by
/// smallest u, then v) and masks its w-disk. Stops after max_peaks or when
/// the best remaining bin is empty.
std::vector<Peak> locate_peaks(const CooccurrenceHistogram &hist, int max_peaks, double w);

/// Fills in each peak's disk mass and stable-sorts by it, largest first.
RankedPeakSet rank_peaks(const CooccurrenceHistogram &hist, std::vector<Peak> peaks, double w);

SegmentationMap assign_segments(const StretchedPlane &plane, const RankedPeakSet &ranked, PairOffset offset,
                                const TileGrid &tiles);

inline SegmentationMap assign_segments(const StretchedPlane &plane, const RankedPeakSet &ranked,
                                       PairOffset offset = {}) {
  return assign_segments(plane, ranked, offset, TileGrid::single(plane.width(), plane.height()));
}

struct PlaneSegmentation {
  CooccurrenceHistogram hist;
  RankedPeakSet ranked;
  SegmentationMap seg;
};

PlaneSegmentation segment_plane(const StretchedPlane &plane, double w, PairOffset offset, const TileGrid &tiles,
                                int max_peaks = kMaxPeaks);

} // namespace uncommon

#endif // UNCOMMON_SEGMENTER_HPP
