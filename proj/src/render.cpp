#include "uncommon/render.hpp"

#include <algorithm>
#include <cmath>

namespace uncommon {

RgbImage render_segmentation(const SegmentationMap &seg) {
  RgbImage img(seg.width(), seg.height());
  for (int y = 0; y < seg.height(); ++y)
    for (int x = 0; x < seg.width(); ++x) {
      const Rgb8 c = kSegmentPalette.at(static_cast<std::size_t>(seg.labels(y, x)));
      img.r(y, x) = c.r / 255.0;
      img.g(y, x) = c.g / 255.0;
      img.b(y, x) = c.b / 255.0;
    }
  return img;
}

Grid<std::uint8_t> render_unit(const GridD &values) {
  return values.unaryExpr([](double v) { return quantize8(v); });
}

Grid<std::uint8_t> render_scaled(const GridD &values) {
  const double top = values.size() ? values.maxCoeff() : 0.0;
  if (!(top > 0.0))
    return Grid<std::uint8_t>::Zero(values.rows(), values.cols());
  return values.unaryExpr([top](double v) { return quantize8(v / top); });
}

Grid<std::uint8_t> render_histogram(const CooccurrenceHistogram &hist) {
  const GridD logc = hist.counts.cast<double>().log1p();
  return render_scaled(logc);
}

RgbImage annotate(const RgbImage &base, std::span<const InterestPoint> points, int box_w, int box_h) {
  RgbImage out = base;
  const int W = out.width(), H = out.height();
  constexpr int kThickness = 2;
  auto put = [&](int x, int y, Rgb8 c) {
    if (x < 0 || y < 0 || x >= W || y >= H)
      return;
    out.r(y, x) = c.r / 255.0;
    out.g(y, x) = c.g / 255.0;
    out.b(y, x) = c.b / 255.0;
  };

  // Lower ranks are drawn last so the most interesting box stays on top.
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    const Rgb8 c = kInterestPalette[static_cast<std::size_t>(it->rank - 1) % kInterestPalette.size()];
    const int x0 = it->x - box_w / 2, y0 = it->y - box_h / 2;
    const int x1 = x0 + std::max(box_w, 1) - 1, y1 = y0 + std::max(box_h, 1) - 1;
    for (int t = 0; t < kThickness; ++t) {
      for (int x = x0; x <= x1; ++x) {
        put(x, y0 + t, c);
        put(x, y1 - t, c);
      }
      for (int y = y0; y <= y1; ++y) {
        put(x0 + t, y, c);
        put(x1 - t, y, c);
      }
    }
  }
  return out;
}

} // namespace uncommon
