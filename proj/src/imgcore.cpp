#include "uncommon/imgcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uncommon {

RgbImage::RgbImage(int width, int height)
    : r(GridD::Zero(height, width)), g(GridD::Zero(height, width)), b(GridD::Zero(height, width)) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("RgbImage: dimensions must be positive");
}

RgbImage::RgbImage(GridD red, GridD green, GridD blue)
    : r(std::move(red)), g(std::move(green)), b(std::move(blue)) {
  validate();
}

void RgbImage::validate() const {
  if (r.rows() < 1 || r.cols() < 1)
    throw std::invalid_argument("RgbImage: dimensions must be positive");
  if (g.rows() != r.rows() || g.cols() != r.cols() || b.rows() != r.rows() || b.cols() != r.cols())
    throw std::invalid_argument("RgbImage: channel dimensions differ");
  auto in_unit = [](const GridD &c) { return (c >= 0.0).all() && (c <= 1.0).all(); };
  if (!in_unit(r) || !in_unit(g) || !in_unit(b))
    throw std::invalid_argument("RgbImage: channel value outside [0,1]");
}

const char *to_string(PlaneKind kind) {
  switch (kind) {
  case PlaneKind::Hue: return "hue";
  case PlaneKind::Saturation: return "saturation";
  case PlaneKind::Intensity: return "intensity";
  case PlaneKind::Generic: return "generic";
  }
  return "generic";
}

Hsi rgb_to_hsi(double r, double g, double b) {
  if (r == g && g == b)
    return {0.0, 0.0, r};

  // Summing in sorted order keeps I (and therefore S) exactly invariant under
  // channel permutation.
  double lo = r, mid = g, hi = b;
  if (lo > mid) std::swap(lo, mid);
  if (mid > hi) std::swap(mid, hi);
  if (lo > mid) std::swap(lo, mid);

  const double i = (lo + mid + hi) / 3.0;
  if (i <= 0.0)
    return {0.0, 0.0, 0.0};
  const double s = std::clamp(1.0 - lo / i, 0.0, 1.0);
  if (s == 0.0)
    return {0.0, 0.0, i};

  const double num = 0.5 * ((r - g) + (r - b));
  const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
  double h = 0.0;
  if (den > 0.0) {
    const double theta = std::acos(std::clamp(num / den, -1.0, 1.0)); // [0, pi]
    h = theta / (2.0 * std::numbers::pi);
    if (b > g)
      h = 1.0 - h;
    if (h >= 1.0)
      h = 0.0;
  }
  return {h, s, i};
}

HsiPlanes rgb_to_hsi(const RgbImage &img) {
  const Eigen::Index rows = img.r.rows(), cols = img.r.cols();
  HsiPlanes out;
  out.h.values.resize(rows, cols);
  out.s.values.resize(rows, cols);
  out.i.values.resize(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y) {
    for (Eigen::Index x = 0; x < cols; ++x) {
      const Hsi p = rgb_to_hsi(img.r(y, x), img.g(y, x), img.b(y, x));
      out.h.values(y, x) = p.h;
      out.s.values(y, x) = p.s;
      out.i.values(y, x) = p.i;
    }
  }
  return out;
}

} // namespace uncommon
