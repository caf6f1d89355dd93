#ifndef UNCOMMON_SALIENCY_HPP
#define UNCOMMON_SALIENCY_HPP

#include "uncommon/imgcore.hpp"
#include "uncommon/segmenter.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace uncommon {

/// Per-pixel uncommonness: 1 for the largest segment up to K for the
/// smallest of K non-empty segments, 0 for unsegmented pixels.
struct UncommonMap {
  GridI values;
  std::array<std::int64_t, kMaxPeaks + 1> area{};     // pixel count per segment label
  std::array<int, kMaxPeaks + 1> uncommonness{};      // per segment label, 0 if empty

  int width() const { return static_cast<int>(values.cols()); }
  int height() const { return static_cast<int>(values.rows()); }
};

struct InterestMap {
  GridD values;
  bool blurred = false;

  int width() const { return static_cast<int>(values.cols()); }
  int height() const { return static_cast<int>(values.rows()); }
};

struct InterestPoint {
  int x = 0, y = 0;
  double score = 0.0;
  int rank = 0; // 1 = most interesting
};

struct SaliencyConfig {
  double blur = 10.0;  // Gaussian sigma B, in mosaic pixels
  int k = 3;
  int suppress = 0;    // suppression radius; 0 picks ceil(min(W, H) / 8)

  void validate() const;
  int suppression_radius(int width, int height) const;
};

UncommonMap uncommon_map(const SegmentationMap &seg);

/// Unweighted per-pixel sum. Throws std::invalid_argument on size mismatch.
InterestMap fuse_interest(const UncommonMap &h, const UncommonMap &s, const UncommonMap &i);

/// Reflect-padded index for a signal of length n (edge sample repeated:
/// ... c b a | a b c ... c | c b a ...). Works for any offset.
inline Eigen::Index reflect_index(Eigen::Index i, Eigen::Index n) {
  const Eigen::Index period = 2 * n;
  i %= period;
  if (i < 0)
    i += period;
  return i < n ? i : period - 1 - i;
}

/// Normalised 1D Gaussian taps for offsets -R..R, R = ceil(3 sigma).
template <typename Scalar>
std::vector<Scalar> gaussian_kernel(Scalar sigma) {
  const int radius = static_cast<int>(std::ceil(3 * sigma));
  std::vector<Scalar> taps(2 * radius + 1);
  Scalar sum = 0;
  for (int k = -radius; k <= radius; ++k) {
    taps[k + radius] = std::exp(-Scalar(k * k) / (2 * sigma * sigma));
    sum += taps[k + radius];
  }
  for (Scalar &t : taps)
    t /= sum;
  return taps;
}

/// Separable Gaussian blur with reflect padding; rows first, then columns.
template <typename Derived>
Grid<typename Derived::Scalar> gaussian_blur(const Eigen::DenseBase<Derived> &expr, typename Derived::Scalar sigma) {
  using Scalar = typename Derived::Scalar;
  const Grid<Scalar> src = expr;
  if (!(sigma > 0))
    throw std::invalid_argument("blur width must be positive");
  const std::vector<Scalar> taps = gaussian_kernel(sigma);
  const int radius = static_cast<int>(taps.size() / 2);
  const Eigen::Index rows = src.rows(), cols = src.cols();

  Grid<Scalar> tmp(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y)
    for (Eigen::Index x = 0; x < cols; ++x) {
      Scalar acc = 0;
      for (int k = -radius; k <= radius; ++k)
        acc += taps[k + radius] * src(y, reflect_index(x + k, cols));
      tmp(y, x) = acc;
    }

  Grid<Scalar> out(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y)
    for (Eigen::Index x = 0; x < cols; ++x) {
      Scalar acc = 0;
      for (int k = -radius; k <= radius; ++k)
        acc += taps[k + radius] * tmp(reflect_index(y + k, rows), x);
      out(y, x) = acc;
    }
  return out;
}

inline InterestMap gaussian_blur(const InterestMap &map, double sigma) {
  return {gaussian_blur(map.values, sigma), true};
}

/// Greedy selection: take the maximum (ties by smallest y, then x), suppress
/// everything closer than radius, repeat up to k times. Selection stops once
/// no remaining pixel rises above the map minimum, so a constant map yields
/// no points.
std::vector<InterestPoint> top_interest_points(const InterestMap &map, int k, int radius);

} // namespace uncommon

#endif // UNCOMMON_SALIENCY_HPP
