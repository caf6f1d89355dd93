#ifndef UNCOMMON_PREPROCESS_HPP
#define UNCOMMON_PREPROCESS_HPP

#include "uncommon/imgcore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace uncommon {

struct PreprocessConfig {
  int d = 4;         // downsample factor, one of {1,2,4,8}
  int levels = 256;  // stretched histogram axis length L

  void validate() const;
};

/// Plane quantised onto the integer axis [0, levels-1].
struct StretchedPlane {
  GridI bins;
  int levels = 256;
  double source_min = 0.0;
  double source_max = 0.0;

  int width() const { return static_cast<int>(bins.cols()); }
  int height() const { return static_cast<int>(bins.rows()); }
};

namespace detail {

inline void check_block_factor(Eigen::Index rows, Eigen::Index cols, int d) {
  if (d < 1)
    throw std::invalid_argument("downsample factor must be >= 1");
  if (d > rows || d > cols)
    throw std::invalid_argument("downsample factor " + std::to_string(d) + " exceeds plane dimensions " +
                                std::to_string(cols) + "x" + std::to_string(rows));
}

} // namespace detail

/// Median of each non-overlapping d x d block (even counts average the two
/// middle values). Partial trailing blocks are dropped.
template <typename Derived>
Grid<typename Derived::Scalar> block_median(const Eigen::DenseBase<Derived> &expr, int d) {
  using Scalar = typename Derived::Scalar;
  const Grid<Scalar> src = expr;
  detail::check_block_factor(src.rows(), src.cols(), d);
  const Eigen::Index out_rows = src.rows() / d, out_cols = src.cols() / d;
  Grid<Scalar> out(out_rows, out_cols);
  std::vector<Scalar> block(static_cast<std::size_t>(d) * d);
  const std::size_t n = block.size(), half = n / 2;
  for (Eigen::Index by = 0; by < out_rows; ++by) {
    for (Eigen::Index bx = 0; bx < out_cols; ++bx) {
      const auto view = src.block(by * d, bx * d, d, d);
      std::size_t k = 0;
      for (Eigen::Index y = 0; y < d; ++y)
        for (Eigen::Index x = 0; x < d; ++x)
          block[k++] = view(y, x);
      std::nth_element(block.begin(), block.begin() + half, block.end());
      Scalar m = block[half];
      if (n % 2 == 0) {
        const Scalar lower = *std::max_element(block.begin(), block.begin() + half);
        m = (lower + m) / Scalar(2);
      }
      out(by, bx) = m;
    }
  }
  return out;
}

/// Mean of each non-overlapping d x d block; partial trailing blocks dropped.
template <typename Derived>
Grid<typename Derived::Scalar> downsample_mean(const Eigen::DenseBase<Derived> &expr, int d) {
  using Scalar = typename Derived::Scalar;
  const Grid<Scalar> src = expr;
  detail::check_block_factor(src.rows(), src.cols(), d);
  const Eigen::Index out_rows = src.rows() / d, out_cols = src.cols() / d;
  Grid<Scalar> out(out_rows, out_cols);
  const Scalar area = Scalar(d) * Scalar(d);
  for (Eigen::Index by = 0; by < out_rows; ++by)
    for (Eigen::Index bx = 0; bx < out_cols; ++bx) {
      const auto view = src.block(by * d, bx * d, d, d);
      // rounding can push a mean one ulp past the block extremes
      out(by, bx) = std::clamp(view.sum() / area, view.minCoeff(), view.maxCoeff());
    }
  return out;
}

inline Plane block_median(const Plane &plane, int d) { return {block_median(plane.values, d), plane.kind}; }
inline Plane downsample_mean(const Plane &plane, int d) { return {downsample_mean(plane.values, d), plane.kind}; }

/// bin = round_half_up((v - min) / (max - min) * (levels - 1)); all zero when
/// the plane is constant.
StretchedPlane minmax_stretch(const Plane &plane, int levels);

/// Hue goes through the block median, saturation and intensity through the
/// block mean, each reduced by cfg.d.
HsiPlanes preprocess_hsi(const HsiPlanes &planes, const PreprocessConfig &cfg);

} // namespace uncommon

#endif // UNCOMMON_PREPROCESS_HPP
