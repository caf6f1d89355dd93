#include "uncommon/saliency.hpp"

#include <algorithm>
#include <numeric>

namespace uncommon {

void SaliencyConfig::validate() const {
  if (!(blur > 0.0))
    throw std::invalid_argument("blur width must be positive");
  if (k < 1)
    throw std::invalid_argument("top-k must be >= 1");
  if (suppress < 0)
    throw std::invalid_argument("suppression radius must be >= 1 (or 0 for automatic)");
}

int SaliencyConfig::suppression_radius(int width, int height) const {
  if (suppress > 0)
    return suppress;
  return std::max(1, (std::min(width, height) + 7) / 8);
}

UncommonMap uncommon_map(const SegmentationMap &seg) {
  UncommonMap out;
  for (Eigen::Index j = 0; j < seg.labels.size(); ++j) {
    const int label = seg.labels.data()[j];
    if (label < 0 || label > kMaxPeaks)
      throw std::invalid_argument("segment label out of range");
    if (label > 0)
      ++out.area[label];
  }

  std::vector<int> order;
  for (int s = 1; s <= kMaxPeaks; ++s)
    if (out.area[s] > 0)
      order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return out.area[a] > out.area[b]; });
  for (std::size_t r = 0; r < order.size(); ++r)
    out.uncommonness[order[r]] = static_cast<int>(r) + 1;

  out.values = seg.labels.unaryExpr([&](int label) { return out.uncommonness[label]; });
  return out;
}

InterestMap fuse_interest(const UncommonMap &h, const UncommonMap &s, const UncommonMap &i) {
  if (h.values.rows() != s.values.rows() || h.values.cols() != s.values.cols() ||
      h.values.rows() != i.values.rows() || h.values.cols() != i.values.cols())
    throw std::invalid_argument("fuse_interest: uncommon maps differ in size");
  InterestMap out;
  out.values = (h.values + s.values + i.values).cast<double>();
  return out;
}

std::vector<InterestPoint> top_interest_points(const InterestMap &map, int k, int radius) {
  if (k < 1)
    throw std::invalid_argument("top-k must be >= 1");
  if (radius < 1)
    throw std::invalid_argument("suppression radius must be >= 1");
  std::vector<InterestPoint> points;
  if (map.values.size() == 0)
    return points;

  const int W = map.width(), H = map.height();
  const double floor_value = map.values.minCoeff();
  Grid<bool> suppressed = Grid<bool>::Constant(H, W, false);
  const long r2 = static_cast<long>(radius) * radius;

  while (static_cast<int>(points.size()) < k) {
    int bx = -1, by = -1;
    double best = floor_value;
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x)
        if (!suppressed(y, x) && map.values(y, x) > best) {
          best = map.values(y, x);
          bx = x;
          by = y;
        }
    if (bx < 0)
      break;

    points.push_back({bx, by, best, static_cast<int>(points.size()) + 1});
    for (int y = std::max(0, by - radius); y <= std::min(H - 1, by + radius); ++y)
      for (int x = std::max(0, bx - radius); x <= std::min(W - 1, bx + radius); ++x) {
        const long dx = x - bx, dy = y - by;
        if (dx * dx + dy * dy < r2)
          suppressed(y, x) = true;
      }
  }
  return points;
}

} // namespace uncommon
