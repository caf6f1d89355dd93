#include "uncommon/segmenter.hpp"

#include <algorithm>
#include <cmath>

namespace uncommon {
namespace {

// Bounding box of a w-disk clipped to the histogram.
struct DiskBox {
  int u0, u1, v0, v1;
};

DiskBox disk_box(const Peak &p, double w, int levels) {
  const int r = static_cast<int>(std::floor(w));
  return {std::max(0, p.u - r), std::min(levels - 1, p.u + r), std::max(0, p.v - r), std::min(levels - 1, p.v + r)};
}

void check_radius(double w) {
  if (!(w > 0.0))
    throw std::invalid_argument("peak disk radius w must be positive");
}

} // namespace

CooccurrenceHistogram cooccurrence(const StretchedPlane &plane, PairOffset offset, const TileGrid &tiles) {
  offset.validate();
  tiles.validate(plane.width(), plane.height());
  CooccurrenceHistogram hist;
  hist.counts = CountGrid::Zero(plane.levels, plane.levels);

  const int W = plane.width(), H = plane.height();
  for (int y = 0; y < H; ++y) {
    const int qy = y + offset.dy;
    if (qy < 0 || qy >= H)
      continue;
    for (int x = 0; x < W; ++x) {
      const int qx = x + offset.dx;
      if (qx < 0 || qx >= W || !tiles.same_tile(x, y, qx, qy))
        continue;
      ++hist.counts(plane.bins(y, x), plane.bins(qy, qx));
    }
  }
  return hist;
}

std::vector<Peak> locate_peaks(const CooccurrenceHistogram &hist, int max_peaks, double w) {
  check_radius(w);
  const int L = hist.levels();
  Grid<bool> masked = Grid<bool>::Constant(L, L, false);
  std::vector<Peak> peaks;

  while (static_cast<int>(peaks.size()) < max_peaks) {
    int best_u = -1, best_v = -1;
    std::int64_t best = 0;
    for (int u = 0; u < L; ++u) {
      for (int v = 0; v < L; ++v) {
        if (!masked(u, v) && hist.counts(u, v) > best) {
          best = hist.counts(u, v);
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best_u < 0)
      break;

    Peak p;
    p.u = best_u;
    p.v = best_v;
    p.height = best;
    p.discovery = static_cast<int>(peaks.size());
    const DiskBox box = disk_box(p, w, L);
    for (int u = box.u0; u <= box.u1; ++u)
      for (int v = box.v0; v <= box.v1; ++v)
        if (in_disk(u, v, p, w))
          masked(u, v) = true;
    peaks.push_back(p);
  }
  return peaks;
}

RankedPeakSet rank_peaks(const CooccurrenceHistogram &hist, std::vector<Peak> peaks, double w) {
  check_radius(w);
  const int L = hist.levels();
  for (Peak &p : peaks) {
    const DiskBox box = disk_box(p, w, L);
    std::int64_t mass = 0;
    for (int u = box.u0; u <= box.u1; ++u)
      for (int v = box.v0; v <= box.v1; ++v)
        if (in_disk(u, v, p, w))
          mass += hist.counts(u, v);
    p.mass = mass;
  }
  std::stable_sort(peaks.begin(), peaks.end(), [](const Peak &a, const Peak &b) { return a.mass > b.mass; });
  return {std::move(peaks), w};
}

SegmentationMap assign_segments(const StretchedPlane &plane, const RankedPeakSet &ranked, PairOffset offset,
                                const TileGrid &tiles) {
  offset.validate();
  tiles.validate(plane.width(), plane.height());
  const int L = plane.levels;

  // Label for every pair point; -1 marks a conflict between overlapping disks.
  GridI lut = GridI::Zero(L, L);
  for (int s = 0; s < ranked.size(); ++s) {
    const Peak &p = ranked.peaks[s];
    const DiskBox box = disk_box(p, ranked.w, L);
    for (int u = box.u0; u <= box.u1; ++u)
      for (int v = box.v0; v <= box.v1; ++v)
        if (in_disk(u, v, p, ranked.w))
          lut(u, v) = lut(u, v) == 0 ? s + 1 : -1;
  }

  SegmentationMap seg;
  seg.segments = ranked.size();
  seg.labels = GridI::Zero(plane.height(), plane.width());
  const int W = plane.width(), H = plane.height();
  for (int y = 0; y < H; ++y) {
    const int qy = y + offset.dy;
    if (qy < 0 || qy >= H)
      continue;
    for (int x = 0; x < W; ++x) {
      const int qx = x + offset.dx;
      if (qx < 0 || qx >= W || !tiles.same_tile(x, y, qx, qy))
        continue;
      seg.labels(y, x) = std::max(0, lut(plane.bins(y, x), plane.bins(qy, qx)));
    }
  }
  return seg;
}

PlaneSegmentation segment_plane(const StretchedPlane &plane, double w, PairOffset offset, const TileGrid &tiles,
                                int max_peaks) {
  PlaneSegmentation out;
  out.hist = cooccurrence(plane, offset, tiles);
  out.ranked = rank_peaks(out.hist, locate_peaks(out.hist, max_peaks, w), w);
  out.seg = assign_segments(plane, out.ranked, offset, tiles);
  return out;
}

} // namespace uncommon
