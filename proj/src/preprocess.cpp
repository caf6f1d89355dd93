#include "uncommon/preprocess.hpp"

#include <cmath>

namespace uncommon {

void PreprocessConfig::validate() const {
  if (d != 1 && d != 2 && d != 4 && d != 8)
    throw std::invalid_argument("downsample factor must be one of 1, 2, 4, 8 (got " + std::to_string(d) + ")");
  if (levels < 2)
    throw std::invalid_argument("stretch levels must be >= 2");
}

StretchedPlane minmax_stretch(const Plane &plane, int levels) {
  if (plane.values.size() == 0)
    throw std::invalid_argument("minmax_stretch: empty plane");
  if (levels < 2)
    throw std::invalid_argument("minmax_stretch: levels must be >= 2");

  StretchedPlane out;
  out.levels = levels;
  out.source_min = plane.values.minCoeff();
  out.source_max = plane.values.maxCoeff();
  out.bins = GridI::Zero(plane.values.rows(), plane.values.cols());
  const double range = out.source_max - out.source_min;
  if (!(range > 0.0))
    return out;

  const double top = levels - 1;
  out.bins = plane.values.unaryExpr([&](double v) {
    const double t = (v - out.source_min) / range * top;
    return std::clamp(static_cast<int>(std::floor(t + 0.5)), 0, levels - 1);
  });
  return out;
}

HsiPlanes preprocess_hsi(const HsiPlanes &planes, const PreprocessConfig &cfg) {
  cfg.validate();
  HsiPlanes out;
  out.h = block_median(planes.h, cfg.d);
  out.s = downsample_mean(planes.s, cfg.d);
  out.i = downsample_mean(planes.i, cfg.d);
  return out;
}

} // namespace uncommon
