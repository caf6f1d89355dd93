#ifndef UNCOMMON_VCAM_HPP
#define UNCOMMON_VCAM_HPP

#include "uncommon/imgcore.hpp"
#include "uncommon/preprocess.hpp"
#include "uncommon/tile_grid.hpp"

#include <vector>

namespace uncommon {

/// Simulated pan-tilt camera looking at one large scene raster. A pose is a
/// (pan, tilt) step count; each step moves the field of view by step_x /
/// step_y scene pixels. m counts pan columns, n counts tilt rows.
struct VcamConfig {
  int fov_w = 360, fov_h = 288;
  int step_x = 360, step_y = 288;
  int m = 1, n = 1;

  void validate() const;
};

struct CameraPose {
  int pan_step = 0;
  int tilt_step = 0;
};

struct PixelPoint {
  int x = 0, y = 0;
  friend bool operator==(const PixelPoint &, const PixelPoint &) = default;
};

/// Where one subimage came from and where it landed in the mosaic.
struct TileRecord {
  CameraPose pose;
  int scene_x = 0, scene_y = 0;
  int mosaic_x = 0, mosaic_y = 0;
};

struct Mosaic {
  HsiPlanes planes;
  RgbImage preview; // block-mean RGB at mosaic resolution, for annotation
  TileGrid tiles;
  std::vector<TileRecord> records; // row-major over (tilt, pan)
  VcamConfig cam;
  int d = 1;

  int width() const { return planes.width(); }
  int height() const { return planes.height(); }
};

struct Chip {
  RgbImage image;
  int scene_x = 0, scene_y = 0; // top-left corner in the scene
  PixelPoint scene_center;      // target before border clamping
};

/// Exact fov crop at (pan * step_x, tilt * step_y). Throws std::out_of_range
/// if the crop leaves the scene.
RgbImage acquire_subimage(const RgbImage &scene, CameraPose pose, const VcamConfig &cfg);

/// Visits the m x n grid, converts each subimage to HSI, preprocesses it and
/// butts the results together without blending.
Mosaic build_mosaic(const RgbImage &scene, const VcamConfig &cfg, const PreprocessConfig &pre);

/// Scene pixel at the centre of the d x d block behind a mosaic pixel.
PixelPoint mosaic_to_scene(const Mosaic &mosaic, PixelPoint p);

/// Mosaic pixel whose block contains the scene pixel, if it was imaged.
bool scene_to_mosaic(const Mosaic &mosaic, PixelPoint scene_px, PixelPoint &out);

/// Full-resolution fov crop centred on the scene location behind a mosaic
/// pixel, shifted as needed to stay inside the scene.
Chip acquire_chip(const RgbImage &scene, const Mosaic &mosaic, PixelPoint mosaic_point);

} // namespace uncommon

#endif // UNCOMMON_VCAM_HPP
