#include "uncommon/vcam.hpp"

#include <algorithm>
#include <string>

namespace uncommon {

void VcamConfig::validate() const {
  if (fov_w < 1 || fov_h < 1)
    throw std::invalid_argument("field of view must be positive");
  if (step_x < 1 || step_y < 1)
    throw std::invalid_argument("pan/tilt step must be positive");
  if (m < 1 || n < 1)
    throw std::invalid_argument("grid must be at least 1x1 (got " + std::to_string(m) + "x" + std::to_string(n) + ")");
}

RgbImage acquire_subimage(const RgbImage &scene, CameraPose pose, const VcamConfig &cfg) {
  cfg.validate();
  const long x0 = static_cast<long>(pose.pan_step) * cfg.step_x;
  const long y0 = static_cast<long>(pose.tilt_step) * cfg.step_y;
  if (pose.pan_step < 0 || pose.tilt_step < 0 || x0 + cfg.fov_w > scene.width() || y0 + cfg.fov_h > scene.height())
    throw std::out_of_range("pose (" + std::to_string(pose.pan_step) + "," + std::to_string(pose.tilt_step) +
                            ") puts the field of view outside the " + std::to_string(scene.width()) + "x" +
                            std::to_string(scene.height()) + " scene");
  RgbImage crop;
  crop.r = scene.r.block(y0, x0, cfg.fov_h, cfg.fov_w);
  crop.g = scene.g.block(y0, x0, cfg.fov_h, cfg.fov_w);
  crop.b = scene.b.block(y0, x0, cfg.fov_h, cfg.fov_w);
  return crop;
}

Mosaic build_mosaic(const RgbImage &scene, const VcamConfig &cfg, const PreprocessConfig &pre) {
  cfg.validate();
  pre.validate();
  const long need_w = static_cast<long>(cfg.m - 1) * cfg.step_x + cfg.fov_w;
  const long need_h = static_cast<long>(cfg.n - 1) * cfg.step_y + cfg.fov_h;
  if (need_w > scene.width() || need_h > scene.height())
    throw std::out_of_range(std::to_string(cfg.m) + "x" + std::to_string(cfg.n) + " grid needs a " +
                            std::to_string(need_w) + "x" + std::to_string(need_h) + " scene, have " +
                            std::to_string(scene.width()) + "x" + std::to_string(scene.height()));
  if (pre.d > cfg.fov_w || pre.d > cfg.fov_h)
    throw std::invalid_argument("downsample factor exceeds the field of view");

  Mosaic mosaic;
  mosaic.cam = cfg;
  mosaic.d = pre.d;
  mosaic.tiles = {cfg.fov_w / pre.d, cfg.fov_h / pre.d, cfg.m, cfg.n};
  const int tw = mosaic.tiles.tile_w, th = mosaic.tiles.tile_h;
  const int W = mosaic.tiles.width(), H = mosaic.tiles.height();

  mosaic.planes.h.values.resize(H, W);
  mosaic.planes.s.values.resize(H, W);
  mosaic.planes.i.values.resize(H, W);
  mosaic.preview.r.resize(H, W);
  mosaic.preview.g.resize(H, W);
  mosaic.preview.b.resize(H, W);

  for (int row = 0; row < cfg.n; ++row) {
    for (int col = 0; col < cfg.m; ++col) {
      const CameraPose pose{col, row};
      const RgbImage sub = acquire_subimage(scene, pose, cfg);
      const HsiPlanes small = preprocess_hsi(rgb_to_hsi(sub), pre);
      const int mx = col * tw, my = row * th;
      mosaic.planes.h.values.block(my, mx, th, tw) = small.h.values;
      mosaic.planes.s.values.block(my, mx, th, tw) = small.s.values;
      mosaic.planes.i.values.block(my, mx, th, tw) = small.i.values;
      mosaic.preview.r.block(my, mx, th, tw) = downsample_mean(sub.r, pre.d);
      mosaic.preview.g.block(my, mx, th, tw) = downsample_mean(sub.g, pre.d);
      mosaic.preview.b.block(my, mx, th, tw) = downsample_mean(sub.b, pre.d);
      mosaic.records.push_back({pose, col * cfg.step_x, row * cfg.step_y, mx, my});
    }
  }
  return mosaic;
}

PixelPoint mosaic_to_scene(const Mosaic &mosaic, PixelPoint p) {
  const TileGrid &t = mosaic.tiles;
  const int px = std::clamp(p.x, 0, t.width() - 1);
  const int py = std::clamp(p.y, 0, t.height() - 1);
  const int col = px / t.tile_w, row = py / t.tile_h;
  const int d = mosaic.d;
  return {col * mosaic.cam.step_x + (px % t.tile_w) * d + d / 2,
          row * mosaic.cam.step_y + (py % t.tile_h) * d + d / 2};
}

bool scene_to_mosaic(const Mosaic &mosaic, PixelPoint s, PixelPoint &out) {
  const int d = mosaic.d;
  for (const TileRecord &rec : mosaic.records) {
    const int lx = s.x - rec.scene_x, ly = s.y - rec.scene_y;
    if (lx >= 0 && ly >= 0 && lx < mosaic.tiles.tile_w * d && ly < mosaic.tiles.tile_h * d) {
      out = {rec.mosaic_x + lx / d, rec.mosaic_y + ly / d};
      return true;
    }
  }
  return false;
}

Chip acquire_chip(const RgbImage &scene, const Mosaic &mosaic, PixelPoint mosaic_point) {
  const VcamConfig &cam = mosaic.cam;
  if (scene.width() < cam.fov_w || scene.height() < cam.fov_h)
    throw std::invalid_argument("scene is smaller than one field of view");
  Chip chip;
  chip.scene_center = mosaic_to_scene(mosaic, mosaic_point);
  chip.scene_x = std::clamp(chip.scene_center.x - cam.fov_w / 2, 0, scene.width() - cam.fov_w);
  chip.scene_y = std::clamp(chip.scene_center.y - cam.fov_h / 2, 0, scene.height() - cam.fov_h);
  chip.image.r = scene.r.block(chip.scene_y, chip.scene_x, cam.fov_h, cam.fov_w);
  chip.image.g = scene.g.block(chip.scene_y, chip.scene_x, cam.fov_h, cam.fov_w);
  chip.image.b = scene.b.block(chip.scene_y, chip.scene_x, cam.fov_h, cam.fov_w);
  return chip;
}

} // namespace uncommon
