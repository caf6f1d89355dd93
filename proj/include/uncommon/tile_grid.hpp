#ifndef UNCOMMON_TILE_GRID_HPP
#define UNCOMMON_TILE_GRID_HPP

#include <stdexcept>

namespace uncommon {

/// Layout of equally sized subimages butted into a mosaic. Pixel pairs that
/// straddle two tiles are never compared.
struct TileGrid {
  int tile_w = 1, tile_h = 1;
  int cols = 1, rows = 1;

  static TileGrid single(int width, int height) { return {width, height, 1, 1}; }

  int width() const { return tile_w * cols; }
  int height() const { return tile_h * rows; }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width() && y < height(); }

  bool same_tile(int x0, int y0, int x1, int y1) const {
    return x0 / tile_w == x1 / tile_w && y0 / tile_h == y1 / tile_h;
  }

  void validate(int width_px, int height_px) const {
    if (tile_w < 1 || tile_h < 1 || cols < 1 || rows < 1)
      throw std::invalid_argument("TileGrid: tile sizes and counts must be positive");
    if (width() != width_px || height() != height_px)
      throw std::invalid_argument("TileGrid: grid does not cover the plane exactly");
  }
};

} // namespace uncommon

#endif // UNCOMMON_TILE_GRID_HPP
