#ifndef UNCOMMON_IMGCORE_HPP
#define UNCOMMON_IMGCORE_HPP

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace uncommon {

/// Row-major 2D field indexed as (y, x): rows = height, cols = width.
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GridD = Grid<double>;
using GridI = Grid<int>;

/// Colour image with channels normalised to [0,1].
struct RgbImage {
  GridD r, g, b;

  RgbImage() = default;
  RgbImage(int width, int height);
  RgbImage(GridD red, GridD green, GridD blue);

  int width() const { return static_cast<int>(r.cols()); }
  int height() const { return static_cast<int>(r.rows()); }

  /// Throws std::invalid_argument if dimensions disagree, are empty, or a
  /// channel value lies outside [0,1].
  void validate() const;
};

enum class PlaneKind { Hue, Saturation, Intensity, Generic };

const char *to_string(PlaneKind kind);

struct Plane {
  GridD values;
  PlaneKind kind = PlaneKind::Generic;

  Plane() = default;
  Plane(GridD v, PlaneKind k) : values(std::move(v)), kind(k) {}

  int width() const { return static_cast<int>(values.cols()); }
  int height() const { return static_cast<int>(values.rows()); }
};

struct HsiPlanes {
  Plane h{GridD(), PlaneKind::Hue};
  Plane s{GridD(), PlaneKind::Saturation};
  Plane i{GridD(), PlaneKind::Intensity};

  int width() const { return h.width(); }
  int height() const { return h.height(); }
};

struct Hsi {
  double h, s, i;
};

/// Triangle-model HSI for one pixel. Hue is normalised to [0,1) and is 0
/// wherever saturation is 0.
Hsi rgb_to_hsi(double r, double g, double b);

HsiPlanes rgb_to_hsi(const RgbImage &img);

// ---------------------------------------------------------------------------
// Raster I/O

class RasterError : public std::runtime_error {
public:
  /// Malformed covers both bad headers and truncated pixel data.
  enum class Kind { MissingFile, Malformed, UnsupportedDepth, WriteFailed };

  RasterError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Loads binary PPM (P6), binary PGM (P5, replicated to grey RGB) or PNG.
/// Format is chosen by magic bytes, not by extension.
RgbImage load_raster(const std::filesystem::path &path);

/// Writes binary PPM (P6, maxval 255). Channels are quantised with
/// round(v * 255), so 8-bit content round-trips exactly.
void save_raster(const std::filesystem::path &path, const RgbImage &image);

/// Writes binary PGM (P5, maxval 255) from 8-bit samples.
void save_pgm(const std::filesystem::path &path, const Grid<std::uint8_t> &gray);

/// Reads a binary PGM (P5) as raw 8-bit samples.
Grid<std::uint8_t> load_pgm(const std::filesystem::path &path);

inline std::uint8_t quantize8(double v) {
  const double c = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  return static_cast<std::uint8_t>(c * 255.0 + 0.5);
}

} // namespace uncommon

#endif // UNCOMMON_IMGCORE_HPP
