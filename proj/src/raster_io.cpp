#include "uncommon/imgcore.hpp"

#include <png.h>

#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <vector>

namespace uncommon {
namespace {

using Bytes = std::vector<unsigned char>;

Bytes read_all(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw RasterError(RasterError::Kind::MissingFile, "cannot open raster: " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct PnmHeader {
  char type = 0; // '5' or '6'
  int width = 0, height = 0, maxval = 0;
  std::size_t data_offset = 0;
};

class HeaderReader {
public:
  HeaderReader(const Bytes &buf, const std::string &name) : buf_(buf), name_(name) {}

  int next_int() {
    skip_space_and_comments();
    if (pos_ >= buf_.size() || !std::isdigit(buf_[pos_]))
      fail("expected an unsigned integer");
    long long v = 0;
    while (pos_ < buf_.size() && std::isdigit(buf_[pos_])) {
      v = v * 10 + (buf_[pos_++] - '0');
      if (v > (1 << 24))
        fail("header value out of range");
    }
    return static_cast<int>(v);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_start() {
    if (pos_ >= buf_.size() || !std::isspace(buf_[pos_]))
      fail("missing separator before raster data");
    return pos_ + 1;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw RasterError(RasterError::Kind::Malformed, name_ + ": " + msg);
  }

private:
  void skip_space_and_comments() {
    while (pos_ < buf_.size()) {
      if (std::isspace(buf_[pos_])) {
        ++pos_;
      } else if (buf_[pos_] == '#') {
        while (pos_ < buf_.size() && buf_[pos_] != '\n')
          ++pos_;
      } else {
        break;
      }
    }
  }

  const Bytes &buf_;
  std::string name_;
  std::size_t pos_ = 2;
};

PnmHeader parse_pnm(const Bytes &buf, const std::string &name) {
  PnmHeader h;
  HeaderReader reader(buf, name);
  if (buf.size() < 2 || buf[0] != 'P' || (buf[1] != '5' && buf[1] != '6'))
    reader.fail("not a binary PGM/PPM file");
  h.type = static_cast<char>(buf[1]);
  h.width = reader.next_int();
  h.height = reader.next_int();
  h.maxval = reader.next_int();
  if (h.width < 1 || h.height < 1)
    reader.fail("dimensions must be positive");
  if (h.maxval < 1)
    reader.fail("maxval must be positive");
  if (h.maxval > 255)
    throw RasterError(RasterError::Kind::UnsupportedDepth,
                      name + ": only 8-bit samples are supported (maxval " + std::to_string(h.maxval) + ")");
  h.data_offset = reader.raster_start();
  const std::size_t channels = h.type == '6' ? 3 : 1;
  const std::size_t need = static_cast<std::size_t>(h.width) * h.height * channels;
  if (buf.size() < h.data_offset + need)
    reader.fail("truncated raster data");
  return h;
}

RgbImage decode_pnm(const Bytes &buf, const std::string &name) {
  const PnmHeader h = parse_pnm(buf, name);
  RgbImage img(h.width, h.height);
  const unsigned char *p = buf.data() + h.data_offset;
  auto sample = [&](unsigned char v) {
    if (v > h.maxval)
      throw RasterError(RasterError::Kind::Malformed, name + ": sample exceeds maxval");
    return v / static_cast<double>(h.maxval);
  };
  for (int y = 0; y < h.height; ++y) {
    for (int x = 0; x < h.width; ++x) {
      if (h.type == '6') {
        img.r(y, x) = sample(*p++);
        img.g(y, x) = sample(*p++);
        img.b(y, x) = sample(*p++);
      } else {
        const double v = sample(*p++);
        img.r(y, x) = img.g(y, x) = img.b(y, x) = v;
      }
    }
  }
  return img;
}

RgbImage decode_png(const std::filesystem::path &path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.string().c_str()))
    throw RasterError(RasterError::Kind::Malformed, path.string() + ": " + image.message);
  if (image.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&image);
    throw RasterError(RasterError::Kind::UnsupportedDepth, path.string() + ": 16-bit PNG is not supported");
  }
  image.format = PNG_FORMAT_RGB;
  std::vector<png_byte> data(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, data.data(), 0, nullptr))
    throw RasterError(RasterError::Kind::Malformed, path.string() + ": " + image.message);

  const int w = static_cast<int>(image.width), h = static_cast<int>(image.height);
  RgbImage img(w, h);
  const png_byte *p = data.data();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.r(y, x) = *p++ / 255.0;
      img.g(y, x) = *p++ / 255.0;
      img.b(y, x) = *p++ / 255.0;
    }
  }
  return img;
}

void write_all(const std::filesystem::path &path, const std::string &header, const Bytes &payload) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw RasterError(RasterError::Kind::WriteFailed, "cannot open for writing: " + path.string());
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char *>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (!out)
    throw RasterError(RasterError::Kind::WriteFailed, "write failed: " + path.string());
}

constexpr std::array<unsigned char, 8> kPngMagic{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

} // namespace

RgbImage load_raster(const std::filesystem::path &path) {
  const Bytes buf = read_all(path);
  if (buf.size() >= kPngMagic.size() && std::equal(kPngMagic.begin(), kPngMagic.end(), buf.begin()))
    return decode_png(path);
  return decode_pnm(buf, path.string());
}

void save_raster(const std::filesystem::path &path, const RgbImage &image) {
  image.validate();
  const int w = image.width(), h = image.height();
  Bytes payload;
  payload.reserve(static_cast<std::size_t>(w) * h * 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      payload.push_back(quantize8(image.r(y, x)));
      payload.push_back(quantize8(image.g(y, x)));
      payload.push_back(quantize8(image.b(y, x)));
    }
  }
  write_all(path, "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n", payload);
}

void save_pgm(const std::filesystem::path &path, const Grid<std::uint8_t> &gray) {
  if (gray.size() == 0)
    throw std::invalid_argument("save_pgm: empty image");
  Bytes payload(gray.data(), gray.data() + gray.size());
  write_all(path, "P5\n" + std::to_string(gray.cols()) + " " + std::to_string(gray.rows()) + "\n255\n", payload);
}

Grid<std::uint8_t> load_pgm(const std::filesystem::path &path) {
  const Bytes buf = read_all(path);
  const PnmHeader h = parse_pnm(buf, path.string());
  if (h.type != '5')
    throw RasterError(RasterError::Kind::Malformed, path.string() + ": not a PGM file");
  Grid<std::uint8_t> out(h.height, h.width);
  std::copy_n(buf.data() + h.data_offset, out.size(), out.data());
  return out;
}

} // namespace uncommon
