#include "test_util.hpp"

#include <doctest.h>
#include <png.h>

#include <fstream>

using namespace uncommon;

TEST_CASE("rgb_to_hsi: reference pixels") {
  SUBCASE("grey has zero saturation and hue") {
    const Hsi p = rgb_to_hsi(0.5, 0.5, 0.5);
    CHECK(p.h == 0.0);
    CHECK(p.s == 0.0);
    CHECK(p.i == 0.5);
  }
  SUBCASE("pure red is the hue origin") {
    const Hsi p = rgb_to_hsi(1.0, 0.0, 0.0);
    CHECK(p.h == doctest::Approx(0.0));
    CHECK(p.s == doctest::Approx(1.0));
    CHECK(p.i == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("blue-dominant pixel lands in the upper hue half") {
    // theta = acos(-0.3 / sqrt(0.12)) = 150 deg, B > G so H = 1 - 150/360.
    const Hsi p = rgb_to_hsi(0.2, 0.4, 0.6);
    CHECK(p.i == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(p.s == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.h == doctest::Approx(210.0 / 360.0).epsilon(1e-12));
  }
  SUBCASE("black") {
    const Hsi p = rgb_to_hsi(0.0, 0.0, 0.0);
    CHECK(p.h == 0.0);
    CHECK(p.s == 0.0);
    CHECK(p.i == 0.0);
  }
}

TEST_CASE("rgb_to_hsi: properties over random triples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 5000; ++trial) {
    const double r = unit(rng), g = unit(rng), b = unit(rng);
    const Hsi p = rgb_to_hsi(r, g, b);
    REQUIRE(p.h >= 0.0);
    REQUIRE(p.h < 1.0);
    REQUIRE(p.s >= 0.0);
    REQUIRE(p.s <= 1.0);
    REQUIRE(p.i >= 0.0);
    REQUIRE(p.i <= 1.0);

    for (const Hsi q : {rgb_to_hsi(g, r, b), rgb_to_hsi(b, g, r), rgb_to_hsi(r, b, g), rgb_to_hsi(g, b, r)}) {
      REQUIRE(q.i == p.i);
      REQUIRE(q.s == p.s);
    }
    const Hsi grey = rgb_to_hsi(r, r, r);
    REQUIRE(grey.s == 0.0);
    REQUIRE(grey.h == 0.0);
  }
}

TEST_CASE("rgb_to_hsi: image planes share dimensions") {
  std::mt19937 rng(3);
  const RgbImage img = testutil::random_scene(rng, 13, 7);
  const HsiPlanes p = rgb_to_hsi(img);
  CHECK(p.width() == 13);
  CHECK(p.height() == 7);
  CHECK(p.s.width() == 13);
  CHECK(p.i.height() == 7);
  CHECK(p.h.kind == PlaneKind::Hue);
  CHECK(p.i.values(3, 4) == doctest::Approx(rgb_to_hsi(img.r(3, 4), img.g(3, 4), img.b(3, 4)).i));
}

TEST_CASE("RgbImage validation") {
  GridD ok = GridD::Constant(2, 2, 0.5);
  GridD bad = ok;
  bad(1, 1) = 1.5;
  CHECK_NOTHROW(RgbImage(ok, ok, ok));
  CHECK_THROWS_AS(RgbImage(ok, bad, ok), std::invalid_argument);
  CHECK_THROWS_AS(RgbImage(ok, GridD::Constant(3, 2, 0.5), ok), std::invalid_argument);
  CHECK_THROWS_AS(RgbImage(0, 4), std::invalid_argument);
}

namespace {

RasterError::Kind load_error_kind(const std::filesystem::path &p) {
  try {
    load_raster(p);
  } catch (const RasterError &e) {
    return e.kind();
  }
  FAIL("expected RasterError");
  return RasterError::Kind::WriteFailed;
}

void write_bytes(const std::filesystem::path &p, const std::string &bytes) {
  std::ofstream(p, std::ios::binary) << bytes;
}

} // namespace

TEST_CASE("raster round trip is exact for 8-bit content") {
  const auto dir = testutil::scratch_dir("imgcore_rt");
  RgbImage img(2, 2);
  img.r << 0 / 255.0, 255 / 255.0, 17 / 255.0, 128 / 255.0;
  img.g << 1 / 255.0, 2 / 255.0, 3 / 255.0, 254 / 255.0;
  img.b << 100 / 255.0, 0.0, 1.0, 77 / 255.0;
  save_raster(dir / "a.ppm", img);
  const RgbImage back = load_raster(dir / "a.ppm");
  CHECK((back.r == img.r).all());
  CHECK((back.g == img.g).all());
  CHECK((back.b == img.b).all());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_int_distribution<int> dim(1, 40);
    const RgbImage big = testutil::random_scene(rng, dim(rng), dim(rng));
    save_raster(dir / "b.ppm", big);
    const RgbImage again = load_raster(dir / "b.ppm");
    REQUIRE(again.width() == big.width());
    REQUIRE((again.r == big.r).all());
    REQUIRE((again.g == big.g).all());
    REQUIRE((again.b == big.b).all());
  }
}

TEST_CASE("raster loader dimensions and formats") {
  const auto dir = testutil::scratch_dir("imgcore_fmt");
  save_raster(dir / "frame.ppm", testutil::uniform_scene(360, 288, 0.25));
  const RgbImage frame = load_raster(dir / "frame.ppm");
  CHECK(frame.width() == 360);
  CHECK(frame.height() == 288);

  SUBCASE("PGM replicates to grey") {
    Grid<std::uint8_t> g(2, 3);
    g << 0, 10, 20, 30, 40, 255;
    save_pgm(dir / "g.pgm", g);
    const RgbImage img = load_raster(dir / "g.pgm");
    CHECK(img.width() == 3);
    CHECK(img.r(1, 2) == 1.0);
    CHECK(img.g(0, 1) == 10 / 255.0);
    CHECK((load_pgm(dir / "g.pgm") == g).all());
  }
  SUBCASE("header comments are skipped") {
    write_bytes(dir / "c.pgm", std::string("P5\n# a comment\n2 1\n# another\n255\n") + '\x05' + '\x06');
    const RgbImage img = load_raster(dir / "c.pgm");
    CHECK(img.width() == 2);
    CHECK(img.r(0, 1) == 6 / 255.0);
  }
  SUBCASE("PNG input") {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = 3;
    image.height = 2;
    image.format = PNG_FORMAT_RGB;
    const unsigned char px[18] = {255, 0, 0, 0, 255, 0, 0, 0, 255, 10, 20, 30, 40, 50, 60, 70, 80, 90};
    REQUIRE(png_image_write_to_file(&image, (dir / "x.png").c_str(), 0, px, 0, nullptr));
    const RgbImage img = load_raster(dir / "x.png");
    CHECK(img.width() == 3);
    CHECK(img.height() == 2);
    CHECK(img.r(0, 0) == 1.0);
    CHECK(img.g(0, 1) == 1.0);
    CHECK(img.b(1, 2) == 90 / 255.0);
  }
}

TEST_CASE("raster loader reports distinct failures") {
  const auto dir = testutil::scratch_dir("imgcore_err");
  CHECK(load_error_kind(dir / "nope.ppm") == RasterError::Kind::MissingFile);

  write_bytes(dir / "trunc.ppm", std::string("P6\n4 4\n255\n") + std::string(10, 'x'));
  CHECK(load_error_kind(dir / "trunc.ppm") == RasterError::Kind::Malformed);

  write_bytes(dir / "magic.ppm", "P3\n1 1\n255\n0 0 0\n");
  CHECK(load_error_kind(dir / "magic.ppm") == RasterError::Kind::Malformed);

  write_bytes(dir / "header.ppm", "P6\n4 \n");
  CHECK(load_error_kind(dir / "header.ppm") == RasterError::Kind::Malformed);

  write_bytes(dir / "deep.ppm", std::string("P6\n1 1\n65535\n") + std::string(6, '\0'));
  CHECK(load_error_kind(dir / "deep.ppm") == RasterError::Kind::UnsupportedDepth);

  CHECK_THROWS_AS(save_raster(dir / "missing_dir" / "x.ppm", testutil::uniform_scene(1, 1, 0.0)), RasterError);
}
