#include "test_util.hpp"

#include "uncommon/pipeline.hpp"

#include <doctest.h>

#include <fstream>
#include <json.hpp>

using namespace uncommon;

namespace {

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ConfigError config_error(const std::vector<std::string> &args) {
  try {
    parse_config(args);
  } catch (const ConfigError &e) {
    return e;
  }
  FAIL("expected ConfigError");
  return ConfigError("");
}

} // namespace

TEST_CASE("parse_config") {
  SUBCASE("empty invocation gives the field defaults") {
    const RunConfig cfg = parse_config({});
    CHECK(cfg.m == 1);
    CHECK(cfg.n == 1);
    CHECK(cfg.d == 4);
    CHECK(cfg.levels == 256);
    CHECK(cfg.w_hue == 15.0);
    CHECK(cfg.w_sat == 15.0);
    CHECK(cfg.w_int == 20.0);
    CHECK(cfg.offset.dx == 1);
    CHECK(cfg.offset.dy == 0);
    CHECK(cfg.blur == 10.0);
    CHECK(cfg.top_k == 3);
    CHECK(cfg.suppress == 0);
  }
  SUBCASE("flags") {
    const RunConfig cfg = parse_config({"--grid", "3x4", "--downsample", "4", "--offset", "0,1", "--w-int", "12.5",
                                        "--fov", "144x192", "--step=140x190", "--scene", "a.ppm"});
    CHECK(cfg.m == 3);
    CHECK(cfg.n == 4);
    CHECK(cfg.d == 4);
    CHECK(cfg.offset.dy == 1);
    CHECK(cfg.w_int == 12.5);
    CHECK(cfg.fov_w == 144);
    CHECK(cfg.step_y == 190);
    CHECK(cfg.scene == "a.ppm");
  }
  SUBCASE("validation failures") {
    config_error({"--grid", "0x4"});
    config_error({"--grid", "3"});
    config_error({"--downsample", "3"});
    config_error({"--blur", "ten"});
    config_error({"--offset", "0,0"});
    config_error({"--top-k", "0"});
    config_error({"--levels", "1"});
    config_error({"--fov", "100x0"});
    config_error({"--bogus", "1"});
  }
  SUBCASE("file values, overridden by flags") {
    const auto dir = testutil::scratch_dir("pipeline_cfg");
    std::ofstream(dir / "run.cfg") << "# field setup\ngrid = 3x9\ndownsample = 8\nblur=4 # narrower\n\n";
    const RunConfig cfg = parse_config({"--config", (dir / "run.cfg").string(), "--downsample", "2"});
    CHECK(cfg.m == 3);
    CHECK(cfg.n == 9);
    CHECK(cfg.d == 2);
    CHECK(cfg.blur == 4.0);

    std::ofstream(dir / "bad.cfg") << "colour = red\n";
    CHECK(std::string(config_error({"--config", (dir / "bad.cfg").string()}).what()).find("colour") !=
          std::string::npos);
    std::ofstream(dir / "noeq.cfg") << "grid 3x4\n";
    config_error({"--config", (dir / "noeq.cfg").string()});
    config_error({"--config", (dir / "missing.cfg").string()});
  }
  SUBCASE("help") {
    CHECK_THROWS_AS(parse_config({"--help"}), HelpRequested);
  }
}

TEST_CASE("RunConfig camera resolution") {
  RunConfig cfg;
  const VcamConfig small = cfg.camera(200, 150);
  CHECK(small.fov_w == 200);
  CHECK(small.fov_h == 150);
  CHECK(small.step_x == 200);
  const VcamConfig big = cfg.camera(5000, 5000);
  CHECK(big.fov_w == 360);
  CHECK(big.fov_h == 288);
  CHECK(big.step_y == 288);
  cfg.step_x = 300;
  cfg.step_y = 250;
  CHECK(cfg.camera(5000, 5000).step_x == 300);
}

TEST_CASE("analyze_scene on a patch scene") {
  RgbImage scene = testutil::uniform_scene(200, 200, 0.5);
  testutil::paint_rect(scene, 100, 100, 10, 10, 0.9, 0.9, 0.9);
  RunConfig cfg;
  const PipelineResult res = analyze_scene(scene, cfg);
  CHECK(res.mosaic.width() == 50);
  CHECK(res.planes[0].flat);
  CHECK(res.planes[1].flat);
  CHECK_FALSE(res.planes[2].flat);
  CHECK((res.planes[0].uncommon.values == 0).all());
  REQUIRE_FALSE(res.points.empty());
  REQUIRE(res.chips.size() == res.points.size());
  const Chip &chip = res.chips[0];
  CHECK(chip.scene_x <= 100);
  CHECK(chip.scene_x + 200 >= 110);

  const RunReport report = res.report();
  CHECK(report.points.size() <= 3);
  CHECK(report.planes[2].peaks.size() >= 2);
  CHECK(report.planes[2].pairs == 50 * 49);
}

TEST_CASE("run_pipeline writes every artifact with mosaic dimensions") {
  const auto dir = testutil::scratch_dir("pipeline_run");
  std::mt19937 rng(17);
  save_raster(dir / "scene.ppm", testutil::random_scene(rng, 240, 180));

  RunConfig cfg;
  cfg.scene = dir / "scene.ppm";
  cfg.out = dir / "out";
  cfg.fov_w = 120;
  cfg.fov_h = 90;
  cfg.m = 2;
  cfg.n = 2;
  cfg.d = 2;
  const RunReport report = run_pipeline(cfg);
  CHECK(report.mosaic_w == 120);
  CHECK(report.mosaic_h == 90);
  CHECK(report.points.size() == 3);

  for (const char *name : {"mosaic_h.pgm", "mosaic_s.pgm", "mosaic_i.pgm", "uncommon_h.pgm", "uncommon_s.pgm",
                           "uncommon_i.pgm", "interest.pgm", "interest_blurred.pgm"}) {
    const auto g = load_pgm(cfg.out / name);
    CHECK(g.cols() == 120);
    CHECK(g.rows() == 90);
  }
  for (const char *name : {"seg_h.ppm", "seg_s.ppm", "seg_i.ppm", "annotated.ppm"}) {
    const RgbImage img = load_raster(cfg.out / name);
    CHECK(img.width() == 120);
    CHECK(img.height() == 90);
  }
  CHECK(load_pgm(cfg.out / "hist_i.pgm").rows() == 256);
  for (int k = 1; k <= 3; ++k) {
    const RgbImage chip = load_raster(cfg.out / ("chip_" + std::to_string(k) + ".ppm"));
    CHECK(chip.width() == 120);
    CHECK(chip.height() == 90);
  }

  const auto j = nlohmann::json::parse(slurp(cfg.out / "report.json"));
  CHECK(j["mosaic"]["width"] == 120);
  CHECK(j["interest_points"].size() == 3);
  CHECK(j["interest_points"][0]["rank"] == 1);
  CHECK(j["planes"].size() == 3);
  CHECK(j["planes"][2]["w"] == 20.0);
  CHECK_FALSE(j.contains("timings"));
  CHECK(report.timings.size() >= 5);

  SUBCASE("segmentation palette") {
    const RgbImage seg = load_raster(cfg.out / "seg_i.ppm");
    bool has_red = false;
    for (int y = 0; y < seg.height(); ++y)
      for (int x = 0; x < seg.width(); ++x)
        has_red |= seg.r(y, x) == 1.0 && seg.g(y, x) == 0.0 && seg.b(y, x) == 0.0;
    CHECK(has_red);
    // last column of each tile has no horizontal partner: black
    CHECK(seg.r(10, 59) + seg.g(10, 59) + seg.b(10, 59) == 0.0);
  }
}

TEST_CASE("run_pipeline errors carry the stage") {
  const auto dir = testutil::scratch_dir("pipeline_err");
  RunConfig cfg;
  cfg.out = dir / "out";

  CHECK_THROWS_AS(run_pipeline(cfg), PipelineError);

  cfg.scene = dir / "missing.ppm";
  try {
    run_pipeline(cfg);
    FAIL("expected failure");
  } catch (const PipelineError &e) {
    CHECK(e.stage() == "load");
    CHECK(e.exit_code() == 2);
  }

  save_raster(dir / "small.ppm", testutil::uniform_scene(100, 100, 0.5));
  cfg.scene = dir / "small.ppm";
  cfg.m = 3;
  try {
    run_pipeline(cfg);
    FAIL("expected failure");
  } catch (const PipelineError &e) {
    CHECK(e.stage() == "mosaic");
    CHECK(e.exit_code() == 1);
  }
}

TEST_CASE("uniform scene: no interest points and no boxes") {
  const auto dir = testutil::scratch_dir("pipeline_uniform");
  save_raster(dir / "grey.ppm", testutil::uniform_scene(360, 288, 0.5));
  RunConfig cfg;
  cfg.scene = dir / "grey.ppm";
  cfg.out = dir / "out";
  const RunReport report = run_pipeline(cfg);
  CHECK(report.points.empty());
  const RgbImage annotated = load_raster(cfg.out / "annotated.ppm");
  CHECK((annotated.r == 128 / 255.0).all());
  CHECK((annotated.g == annotated.r).all());
  CHECK_FALSE(std::filesystem::exists(cfg.out / "chip_1.ppm"));
}
