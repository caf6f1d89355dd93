#include "uncommon/pipeline.hpp"

#include "uncommon/render.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <future>

namespace uncommon {
namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
public:
  explicit StageTimer(std::vector<StageTiming> &sink) : sink_(sink) {}

  template <typename F>
  auto run(const std::string &stage, PipelineError::Category category, F &&fn) {
    const auto start = Clock::now();
    try {
      if constexpr (std::is_void_v<std::invoke_result_t<F>>) {
        fn();
        record(stage, start);
      } else {
        auto value = fn();
        record(stage, start);
        return value;
      }
    } catch (const PipelineError &) {
      throw;
    } catch (const RasterError &e) {
      throw PipelineError(stage, PipelineError::Category::Io, e.what());
    } catch (const std::filesystem::filesystem_error &e) {
      throw PipelineError(stage, PipelineError::Category::Io, e.what());
    } catch (const std::exception &e) {
      throw PipelineError(stage, category, e.what());
    }
  }

private:
  void record(const std::string &stage, Clock::time_point start) {
    sink_.push_back({stage, std::chrono::duration<double>(Clock::now() - start).count()});
  }

  std::vector<StageTiming> &sink_;
};

PlaneResult process_plane(const Plane &plane, double w, const RunConfig &cfg, const TileGrid &tiles) {
  PlaneResult r;
  r.kind = plane.kind;
  r.w = w;
  r.stretched = minmax_stretch(plane, cfg.levels);
  r.flat = !(r.stretched.source_max > r.stretched.source_min);
  r.segmentation = segment_plane(r.stretched, w, cfg.offset, tiles);
  r.uncommon = uncommon_map(r.segmentation.seg);
  if (r.flat) {
    r.uncommon.values.setZero();
    r.uncommon.uncommonness.fill(0);
  }
  return r;
}

const char *plane_suffix(PlaneKind kind) {
  switch (kind) {
  case PlaneKind::Hue: return "h";
  case PlaneKind::Saturation: return "s";
  case PlaneKind::Intensity: return "i";
  case PlaneKind::Generic: break;
  }
  return "g";
}

} // namespace

PipelineResult analyze_scene(const RgbImage &scene, const RunConfig &cfg) {
  PipelineResult res;
  res.config = cfg;
  StageTimer timer(res.timings);
  using Cat = PipelineError::Category;

  timer.run("config", Cat::Validation, [&] { cfg.validate(); });

  res.mosaic = timer.run("mosaic", Cat::Validation, [&] {
    return build_mosaic(scene, cfg.camera(scene.width(), scene.height()), cfg.preprocess());
  });

  timer.run("segment", Cat::Validation, [&] {
    const TileGrid &tiles = res.mosaic.tiles;
    const HsiPlanes &p = res.mosaic.planes;
    // The three planes are independent; results do not depend on scheduling.
    auto hue = std::async(std::launch::async, [&] { return process_plane(p.h, cfg.w_hue, cfg, tiles); });
    auto sat = std::async(std::launch::async, [&] { return process_plane(p.s, cfg.w_sat, cfg, tiles); });
    res.planes[2] = process_plane(p.i, cfg.w_int, cfg, tiles);
    res.planes[0] = hue.get();
    res.planes[1] = sat.get();
  });

  timer.run("interest", Cat::Validation, [&] {
    res.interest = fuse_interest(res.planes[0].uncommon, res.planes[1].uncommon, res.planes[2].uncommon);
    res.blurred = gaussian_blur(res.interest, cfg.blur);
    const SaliencyConfig sal = cfg.saliency();
    sal.validate();
    res.points = top_interest_points(res.blurred, sal.k,
                                     sal.suppression_radius(res.mosaic.width(), res.mosaic.height()));
  });

  timer.run("chips", Cat::Validation, [&] {
    for (const InterestPoint &pt : res.points)
      res.chips.push_back(acquire_chip(scene, res.mosaic, {pt.x, pt.y}));
  });
  return res;
}

RunReport PipelineResult::report() const {
  RunReport r;
  r.scene = config.scene.string();
  r.mosaic_w = mosaic.width();
  r.mosaic_h = mosaic.height();
  r.camera = mosaic.cam;
  r.d = mosaic.d;
  r.levels = config.levels;
  r.offset = config.offset;
  r.blur = config.blur;
  r.top_k = config.top_k;
  r.suppression_radius = config.saliency().suppression_radius(r.mosaic_w, r.mosaic_h);
  for (std::size_t k = 0; k < planes.size(); ++k) {
    const PlaneResult &p = planes[k];
    PlaneReport &out = r.planes[k];
    out.kind = p.kind;
    out.w = p.w;
    out.source_min = p.stretched.source_min;
    out.source_max = p.stretched.source_max;
    out.flat = p.flat;
    out.pairs = p.segmentation.hist.total();
    out.peaks = p.segmentation.ranked.peaks;
    out.area = p.uncommon.area;
    out.uncommonness = p.uncommon.uncommonness;
  }
  for (std::size_t k = 0; k < points.size(); ++k)
    r.points.push_back({points[k], chips[k].scene_x, chips[k].scene_y, chips[k].scene_center});
  r.timings = timings;
  return r;
}

std::string report_json(const RunReport &r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["scene"] = r.scene;
  j["mosaic"] = {{"width", r.mosaic_w}, {"height", r.mosaic_h}, {"downsample", r.d}};
  j["camera"] = {{"fov", {r.camera.fov_w, r.camera.fov_h}},
                 {"step", {r.camera.step_x, r.camera.step_y}},
                 {"grid", {r.camera.m, r.camera.n}}};
  j["levels"] = r.levels;
  j["offset"] = {r.offset.dx, r.offset.dy};
  j["blur"] = r.blur;
  j["top_k"] = r.top_k;
  j["suppression_radius"] = r.suppression_radius;

  ordered_json planes = ordered_json::array();
  for (const PlaneReport &p : r.planes) {
    ordered_json peaks = ordered_json::array();
    for (std::size_t s = 0; s < p.peaks.size(); ++s) {
      const Peak &pk = p.peaks[s];
      peaks.push_back({{"rank", s + 1},
                       {"u", pk.u},
                       {"v", pk.v},
                       {"height", pk.height},
                       {"mass", pk.mass},
                       {"discovery", pk.discovery}});
    }
    ordered_json segments = ordered_json::array();
    for (int s = 1; s <= kMaxPeaks; ++s)
      if (p.area[s] > 0)
        segments.push_back({{"label", s}, {"area", p.area[s]}, {"uncommonness", p.uncommonness[s]}});
    planes.push_back({{"plane", to_string(p.kind)},
                      {"w", p.w},
                      {"source_min", p.source_min},
                      {"source_max", p.source_max},
                      {"flat", p.flat},
                      {"pairs", p.pairs},
                      {"peaks", peaks},
                      {"segments", segments}});
  }
  j["planes"] = planes;

  ordered_json points = ordered_json::array();
  for (const ReportedPoint &rp : r.points)
    points.push_back({{"rank", rp.point.rank},
                      {"x", rp.point.x},
                      {"y", rp.point.y},
                      {"score", rp.point.score},
                      {"scene_center", {rp.scene_center.x, rp.scene_center.y}},
                      {"chip_origin", {rp.chip_x, rp.chip_y}}});
  j["interest_points"] = points;
  return j.dump(2) + "\n";
}

void write_outputs(const PipelineResult &res, const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  for (const PlaneResult &p : res.planes) {
    const std::string sfx = plane_suffix(p.kind);
    const Plane &src = p.kind == PlaneKind::Hue          ? res.mosaic.planes.h
                       : p.kind == PlaneKind::Saturation ? res.mosaic.planes.s
                                                         : res.mosaic.planes.i;
    save_pgm(dir / ("mosaic_" + sfx + ".pgm"), render_unit(src.values));
    save_raster(dir / ("seg_" + sfx + ".ppm"), render_segmentation(p.segmentation.seg));
    save_pgm(dir / ("hist_" + sfx + ".pgm"), render_histogram(p.segmentation.hist));
    save_pgm(dir / ("uncommon_" + sfx + ".pgm"), render_scaled(p.uncommon.values.cast<double>()));
  }
  save_pgm(dir / "interest.pgm", render_scaled(res.interest.values));
  save_pgm(dir / "interest_blurred.pgm", render_scaled(res.blurred.values));

  const int box_w = res.mosaic.cam.fov_w / res.mosaic.d, box_h = res.mosaic.cam.fov_h / res.mosaic.d;
  save_raster(dir / "annotated.ppm", annotate(res.mosaic.preview, res.points, box_w, box_h));
  for (std::size_t k = 0; k < res.chips.size(); ++k)
    save_raster(dir / ("chip_" + std::to_string(k + 1) + ".ppm"), res.chips[k].image);

  std::ofstream out(dir / "report.json", std::ios::binary | std::ios::trunc);
  out << report_json(res.report());
  if (!out)
    throw RasterError(RasterError::Kind::WriteFailed, "cannot write " + (dir / "report.json").string());
}

RunReport run_pipeline(const RunConfig &cfg) {
  std::vector<StageTiming> load_timing;
  StageTimer timer(load_timing);
  if (cfg.scene.empty())
    throw PipelineError("load", PipelineError::Category::Validation, "no scene given (--scene)");
  const RgbImage scene =
      timer.run("load", PipelineError::Category::Io, [&] { return load_raster(cfg.scene); });

  PipelineResult res = analyze_scene(scene, cfg);
  res.timings.insert(res.timings.begin(), load_timing.begin(), load_timing.end());
  timer.run("write", PipelineError::Category::Io, [&] { write_outputs(res, cfg.out); });
  RunReport report = res.report();
  report.timings.push_back(load_timing.back());
  return report;
}

} // namespace uncommon
