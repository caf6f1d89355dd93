#ifndef UNCOMMON_PIPELINE_HPP
#define UNCOMMON_PIPELINE_HPP

#include "uncommon/config.hpp"
#include "uncommon/saliency.hpp"
#include "uncommon/segmenter.hpp"
#include "uncommon/vcam.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace uncommon {

/// A failure tagged with the pipeline stage that raised it.
class PipelineError : public std::runtime_error {
public:
  enum class Category { Validation, Io };

  PipelineError(std::string stage, Category category, const std::string &what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), category_(category) {}

  const std::string &stage() const { return stage_; }
  Category category() const { return category_; }
  int exit_code() const { return category_ == Category::Validation ? 1 : 2; }

private:
  std::string stage_;
  Category category_;
};

struct PlaneResult {
  PlaneKind kind = PlaneKind::Generic;
  double w = 0.0;
  StretchedPlane stretched;
  PlaneSegmentation segmentation;
  UncommonMap uncommon;
  /// A plane with no contrast (min == max) cannot contain anything uncommon;
  /// its uncommon map is zeroed before fusion.
  bool flat = false;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct ReportedPoint {
  InterestPoint point;
  int chip_x = 0, chip_y = 0; // chip top-left in the scene
  PixelPoint scene_center;
};

struct PlaneReport {
  PlaneKind kind = PlaneKind::Generic;
  double w = 0.0;
  double source_min = 0.0, source_max = 0.0;
  bool flat = false;
  std::int64_t pairs = 0;
  std::vector<Peak> peaks; // ranked order
  std::array<std::int64_t, kMaxPeaks + 1> area{};
  std::array<int, kMaxPeaks + 1> uncommonness{};
};

struct RunReport {
  std::string scene;
  int mosaic_w = 0, mosaic_h = 0;
  VcamConfig camera;
  int d = 1;
  int levels = 256;
  PairOffset offset;
  double blur = 10.0;
  int top_k = 3;
  int suppression_radius = 1;
  std::array<PlaneReport, 3> planes{};
  std::vector<ReportedPoint> points;
  std::vector<StageTiming> timings; // kept out of report.json
};

struct PipelineResult {
  RunConfig config;
  Mosaic mosaic;
  std::array<PlaneResult, 3> planes; // hue, saturation, intensity
  InterestMap interest;
  InterestMap blurred;
  std::vector<InterestPoint> points;
  std::vector<Chip> chips;
  std::vector<StageTiming> timings;

  RunReport report() const;
};

/// Runs every stage in memory on an already loaded scene.
PipelineResult analyze_scene(const RgbImage &scene, const RunConfig &cfg);

/// Emits every map, chip and report.json into dir (created if needed).
void write_outputs(const PipelineResult &result, const std::filesystem::path &dir);

/// Deterministic JSON for report.json (no timings).
std::string report_json(const RunReport &report);

/// Load, analyse and write; throws PipelineError.
RunReport run_pipeline(const RunConfig &cfg);

} // namespace uncommon

#endif // UNCOMMON_PIPELINE_HPP
