#ifndef UNCOMMON_CONFIG_HPP
#define UNCOMMON_CONFIG_HPP

#include "uncommon/preprocess.hpp"
#include "uncommon/saliency.hpp"
#include "uncommon/segmenter.hpp"
#include "uncommon/vcam.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uncommon {

/// Everything one pipeline run needs. fov/step of 0 mean "automatic": the
/// field of view defaults to 360x288 clipped to the scene, and the step
/// defaults to the field of view (perfect butting).
struct RunConfig {
  std::filesystem::path scene;
  int m = 1, n = 1;
  int d = 4;
  int levels = 256;
  double w_hue = 15.0, w_sat = 15.0, w_int = 20.0;
  PairOffset offset{1, 0};
  double blur = 10.0;
  int top_k = 3;
  int suppress = 0;
  int fov_w = 0, fov_h = 0;
  int step_x = 0, step_y = 0;
  std::filesystem::path out = "out";

  /// Throws ConfigError if any field is out of range.
  void validate() const;

  PreprocessConfig preprocess() const { return {d, levels}; }
  SaliencyConfig saliency() const { return {blur, top_k, suppress}; }
  VcamConfig camera(int scene_w, int scene_h) const;
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_config for --help; what() carries the usage text.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxLevels = 4096;

/// Applies one `key = value` setting. Keys are the long flag names without
/// the leading dashes. Throws ConfigError for unknown keys or bad values.
void apply_setting(RunConfig &cfg, const std::string &key, const std::string &value);

/// Reads a line-oriented `key = value` file; `#` starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path &path);

/// Defaults, then --config file values, then command-line flags.
/// args excludes the program name.
RunConfig parse_config(const std::vector<std::string> &args);

} // namespace uncommon

#endif // UNCOMMON_CONFIG_HPP
