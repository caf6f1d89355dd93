#include "uncommon/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>

namespace uncommon {
namespace {

struct KeyHelp {
  const char *key;
  const char *help;
};

constexpr std::array<KeyHelp, 14> kKeys{{
    {"scene", "scene raster (PPM, PGM or PNG)"},
    {"grid", "mosaic grid MxN: M pan columns, N tilt rows"},
    {"downsample", "downsample factor D (1, 2, 4 or 8)"},
    {"levels", "stretched histogram levels L"},
    {"w-hue", "peak disk radius for hue, stretched units"},
    {"w-sat", "peak disk radius for saturation, stretched units"},
    {"w-int", "peak disk radius for intensity, stretched units"},
    {"offset", "co-occurrence pair offset DX,DY"},
    {"blur", "Gaussian blur sigma B, mosaic pixels"},
    {"top-k", "number of interest points"},
    {"suppress", "interest-point suppression radius (0 = automatic)"},
    {"fov", "field of view WxH in scene pixels (0x0 = automatic)"},
    {"step", "pan/tilt step SXxSY in scene pixels (0x0 = field of view)"},
    {"out", "output directory"},
}};

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string &key, const std::string &value, const std::string &why) {
  throw ConfigError("invalid value '" + value + "' for " + key + ": " + why);
}

int parse_int(const std::string &key, const std::string &text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    bad_value(key, text, "expected an integer");
  return v;
}

double parse_real(const std::string &key, const std::string &text) {
  const std::string t = trim(text);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    bad_value(key, text, "expected a number");
  return v;
}

std::pair<int, int> parse_pair(const std::string &key, const std::string &text, char sep) {
  const std::string t = trim(text);
  const auto at = t.find_first_of(sep == 'x' ? "xX" : ",");
  if (at == std::string::npos)
    bad_value(key, text, std::string("expected two integers separated by '") + sep + "'");
  return {parse_int(key, t.substr(0, at)), parse_int(key, t.substr(at + 1))};
}

} // namespace

void RunConfig::validate() const {
  if (m < 1 || n < 1)
    throw ConfigError("grid must be at least 1x1 (got " + std::to_string(m) + "x" + std::to_string(n) + ")");
  if (d != 1 && d != 2 && d != 4 && d != 8)
    throw ConfigError("downsample must be one of 1, 2, 4, 8 (got " + std::to_string(d) + ")");
  if (levels < 2 || levels > kMaxLevels)
    throw ConfigError("levels must be in [2, " + std::to_string(kMaxLevels) + "]");
  if (!(w_hue > 0.0) || !(w_sat > 0.0) || !(w_int > 0.0))
    throw ConfigError("peak radii must be positive");
  if (offset.dx == 0 && offset.dy == 0)
    throw ConfigError("offset must be non-zero");
  if (!(blur > 0.0))
    throw ConfigError("blur must be positive");
  if (top_k < 1)
    throw ConfigError("top-k must be >= 1");
  if (suppress < 0)
    throw ConfigError("suppress must be >= 0");
  if (fov_w < 0 || fov_h < 0 || (fov_w == 0) != (fov_h == 0))
    throw ConfigError("fov must be WxH with both positive, or 0x0 for automatic");
  if (step_x < 0 || step_y < 0 || (step_x == 0) != (step_y == 0))
    throw ConfigError("step must be SXxSY with both positive, or 0x0 for the field of view");
}

VcamConfig RunConfig::camera(int scene_w, int scene_h) const {
  VcamConfig cam;
  cam.fov_w = fov_w > 0 ? fov_w : std::min(360, scene_w);
  cam.fov_h = fov_h > 0 ? fov_h : std::min(288, scene_h);
  cam.step_x = step_x > 0 ? step_x : cam.fov_w;
  cam.step_y = step_y > 0 ? step_y : cam.fov_h;
  cam.m = m;
  cam.n = n;
  return cam;
}

void apply_setting(RunConfig &cfg, const std::string &key, const std::string &value) {
  if (key == "scene") {
    cfg.scene = trim(value);
  } else if (key == "grid") {
    std::tie(cfg.m, cfg.n) = parse_pair(key, value, 'x');
  } else if (key == "downsample") {
    cfg.d = parse_int(key, value);
  } else if (key == "levels") {
    cfg.levels = parse_int(key, value);
  } else if (key == "w-hue") {
    cfg.w_hue = parse_real(key, value);
  } else if (key == "w-sat") {
    cfg.w_sat = parse_real(key, value);
  } else if (key == "w-int") {
    cfg.w_int = parse_real(key, value);
  } else if (key == "offset") {
    std::tie(cfg.offset.dx, cfg.offset.dy) = parse_pair(key, value, ',');
  } else if (key == "blur") {
    cfg.blur = parse_real(key, value);
  } else if (key == "top-k") {
    cfg.top_k = parse_int(key, value);
  } else if (key == "suppress") {
    cfg.suppress = parse_int(key, value);
  } else if (key == "fov") {
    std::tie(cfg.fov_w, cfg.fov_h) = parse_pair(key, value, 'x');
  } else if (key == "step") {
    std::tie(cfg.step_x, cfg.step_y) = parse_pair(key, value, 'x');
  } else if (key == "out") {
    cfg.out = trim(value);
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file " + path.string());
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (trim(line).empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected 'key = value'");
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

RunConfig parse_config(const std::vector<std::string> &args) {
  CLI::App app{"Segment a simulated pan-tilt mosaic and re-point at its most uncommon regions", "uncommon"};
  std::map<std::string, std::string> flags;
  for (const KeyHelp &k : kKeys)
    app.add_option(std::string("--") + k.key, flags[k.key], k.help);
  std::string config_file;
  app.add_option("--config", config_file, "file of 'key = value' lines; flags override it");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError &e) {
    throw ConfigError(e.what());
  }

  RunConfig cfg;
  if (!config_file.empty())
    for (const auto &[key, value] : read_config_file(config_file))
      apply_setting(cfg, key, value);
  for (const KeyHelp &k : kKeys)
    if (app.count(std::string("--") + k.key) > 0)
      apply_setting(cfg, k.key, flags[k.key]);
  cfg.validate();
  return cfg;
}

} // namespace uncommon
