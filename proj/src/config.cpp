#include "ioi/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ioi/angles.hpp"

namespace ioi {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& text, int line) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) fail(line, "trailing characters in number '" + text + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(line, "expected a number, got '" + text + "'");
  } catch (const std::out_of_range&) {
    fail(line, "number out of range: '" + text + "'");
  }
}

int parse_int(const std::string& text, int line) {
  const double v = parse_double(text, line);
  if (v != std::floor(v)) fail(line, "expected an integer, got '" + text + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& text, int line) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  fail(line, "expected true/false, got '" + text + "'");
}

std::vector<Eigen::Vector2d> parse_mic_positions(const std::string& text, int line) {
  std::vector<Eigen::Vector2d> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream pair(group);
    double x = 0.0, y = 0.0;
    if (!(pair >> x >> y)) fail(line, "mic_positions entry must be 'x y'");
    std::string rest;
    if (pair >> rest) fail(line, "mic_positions entry must be 'x y'");
    out.emplace_back(x, y);
  }
  if (out.empty()) fail(line, "mic_positions is empty");
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

MicArrayGeometry MicArrayGeometry::default_seven() {
  MicArrayGeometry g;
  g.mic_positions.emplace_back(0.0, 0.0);
  const double radius = 0.045;
  for (int k = 0; k < 6; ++k) {
    const double a = deg_to_rad(60.0 * k);
    g.mic_positions.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return g;
}

void FusionConfig::validate() const {
  auto reject = [](const std::string& what) {
    throw std::invalid_argument("config: " + what);
  };
  if (!(delta_l > 0.0 && delta_l < 90.0)) reject("delta_l must be in (0, 90)");
  if (!(delta_t1 > 0.0)) reject("delta_t1 must be > 0");
  if (!(delta_t2 > 0.0)) reject("delta_t2 must be > 0");
  if (!(max_face_gap >= 0.0 && max_face_gap < delta_t1))
    reject("max_face_gap must be in [0, delta_t1)");
  if (!(frame_period > 0.0)) reject("frame_period must be > 0");
  if (!(facing_threshold > 0.0 && facing_threshold < 180.0))
    reject("facing_threshold must be in (0, 180)");
  if (std::isnan(snr_db)) reject("snr_db must be a number");

  if (array.size() < 2) reject("array needs at least 2 microphones");
  for (std::size_t i = 0; i < array.size(); ++i) {
    for (std::size_t j = i + 1; j < array.size(); ++j) {
      if ((array.mic_positions[i] - array.mic_positions[j]).norm() < 1e-9)
        reject("mic_positions must be distinct");
    }
  }
  if (!(array.speed_of_sound > 0.0)) reject("speed_of_sound must be > 0");

  if (!(doa.sample_rate > 0.0)) reject("sample_rate must be > 0");
  if (!(doa.fft_size > 1)) reject("fft_size must be > 1");
  if (!(doa.hop > 0)) reject("hop must be > 0");
  if (!(doa.f_lo > 0.0 && doa.f_lo < doa.f_hi && doa.f_hi < doa.sample_rate / 2.0))
    reject("band must satisfy 0 < f_lo < f_hi < sample_rate/2");
  if (!(doa.n_sources >= 1 && doa.n_sources < static_cast<int>(array.size())))
    reject("n_sources must satisfy 1 <= n_sources < mic count");
  if (!(doa.grid_step > 0.0)) reject("grid_step must be > 0");
  const double cells = 360.0 / doa.grid_step;
  if (std::abs(cells - std::round(cells)) > 1e-9) reject("grid_step must divide 360");
  if (!(doa.peak_threshold > 0.0)) reject("peak_threshold must be > 0");
}

FusionConfig load_fusion_config(std::istream& in) {
  FusionConfig cfg;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;

    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line, "expected 'key = value'");

    if (key == "delta_l") cfg.delta_l = parse_double(value, line);
    else if (key == "delta_t1") cfg.delta_t1 = parse_double(value, line);
    else if (key == "delta_t2") cfg.delta_t2 = parse_double(value, line);
    else if (key == "max_face_gap") cfg.max_face_gap = parse_double(value, line);
    else if (key == "frame_period") cfg.frame_period = parse_double(value, line);
    else if (key == "facing_threshold") cfg.facing_threshold = parse_double(value, line);
    else if (key == "enable_vision_path") cfg.enable_vision_path = parse_bool(value, line);
    else if (key == "snr_db") cfg.snr_db = parse_double(value, line);
    else if (key == "seed") cfg.seed = static_cast<unsigned long long>(parse_double(value, line));
    else if (key == "speed_of_sound") cfg.array.speed_of_sound = parse_double(value, line);
    else if (key == "mic_positions") cfg.array.mic_positions = parse_mic_positions(value, line);
    else if (key == "sample_rate") cfg.doa.sample_rate = parse_double(value, line);
    else if (key == "fft_size") cfg.doa.fft_size = parse_int(value, line);
    else if (key == "hop") cfg.doa.hop = parse_int(value, line);
    else if (key == "f_lo") cfg.doa.f_lo = parse_double(value, line);
    else if (key == "f_hi") cfg.doa.f_hi = parse_double(value, line);
    else if (key == "n_sources") cfg.doa.n_sources = parse_int(value, line);
    else if (key == "grid_step") cfg.doa.grid_step = parse_double(value, line);
    else if (key == "peak_threshold") cfg.doa.peak_threshold = parse_double(value, line);
    else fail(line, "unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

FusionConfig load_fusion_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  return load_fusion_config(in);
}

}  // namespace ioi
