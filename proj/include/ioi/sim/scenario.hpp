#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ioi/types.hpp"

namespace ioi::sim {

/// Scenario file problem, with the offending line number.
class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(int line, const std::string& what)
      : std::runtime_error("scenario line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

struct Waypoint {
  double time = 0.0;
  Eigen::Vector2d position{0.0, 0.0};
  double head_yaw_deg = 0.0;  // world frame, 0 = +x
};

/// A scripted person. Present from the first waypoint onward; position and
/// yaw interpolate linearly between waypoints and hold after the last one.
struct ScenarioPerson {
  int id = 0;
  std::vector<Waypoint> waypoints;  // strictly increasing times
};

struct SpeechInterval {
  int person_id = 0;
  double t_start = 0.0;
  double t_end = 0.0;
  double gain = 1.0;  // < 1 models a small voice
};

enum class NoiseKind { Radio, Tv };

/// A point noise source: localizable by the DOA module, rejected only at
/// the frontal-face gate.
struct NoiseSource {
  NoiseKind kind = NoiseKind::Radio;
  Eigen::Vector2d position{0.0, 0.0};
  double t_start = 0.0;
  double t_end = 0.0;
};

struct GroundTruthIoI {
  int person_id = 0;
  double t_onset = 0.0;
  IoIEventKind expected_kind = IoIEventKind::AudioVision;
};

/// A scripted ground-truth timeline of people, speech, and noise.
struct Scenario {
  double duration = 0.0;
  std::optional<unsigned long long> seed;  // overrides the config seed when set
  std::vector<ScenarioPerson> persons;
  std::vector<SpeechInterval> speech_intervals;
  std::vector<NoiseSource> noise_sources;
  std::vector<GroundTruthIoI> ground_truth_ioi;
};

/// Parses the sectioned scenario text:
///   [meta]        duration = S, seed = N
///   [person <id>] waypoint t x y yaw
///   [speech]      person t_start t_end gain
///   [noise]       kind x y t_start t_end
///   [truth]       person t_onset kind
/// Numbers are decimal, angles degrees, positions meters. Malformed or
/// inconsistent input throws ScenarioParseError with the line number.
Scenario load_scenario(std::istream& in);
Scenario load_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);

}  // namespace ioi::sim
