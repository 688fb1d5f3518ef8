#include <cmath>
#include <limits>

#include <doctest.h>

#include "ioi/doa/music.hpp"
#include "ioi/io/event_log.hpp"
#include "ioi/sim/pipeline.hpp"
#include "ioi/sim/scenario.hpp"
#include "ioi/sim/synth.hpp"

using namespace ioi;
using namespace ioi::sim;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Person at (2, 1.5): bearing 36.87, bearing back to the robot -143.13.
const char* kSpeakWhileLooking =
    "[meta]\n"
    "duration = 8\n"
    "seed = 5\n"
    "[person 1]\n"
    "waypoint 0.0 2.0 1.5 -60\n"
    "waypoint 1.4 2.0 1.5 -60\n"
    "waypoint 1.5 2.0 1.5 -143.13\n"
    "waypoint 5.0 2.0 1.5 -143.13\n"
    "waypoint 5.1 2.0 1.5 -60\n"
    "[speech]\n"
    "1 2.0 4.0 1.0\n"
    "[truth]\n"
    "1 2.2 AudioVision\n";

// Person at (1.8, -1.2): bearing -33.69, back bearing 146.31. Gazes 1..7 s.
const char* kContinuousGaze =
    "[meta]\n"
    "duration = 9\n"
    "seed = 6\n"
    "[person 1]\n"
    "waypoint 0.0 1.8 -1.2 60\n"
    "waypoint 0.9 1.8 -1.2 60\n"
    "waypoint 1.0 1.8 -1.2 146.31\n"
    "waypoint 7.0 1.8 -1.2 146.31\n"
    "waypoint 7.1 1.8 -1.2 60\n"
    "[truth]\n"
    "1 5.0 VisionOnly\n";

// Glance of 1.2 s < delta_t1.
const char* kShortGlance =
    "[meta]\n"
    "duration = 7\n"
    "seed = 7\n"
    "[person 1]\n"
    "waypoint 0.0 2.0 1.5 -60\n"
    "waypoint 1.9 2.0 1.5 -60\n"
    "waypoint 2.0 2.0 1.5 -143.13\n"
    "waypoint 3.2 2.0 1.5 -143.13\n"
    "waypoint 3.3 2.0 1.5 -60\n";

// Radio at bearing -120, person at bearing 36.9 looking away the whole time.
const char* kRadioOnly =
    "[meta]\n"
    "duration = 8\n"
    "seed = 8\n"
    "[person 1]\n"
    "waypoint 0.0 2.0 1.5 -60\n"
    "[noise]\n"
    "radio -2.0 -3.46 1.0 7.0\n";

}  // namespace

TEST_CASE("silence produces no detections and no events") {
  const Scenario s = load_scenario_text(
      "[meta]\nduration = 3\n[person 1]\nwaypoint 0 2 0 -60\n");
  FusionConfig cfg;
  const RunResult r = run_scenario(s, cfg);
  CHECK(r.events.empty());
  for (const auto& entry : r.trace) CHECK(entry.state == StateKind::Monitoring);
}

TEST_CASE("a speaker at bearing 40 is localized within 2 degrees") {
  const Scenario s = load_scenario_text(
      "[meta]\nduration = 2\n"
      "[person 1]\nwaypoint 0 1.532 1.286 0\n"  // bearing 40
      "[speech]\n1 0 2 1.0\n");
  FusionConfig cfg;  // snr 20 dB
  doa::DoaEngine engine(cfg.array, cfg.doa);
  const auto audio = synthesize_audio(s, cfg, 0.5, 0.1, 3, 5);
  const auto found = engine.process(audio, 0.5);
  REQUIRE_FALSE(found.empty());
  CHECK(std::abs(wrap_degrees(found[0].direction.azimuth_deg - 40.0)) <= 2.0);
}

TEST_CASE("bearing recovered from synthesized audio matches geometry across a sweep") {
  FusionConfig cfg;
  doa::DoaEngine engine(cfg.array, cfg.doa);
  for (int b = 0; b < 8; ++b) {
    const double az = -180.0 + b * 45.0;
    Scenario s;
    s.duration = 1.0;
    ScenarioPerson p;
    p.id = 1;
    p.waypoints.push_back(
        {0.0, {2.0 * std::cos(deg_to_rad(az)), 2.0 * std::sin(deg_to_rad(az))}, 0.0});
    s.persons.push_back(p);
    s.speech_intervals.push_back({1, 0.0, 1.0, 1.0});
    const auto audio = synthesize_audio(s, cfg, 0.0, 0.2, 17, b);
    const auto found = engine.process(audio, 0.0);
    REQUIRE_FALSE(found.empty());
    CHECK(std::abs(wrap_degrees(found[0].direction.azimuth_deg - az)) <= 2.0);
  }
}

TEST_CASE("situation: speaking while looking gives exactly one AudioVision event") {
  const Scenario s = load_scenario_text(kSpeakWhileLooking);
  const RunResult r = run_scenario(s, FusionConfig{});
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].kind == IoIEventKind::AudioVision);
  CHECK(r.events[0].track_id == 1);
  CHECK(r.events[0].timestamp > 2.0);
  CHECK(r.events[0].timestamp < 3.0);
}

TEST_CASE("situation: continuous silent gaze gives exactly one VisionOnly event") {
  const Scenario s = load_scenario_text(kContinuousGaze);
  const RunResult r = run_scenario(s, FusionConfig{});
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].kind == IoIEventKind::VisionOnly);
  CHECK(r.events[0].timestamp == doctest::Approx(5.0).epsilon(0.1));
}

TEST_CASE("situation: a short glance stays silent") {
  const Scenario s = load_scenario_text(kShortGlance);
  const RunResult r = run_scenario(s, FusionConfig{});
  CHECK(r.events.empty());
}

TEST_CASE("situation: radio with nobody frontal is localized but rejected") {
  const Scenario s = load_scenario_text(kRadioOnly);
  FusionConfig cfg;

  // The DOA module does localize the radio...
  doa::DoaEngine engine(cfg.array, cfg.doa);
  const auto audio = synthesize_audio(s, cfg, 3.0, 0.1, 8, 30);
  const auto found = engine.process(audio, 3.0);
  REQUIRE_FALSE(found.empty());
  CHECK(std::abs(wrap_degrees(found[0].direction.azimuth_deg - (-120.0))) <= 3.0);

  // ...but the frontal-face gate keeps the pipeline quiet.
  const RunResult r = run_scenario(s, cfg);
  CHECK(r.events.empty());
  bool visited_vocal = false;
  for (const auto& entry : r.trace) {
    visited_vocal |= entry.state == StateKind::VocalAttention;
    CHECK(entry.state != StateKind::IoI);
  }
  CHECK(visited_vocal);
}

TEST_CASE("a small voice falls below the detection floor and is missed") {
  Scenario s = load_scenario_text(kSpeakWhileLooking);
  s.speech_intervals[0].gain = 0.01;  // far below the sensor noise floor
  const RunResult r = run_scenario(s, FusionConfig{});
  // The vocal path never fires; the 3.5 s of remaining gaze is shorter than
  // delta_t1 + delta_t2, so no VisionOnly event either.
  CHECK(r.events.empty());
}

TEST_CASE("identical scenario, config, and seed replay byte-for-byte") {
  const Scenario s = load_scenario_text(kSpeakWhileLooking);
  FusionConfig cfg;
  const RunResult a = run_scenario(s, cfg);
  const RunResult b = run_scenario(s, cfg);
  CHECK(io::format_event_log(a.events) == io::format_event_log(b.events));
  CHECK(io::format_trace(a.trace) == io::format_trace(b.trace));
  CHECK_FALSE(a.events.empty());
}

TEST_CASE("changing the seed changes the audio but not the verdict") {
  Scenario s = load_scenario_text(kSpeakWhileLooking);
  s.seed = 500;
  const RunResult a = run_scenario(s, FusionConfig{});
  REQUIRE(a.events.size() == 1);
  CHECK(a.events[0].kind == IoIEventKind::AudioVision);
}

TEST_CASE("mirroring the scenario across the x-axis mirrors the run") {
  FusionConfig cfg;
  cfg.snr_db = kInf;  // noise-free keeps the mirrored argmax exact
  const Scenario s = load_scenario_text(kSpeakWhileLooking);

  Scenario mirrored = s;
  for (auto& p : mirrored.persons) {
    for (auto& wp : p.waypoints) {
      wp.position.y() = -wp.position.y();
      wp.head_yaw_deg = wrap_degrees(-wp.head_yaw_deg);
    }
  }
  for (auto& nz : mirrored.noise_sources) nz.position.y() = -nz.position.y();

  const RunResult base = run_scenario(s, cfg);
  const RunResult mirror = run_scenario(mirrored, cfg);
  CHECK(io::format_event_log(base.events) == io::format_event_log(mirror.events));
  CHECK(io::format_trace(base.trace) == io::format_trace(mirror.trace));
  CHECK_FALSE(base.events.empty());
}

TEST_CASE("disabling the vision path silences gaze-only scenarios") {
  const Scenario s = load_scenario_text(kContinuousGaze);
  FusionConfig cfg;
  cfg.enable_vision_path = false;
  const RunResult r = run_scenario(s, cfg);
  CHECK(r.events.empty());
}
