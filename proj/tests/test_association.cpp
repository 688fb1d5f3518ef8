#include <cmath>
#include <optional>
#include <random>

#include <doctest.h>

#include "ioi/fusion/association.hpp"

using namespace ioi;

namespace {

SoundSourceEstimate sound_at(double azimuth_deg, Timestamp t = 0.0) {
  return {direction_from_azimuth(azimuth_deg), 100.0, t};
}

PersonTrack track_at(int id, double bearing_deg, double range_m, Timestamp t = 0.0) {
  const double rad = deg_to_rad(bearing_deg);
  return {id, {range_m * std::cos(rad), range_m * std::sin(rad)}, false, t};
}

/// Brute-force oracle: smallest angle to the sound direction wins, ties to
/// the lowest track_id, rejected above delta_l.
std::optional<int> min_angle_oracle(const std::vector<PersonTrack>& tracks,
                                    double sound_az, double delta_l) {
  std::optional<int> best;
  double best_angle = 1e9;
  for (const auto& t : tracks) {
    const double bearing = rad_to_deg(std::atan2(t.position.y(), t.position.x()));
    const double angle = std::abs(wrap_degrees(bearing - sound_az));
    if (angle < best_angle - 1e-12 ||
        (std::abs(angle - best_angle) <= 1e-12 && best && t.track_id < *best)) {
      best = t.track_id;
      best_angle = angle;
    }
  }
  if (best && best_angle > delta_l) return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("a track dead on the sound bearing matches with zero error") {
  FusionConfig cfg;
  const auto result = match_speaker({track_at(1, 25.0, 2.0)}, sound_at(25.0), cfg);
  REQUIRE(result.matched.has_value());
  CHECK(*result.matched == 1);
  CHECK(*result.angle_error_deg == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("20 degrees off with delta_l = 15 is rejected") {
  FusionConfig cfg;  // delta_l = 15
  const auto result = match_speaker({track_at(1, 30.0, 2.0)}, sound_at(10.0), cfg);
  CHECK_FALSE(result.matched.has_value());
  CHECK_FALSE(result.angle_error_deg.has_value());
}

TEST_CASE("the closer of two candidates wins") {
  FusionConfig cfg;
  const std::vector<PersonTrack> tracks = {track_at(1, 10.0, 2.0), track_at(2, 5.0, 3.0)};
  const auto result = match_speaker(tracks, sound_at(0.0), cfg);
  const auto oracle = min_angle_oracle(tracks, 0.0, cfg.delta_l);
  REQUIRE(result.matched.has_value());
  CHECK(*result.matched == 2);
  CHECK(*result.matched == *oracle);
  CHECK(*result.angle_error_deg == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("an exact angular tie breaks to the lowest track_id") {
  FusionConfig cfg;
  // Same bearing, different ranges: identical normalized dot products.
  const std::vector<PersonTrack> tracks = {track_at(7, 30.0, 4.0), track_at(2, 30.0, 2.0)};
  const auto result = match_speaker(tracks, sound_at(30.0), cfg);
  REQUIRE(result.matched.has_value());
  CHECK(*result.matched == 2);
}

TEST_CASE("empty track list is no match, not an error") {
  FusionConfig cfg;
  const auto result = match_speaker({}, sound_at(0.0), cfg);
  CHECK_FALSE(result.matched.has_value());
}

TEST_CASE("zero-norm positions are invalid input") {
  FusionConfig cfg;
  PersonTrack bad{1, {0.0, 0.0}, false, 0.0};
  CHECK_THROWS_AS(match_speaker({bad}, sound_at(0.0), cfg), std::invalid_argument);
}

TEST_CASE("scaling any position by lambda > 0 changes nothing") {
  FusionConfig cfg;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> az(-180.0, 180.0);
  std::uniform_real_distribution<double> range(0.5, 6.0);
  std::uniform_real_distribution<double> lambda(0.1, 50.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<PersonTrack> tracks;
    const int n = 1 + trial % 4;
    for (int i = 0; i < n; ++i) tracks.push_back(track_at(i + 1, az(rng), range(rng)));
    const auto sound = sound_at(az(rng));
    const auto base = match_speaker(tracks, sound, cfg);

    auto scaled = tracks;
    for (auto& t : scaled) t.position *= lambda(rng);
    const auto result = match_speaker(scaled, sound, cfg);
    CHECK(result.matched == base.matched);
    if (base.angle_error_deg) {
      CHECK(*result.angle_error_deg ==
            doctest::Approx(*base.angle_error_deg).epsilon(1e-9));
    }
  }
}

TEST_CASE("normalized-dot argmax equals the minimum-angle brute force, 1000 trials") {
  FusionConfig cfg;
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> az(-180.0, 180.0);
  std::uniform_real_distribution<double> range(0.3, 8.0);
  std::uniform_int_distribution<int> count(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<PersonTrack> tracks;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) tracks.push_back(track_at(i + 1, az(rng), range(rng)));
    const double sound_az = az(rng);

    const auto result = match_speaker(tracks, sound_at(sound_az), cfg);
    const auto oracle = min_angle_oracle(tracks, sound_az, cfg.delta_l);
    CHECK(result.matched == oracle);
    if (result.matched) {
      // Rejection happens exactly when the best angle exceeds delta_l.
      CHECK(*result.angle_error_deg <= cfg.delta_l);
    }
  }
}

TEST_CASE("rotating all tracks and the sound together keeps the match") {
  FusionConfig cfg;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> az(-180.0, 180.0);
  std::uniform_real_distribution<double> range(0.5, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<PersonTrack> tracks;
    for (int i = 0; i < 3; ++i) tracks.push_back(track_at(i + 1, az(rng), range(rng)));
    const double sound_az = az(rng);
    const double phi = az(rng);

    const auto base = match_speaker(tracks, sound_at(sound_az), cfg);

    auto rotated = tracks;
    const double c = std::cos(deg_to_rad(phi)), s = std::sin(deg_to_rad(phi));
    for (auto& t : rotated) {
      t.position = Eigen::Vector2d(c * t.position.x() - s * t.position.y(),
                                   s * t.position.x() + c * t.position.y());
    }
    const auto result = match_speaker(rotated, sound_at(sound_az + phi), cfg);
    CHECK(result.matched == base.matched);
  }
}
