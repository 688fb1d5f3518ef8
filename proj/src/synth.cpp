#include "ioi/sim/synth.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "ioi/angles.hpp"
#include "ioi/doa/fft.hpp"

namespace ioi::sim {
namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent deterministic stream per (seed, frame, source).
std::mt19937_64 stream_rng(uint64_t seed, uint64_t frame, uint64_t stream) {
  uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ frame);
  s = splitmix64(s ^ (stream * 0x9e3779b97f4a7c15ULL));
  return std::mt19937_64(s);
}

struct ActiveSource {
  Eigen::Vector2d position;
  double f_lo;
  double f_hi;
  double gain;
  uint64_t stream;
};

/// Unit-RMS band-limited noise rendered at every microphone with the exact
/// plane-wave phase shift for the source bearing.
void render_source(const ActiveSource& source, const MicArrayGeometry& array,
                   double sample_rate, int length, std::mt19937_64& rng,
                   Eigen::MatrixXd& accum) {
  const int half = length / 2 + 1;
  int k_lo = int(std::ceil(source.f_lo * length / sample_rate));
  int k_hi = int(std::floor(source.f_hi * length / sample_rate));
  k_lo = std::max(k_lo, 1);
  k_hi = std::min(k_hi, length / 2 - 1);
  if (k_hi < k_lo) throw std::runtime_error("synthesize_audio: band has no bins");

  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd base = Eigen::VectorXcd::Zero(half);
  const int n_band = k_hi - k_lo + 1;
  const double amplitude = source.gain * length / (2.0 * std::sqrt(double(n_band)));
  for (int k = k_lo; k <= k_hi; ++k) {
    base[k] = std::complex<double>(normal(rng), normal(rng)) * amplitude;
  }

  const double bearing = rad_to_deg(std::atan2(source.position.y(), source.position.x()));
  const double rad = deg_to_rad(bearing);
  const Eigen::Vector2d u(std::cos(rad), std::sin(rad));

  Eigen::VectorXcd shifted(half);
  for (std::size_t m = 0; m < array.size(); ++m) {
    const double tau = -array.mic_positions[m].dot(u) / array.speed_of_sound;
    for (int k = 0; k < half; ++k) {
      const double freq = k * sample_rate / length;
      shifted[k] = base[k] * std::polar(1.0, -2.0 * kPi * freq * tau);
    }
    accum.row(Eigen::Index(m)) += doa::irfft(shifted, length).transpose();
  }
}

}  // namespace

Eigen::Vector2d person_position(const ScenarioPerson& person, Timestamp t) {
  const auto& wps = person.waypoints;
  if (wps.empty() || t < wps.front().time) {
    throw std::invalid_argument("person_position: person not active at this time");
  }
  if (t >= wps.back().time) return wps.back().position;
  for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
    if (t <= wps[i + 1].time) {
      const double span = wps[i + 1].time - wps[i].time;
      const double frac = (t - wps[i].time) / span;
      return wps[i].position + frac * (wps[i + 1].position - wps[i].position);
    }
  }
  return wps.back().position;
}

double person_head_yaw(const ScenarioPerson& person, Timestamp t) {
  const auto& wps = person.waypoints;
  if (wps.empty() || t < wps.front().time) {
    throw std::invalid_argument("person_head_yaw: person not active at this time");
  }
  if (t >= wps.back().time) return wrap_degrees(wps.back().head_yaw_deg);
  for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
    if (t <= wps[i + 1].time) {
      const double span = wps[i + 1].time - wps[i].time;
      const double frac = (t - wps[i].time) / span;
      const double delta = wrap_degrees(wps[i + 1].head_yaw_deg - wps[i].head_yaw_deg);
      return wrap_degrees(wps[i].head_yaw_deg + frac * delta);
    }
  }
  return wrap_degrees(wps.back().head_yaw_deg);
}

std::vector<PersonTrack> synthesize_tracks(const Scenario& scenario, Timestamp t,
                                           double facing_threshold_deg) {
  std::vector<PersonTrack> tracks;
  for (const ScenarioPerson& person : scenario.persons) {
    if (person.waypoints.empty() || t < person.waypoints.front().time) continue;

    PersonTrack track;
    track.track_id = person.id;
    track.position = person_position(person, t);
    track.timestamp = t;

    const double bearing_to_robot = bearing_of(-track.position);
    const double yaw = person_head_yaw(person, t);
    track.frontal_face =
        std::abs(wrap_degrees(yaw - bearing_to_robot)) <= facing_threshold_deg;
    tracks.push_back(track);
  }
  return tracks;
}

Eigen::MatrixXd synthesize_audio(const Scenario& scenario, const FusionConfig& config,
                                 Timestamp window_start, double window_duration,
                                 unsigned long long seed, long frame_index) {
  const double fs = config.doa.sample_rate;
  const int length = int(std::lround(window_duration * fs));
  if (length < 2) throw std::invalid_argument("synthesize_audio: window too short");
  const std::size_t mics = config.array.size();

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Eigen::Index(mics), length);
  const double t_center = window_start + window_duration / 2.0;

  // Sources take streams 1.., file order; stream 0 is the sensor noise.
  std::vector<ActiveSource> active;
  uint64_t stream = 1;
  for (const SpeechInterval& sp : scenario.speech_intervals) {
    if (t_center >= sp.t_start && t_center < sp.t_end) {
      for (const ScenarioPerson& person : scenario.persons) {
        if (person.id == sp.person_id) {
          active.push_back({person_position(person, t_center), 500.0, 2800.0,
                            sp.gain, stream});
        }
      }
    }
    ++stream;
  }
  for (const NoiseSource& nz : scenario.noise_sources) {
    if (t_center >= nz.t_start && t_center < nz.t_end) {
      active.push_back({nz.position, 200.0, 4000.0, 1.0, stream});
    }
    ++stream;
  }

  for (const ActiveSource& source : active) {
    auto rng = stream_rng(seed, uint64_t(frame_index), source.stream);
    render_source(source, config.array, fs, length, rng, out);
  }

  // White sensor noise at snr_db below unit source RMS; inf disables it.
  if (std::isfinite(config.snr_db)) {
    const double sigma = std::pow(10.0, -config.snr_db / 20.0);
    auto rng = stream_rng(seed, uint64_t(frame_index), 0);
    std::normal_distribution<double> normal(0.0, sigma);
    for (Eigen::Index m = 0; m < out.rows(); ++m) {
      for (int n = 0; n < length; ++n) out(m, n) += normal(rng);
    }
  }
  return out;
}

}  // namespace ioi::sim
