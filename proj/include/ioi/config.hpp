#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ioi {

/// Microphone positions in the robot frame, meters. The default stands in
/// for the Kinect's seven-microphone array: one center mic plus six on a
/// 4.5 cm circle. Not a calibrated model of the real device.
struct MicArrayGeometry {
  std::vector<Eigen::Vector2d> mic_positions;
  double speed_of_sound = 343.0;  // m/s

  std::size_t size() const { return mic_positions.size(); }

  static MicArrayGeometry default_seven();
};

/// Parameters of the MUSIC direction-of-arrival estimator. All values are
/// this module's choices; the source material gives none.
struct DoaConfig {
  double sample_rate = 16000.0;  // Hz
  int fft_size = 512;            // samples per snapshot
  int hop = 256;                 // snapshot hop, samples
  double f_lo = 500.0;           // analysis band, Hz
  double f_hi = 2800.0;
  int n_sources = 1;             // assumed source count for the subspace split
  double grid_step = 1.0;        // scan grid resolution, degrees
  double peak_threshold = 10.0;  // detection floor as a multiple of the median
};

/// Every knob of the engine and simulator in one place. Loaded from a flat
/// key = value text file; unknown keys are load errors and invalid values
/// are rejected, never clamped.
struct FusionConfig {
  double delta_l = 15.0;        // speaker-association rejection angle, degrees
  double delta_t1 = 2.0;        // visual-attention entry dwell, seconds
  double delta_t2 = 2.0;        // IoI-from-visual-attention dwell, seconds
  double max_face_gap = 0.3;    // tolerated frontal-face dropout, seconds
  double frame_period = 0.1;    // engine frame period, seconds
  double facing_threshold = 20.0;  // simulator yaw-vs-bearing frontal gate, degrees
  bool enable_vision_path = true;  // false = audio-vision path only (AV-IoI)
  double snr_db = 20.0;         // simulator sensor noise level; inf = noise-free
  unsigned long long seed = 0;  // simulator noise seed
  MicArrayGeometry array = MicArrayGeometry::default_seven();
  DoaConfig doa;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

/// Parses `key = value` lines ('#' comments allowed). Unknown keys and
/// invariant violations throw std::invalid_argument with the line number.
FusionConfig load_fusion_config(std::istream& in);
FusionConfig load_fusion_config_file(const std::string& path);

}  // namespace ioi
