#pragma once

#include <string>

#include "ioi/angles.hpp"

namespace ioi {

/// Seconds since scenario start. Event streams fed to the engine are
/// non-decreasing in time within one run.
using Timestamp = double;

/// A tracked person at one frame. The robot sits at the origin; position is
/// meters in the robot frame and must have nonzero norm. track_id is stable
/// across frames for the same person.
struct PersonTrack {
  int track_id = 0;
  Eigen::Vector2d position{0.0, 0.0};
  bool frontal_face = false;
  Timestamp timestamp = 0.0;
};

/// One detected sound source: a bearing plus the pseudospectrum peak height
/// that produced it. Only above-threshold peaks become estimates.
struct SoundSourceEstimate {
  Direction direction;
  double power = 0.0;
  Timestamp timestamp = 0.0;
};

enum class IoIEventKind { AudioVision, VisionOnly };

const char* to_string(IoIEventKind kind);

/// Emitted on every transition into the IoI state. state_path records the
/// states visited since the machine last left Monitoring, semicolon-joined.
struct IoIEvent {
  IoIEventKind kind = IoIEventKind::AudioVision;
  int track_id = 0;
  Timestamp timestamp = 0.0;
  std::string state_path;
};

}  // namespace ioi
