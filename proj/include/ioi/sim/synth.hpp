#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ioi/config.hpp"
#include "ioi/sim/scenario.hpp"
#include "ioi/types.hpp"

namespace ioi::sim {

/// Person position at time t: linear interpolation between waypoints,
/// holding the last waypoint afterwards. Only valid from the first waypoint
/// onward (the person has not entered the scene before it).
Eigen::Vector2d person_position(const ScenarioPerson& person, Timestamp t);

/// Interpolated head yaw, shortest-arc, degrees in [-180, 180).
double person_head_yaw(const ScenarioPerson& person, Timestamp t);

/// Tracker stand-in: one PersonTrack per person active at t. frontal_face is
/// true iff the head yaw points back at the robot within facing_threshold
/// degrees (angles wrapped).
std::vector<PersonTrack> synthesize_tracks(const Scenario& scenario, Timestamp t,
                                           double facing_threshold_deg = 20.0);

/// Multichannel sensor audio for the window [start, start + duration):
/// band-limited noise per active speech/noise source (speech 500-2800 Hz,
/// radio/tv 200-4000 Hz), delayed per microphone with the exact plane-wave
/// phase for the source bearing, summed, plus white sensor noise at
/// config.snr_db below unit source RMS. Rows = channels. Deterministic in
/// (seed, frame_index).
Eigen::MatrixXd synthesize_audio(const Scenario& scenario, const FusionConfig& config,
                                 Timestamp window_start, double window_duration,
                                 unsigned long long seed, long frame_index);

}  // namespace ioi::sim
