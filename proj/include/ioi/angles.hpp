#pragma once

#include <Eigen/Dense>

namespace ioi {

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle into [-180, 180). fmod is exact, so wrapping theta and
/// theta + 360 gives bit-identical results whenever theta + 360 is exact.
double wrap_degrees(double deg);

/// A horizontal-plane direction in the robot frame. 0 deg = robot forward
/// axis, angles increase counter-clockwise. azimuth_deg and unit stay
/// mutually consistent; construct through the factories below.
struct Direction {
  double azimuth_deg = 0.0;              // in [-180, 180)
  Eigen::Vector2d unit{1.0, 0.0};        // (cos, sin), unit norm
};

/// Builds a Direction from an azimuth in degrees, wrapping into [-180, 180).
/// Throws std::invalid_argument on non-finite input.
Direction direction_from_azimuth(double azimuth_deg);

/// Builds a Direction from a (not necessarily normalized) 2-vector.
/// Throws std::invalid_argument when the vector norm is ~zero or non-finite.
Direction direction_from_vector(const Eigen::Vector2d& v);

/// Angle between two directions in degrees, in [0, 180]. Symmetric.
double angle_between(const Direction& a, const Direction& b);

/// Bearing of a position as seen from the origin, degrees in [-180, 180).
double bearing_of(const Eigen::Vector2d& position);

}  // namespace ioi
