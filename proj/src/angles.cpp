#include "ioi/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace ioi {

double wrap_degrees(double deg) {
  double r = std::fmod(deg, 360.0);  // exact remainder, in (-360, 360)
  if (r < -180.0) {
    r += 360.0;
  } else if (r >= 180.0) {
    r -= 360.0;
  }
  return r == 0.0 ? 0.0 : r;  // collapse -0
}

Direction direction_from_azimuth(double azimuth_deg) {
  if (!std::isfinite(azimuth_deg)) {
    throw std::invalid_argument("direction_from_azimuth: non-finite azimuth");
  }
  Direction d;
  d.azimuth_deg = wrap_degrees(azimuth_deg);
  const double rad = deg_to_rad(d.azimuth_deg);
  d.unit = Eigen::Vector2d(std::cos(rad), std::sin(rad));
  return d;
}

Direction direction_from_vector(const Eigen::Vector2d& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n < 1e-12) {
    throw std::invalid_argument("direction_from_vector: zero or non-finite vector");
  }
  Direction d;
  d.unit = v / n;
  d.azimuth_deg = wrap_degrees(rad_to_deg(std::atan2(d.unit.y(), d.unit.x())));
  return d;
}

double angle_between(const Direction& a, const Direction& b) {
  const double dot = std::clamp(a.unit.dot(b.unit), -1.0, 1.0);
  return rad_to_deg(std::acos(dot));
}

double bearing_of(const Eigen::Vector2d& position) {
  return direction_from_vector(position).azimuth_deg;
}

}  // namespace ioi
