#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace ribbon {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Distance between parameters on D = R/Z.
inline double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 1.0);
  return d > 0.5 ? 1.0 - d : d;
}

inline double wrap01(double s) {
  double w = s - std::floor(s);
  return w >= 1.0 ? 0.0 : w;
}

inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

// Unsigned angle between two lines (tangent directions), in [0, pi/2].
inline double line_angle(const Vec3& a, const Vec3& b) {
  double c = std::abs(a.normalized().dot(b.normalized()));
  return std::acos(std::min(1.0, c));
}

}  // namespace ribbon
