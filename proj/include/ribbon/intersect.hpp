#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ribbon/curves.hpp"

namespace ribbon {

/// Transversal self-intersection of a spherical curve: u(s) = u(s_bar), s < s_bar.
struct DoublePoint {
  double s = 0.0;
  double s_bar = 0.0;
  Vec3 point = Vec3::Zero();
  double crossing_angle = 0.0;  // angle between the tangent lines, in (0, pi/2]
};

/// A pair at which the outer edge passes through itself:
/// x(s) - x(s_bar) = width * (u(s_bar) - u(s)).
struct CrossingRecord {
  double s = 0.0;
  double s_bar = 0.0;
  double width = 0.0;
  double residual = 0.0;
};

struct GoalPost {
  double s = 0.0;
  double s_bar = 0.0;
  double orthogonality_residual = 0.0;  // |u(s) . (x(s) - x(s_bar))| / |x(s) - x(s_bar)|
  double separation = 0.0;              // |x(s) - x(s_bar)|
};

struct MatchReport {
  std::vector<std::pair<DoublePoint, DoublePoint>> pairs;  // (u double point, z double point)
  double max_parameter_drift = 0.0;
  std::vector<DoublePoint> unmatched_u;
  std::vector<DoublePoint> unmatched_z;

  bool bijective() const { return unmatched_u.empty() && unmatched_z.empty(); }
};

struct Stabilization {
  bool unbounded = false;  // goal posts present; no trustworthy supremum
  double width = 0.0;      // sup of crossing widths (0 when there are none)
};

/// Closest approach of a curve to itself over parameter pairs at circular
/// distance >= sep_lambda.
struct GapResult {
  double distance = 0.0;
  double s = 0.0;
  double s_bar = 0.0;
};

struct EmbeddingCheck {
  bool embedded = false;
  GapResult gap;
};

/// Double points of a unit-sphere curve given by an evaluator.
///
/// Candidates come from an exhaustive great-arc segment intersection test on
/// the n-point grid; each is refined by damped Gauss-Newton on |u(s) - u(s_bar)|^2.
/// Throws TangencyDetected when a crossing angle falls below angle_tol and
/// TriplePointDetected when two distinct double points share an image ball
/// of radius 2 eq_tol.
std::vector<DoublePoint> sphere_double_points(const CurveEval& u, const ToleranceSet& tol, std::size_t grid_n);
std::vector<DoublePoint> sphere_double_points(const SphericalCurve& u, const ToleranceSet& tol,
                                              std::size_t grid_n = kDefaultGridN);

std::vector<CrossingRecord> crossing_widths(const RibbonFrame& frame);
Stabilization stabilization_width(const RibbonFrame& frame);

std::vector<GoalPost> detect_goalposts(const RibbonFrame& frame);
/// |u(s) . chord_direction(x, s, s_bar)| at a double point of the field.
double orthogonality_residual(const RibbonFrame& frame, const DoublePoint& dp);

Vec3 chord_direction(const ClosedCurve3& x, double s, double s_bar, double eq_tol = 1e-6);

/// Replace u by a small rigid rotation of itself so that no goal posts remain.
RibbonFrame remove_goalposts(const RibbonFrame& frame, double max_angle);

MatchReport match_double_points(const std::vector<DoublePoint>& u_dps, const SphericalCurve& z, const ToleranceSet& tol,
                                std::size_t grid_n = kDefaultGridN);

GapResult min_self_distance(const CurveEval& curve, std::size_t grid_n, double sep_lambda);
EmbeddingCheck edge_embedded(const RibbonFrame& frame, double R);

/// Residual |x(s) - x(s_bar) - width (u(s_bar) - u(s))|.
double crossing_residual(const RibbonFrame& frame, double s, double s_bar, double width);

Mat3 rotation_matrix(const Vec3& axis, double angle);

/// Largest angle between u0 and a chord p[j] - p[i], i < j, of a sampled arc.
double max_chord_angle(std::span<const Vec3> arc, const Vec3& u0);

}  // namespace ribbon
