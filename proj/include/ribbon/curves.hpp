#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ribbon/fourier.hpp"
#include "ribbon/vec.hpp"

namespace ribbon {

struct CurvePoint {
  Vec3 p;
  Vec3 d;  // derivative with respect to the parameter s
};

// Generic evaluator used by the scanning routines so they can run on
// Fourier curves, normalized curves and pointwise combinations alike.
using CurveEval = std::function<CurvePoint(double)>;

/// Smooth closed curve D = R/Z -> R^3 stored as a truncated Fourier series.
///
/// Evaluation is exact for the stored series, so derivatives carry no
/// finite-difference error. Instances are immutable.
class ClosedCurve3 {
 public:
  ClosedCurve3() = default;
  explicit ClosedCurve3(TrigCoefficients coeffs);
  ClosedCurve3(Vec3 constant, std::vector<Vec3> cos_coeffs, std::vector<Vec3> sin_coeffs);

  static ClosedCurve3 constant_curve(const Vec3& c);

  /// Least-squares fit to n uniform samples (n a power of two). The degree is
  /// the smallest whose dropped tail is below tol, capped at max_degree.
  static ClosedCurve3 fit(std::span<const Vec3> samples, double tol = 1e-9, int max_degree = -1);

  /// Fit to fn sampled on an n-point grid.
  static ClosedCurve3 fit(const std::function<Vec3(double)>& fn, std::size_t n, double tol = 1e-9,
                          int max_degree = -1);

  Vec3 eval(double s) const;
  Vec3 eval_deriv(double s) const;
  Vec3 eval_second(double s) const;
  CurvePoint eval_both(double s) const;

  std::vector<Vec3> sample(std::size_t n) const;
  std::vector<Vec3> sample_deriv(std::size_t n) const;

  int degree() const { return static_cast<int>(coeffs_.cos.size()); }
  const Vec3& constant() const { return coeffs_.constant; }
  const std::vector<Vec3>& cos_coeffs() const { return coeffs_.cos; }
  const std::vector<Vec3>& sin_coeffs() const { return coeffs_.sin; }
  const TrigCoefficients& coefficients() const { return coeffs_; }

  ClosedCurve3 transformed(const Mat3& linear, const Vec3& offset = Vec3::Zero()) const;
  ClosedCurve3 scaled(double factor) const { return transformed(factor * Mat3::Identity()); }
  ClosedCurve3 translated(const Vec3& v) const { return transformed(Mat3::Identity(), v); }

  CurveEval evaluator() const;

 private:
  TrigCoefficients coeffs_;
};

/// Unit-vector valued closed curve, represented as generator(s)/|generator(s)|.
class SphericalCurve {
 public:
  /// Throws VanishingGenerator if |generator| < eq_tol anywhere on the grid.
  explicit SphericalCurve(ClosedCurve3 generator, std::size_t check_grid = 4096, double eq_tol = 1e-6);

  Vec3 eval(double s) const;
  Vec3 eval_deriv(double s) const;
  CurvePoint eval_both(double s) const;
  std::vector<Vec3> sample(std::size_t n) const;
  std::vector<CurvePoint> sample_both(std::size_t n) const;

  const ClosedCurve3& generator() const { return generator_; }
  CurveEval evaluator() const;

 private:
  ClosedCurve3 generator_;
};

struct ToleranceSet {
  double eq_tol = 1e-6;        // coincidence threshold on S^2 and R^3
  double angle_tol = 1e-3;     // transversality floor, radians
  double sep_lambda = 1e-2;    // minimum parameter separation of distinct preimages
  double residual_tol = 1e-8;  // acceptance of the crossing-width equation residual

  void validate() const;
};

inline constexpr std::size_t kDefaultGridN = 4096;

/// A ribbon frame: base curve x together with unit field u along it.
struct RibbonFrame {
  ClosedCurve3 base;
  SphericalCurve field;
  std::size_t grid_n = kDefaultGridN;
  ToleranceSet tol;

  RibbonFrame(ClosedCurve3 base, SphericalCurve field, std::size_t grid_n = kDefaultGridN, ToleranceSet tol = {});

  /// y_R(s) = x(s) + R u(s), evaluated pointwise with exact derivatives.
  CurvePoint edge_point(double R, double s) const;
  /// z_t(s) = t x(s) + u(s).
  CurvePoint rescaled_point(double t, double s) const;
};

struct ValidationReport {
  bool regular_x = false;
  double min_speed_x = 0.0;
  bool regular_u = false;
  double min_speed_u = 0.0;
  bool x_embedded = false;
  double x_min_gap = 0.0;
  bool u_no_triples = false;
  bool u_transversal = false;
  double min_crossing_angle = 0.0;
  std::size_t double_points = 0;
  bool no_goalposts = false;
  double worst_orthogonality = 0.0;  // smallest |u . F| over double points (1 when there are none)
  std::string note;

  bool all_passed() const { return regular_x && regular_u && x_embedded && u_no_triples && u_transversal && no_goalposts; }
};

ClosedCurve3 outer_edge(const RibbonFrame& frame, double R);
ClosedCurve3 rescaled_edge(const RibbonFrame& frame, double t);
SphericalCurve spherical_projection(const ClosedCurve3& curve, double eq_tol = 1e-6, std::size_t grid_n = kDefaultGridN);

/// C^1 sup distance between two curves sampled on an n-point grid.
double c1_distance(const CurveEval& a, const CurveEval& b, std::size_t n);
double frame_distance(const RibbonFrame& f1, const RibbonFrame& f2);

ValidationReport validate_frame(const RibbonFrame& frame);

using Warp = std::function<double(double)>;
/// New curve with eval_new(s) = eval_old(warp(s)), re-fit on the grid.
ClosedCurve3 reparameterize(const ClosedCurve3& curve, const Warp& warp, std::size_t grid_n = kDefaultGridN);
ClosedCurve3 arclength_normalize(const ClosedCurve3& curve, std::size_t grid_n = kDefaultGridN);

/// Two-sided Hausdorff distance between the images, each sampled at n points.
double hausdorff_distance(const ClosedCurve3& a, const ClosedCurve3& b, std::size_t n = kDefaultGridN);

double max_norm(const ClosedCurve3& curve, std::size_t n = kDefaultGridN);
/// max / min speed on the grid.
double speed_ratio(const ClosedCurve3& curve, std::size_t n = kDefaultGridN);

}  // namespace ribbon
