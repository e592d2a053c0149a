#include "ribbon/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ribbon/error.hpp"
#include "ribbon/intersect.hpp"

namespace ribbon {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::VanishingGenerator: return "VanishingGenerator";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NonMonotoneWarp: return "NonMonotoneWarp";
    case ErrorKind::IrregularCurve: return "IrregularCurve";
    case ErrorKind::TriplePointDetected: return "TriplePointDetected";
    case ErrorKind::TangencyDetected: return "TangencyDetected";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::RepairFailed: return "RepairFailed";
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::GoalPostObstruction: return "GoalPostObstruction";
    case ErrorKind::NonGenericProjection: return "NonGenericProjection";
    case ErrorKind::NonRealizableCode: return "NonRealizableCode";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::NoArc: return "NoArc";
    case ErrorKind::LayoutFailed: return "LayoutFailed";
    case ErrorKind::BallTooSmall: return "BallTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ClosedCurve3

ClosedCurve3::ClosedCurve3(TrigCoefficients coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.cos.size() != coeffs_.sin.size())
    throw Error(ErrorKind::InvalidArgument, "cos and sin coefficient lists differ in length");
}

ClosedCurve3::ClosedCurve3(Vec3 constant, std::vector<Vec3> cos_coeffs, std::vector<Vec3> sin_coeffs) {
  const std::size_t d = std::max(cos_coeffs.size(), sin_coeffs.size());
  cos_coeffs.resize(d, Vec3::Zero());
  sin_coeffs.resize(d, Vec3::Zero());
  coeffs_ = TrigCoefficients{constant, std::move(cos_coeffs), std::move(sin_coeffs)};
}

ClosedCurve3 ClosedCurve3::constant_curve(const Vec3& c) { return ClosedCurve3(c, {}, {}); }

ClosedCurve3 ClosedCurve3::fit(std::span<const Vec3> samples, double tol, int max_degree) {
  TrigCoefficients spectrum = analyze(samples);
  int degree = degree_for_tolerance(spectrum, tol);
  if (max_degree >= 0) degree = std::min(degree, max_degree);
  return ClosedCurve3(truncate(spectrum, degree));
}

ClosedCurve3 ClosedCurve3::fit(const std::function<Vec3(double)>& fn, std::size_t n, double tol, int max_degree) {
  std::vector<Vec3> samples(n);
  for (std::size_t j = 0; j < n; ++j) samples[j] = fn(static_cast<double>(j) / static_cast<double>(n));
  return fit(samples, tol, max_degree);
}

CurvePoint ClosedCurve3::eval_both(double s) const {
  const double theta = kTwoPi * wrap01(s);
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  Vec3 p = coeffs_.constant;
  Vec3 d = Vec3::Zero();
  const int deg = degree();
  for (int k = 1; k <= deg; ++k) {
    // Angle addition; re-seeded every 64 steps to bound drift.
    if ((k & 63) == 0) {
      ck = std::cos(theta * k);
      sk = std::sin(theta * k);
    } else {
      const double nc = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = nc;
    }
    const Vec3& a = coeffs_.cos[k - 1];
    const Vec3& b = coeffs_.sin[k - 1];
    p += a * ck + b * sk;
    d += (kTwoPi * k) * (b * ck - a * sk);
  }
  return {p, d};
}

Vec3 ClosedCurve3::eval(double s) const { return eval_both(s).p; }
Vec3 ClosedCurve3::eval_deriv(double s) const { return eval_both(s).d; }

Vec3 ClosedCurve3::eval_second(double s) const {
  const double theta = kTwoPi * wrap01(s);
  Vec3 acc = Vec3::Zero();
  for (int k = 1; k <= degree(); ++k) {
    const double w = kTwoPi * k;
    acc -= w * w * (coeffs_.cos[k - 1] * std::cos(theta * k) + coeffs_.sin[k - 1] * std::sin(theta * k));
  }
  return acc;
}

std::vector<Vec3> ClosedCurve3::sample(std::size_t n) const { return synthesize(coeffs_, n, 0); }
std::vector<Vec3> ClosedCurve3::sample_deriv(std::size_t n) const { return synthesize(coeffs_, n, 1); }

ClosedCurve3 ClosedCurve3::transformed(const Mat3& linear, const Vec3& offset) const {
  TrigCoefficients c = coeffs_;
  c.constant = linear * c.constant + offset;
  for (auto& v : c.cos) v = linear * v;
  for (auto& v : c.sin) v = linear * v;
  return ClosedCurve3(std::move(c));
}

CurveEval ClosedCurve3::evaluator() const {
  return [curve = *this](double s) { return curve.eval_both(s); };
}

// ---------------------------------------------------------------------------
// SphericalCurve

SphericalCurve::SphericalCurve(ClosedCurve3 generator, std::size_t check_grid, double eq_tol)
    : generator_(std::move(generator)) {
  const auto pts = generator_.sample(check_grid);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (pts[j].norm() < eq_tol)
      throw Error(ErrorKind::VanishingGenerator,
                  "generator norm " + std::to_string(pts[j].norm()) + " at s=" +
                      std::to_string(static_cast<double>(j) / static_cast<double>(check_grid)));
  }
}

static CurvePoint normalize_point(const CurvePoint& g) {
  const double r = g.p.norm();
  const Vec3 u = g.p / r;
  return {u, (g.d - u * u.dot(g.d)) / r};
}

CurvePoint SphericalCurve::eval_both(double s) const { return normalize_point(generator_.eval_both(s)); }
Vec3 SphericalCurve::eval(double s) const { return generator_.eval(s).normalized(); }
Vec3 SphericalCurve::eval_deriv(double s) const { return eval_both(s).d; }

std::vector<Vec3> SphericalCurve::sample(std::size_t n) const {
  auto pts = generator_.sample(n);
  for (auto& p : pts) p.normalize();
  return pts;
}

std::vector<CurvePoint> SphericalCurve::sample_both(std::size_t n) const {
  const auto p = generator_.sample(n);
  const auto d = generator_.sample_deriv(n);
  std::vector<CurvePoint> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = normalize_point({p[j], d[j]});
  return out;
}

CurveEval SphericalCurve::evaluator() const {
  return [curve = *this](double s) { return curve.eval_both(s); };
}

// ---------------------------------------------------------------------------
// Frames

void ToleranceSet::validate() const {
  if (!(eq_tol > 0 && angle_tol > 0 && sep_lambda > 0 && residual_tol > 0))
    throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
  if (!(sep_lambda < 0.25)) throw Error(ErrorKind::InvalidArgument, "sep_lambda must be below 0.25");
}

RibbonFrame::RibbonFrame(ClosedCurve3 base_, SphericalCurve field_, std::size_t grid_n_, ToleranceSet tol_)
    : base(std::move(base_)), field(std::move(field_)), grid_n(grid_n_), tol(tol_) {
  if (grid_n < 256 || !is_power_of_two(grid_n))
    throw Error(ErrorKind::InvalidArgument, "grid_n must be a power of two >= 256");
  tol.validate();
}

CurvePoint RibbonFrame::edge_point(double R, double s) const {
  const CurvePoint x = base.eval_both(s);
  const CurvePoint u = field.eval_both(s);
  return {x.p + R * u.p, x.d + R * u.d};
}

CurvePoint RibbonFrame::rescaled_point(double t, double s) const {
  const CurvePoint x = base.eval_both(s);
  const CurvePoint u = field.eval_both(s);
  return {t * x.p + u.p, t * x.d + u.d};
}

ClosedCurve3 outer_edge(const RibbonFrame& frame, double R) {
  if (R < 0) throw Error(ErrorKind::InvalidArgument, "width must be nonnegative");
  const auto x = frame.base.sample(frame.grid_n);
  const auto u = frame.field.sample(frame.grid_n);
  std::vector<Vec3> y(frame.grid_n);
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = x[j] + R * u[j];
  // truncation relative to scale so that z_t and y_R / R share one spectrum
  return ClosedCurve3::fit(y, 1e-9 * std::max(1.0, R));
}

ClosedCurve3 rescaled_edge(const RibbonFrame& frame, double t) {
  if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "scale t must be positive");
  const auto x = frame.base.sample(frame.grid_n);
  const auto u = frame.field.sample(frame.grid_n);
  std::vector<Vec3> z(frame.grid_n);
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = t * x[j] + u[j];
  return ClosedCurve3::fit(z, 1e-9 * std::max(1.0, t));
}

SphericalCurve spherical_projection(const ClosedCurve3& curve, double eq_tol, std::size_t grid_n) {
  return SphericalCurve(curve, grid_n, eq_tol);
}

double c1_distance(const CurveEval& a, const CurveEval& b, std::size_t n) {
  double d0 = 0.0, d1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(n);
    const CurvePoint pa = a(s), pb = b(s);
    d0 = std::max(d0, (pa.p - pb.p).norm());
    d1 = std::max(d1, (pa.d - pb.d).norm());
  }
  return d0 + d1;
}

double frame_distance(const RibbonFrame& f1, const RibbonFrame& f2) {
  if (f1.grid_n != f2.grid_n) throw Error(ErrorKind::GridMismatch, "frames sampled on different grids");
  const std::size_t n = f1.grid_n;
  const auto x1 = f1.base.sample(n), x2 = f2.base.sample(n);
  const auto dx1 = f1.base.sample_deriv(n), dx2 = f2.base.sample_deriv(n);
  const auto u1 = f1.field.sample_both(n), u2 = f2.field.sample_both(n);
  double a = 0, b = 0, c = 0, d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    a = std::max(a, (x1[j] - x2[j]).norm());
    b = std::max(b, (dx1[j] - dx2[j]).norm());
    c = std::max(c, (u1[j].p - u2[j].p).norm());
    d = std::max(d, (u1[j].d - u2[j].d).norm());
  }
  return a + b + c + d;
}

ValidationReport validate_frame(const RibbonFrame& frame) {
  ValidationReport r;
  const std::size_t n = frame.grid_n;
  const auto dx = frame.base.sample_deriv(n);
  const auto u = frame.field.sample_both(n);
  r.min_speed_x = std::numeric_limits<double>::infinity();
  r.min_speed_u = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    r.min_speed_x = std::min(r.min_speed_x, dx[j].norm());
    r.min_speed_u = std::min(r.min_speed_u, u[j].d.norm());
  }
  r.regular_x = r.min_speed_x > frame.tol.eq_tol;
  r.regular_u = r.min_speed_u > frame.tol.eq_tol;

  const auto gap = min_self_distance(frame.base.evaluator(), n, frame.tol.sep_lambda);
  r.x_min_gap = gap.distance;
  r.x_embedded = gap.distance > frame.tol.eq_tol;

  if (!r.regular_u) {
    r.note = "field is not regular; double-point analysis skipped";
    return r;
  }
  try {
    const auto dps = sphere_double_points(frame.field, frame.tol, n);
    r.u_no_triples = true;
    r.u_transversal = true;
    r.double_points = dps.size();
    r.min_crossing_angle = std::numbers::pi / 2;
    for (const auto& dp : dps) r.min_crossing_angle = std::min(r.min_crossing_angle, dp.crossing_angle);
    r.worst_orthogonality = 1.0;
    for (const auto& dp : dps) r.worst_orthogonality = std::min(r.worst_orthogonality, orthogonality_residual(frame, dp));
    r.no_goalposts = r.worst_orthogonality >= frame.tol.eq_tol;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TriplePointDetected) {
      r.u_no_triples = false;
      r.u_transversal = true;
    } else if (e.kind() == ErrorKind::TangencyDetected) {
      r.u_no_triples = true;
      r.u_transversal = false;
    } else {
      throw;
    }
    r.note = e.what();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reparameterization

ClosedCurve3 reparameterize(const ClosedCurve3& curve, const Warp& warp, std::size_t grid_n) {
  const std::size_t dense = 4 * grid_n;
  const double w0 = warp(0.0);
  double prev = w0;
  for (std::size_t j = 1; j <= dense; ++j) {
    const double w = warp(static_cast<double>(j) / static_cast<double>(dense));
    if (!(w > prev)) throw Error(ErrorKind::NonMonotoneWarp, "warp is not strictly increasing");
    prev = w;
  }
  if (std::abs(prev - w0 - 1.0) > 1e-9) throw Error(ErrorKind::NonMonotoneWarp, "warp does not have degree one");
  return ClosedCurve3::fit([&](double s) { return curve.eval(warp(s)); }, grid_n);
}

double speed_ratio(const ClosedCurve3& curve, std::size_t n) {
  const auto d = curve.sample_deriv(n);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& v : d) {
    lo = std::min(lo, v.norm());
    hi = std::max(hi, v.norm());
  }
  return hi / lo;
}

ClosedCurve3 arclength_normalize(const ClosedCurve3& curve, std::size_t grid_n) {
  {
    const auto d = curve.sample_deriv(grid_n);
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& v : d) lo = std::min(lo, v.norm());
    if (lo < 1e-6) throw Error(ErrorKind::IrregularCurve, "minimum speed " + std::to_string(lo));
  }
  ClosedCurve3 current = curve;
  for (int iter = 0; iter < 8 && speed_ratio(current, grid_n) > 1.005; ++iter) {
    const std::size_t m = 8 * grid_n;
    const auto d = current.sample_deriv(m);
    // Cumulative arclength by the trapezoid rule, normalized to [0, 1].
    std::vector<double> cum(m + 1, 0.0);
    for (std::size_t j = 0; j < m; ++j) cum[j + 1] = cum[j] + 0.5 * (d[j].norm() + d[(j + 1) % m].norm());
    const double total = cum[m];
    for (auto& c : cum) c /= total;
    const Warp inverse = [&cum, m](double tau) {
      const double base = std::floor(tau);
      const double t = tau - base;
      auto it = std::upper_bound(cum.begin(), cum.end(), t);
      std::size_t k = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - cum.begin(), 1, static_cast<std::ptrdiff_t>(m)));
      const double f = (t - cum[k - 1]) / (cum[k] - cum[k - 1]);
      return base + (static_cast<double>(k - 1) + f) / static_cast<double>(m);
    };
    current = ClosedCurve3::fit([&](double s) { return current.eval(inverse(s)); }, grid_n);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Metrics

namespace {

// Distance from p to the image of c, seeded at parameter s0 and refined by
// Newton iterations on the squared distance.
double refined_point_distance(const ClosedCurve3& c, const Vec3& p, double s0) {
  double s = s0;
  for (int it = 0; it < 20; ++it) {
    const CurvePoint q = c.eval_both(s);
    const Vec3 dd = c.eval_second(s);
    const Vec3 r = q.p - p;
    const double g = r.dot(q.d);
    const double h = q.d.squaredNorm() + r.dot(dd);
    if (h <= 0) break;
    const double step = std::clamp(-g / h, -1e-2, 1e-2);
    s += step;
    if (std::abs(step) < 1e-15) break;
  }
  return (c.eval(s) - p).norm();
}

double directed_hausdorff(const ClosedCurve3& a, const ClosedCurve3& b, std::size_t n) {
  const auto pa = a.sample(n);
  const auto pb = b.sample(n);
  double worst = 0.0;
  for (const auto& p : pa) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pb.size(); ++j) {
      const double d = (pb[j] - p).squaredNorm();
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    const double refined = refined_point_distance(b, p, static_cast<double>(best) / static_cast<double>(n));
    worst = std::max(worst, std::min(refined, std::sqrt(bd)));
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const ClosedCurve3& a, const ClosedCurve3& b, std::size_t n) {
  return std::max(directed_hausdorff(a, b, n), directed_hausdorff(b, a, n));
}

double max_norm(const ClosedCurve3& curve, std::size_t n) {
  double m = 0.0;
  for (const auto& p : curve.sample(n)) m = std::max(m, p.norm());
  return m;
}

}  // namespace ribbon
