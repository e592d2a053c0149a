#include "ribbon/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <complex>
#include <map>
#include <numbers>
#include <set>

#include "ribbon/error.hpp"
#include "ribbon/intersect.hpp"

namespace ribbon {

using cplx = std::complex<double>;
using std::numbers::pi;

ArcDiagram hamiltonian_arc_check(const SignedGaussCode& code) {
  code.validate();
  ArcDiagram d;
  const std::size_t n = code.tokens.size();
  const std::size_t k = n / 2;
  if (k == 0) {
    d.code = code;
    return d;
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::set<int> seen;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = seen.insert(code.tokens[(r + i) % n].label).second;
    if (!ok) continue;
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < k; ++i) relabel[code.tokens[(r + i) % n].label] = static_cast<int>(i) + 1;
    d.rotation = r;
    d.arc_end = k;
    for (std::size_t i = 0; i < n; ++i) {
      GaussToken t = code.tokens[(r + i) % n];
      t.label = relabel[t.label];
      d.code.tokens.push_back(t);
    }
    for (std::size_t i = 0; i < k; ++i) d.omega.push_back(d.code.tokens[i].over ? +1 : -1);
    for (std::size_t i = k; i < n; ++i) d.tau.push_back(d.code.tokens[i].label);
    return d;
  }
  throw Error(ErrorKind::NoArc, "no rotation of " + code.str() + " starts with an arc through every crossing");
}

namespace {

constexpr double kCapHeight = 2.25;  // Mercator height; polar angle 2 atan(exp(-h)) ~ 0.21 < pi/12

struct Chord {
  double from, to;  // boundary angles on the unit w-circle
};

bool inside_arc(double a, double b, double x) {
  // x strictly inside the counterclockwise arc from a to b
  const double span = std::fmod(std::fmod(b - a, 2 * pi) + 2 * pi, 2 * pi);
  const double off = std::fmod(std::fmod(x - a, 2 * pi) + 2 * pi, 2 * pi);
  return off > 1e-12 && off < span - 1e-12;
}

bool interleave(const Chord& p, const Chord& q) {
  return inside_arc(p.from, p.to, q.from) != inside_arc(p.from, p.to, q.to);
}

// Hyperbolic geodesic of the unit disk between two boundary points.
std::vector<cplx> geodesic(double ta, double tb, std::size_t m) {
  const cplx a = std::polar(1.0, ta), b = std::polar(1.0, tb);
  const double d = std::remainder(tb - ta, 2 * pi);
  std::vector<cplx> out(m + 1);
  if (std::abs(d) > pi - 1e-9) {
    for (std::size_t i = 0; i <= m; ++i) out[i] = a + (b - a) * (static_cast<double>(i) / static_cast<double>(m));
    return out;
  }
  const double half = std::abs(d) / 2;
  const cplx c = std::polar(1.0 / std::cos(half), ta + d / 2);
  const double r = std::tan(half);
  const double pa = std::arg(a - c);
  const double dp = std::remainder(std::arg(b - c) - pa, 2 * pi);
  for (std::size_t i = 0; i <= m; ++i) out[i] = c + std::polar(r, pa + dp * static_cast<double>(i) / static_cast<double>(m));
  out.front() = a;
  out.back() = b;
  return out;
}

// Disk coordinate w -> plane coordinate xi = (w + 1/w) / 2 -> zeta, folded into
// one expression so that w = 0 (xi = infinity) stays finite.
struct Chart {
  double b = 1.0, c = 0.0, alpha = 0.0;

  cplx from_xi(double xi) const {
    const double x = (xi - c) / b;
    return std::polar(1.0, alpha) * cplx(1.0, -x) / cplx(1.0, x);
  }
  cplx from_w(cplx w) const {
    const cplx q = (w * w + 1.0 - 2.0 * c * w);
    const cplx i(0, 1);
    return std::polar(1.0, alpha) * (2.0 * b * w - i * q) / (2.0 * b * w + i * q);
  }
};

// (height, longitude) in Mercator coordinates.
struct Merc {
  double h, phi;
};

Merc to_merc(cplx z) { return {std::log(std::abs(z)), std::arg(z)}; }

Vec3 merc_to_sphere(double h, double phi) {
  const double lat = 2 * std::atan(std::exp(h)) - pi / 2;
  return {std::cos(lat) * std::cos(phi), -std::cos(lat) * std::sin(phi), std::sin(lat)};
}

double bump(double x) { return std::abs(x) < 1 ? std::exp(1 - 1 / (1 - x * x)) : 0.0; }

struct Shear {
  std::vector<double> centers;
  std::vector<int> sign;
  double width = 0.5;

  double operator()(double phi) const {
    double f = 0;
    for (std::size_t j = 0; j < centers.size(); ++j)
      f += sign[j] * kCapHeight * bump(std::remainder(phi - centers[j], 2 * pi) / width);
    return f;
  }
};

struct Skeleton {
  std::vector<Vec3> pts;
  std::size_t arc_last = 0;  // index of Q in pts
  std::vector<std::size_t> connector_start;
  std::vector<Vec3> crossing_points;
  double score = -1;
};

Skeleton make_skeleton(const std::vector<double>& xi_arc, const std::vector<std::vector<cplx>>& chords,
                       const std::vector<double>& xi_cross, const std::vector<int>& omega, const Chart& chart,
                       std::size_t stride) {
  Skeleton sk;
  std::vector<Merc> m;
  for (std::size_t i = 0; i < xi_arc.size(); i += stride) m.push_back(to_merc(chart.from_xi(xi_arc[i])));
  if ((xi_arc.size() - 1) % stride != 0) m.push_back(to_merc(chart.from_xi(xi_arc.back())));
  sk.arc_last = m.size() - 1;
  for (const auto& ch : chords) {
    sk.connector_start.push_back(m.size());
    for (std::size_t i = stride; i + 1 < ch.size(); i += stride) m.push_back(to_merc(chart.from_w(ch[i])));
  }
  Shear shear;
  for (std::size_t j = 0; j < xi_cross.size(); ++j) {
    shear.centers.push_back(to_merc(chart.from_xi(xi_cross[j])).phi);
    shear.sign.push_back(omega[j]);
  }
  double gap = 2 * pi;
  auto sorted = shear.centers;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    const double next = j + 1 < sorted.size() ? sorted[j + 1] : sorted[0] + 2 * pi;
    gap = std::min(gap, next - sorted[j]);
  }
  shear.width = 0.45 * std::min(gap, pi);

  double pole = pi;
  for (const auto& p : m) {
    if (!std::isfinite(p.h)) {
      pole = 0;
      break;
    }
    const double h = p.h + shear(p.phi);
    const double lat = 2 * std::atan(std::exp(h)) - pi / 2;
    pole = std::min(pole, pi / 2 - std::abs(lat));
    sk.pts.push_back(merc_to_sphere(h, p.phi));
  }
  for (std::size_t j = 0; j < xi_cross.size(); ++j) {
    const Merc c = to_merc(chart.from_xi(xi_cross[j]));
    sk.crossing_points.push_back(merc_to_sphere(c.h + shear(c.phi), c.phi));
  }
  sk.score = std::min(pole, 0.3 * gap);
  return sk;
}

// Uniform arclength resampling of a closed polyline; also maps one marked index.
// Uniform in (optionally weighted) arclength.
std::vector<Vec3> resample_closed(const std::vector<Vec3>& pts, std::size_t m, std::size_t mark, double& mark_param,
                                  const std::function<double(const Vec3&)>& weight = nullptr) {
  const std::size_t n = pts.size();
  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weight ? weight(pts[i]) : 1.0;
    cum[i + 1] = cum[i] + w * (pts[(i + 1) % n] - pts[i]).norm();
  }
  const double total = cum[n];
  mark_param = cum[mark] / total;
  std::vector<Vec3> out(m);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double target = total * static_cast<double>(i) / static_cast<double>(m);
    while (seg + 1 < n && cum[seg + 1] < target) ++seg;
    const double len = cum[seg + 1] - cum[seg];
    const double f = len > 0 ? (target - cum[seg]) / len : 0.0;
    out[i] = pts[seg] + f * (pts[(seg + 1) % n] - pts[seg]);
  }
  return out;
}

ClosedCurve3 gaussian_lowpass(const std::vector<Vec3>& samples, double modes) {
  auto spec = analyze(samples);
  const int cap = std::min<int>(static_cast<int>(spec.cos.size()), static_cast<int>(std::ceil(5.3 * modes)));
  spec = truncate(spec, cap);
  for (int k = 1; k <= cap; ++k) {
    const double g = std::exp(-std::pow(k / modes, 2));
    spec.cos[k - 1] *= g;
    spec.sin[k - 1] *= g;
  }
  return ClosedCurve3(spec);
}

}  // namespace

FieldLayout build_field_layout(const ArcDiagram& diagram, std::size_t grid_n) {
  const std::size_t k = diagram.arc_end;
  ToleranceSet tol;
  if (k == 0) {
    ClosedCurve3 equator(Vec3::Zero(), {Vec3(1, 0, 0)}, {Vec3(0, -1, 0)});
    return {SphericalCurve(equator, grid_n), {}, {}, 0.0, 1};
  }

  // Crossings sit on the slit [-1, 1]; w = e^{i theta} is the slit's lower
  // side, w = e^{-i theta} the upper side.
  std::vector<double> xi(k), theta(k);
  std::vector<int> sign(k);
  for (std::size_t j = 0; j < k; ++j) {
    xi[j] = -1.0 + 2.0 * static_cast<double>(j + 1) / static_cast<double>(k + 1);
    theta[j] = std::acos(xi[j]);
    sign[j] = diagram.code.tokens[j].sign;
  }
  // The return path crosses the arc upward exactly when omega * handedness = +1.
  auto arrive = [&](int label) {
    const std::size_t j = static_cast<std::size_t>(label - 1);
    return diagram.omega[j] * sign[j] > 0 ? theta[j] : -theta[j];
  };
  std::vector<Chord> chords;
  chords.push_back({0.0, arrive(diagram.tau.front())});
  for (std::size_t i = 0; i + 1 < k; ++i) chords.push_back({-arrive(diagram.tau[i]), arrive(diagram.tau[i + 1])});
  chords.push_back({-arrive(diagram.tau.back()), pi});
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = a + 1; b < chords.size(); ++b)
      if (interleave(chords[a], chords[b]))
        throw Error(ErrorKind::LayoutFailed, "connectors of " + diagram.code.str() + " cannot be drawn disjointly");

  constexpr std::size_t kArcSamples = 3000, kChordSamples = 3000;
  std::vector<double> xi_arc(kArcSamples + 1);
  for (std::size_t i = 0; i <= kArcSamples; ++i)
    xi_arc[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(kArcSamples);
  std::vector<std::vector<cplx>> chord_pts;
  for (const auto& c : chords) chord_pts.push_back(geodesic(c.from, c.to, kChordSamples));

  // Place the poles (conjugate pair c +- i b in the slit plane) as far from the
  // drawing as possible.
  Chart best;
  double best_score = -1;
  for (int ib = 0; ib < 28; ++ib) {
    for (int ic = -9; ic <= 9; ++ic) {
      Chart ch;
      ch.b = 0.1 * std::pow(1.2, ib);
      ch.c = 0.1 * ic;
      ch.alpha = std::atan((1 - ch.c) / ch.b) + std::atan((-1 - ch.c) / ch.b);
      const auto sk = make_skeleton(xi_arc, chord_pts, xi, diagram.omega, ch, 10);
      if (sk.score > best_score) {
        best_score = sk.score;
        best = ch;
      }
    }
  }
  const auto sk = make_skeleton(xi_arc, chord_pts, xi, diagram.omega, best, 1);

  LayoutPlan plan;
  for (std::size_t j = 0; j < k; ++j) (diagram.omega[j] > 0 ? plan.north_points : plan.south_points).push_back(sk.crossing_points[j]);
  for (std::size_t c = 0; c < sk.connector_start.size(); ++c) {
    const std::size_t end = c + 1 < sk.connector_start.size() ? sk.connector_start[c + 1] : sk.pts.size();
    plan.connector_paths.emplace_back(sk.pts.begin() + static_cast<long>(sk.connector_start[c]), sk.pts.begin() + static_cast<long>(end));
  }

  double arc_end_param = 0;
  const auto uniform = resample_closed(sk.pts, 16384, sk.arc_last, arc_end_param);
  const double cap_cos = std::cos(pi / 12);
  std::string last_failure = "no smoothing level tried";
  for (double modes : {200.0, 320.0, 128.0}) {
    try {
      SphericalCurve field(gaussian_lowpass(uniform, modes), grid_n);
      auto dps = sphere_double_points(field, tol, grid_n);
      if (dps.size() != k) {
        last_failure = std::to_string(dps.size()) + " double points instead of " + std::to_string(k);
        continue;
      }
      std::vector<ParamCrossing> cr;
      bool ok = true;
      for (const auto& dp : dps) {
        if (!(dp.s < arc_end_param && dp.s_bar > arc_end_param) || std::abs(dp.point.z()) < cap_cos) {
          ok = false;
          break;
        }
        const bool s_over = dp.point.z() > 0;
        const Vec3 to = field.eval_deriv(s_over ? dp.s : dp.s_bar), tu = field.eval_deriv(s_over ? dp.s_bar : dp.s);
        cr.push_back({dp.s, dp.s_bar, s_over, det3(to, tu, dp.point) > 0 ? 1 : -1});
      }
      if (!ok) {
        last_failure = "double point outside the polar caps or off the arc";
        continue;
      }
      const auto code = code_from_crossings(cr);
      if (!same_code(code, diagram.code)) {
        last_failure = "re-detected code " + code.str();
        continue;
      }
      return {field, plan, dps, arc_end_param, static_cast<int>(modes)};
    } catch (const Error& e) {
      last_failure = e.what();
    }
  }
  throw Error(ErrorKind::LayoutFailed, "layout of " + diagram.code.str() + " failed: " + last_failure);
}

SphericalCurve build_field(const ArcDiagram& diagram, std::size_t grid_n) {
  return build_field_layout(diagram, grid_n).field;
}

namespace {

Vec3 great_circle(double sigma) { return {std::sin(2 * pi * sigma), 0.0, std::cos(2 * pi * sigma)}; }

// C-infinity step: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double a = std::exp(-1 / x), b = std::exp(-1 / (1 - x));
  return a / (a + b);
}

// Smooth plateau on [a, b] with ramps of width r at each end; s is taken
// modulo 1 relative to a.
double plateau(double s, double a, double b, double r) {
  double t = s - a;
  t -= std::floor(t);
  const double len = b - a;
  return smooth_step(t / r) * smooth_step((len - t) / r);
}

constexpr double kBallRadius = 0.1;
constexpr double kTipX = 0.97;       // extremal point of the tied-in knot
constexpr double kKnotReach = 0.06;  // max distance of the knot from its tip
constexpr double kLeadX = 0.98;
constexpr double kLeadGap = 0.012;

std::vector<Vec3> knot_insertion(const ClosedCurve3& k1) {
  constexpr std::size_t m = 4096;
  const auto pts = k1.sample(m);
  const auto der = k1.sample_deriv(m);
  std::size_t ie = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (pts[i].x() > pts[ie].x()) ie = i;
  const Vec3 ex = Vec3::UnitX();
  Vec3 t = der[ie] - ex * ex.dot(der[ie]);
  if (t.norm() < 1e-12) throw Error(ErrorKind::IrregularCurve, "k1 is singular at its extremal point");
  t.normalize();
  const Vec3 n = ex.cross(t);
  double reach = 0;
  for (const auto& p : pts) reach = std::max(reach, (p - pts[ie]).norm());
  const double f = kKnotReach / reach;
  auto local = [&](const Vec3& p) {
    const Vec3 d = p - pts[ie];
    return Vec3(kTipX + f * d.dot(ex), f * d.dot(t), f * d.dot(n));
  };

  const auto gap = min_self_distance(k1.evaluator(), m, 0.01);
  if (f * gap.distance < 1.5e-3)
    throw Error(ErrorKind::BallTooSmall, "k1 strands come within " + std::to_string(f * gap.distance) +
                                             " after scaling into the ball");
  std::size_t cut = 1;
  while (cut < m / 8 && (local(pts[(ie + cut) % m]) - local(pts[(ie + m - cut) % m])).norm() < kLeadGap) ++cut;
  if (cut >= m / 8) throw Error(ErrorKind::BallTooSmall, "cannot open k1 at its extremal point");

  const double z_in = 0.8 * kBallRadius;
  const Vec3 e_in(std::sqrt(1 - z_in * z_in), 0, z_in), e_out(std::sqrt(1 - z_in * z_in), 0, -z_in);
  const Vec3 p_plus = local(pts[(ie + cut) % m]), p_minus = local(pts[(ie + m - cut) % m]);
  const Vec3 a1(kLeadX, p_plus.y(), p_plus.z()), a2(kLeadX, p_minus.y(), p_minus.z());

  std::vector<Vec3> path;
  auto segment = [&](const Vec3& a, const Vec3& b) {
    const int steps = std::max(2, static_cast<int>((b - a).norm() / 2e-4));
    for (int i = 0; i < steps; ++i) path.push_back(a + (b - a) * (static_cast<double>(i) / steps));
  };
  segment(e_in, a1);
  segment(a1, p_plus);
  for (std::size_t i = cut; i <= m - cut; ++i) path.push_back(local(pts[(ie + i) % m]));
  segment(p_minus, a2);
  segment(a2, e_out);
  path.push_back(e_out);
  return path;
}

}  // namespace

ClosedCurve3 base_prototype(const BaseKnot& k1, std::size_t grid_n) {
  if (std::holds_alternative<UnknotPreset>(k1)) return ClosedCurve3(Vec3::Zero(), {Vec3(0, 0, 1)}, {Vec3(1, 0, 0)});

  const auto insertion = knot_insertion(std::get<ClosedCurve3>(k1));
  const double z_in = 0.8 * kBallRadius;
  const double s_in = std::acos(z_in) / (2 * pi), s_out = std::acos(-z_in) / (2 * pi);
  std::vector<Vec3> poly;
  constexpr int kCircleSamples = 40000;
  for (int i = 0; i < kCircleSamples; ++i) {
    const double s = static_cast<double>(i) / kCircleSamples;
    if (s < s_in) poly.push_back(great_circle(s));
  }
  poly.insert(poly.end(), insertion.begin(), insertion.end());
  for (int i = 0; i < kCircleSamples; ++i) {
    const double s = static_cast<double>(i) / kCircleSamples;
    if (s > s_out) poly.push_back(great_circle(s));
  }
  double unused;
  // Spend extra parameter on the ball so the warped base stays band-limited.
  const auto weight = [](const Vec3& p) {
    return 1.0 + 8.0 * smooth_step((1.5 * kBallRadius - (p - Vec3::UnitX()).norm()) / (0.5 * kBallRadius));
  };
  const auto uniform = resample_closed(poly, 32768, 0, unused, weight);
  const auto proto = gaussian_lowpass(uniform, 250.0);
  (void)grid_n;
  return proto;
}

namespace {

struct ParamRange {
  double lo, hi;
};

// sigma positions of the poles on the prototype.
void pole_params(const ClosedCurve3& proto, double& sigma_n, double& sigma_s) {
  constexpr std::size_t m = 1 << 16;
  const auto pts = proto.sample(m);
  std::size_t in = 0, is = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (pts[i].z() > pts[in].z()) in = i;
    if (pts[i].z() < pts[is].z()) is = i;
  }
  sigma_n = static_cast<double>(in) / m;
  sigma_s = static_cast<double>(is) / m;
  if (sigma_n > 0.5) sigma_n -= 1.0;
}

}  // namespace

ClosedCurve3 build_base(const BaseKnot& k1, const ArcDiagram& diagram, const SphericalCurve& u, std::size_t grid_n) {
  const ClosedCurve3 proto = base_prototype(k1, grid_n);
  const ToleranceSet tol;
  const auto dps = sphere_double_points(u, tol, grid_n);
  if (dps.size() != diagram.crossings())
    throw Error(ErrorKind::LayoutFailed, "field has " + std::to_string(dps.size()) + " double points, diagram has " +
                                             std::to_string(diagram.crossings()));
  if (dps.empty()) return proto;

  double sigma_n, sigma_s;
  pole_params(proto, sigma_n, sigma_s);

  // First visits (on the arc) have the smaller parameter.
  ParamRange i1{1, 0}, i2{1, 0};
  for (const auto& dp : dps) {
    i1 = {std::min(i1.lo, dp.s), std::max(i1.hi, dp.s)};
    i2 = {std::min(i2.lo, dp.s_bar), std::max(i2.hi, dp.s_bar)};
  }
  const double m1 = 0.5 * (i1.lo + i1.hi), m2 = 0.5 * (i2.lo + i2.hi);
  const double gap1 = i2.lo - i1.hi, gap2 = i1.lo + 1 - i2.hi;
  if (!(gap1 > 0 && gap2 > 0)) throw Error(ErrorKind::LayoutFailed, "arc and return visits overlap in parameter");
  const double width = std::max(i1.hi - i1.lo, i2.hi - i2.lo);
  const double eps = std::min(0.25, (1.0 / 48.0) / std::max(width, 1e-3));
  const double L = m2 - m1;
  const double A = (sigma_s - sigma_n) - eps * L;
  const double B = 1.0 - (sigma_s - sigma_n) - eps * (1 - L);
  if (!(A > 0 && B > 0)) throw Error(ErrorKind::LayoutFailed, "warp budget is negative");

  // W' = eps + A p1 + B p2 with unit-mass plateaus p1, p2 inside the gaps.
  const double g1a = i1.hi + 0.05 * gap1, g1b = i2.lo - 0.05 * gap1;
  const double g2a = i2.hi + 0.05 * gap2, g2b = i1.lo + 1 - 0.05 * gap2;
  const double r1 = 0.3 * (g1b - g1a), r2 = 0.3 * (g2b - g2a);
  constexpr std::size_t kFine = 1 << 16;
  std::vector<double> p1(kFine), p2(kFine);
  double mass1 = 0, mass2 = 0;
  for (std::size_t j = 0; j < kFine; ++j) {
    const double s = static_cast<double>(j) / kFine;
    p1[j] = plateau(s, g1a, g1b, r1);
    p2[j] = plateau(s, g2a, g2b, r2);
    mass1 += p1[j] / kFine;
    mass2 += p2[j] / kFine;
  }
  std::vector<Vec3> dperiodic(kFine);
  for (std::size_t j = 0; j < kFine; ++j)
    dperiodic[j] = Vec3(eps + A * p1[j] / mass1 + B * p2[j] / mass2 - 1.0, 0, 0);
  const auto dspec = analyze(dperiodic);
  TrigCoefficients pspec;
  for (std::size_t k = 1; k <= dspec.cos.size(); ++k) {
    const double w = 2 * pi * static_cast<double>(k);
    pspec.cos.push_back(-dspec.sin[k - 1] / w);
    pspec.sin.push_back(dspec.cos[k - 1] / w);
  }
  pspec = truncate(pspec, degree_for_tolerance(pspec, 1e-13));
  const ClosedCurve3 periodic(pspec);
  const double shift = sigma_n - (m1 + periodic.eval(m1).x());
  const Warp warp = [periodic, shift](double s) { return s + periodic.eval(s).x() + shift; };

  const std::size_t dense = 4 * grid_n;
  std::vector<Vec3> samples(dense);
  for (std::size_t j = 0; j < dense; ++j) samples[j] = proto.eval(warp(static_cast<double>(j) / dense));
  const auto spec = analyze(samples);
  const int limit = static_cast<int>(grid_n / 2) - 1;
  const int degree = std::min(degree_for_tolerance(spec, 1e-9), limit);
  double tail = 0;
  for (std::size_t k = static_cast<std::size_t>(degree); k < spec.cos.size(); ++k)
    tail += spec.cos[k].norm() + spec.sin[k].norm();
  if (tail > 1e-4)
    throw Error(ErrorKind::BallTooSmall, "warped base needs more than " + std::to_string(limit) +
                                             " harmonics (dropped tail " + std::to_string(tail) + ")");
  return ClosedCurve3(truncate(spec, degree));
}

SignedGaussCode spatial_code(const ClosedCurve3& curve, std::size_t grid_n) {
  const Vec3 dirs[] = {Vec3(0.3, 0.5, 0.81), Vec3(-0.42, 0.21, 0.88), Vec3(0.61, -0.35, 0.71), Vec3(0.12, 0.93, 0.35),
                       Vec3(0.77, 0.14, -0.62)};
  std::string why;
  for (const auto& d : dirs) {
    try {
      return gauss_from_spatial(curve, Projection::planar(d), ToleranceSet{}, grid_n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericProjection) throw;
      why = e.what();
    }
  }
  throw Error(ErrorKind::NonGenericProjection, "every trial direction failed: " + why);
}

RibbonFrame build_frame(const BaseKnot& k1, const SignedGaussCode& k2_code, std::size_t grid_n) {
  const auto diagram = hamiltonian_arc_check(k2_code);
  const auto layout = build_field_layout(diagram, grid_n);
  auto base = build_base(k1, diagram, layout.field, grid_n);
  return RibbonFrame(std::move(base), layout.field, grid_n);
}

}  // namespace ribbon
