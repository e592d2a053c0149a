#include "ribbon/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct GridPair {
  std::size_t i, j;
  double value;
};

// Streams an n x n torus of pair values (three rows resident) and returns the
// local minima with i < j whose value is below threshold. Pairs closer than
// `window` grid steps get +inf.
template <class F>
std::vector<GridPair> scan_local_minima(std::size_t n, std::size_t window, double threshold, F&& value) {
  std::vector<float> rows[3];
  for (auto& r : rows) r.assign(n, std::numeric_limits<float>::infinity());
  auto fill = [&](std::vector<float>& row, std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = i > j ? i - j : j - i;
      const std::size_t cd = std::min(d, n - d);
      row[j] = cd < window ? std::numeric_limits<float>::infinity() : static_cast<float>(value(i, j));
    }
  };
  fill(rows[0], n - 1);
  fill(rows[1], 0);
  std::vector<GridPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    fill(rows[2], (i + 1) % n);
    const auto& prev = rows[0];
    const auto& cur = rows[1];
    const auto& next = rows[2];
    for (std::size_t j = i + 1; j < n; ++j) {
      const float v = cur[j];
      if (!(v < threshold)) continue;
      const std::size_t jl = (j + n - 1) % n, jr = (j + 1) % n;
      // strict against half the neighbours, weak against the rest, so plateaus yield one seed
      if (!(v < prev[jl] && v < prev[j] && v < prev[jr] && v < cur[jl])) continue;
      if (!(v <= cur[jr] && v <= next[jl] && v <= next[j] && v <= next[jr])) continue;
      out.push_back({i, j, v});
    }
    std::swap(rows[0], rows[1]);
    std::swap(rows[1], rows[2]);
  }
  return out;
}

bool solve2(double a11, double a12, double a22, double b1, double b2, double& x1, double& x2) {
  const double det = a11 * a22 - a12 * a12;
  if (!(std::abs(det) > 1e-300)) return false;
  x1 = (a22 * b1 - a12 * b2) / det;
  x2 = (a11 * b2 - a12 * b1) / det;
  return true;
}

// Damped Gauss-Newton for r(s, sb) = c(s) - c(sb) -> 0 (or to a local minimum of |r|).
struct PairFit {
  double s, s_bar, norm;
};

PairFit refine_pair(const CurveEval& c, double s, double sb, int max_iter = 50) {
  auto a = c(s), b = c(sb);
  Vec3 r = a.p - b.p;
  double f = r.squaredNorm();
  double mu = 1e-12;
  for (int it = 0; it < max_iter && f > 1e-32; ++it) {
    const Vec3 ja = a.d, jb = -b.d;
    const double h11 = ja.dot(ja), h12 = ja.dot(jb), h22 = jb.dot(jb);
    const double g1 = ja.dot(r), g2 = jb.dot(r);
    bool improved = false;
    for (int k = 0; k < 30; ++k) {
      const double damp = mu * std::max(h11 + h22, 1e-30);
      double d1, d2;
      if (!solve2(h11 + damp, h12, h22 + damp, -g1, -g2, d1, d2)) {
        mu = std::max(mu * 10, 1e-12);
        continue;
      }
      const double ns = s + d1, nsb = sb + d2;
      auto na = c(ns), nb = c(nsb);
      const Vec3 nr = na.p - nb.p;
      const double nf = nr.squaredNorm();
      if (nf < f) {
        const double step = std::abs(d1) + std::abs(d2);
        s = ns;
        sb = nsb;
        a = na;
        b = nb;
        r = nr;
        f = nf;
        mu = std::max(mu * 0.1, 1e-15);
        improved = true;
        if (step < 1e-15) it = max_iter;
        break;
      }
      mu = std::max(mu * 10, 1e-12);
    }
    if (!improved) break;
  }
  return {wrap01(s), wrap01(sb), std::sqrt(f)};
}

// Great-arc segment intersection test between a0a1 and b0b1 (unit vectors).
// On success returns the fractional positions along each segment.
bool arc_intersect(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1, double& ta, double& tb) {
  const Vec3 na = a0.cross(a1), nb = b0.cross(b1);
  const double sb0 = na.dot(b0), sb1 = na.dot(b1);
  if (sb0 * sb1 > 0) return false;
  const double sa0 = nb.dot(a0), sa1 = nb.dot(a1);
  if (sa0 * sa1 > 0) return false;
  if (a0.dot(b0) <= 0) return false;
  const double da = sa0 - sa1, db = sb0 - sb1;
  if (da == 0 || db == 0) return false;
  ta = std::clamp(sa0 / da, 0.0, 1.0);
  tb = std::clamp(sb0 / db, 0.0, 1.0);
  return true;
}

std::size_t window_steps(double sep_lambda, std::size_t n) {
  const double w = std::floor(sep_lambda * static_cast<double>(n)) - 2.0;
  return static_cast<std::size_t>(std::max(1.0, w));
}

template <class T>
void dedupe_pairs(std::vector<T>& v, double tol) {
  std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.s < b.s || (a.s == b.s && a.s_bar < b.s_bar); });
  std::vector<T> out;
  for (const auto& x : v) {
    bool dup = false;
    for (const auto& y : out) {
      if (circular_distance(x.s, y.s) < tol && circular_distance(x.s_bar, y.s_bar) < tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(x);
  }
  v = std::move(out);
}

// Order a parameter pair so that s < s_bar.
void order_pair(double& s, double& sb) {
  if (s > sb) std::swap(s, sb);
}

}  // namespace

std::vector<DoublePoint> sphere_double_points(const CurveEval& u, const ToleranceSet& tol, std::size_t grid_n) {
  const std::size_t n = grid_n;
  if (n < 8) throw Error(ErrorKind::InvalidArgument, "grid too small");
  std::vector<Vec3> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = u(static_cast<double>(i) / static_cast<double>(n)).p.normalized();
  std::vector<double> seg(n);
  for (std::size_t i = 0; i < n; ++i) seg[i] = (pts[(i + 1) % n] - pts[i]).norm();

  const std::size_t window = window_steps(tol.sep_lambda, n);
  std::vector<DoublePoint> found;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a0 = pts[i];
    const Vec3& a1 = pts[(i + 1) % n];
    for (std::size_t j = i + window; j < n; ++j) {
      if (n - j + i < window) break;
      const double reach = seg[i] + seg[j];
      if ((pts[j] - a0).squaredNorm() > reach * reach) continue;
      double ta, tb;
      if (!arc_intersect(a0, a1, pts[j], pts[(j + 1) % n], ta, tb)) continue;
      const double s0 = (static_cast<double>(i) + ta) / static_cast<double>(n);
      const double sb0 = (static_cast<double>(j) + tb) / static_cast<double>(n);
      const auto fit = refine_pair(u, s0, sb0);
      if (!(fit.norm < tol.eq_tol)) continue;
      if (circular_distance(fit.s, fit.s_bar) < tol.sep_lambda) continue;
      DoublePoint dp;
      dp.s = fit.s;
      dp.s_bar = fit.s_bar;
      order_pair(dp.s, dp.s_bar);
      found.push_back(dp);
    }
  }
  dedupe_pairs(found, std::max(2.0 / static_cast<double>(n), 1e-9));

  for (auto& dp : found) {
    const auto a = u(dp.s), b = u(dp.s_bar);
    dp.point = (0.5 * (a.p + b.p)).normalized();
    dp.crossing_angle = line_angle(a.d, b.d);
  }
  for (const auto& dp : found) {
    if (dp.crossing_angle < tol.angle_tol)
      throw Error(ErrorKind::TangencyDetected, "crossing angle " + std::to_string(dp.crossing_angle) + " at s=" +
                                                   std::to_string(dp.s) + ", s_bar=" + std::to_string(dp.s_bar));
  }
  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = a + 1; b < found.size(); ++b) {
      if ((found[a].point - found[b].point).norm() < 2 * tol.eq_tol)
        throw Error(ErrorKind::TriplePointDetected,
                    "double points at s=" + std::to_string(found[a].s) + " and s=" + std::to_string(found[b].s) +
                        " share an image");
    }
  }
  return found;
}

std::vector<DoublePoint> sphere_double_points(const SphericalCurve& u, const ToleranceSet& tol, std::size_t grid_n) {
  return sphere_double_points(u.evaluator(), tol, grid_n);
}

GapResult min_self_distance(const CurveEval& curve, std::size_t grid_n, double sep_lambda) {
  const std::size_t n = grid_n;
  std::vector<Vec3> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = curve(static_cast<double>(i) / static_cast<double>(n)).p;
  double max_seg = 0;
  for (std::size_t i = 0; i < n; ++i) max_seg = std::max(max_seg, (pts[(i + 1) % n] - pts[i]).norm());

  const std::size_t window = window_steps(sep_lambda, n);
  GridPair best{0, 0, kInf};
  auto value = [&](std::size_t i, std::size_t j) {
    const double d = (pts[i] - pts[j]).norm();
    if (d < best.value && i < j) best = {i, j, d};
    return d;
  };
  auto cands = scan_local_minima(n, window, 4 * max_seg, value);
  if (!std::isfinite(best.value)) return {kInf, 0, 0};
  cands.push_back(best);
  std::sort(cands.begin(), cands.end(), [](const GridPair& a, const GridPair& b) { return a.value < b.value; });
  if (cands.size() > 400) cands.resize(400);

  GapResult out{best.value, static_cast<double>(best.i) / static_cast<double>(n),
                static_cast<double>(best.j) / static_cast<double>(n)};
  for (const auto& c : cands) {
    const auto fit = refine_pair(curve, static_cast<double>(c.i) / static_cast<double>(n),
                                 static_cast<double>(c.j) / static_cast<double>(n), 40);
    if (circular_distance(fit.s, fit.s_bar) < sep_lambda) continue;
    if (fit.norm < out.distance) out = {fit.norm, fit.s, fit.s_bar};
  }
  order_pair(out.s, out.s_bar);
  return out;
}

double crossing_residual(const RibbonFrame& frame, double s, double s_bar, double width) {
  const Vec3 f = frame.edge_point(width, s).p - frame.edge_point(width, s_bar).p;
  return f.norm();
}

std::vector<CrossingRecord> crossing_widths(const RibbonFrame& frame) {
  const std::size_t n = frame.grid_n;
  const auto xs = frame.base.sample(n);
  const auto us = frame.field.sample(n);
  auto rho = [&](std::size_t i, std::size_t j) {
    const Vec3 w = xs[i] - xs[j];
    const Vec3 v = us[j] - us[i];
    const double wv = w.dot(v);
    const double nw = w.norm(), nv = v.norm();
    if (wv <= 0 || nv < 1e-300 || nw < 1e-300) return 2.0;
    return w.cross(v).norm() / (nw * nv);
  };
  auto cands = scan_local_minima(n, window_steps(frame.tol.sep_lambda, n), 0.5, rho);
  std::sort(cands.begin(), cands.end(), [](const GridPair& a, const GridPair& b) { return a.value < b.value; });
  if (cands.size() > 5000) cands.resize(5000);

  std::vector<CrossingRecord> out;
  for (const auto& c : cands) {
    double s = static_cast<double>(c.i) / static_cast<double>(n);
    double sb = static_cast<double>(c.j) / static_cast<double>(n);
    const Vec3 w0 = xs[c.i] - xs[c.j], v0 = us[c.j] - us[c.i];
    double R = w0.dot(v0) / v0.squaredNorm();
    auto F = [&](double a, double b, double r) { return Vec3(frame.edge_point(r, a).p - frame.edge_point(r, b).p); };
    Vec3 f = F(s, sb, R);
    double fn = f.squaredNorm();
    double mu = 1e-10;
    for (int it = 0; it < 60 && fn > 1e-30; ++it) {
      const auto ya = frame.edge_point(R, s), yb = frame.edge_point(R, sb);
      Mat3 J;
      J.col(0) = ya.d;
      J.col(1) = -yb.d;
      J.col(2) = frame.field.eval(s) - frame.field.eval(sb);
      const Mat3 H = J.transpose() * J;
      const Vec3 g = J.transpose() * f;
      bool improved = false;
      for (int k = 0; k < 30; ++k) {
        Mat3 Hd = H;
        Hd.diagonal() += mu * H.diagonal().cwiseMax(1e-30);
        const Vec3 d = Hd.ldlt().solve(-g);
        if (!d.allFinite()) {
          mu *= 10;
          continue;
        }
        const Vec3 nf = F(s + d[0], sb + d[1], R + d[2]);
        if (nf.squaredNorm() < fn) {
          s += d[0];
          sb += d[1];
          R += d[2];
          f = nf;
          fn = nf.squaredNorm();
          mu = std::max(mu * 0.1, 1e-15);
          improved = true;
          break;
        }
        mu *= 10;
      }
      if (!improved) break;
    }
    s = wrap01(s);
    sb = wrap01(sb);
    const double res = std::sqrt(fn);
    if (!(res < frame.tol.residual_tol) || !(R > 0)) continue;
    if (circular_distance(s, sb) < frame.tol.sep_lambda) continue;
    order_pair(s, sb);
    out.push_back({s, sb, R, res});
  }
  dedupe_pairs(out, 1e-7);
  return out;
}

Stabilization stabilization_width(const RibbonFrame& frame) {
  Stabilization st;
  if (!detect_goalposts(frame).empty()) {
    st.unbounded = true;
    return st;
  }
  for (const auto& c : crossing_widths(frame)) st.width = std::max(st.width, c.width);
  return st;
}

Vec3 chord_direction(const ClosedCurve3& x, double s, double s_bar, double eq_tol) {
  const Vec3 d = x.eval(s_bar) - x.eval(s);
  const double len = d.norm();
  if (len < eq_tol)
    throw Error(ErrorKind::CoincidentPoints,
                "x(" + std::to_string(s) + ") and x(" + std::to_string(s_bar) + ") coincide");
  return d / len;
}

double orthogonality_residual(const RibbonFrame& frame, const DoublePoint& dp) {
  return std::abs(frame.field.eval(dp.s).dot(chord_direction(frame.base, dp.s, dp.s_bar, frame.tol.eq_tol)));
}

std::vector<GoalPost> detect_goalposts(const RibbonFrame& frame) {
  std::vector<GoalPost> out;
  for (const auto& dp : sphere_double_points(frame.field, frame.tol, frame.grid_n)) {
    const double res = orthogonality_residual(frame, dp);
    if (res < frame.tol.eq_tol)
      out.push_back({dp.s, dp.s_bar, res, (frame.base.eval(dp.s) - frame.base.eval(dp.s_bar)).norm()});
  }
  return out;
}

Mat3 rotation_matrix(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

RibbonFrame remove_goalposts(const RibbonFrame& frame, double max_angle) {
  if (detect_goalposts(frame).empty()) return frame;
  if (!(max_angle > 0)) throw Error(ErrorKind::RepairFailed, "goal posts present and no rotation allowed");

  const auto dps = sphere_double_points(frame.field, frame.tol, frame.grid_n);
  std::vector<Vec3> u_s, chord;
  for (const auto& dp : dps) {
    u_s.push_back(frame.field.eval(dp.s));
    chord.push_back(chord_direction(frame.base, dp.s, dp.s_bar, frame.tol.eq_tol));
  }
  // A rigid rotation keeps the double points in place, so the goal-post
  // residual of every candidate can be read off before any rescan.
  const double margin = 1e3 * frame.tol.eq_tol;
  constexpr int kAxes = 1000;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int level = 12; level >= 0; --level) {
    const double angle = max_angle * std::ldexp(1.0, -level);
    for (int a = 0; a < kAxes; ++a) {
      const double z = 1.0 - (2.0 * a + 1.0) / kAxes;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Vec3 axis(r * std::cos(golden * a), r * std::sin(golden * a), z);
      const Mat3 Q = rotation_matrix(axis, angle);
      bool ok = true;
      for (std::size_t k = 0; k < dps.size() && ok; ++k) ok = std::abs((Q * u_s[k]).dot(chord[k])) >= margin;
      if (!ok) continue;
      try {
        RibbonFrame cand(frame.base, SphericalCurve(frame.field.generator().transformed(Q), frame.grid_n, frame.tol.eq_tol),
                         frame.grid_n, frame.tol);
        if (detect_goalposts(cand).empty() && sphere_double_points(cand.field, cand.tol, cand.grid_n).size() == dps.size())
          return cand;
      } catch (const Error&) {
      }
    }
  }
  throw Error(ErrorKind::RepairFailed, "no rotation within " + std::to_string(max_angle) + " rad clears the goal posts");
}

MatchReport match_double_points(const std::vector<DoublePoint>& u_dps, const SphericalCurve& z, const ToleranceSet& tol,
                                std::size_t grid_n) {
  const double delta = tol.sep_lambda;
  const auto z_dps = sphere_double_points(z, tol, grid_n);
  MatchReport rep;
  std::vector<int> owner(u_dps.size(), -1);
  for (std::size_t zi = 0; zi < z_dps.size(); ++zi) {
    const auto& zd = z_dps[zi];
    int hit = -1;
    double drift = 0;
    for (std::size_t ui = 0; ui < u_dps.size(); ++ui) {
      const auto& ud = u_dps[ui];
      const double same = std::max(circular_distance(zd.s, ud.s), circular_distance(zd.s_bar, ud.s_bar));
      const double swap = std::max(circular_distance(zd.s, ud.s_bar), circular_distance(zd.s_bar, ud.s));
      const double d = std::min(same, swap);
      if (d >= delta) continue;
      if (hit >= 0) throw Error(ErrorKind::AmbiguousMatch, "double point of z_t near two double points of u");
      hit = static_cast<int>(ui);
      drift = d;
    }
    if (hit < 0) {
      rep.unmatched_z.push_back(zd);
      continue;
    }
    if (owner[hit] >= 0) throw Error(ErrorKind::AmbiguousMatch, "two double points of z_t in one matched interval");
    owner[hit] = static_cast<int>(zi);
    rep.pairs.emplace_back(u_dps[hit], zd);
    rep.max_parameter_drift = std::max(rep.max_parameter_drift, drift);
  }
  for (std::size_t ui = 0; ui < u_dps.size(); ++ui)
    if (owner[ui] < 0) rep.unmatched_u.push_back(u_dps[ui]);
  return rep;
}

EmbeddingCheck edge_embedded(const RibbonFrame& frame, double R) {
  const CurveEval y = [&frame, R](double s) { return frame.edge_point(R, s); };
  EmbeddingCheck ec;
  ec.gap = min_self_distance(y, frame.grid_n, frame.tol.sep_lambda);
  ec.embedded = ec.gap.distance > frame.tol.eq_tol;
  return ec;
}

double max_chord_angle(std::span<const Vec3> arc, const Vec3& u0) {
  const Vec3 axis = u0.normalized();
  double worst = 0;
  for (std::size_t i = 0; i < arc.size(); ++i)
    for (std::size_t j = i + 1; j < arc.size(); ++j) {
      const Vec3 c = arc[j] - arc[i];
      if (c.norm() == 0) continue;
      worst = std::max(worst, std::atan2(c.cross(axis).norm(), c.dot(axis)));
    }
  return worst;
}

}  // namespace ribbon
