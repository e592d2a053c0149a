#include "ribbon/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "ribbon/error.hpp"

namespace ribbon {

SignedGaussCode SignedGaussCode::parse(std::string_view text) {
  SignedGaussCode code;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "gauss code at offset " + std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == ',') {
      ++i;
      continue;
    }
    GaussToken t;
    if (c == 'O' || c == 'o')
      t.over = true;
    else if (c == 'U' || c == 'u')
      t.over = false;
    else
      fail("expected O or U");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected label");
    if (i - start > 6) fail("label too long");
    t.label = std::stoi(std::string(text.substr(start, i - start)));
    if (t.label <= 0) fail("labels are positive");
    if (i < text.size() && text[i] == '+') {
      t.sign = +1;
      ++i;
    } else if (i < text.size() && text[i] == '-') {
      t.sign = -1;
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
      t.sign = -1;
      i += 3;
    } else {
      fail("expected sign");
    }
    code.tokens.push_back(t);
  }
  try {
    code.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return code;
}

std::string SignedGaussCode::str() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.over ? 'O' : 'U';
    out += std::to_string(t.label);
    out += t.sign > 0 ? '+' : '-';
  }
  return out;
}

void SignedGaussCode::validate() const {
  struct Seen {
    int over = 0, under = 0, sign = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& t : tokens) {
    if (t.label <= 0) throw Error(ErrorKind::InvalidArgument, "non-positive label");
    if (t.sign != 1 && t.sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    auto& s = seen[t.label];
    (t.over ? s.over : s.under)++;
    if (s.sign != 0 && s.sign != t.sign)
      throw Error(ErrorKind::InvalidArgument, "label " + std::to_string(t.label) + " has mixed handedness");
    s.sign = t.sign;
  }
  for (const auto& [label, s] : seen)
    if (s.over != 1 || s.under != 1)
      throw Error(ErrorKind::InvalidArgument, "label " + std::to_string(label) + " must occur once over and once under");
}

std::string PDCode::str() const {
  std::string out;
  for (const auto& x : crossings) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + ")";
  }
  return out;
}

SignedGaussCode code_from_crossings(const std::vector<ParamCrossing>& crossings) {
  struct Event {
    double t;
    std::size_t idx;
    bool over;
  };
  std::vector<Event> ev;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    ev.push_back({crossings[i].s, i, crossings[i].s_over});
    ev.push_back({crossings[i].s_bar, i, !crossings[i].s_over});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
  std::vector<int> label(crossings.size(), 0);
  int next = 1;
  SignedGaussCode code;
  for (const auto& e : ev) {
    if (label[e.idx] == 0) label[e.idx] = next++;
    code.tokens.push_back({label[e.idx], e.over, crossings[e.idx].sign});
  }
  return code;
}

ResolutionChoice limiting_choice(const RibbonFrame& frame, const std::vector<DoublePoint>& dps) {
  // The norm comparison |z_t(s)| vs |z_t(s_bar)| agrees in sign with this
  // first-order difference once t < |difference| / (2 max|x|^2).
  ResolutionChoice choice;
  for (const auto& dp : dps) {
    const double d =
        frame.field.eval(dp.s).dot(frame.base.eval(dp.s)) - frame.field.eval(dp.s_bar).dot(frame.base.eval(dp.s_bar));
    if (std::abs(d) < frame.tol.eq_tol)
      throw Error(ErrorKind::GoalPostObstruction,
                  "radial order undefined at s=" + std::to_string(dp.s) + ", s_bar=" + std::to_string(dp.s_bar));
    choice.s_over.push_back(d > 0);
  }
  return choice;
}

SignedGaussCode resolve(const std::vector<DoublePoint>& dps, const ResolutionChoice& choice, const RibbonFrame& frame) {
  if (choice.s_over.size() != dps.size())
    throw Error(ErrorKind::InvalidArgument, "resolution choice length differs from double-point count");
  std::vector<ParamCrossing> cr;
  for (std::size_t i = 0; i < dps.size(); ++i) {
    const auto& dp = dps[i];
    const bool s_over = choice.s_over[i];
    const Vec3 to = frame.field.eval_deriv(s_over ? dp.s : dp.s_bar);
    const Vec3 tu = frame.field.eval_deriv(s_over ? dp.s_bar : dp.s);
    cr.push_back({dp.s, dp.s_bar, s_over, det3(to, tu, dp.point) > 0 ? +1 : -1});
  }
  return code_from_crossings(cr);
}

SignedGaussCode limiting_resolution(const RibbonFrame& frame) {
  const auto dps = sphere_double_points(frame.field, frame.tol, frame.grid_n);
  return resolve(dps, limiting_choice(frame, dps), frame);
}

SignedGaussCode gauss_from_spatial(const CurveEval& curve, const Projection& projection, const ToleranceSet& tol,
                                   std::size_t grid_n) {
  CurveEval sphere;
  Vec3 e1, e2;
  const Vec3 d = projection.direction.normalized();
  if (projection.kind == ProjectionKind::Radial) {
    for (std::size_t i = 0; i < grid_n; ++i)
      if (curve(static_cast<double>(i) / static_cast<double>(grid_n)).p.norm() < tol.eq_tol)
        throw Error(ErrorKind::NonGenericProjection, "curve passes through the projection center");
    sphere = [&curve](double s) {
      const auto c = curve(s);
      const double r = c.p.norm();
      const Vec3 n = c.p / r;
      return CurvePoint{n, (c.d - n * n.dot(c.d)) / r};
    };
  } else {
    e1 = d.unitOrthogonal();
    e2 = d.cross(e1);
    double extent = 0;
    for (std::size_t i = 0; i < grid_n; ++i) {
      const Vec3 p = curve(static_cast<double>(i) / static_cast<double>(grid_n)).p;
      extent = std::max(extent, std::hypot(p.dot(e1), p.dot(e2)));
    }
    const double Z = std::max(extent, 1e-3);
    // gnomonic chart: planar lines go to great circles, transversality is kept
    sphere = [&curve, e1, e2, Z](double s) {
      const auto c = curve(s);
      const Vec3 g(c.p.dot(e1), c.p.dot(e2), Z);
      const Vec3 gd(c.d.dot(e1), c.d.dot(e2), 0.0);
      const double r = g.norm();
      const Vec3 n = g / r;
      return CurvePoint{n, (gd - n * n.dot(gd)) / r};
    };
  }

  std::vector<DoublePoint> dps;
  try {
    dps = sphere_double_points(sphere, tol, grid_n);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TangencyDetected || e.kind() == ErrorKind::TriplePointDetected)
      throw Error(ErrorKind::NonGenericProjection, e.what());
    throw;
  }

  const bool radial = projection.kind == ProjectionKind::Radial;
  auto depth = [&](const Vec3& p) { return radial ? p.norm() : p.dot(d); };
  std::vector<ParamCrossing> cr;
  for (const auto& dp : dps) {
    const auto a = curve(dp.s), b = curve(dp.s_bar);
    const double diff = depth(a.p) - depth(b.p);
    if (std::abs(diff) < tol.eq_tol)
      throw Error(ErrorKind::NonGenericProjection, "strands meet at s=" + std::to_string(dp.s));
    const bool s_over = diff > 0;
    const Vec3 normal = radial ? Vec3(a.p.normalized()) : d;
    const Vec3& to = s_over ? a.d : b.d;
    const Vec3& tu = s_over ? b.d : a.d;
    cr.push_back({dp.s, dp.s_bar, s_over, det3(to, tu, normal) > 0 ? +1 : -1});
  }
  return code_from_crossings(cr);
}

SignedGaussCode gauss_from_spatial(const ClosedCurve3& curve, const Projection& projection, const ToleranceSet& tol,
                                   std::size_t grid_n) {
  return gauss_from_spatial(curve.evaluator(), projection, tol, grid_n);
}

std::size_t pd_face_count(const PDCode& pd) {
  const std::size_t k = pd.crossings.size();
  std::map<int, std::vector<std::size_t>> ends;  // arc -> darts (4 * crossing + position)
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t p = 0; p < 4; ++p) ends[pd.crossings[c][p]].push_back(4 * c + p);
  for (const auto& [arc, e] : ends)
    if (e.size() != 2) throw Error(ErrorKind::NonRealizableCode, "arc " + std::to_string(arc) + " is not used twice");
  auto other = [&](std::size_t dart) {
    const auto& e = ends[pd.crossings[dart / 4][dart % 4]];
    return e[0] == dart ? e[1] : e[0];
  };
  std::vector<bool> seen(4 * k, false);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < 4 * k; ++start) {
    if (seen[start]) continue;
    ++faces;
    std::size_t d = start;
    while (!seen[d]) {
      seen[d] = true;
      const std::size_t o = other(d);
      d = 4 * (o / 4) + (o % 4 + 1) % 4;
    }
  }
  return faces;
}

PDCode gauss_to_pd(const SignedGaussCode& code) {
  code.validate();
  PDCode pd;
  const std::size_t n = code.tokens.size();
  if (n == 0) return pd;
  auto in = [&](std::size_t p) { return static_cast<int>(p + 1); };
  auto out = [&](std::size_t p) { return static_cast<int>((p + 1) % n + 1); };
  std::map<int, std::pair<std::size_t, std::size_t>> pos;  // label -> (over position, under position)
  for (std::size_t p = 0; p < n; ++p) {
    auto& e = pos[code.tokens[p].label];
    (code.tokens[p].over ? e.first : e.second) = p;
  }
  for (const auto& [label, e] : pos) {
    const auto [po, pu] = e;
    const int sign = code.tokens[po].sign;
    if (sign > 0)
      pd.crossings.push_back({in(pu), out(po), out(pu), in(po)});
    else
      pd.crossings.push_back({in(pu), in(po), out(pu), out(po)});
  }
  const std::size_t faces = pd_face_count(pd);
  if (faces != pd.size() + 2)
    throw Error(ErrorKind::NonRealizableCode,
                "code " + code.str() + " does not embed in the sphere (" + std::to_string(faces) + " faces)");
  return pd;
}

namespace {

bool remove_r1(std::vector<GaussToken>& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (i != j && t[i].label == t[j].label) {
      const std::size_t hi = std::max(i, j), lo = std::min(i, j);
      t.erase(t.begin() + static_cast<long>(hi));
      t.erase(t.begin() + static_cast<long>(lo));
      return true;
    }
  }
  return false;
}

bool remove_r2(std::vector<GaussToken>& t) {
  const std::size_t n = t.size();
  if (n < 4) return false;
  std::map<int, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < n; ++i) where[t[i].label].push_back(i);
  auto partner = [&](std::size_t i) {
    const auto& w = where[t[i].label];
    return w[0] == i ? w[1] : w[0];
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (t[i].label == t[j].label || t[i].over != t[j].over || t[i].sign == t[j].sign) continue;
    const std::size_t a = partner(i), b = partner(j);
    if ((a + 1) % n != b && (b + 1) % n != a) continue;
    std::array<std::size_t, 4> idx{i, j, a, b};
    std::sort(idx.begin(), idx.end(), std::greater<>());
    for (auto k : idx) t.erase(t.begin() + static_cast<long>(k));
    return true;
  }
  return false;
}

}  // namespace

SignedGaussCode reidemeister_reduce(const SignedGaussCode& code) {
  code.validate();
  auto t = code.tokens;
  while (remove_r1(t) || remove_r2(t)) {
  }
  return SignedGaussCode{t};
}

SignedGaussCode canonical_form(const SignedGaussCode& code) {
  const std::size_t n = code.tokens.size();
  if (n == 0) return code;
  std::vector<GaussToken> best;
  auto key = [](const GaussToken& t) { return std::tuple(t.label, t.over ? 0 : 1, t.sign > 0 ? 0 : 1); };
  for (std::size_t r = 0; r < n; ++r) {
    std::map<int, int> relabel;
    std::vector<GaussToken> cand;
    cand.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      GaussToken t = code.tokens[(r + i) % n];
      auto [it, inserted] = relabel.try_emplace(t.label, static_cast<int>(relabel.size()) + 1);
      t.label = it->second;
      cand.push_back(t);
    }
    if (best.empty() ||
        std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                     [&](const GaussToken& a, const GaussToken& b) { return key(a) < key(b); }))
      best = std::move(cand);
  }
  return SignedGaussCode{best};
}

bool same_code(const SignedGaussCode& a, const SignedGaussCode& b) { return canonical_form(a) == canonical_form(b); }

SignedGaussCode mirror(const SignedGaussCode& code) {
  SignedGaussCode m = code;
  for (auto& t : m.tokens) {
    t.over = !t.over;
    t.sign = -t.sign;
  }
  return m;
}

namespace {

bool positive_crossing(const std::array<int, 4>& x, int n) {
  if (n == 2) return x[0] == x[1];
  return ((x[1] - x[3]) % n + n) % n == 1;
}

}  // namespace

// Swapping over and under: slot 0 must again hold the incoming under arc,
// which is the old incoming over arc.
PDCode mirror(const PDCode& pd) {
  const int n = static_cast<int>(2 * pd.size());
  PDCode m;
  for (const auto& x : pd.crossings) {
    if (positive_crossing(x, n))
      m.crossings.push_back({x[3], x[0], x[1], x[2]});
    else
      m.crossings.push_back({x[1], x[2], x[3], x[0]});
  }
  return m;
}

int writhe(const SignedGaussCode& code) {
  int w = 0;
  for (const auto& t : code.tokens)
    if (t.over) w += t.sign;
  return w;
}

int writhe(const PDCode& pd) {
  const int n = static_cast<int>(2 * pd.size());
  int w = 0;
  for (const auto& x : pd.crossings) w += positive_crossing(x, n) ? 1 : -1;
  return w;
}

}  // namespace ribbon
