#include "ribbon/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "ribbon/constructor.hpp"

namespace ribbon::fixtures {

namespace {

// Degree-d curve from explicit cosine/sine coefficient lists (missing entries zero).
ClosedCurve3 trig(Vec3 c0, std::vector<Vec3> cos_c, std::vector<Vec3> sin_c) {
  const std::size_t d = std::max(cos_c.size(), sin_c.size());
  cos_c.resize(d, Vec3::Zero());
  sin_c.resize(d, Vec3::Zero());
  return ClosedCurve3(c0, std::move(cos_c), std::move(sin_c));
}

const Vec3 kZero = Vec3::Zero();

}  // namespace

ClosedCurve3 unit_circle() { return trig(kZero, {Vec3(1, 0, 0)}, {Vec3(0, 1, 0)}); }

ClosedCurve3 trefoil_curve() {
  // (sin t + 2 sin 2t, cos t - 2 cos 2t, -sin 3t)
  return trig(kZero, {Vec3(0, 1, 0), Vec3(0, -2, 0)}, {Vec3(1, 0, 0), Vec3(2, 0, 0), Vec3(0, 0, -1)});
}

SphericalCurve spherical_figure_eight(double a, double b) {
  return SphericalCurve(trig(Vec3(0, 0, 1), {}, {Vec3(0, b, 0), Vec3(a, 0, 0)}));
}

SphericalCurve tangent_lobes(double angle) {
  // tangents at s = 0 and 1/2 are (4 pi a, +-2 pi b): they meet at 2 atan(b / 2a)
  const double a = 0.6;
  return spherical_figure_eight(a, 2 * a * std::tan(angle / 2));
}

SphericalCurve triple_rose() {
  // r = cos 3 phi over phi = pi s, lifted to the plane z = 1
  return SphericalCurve(trig(Vec3(0, 0, 1), {Vec3(0.5, 0, 0), Vec3(0.5, 0, 0)}, {Vec3(0, -0.5, 0), Vec3(0, 0.5, 0)}));
}

RibbonFrame parallel_frame(const Vec3& u0) {
  return RibbonFrame(unit_circle(), SphericalCurve(ClosedCurve3::constant_curve(u0.normalized())));
}

RibbonFrame radial_circle_frame() { return RibbonFrame(unit_circle(), SphericalCurve(unit_circle())); }

RibbonFrame goalpost_frame() {
  // x(0) = 0, x(1/2) = (1,0,0); u(0) = u(1/2) = (0,0,1) is orthogonal to the chord
  const auto x = trig(Vec3(0.5, 0, 0), {Vec3(-0.5, 0, 0)}, {Vec3(0, 0.5, 0)});
  return RibbonFrame(x, spherical_figure_eight());
}

RibbonFrame fig8_field_frame() {
  const auto x = trig(Vec3(0.5, 0, 0), {Vec3(-0.5, 0, 0.3)}, {Vec3(0, 0.5, 0)});
  return RibbonFrame(x, spherical_figure_eight());
}

RibbonFrame two_ray_frame() {
  const double c = std::cos(std::numbers::pi / 3), s = std::sin(std::numbers::pi / 3);
  // the sin 4 pi s term breaks the mirror symmetry s -> 1/2 - s, which would
  // otherwise give a whole curve of solutions
  const auto x = trig(Vec3(0.5, 0, 0), {Vec3(-0.5, 0, 0)}, {Vec3(0, 0, 0.5), Vec3(0, 0.2, 0)});
  const auto g = trig(Vec3(0, s, 0), {Vec3(c, 0, 0)}, {Vec3(0, 0, 0.3)});
  return RibbonFrame(x, SphericalCurve(g));
}

RibbonFrame trefoil_flip_frame() { return build_frame(UnknotPreset{}, trefoil_code()); }
RibbonFrame figure_eight_flip_frame() { return build_frame(UnknotPreset{}, figure_eight_code()); }
RibbonFrame trefoil_base_fig8_frame() { return build_frame(trefoil_curve(), figure_eight_code()); }

RibbonFrame random_frame(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto vec = [&](double scale) -> Vec3 { return Vec3(uni(rng), uni(rng), uni(rng)) * scale; };
  std::vector<Vec3> xc, xs, uc, us;
  for (int k = 1; k <= degree; ++k) {
    xc.push_back(vec(1.0 / k));
    xs.push_back(vec(1.0 / k));
  }
  const Vec3 u0 = vec(1.0);
  for (int k = 1; k <= degree; ++k) {
    uc.push_back(vec(1.0 / k));
    us.push_back(vec(1.0 / k));
  }
  return RibbonFrame(ClosedCurve3(kZero, xc, xs), SphericalCurve(ClosedCurve3(u0, uc, us)));
}

SignedGaussCode trefoil_code() { return SignedGaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+"); }
SignedGaussCode figure_eight_code() { return SignedGaussCode::parse("U1- O2+ U3+ O1- U4- O3+ U2+ O4-"); }

std::vector<NamedFrame> bundled_frames() {
  std::vector<NamedFrame> out;
  out.push_back({"radial_circle", radial_circle_frame()});
  out.push_back({"fig8_field", fig8_field_frame()});
  out.push_back({"trefoil_flip", trefoil_flip_frame()});
  out.push_back({"figure_eight_flip", figure_eight_flip_frame()});
  out.push_back({"trefoil_base_fig8", trefoil_base_fig8_frame()});
  return out;
}

std::vector<NamedCode> code_fixtures() {
  auto p = [](const char* s) { return SignedGaussCode::parse(s); };
  return {
      {"unknot", SignedGaussCode{}},
      {"kink", p("O1+ U1+")},
      {"trefoil", trefoil_code()},
      {"trefoil_mirror", mirror(trefoil_code())},
      {"figure_eight", figure_eight_code()},
      {"cinquefoil", p("O1+ U2+ O3+ U4+ O5+ U1+ O2+ U3+ O4+ U5+")},
      {"granny", p("O1+ U2+ O3+ U1+ O2+ U3+ O4+ U5+ O6+ U4+ O5+ U6+")},
      {"square", p("O1+ U2+ O3+ U1+ O2+ U3+ U4- O5- U6- O4- U5- O6-")},
      {"trefoil_fig8", p("O1+ U2+ O3+ U1+ O2+ U3+ U4- O5+ U6+ O4- U7- O6+ U5+ O7-")},
      {"cinquefoil_sum",
       p("O1+ U2+ O3+ U4+ O5+ U1+ O2+ U3+ O4+ U5+ U6- O7- U8- O9- U10- O6- U7- O8- U9- O10-")},
  };
}

}  // namespace ribbon::fixtures
