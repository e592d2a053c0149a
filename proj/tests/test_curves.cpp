#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ribbon/error.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/intersect.hpp"

using namespace ribbon;
namespace fx = ribbon::fixtures;

TEST_CASE("circle evaluation and periodicity") {
  const auto c = fx::unit_circle();
  CHECK((c.eval(0) - Vec3(1, 0, 0)).norm() < 1e-15);
  CHECK((c.eval(0.25) - Vec3(0, 1, 0)).norm() < 1e-15);
  const auto t = fx::trefoil_curve();
  for (double s : {0.0, 0.123, 0.77, -0.4}) CHECK((t.eval(s) - t.eval(s + 1)).norm() < 1e-12);
}

TEST_CASE("derivatives match central differences") {
  const auto t = fx::trefoil_curve();
  const double h = 1e-6;
  for (double s : {0.05, 0.31, 0.62, 0.9}) {
    const Vec3 fd = (t.eval(s + h) - t.eval(s - h)) / (2 * h);
    CHECK((fd - t.eval_deriv(s)).norm() < 1e-6);
    const Vec3 fd2 = (t.eval_deriv(s + h) - t.eval_deriv(s - h)) / (2 * h);
    CHECK((fd2 - t.eval_second(s)).norm() < 1e-4);
  }
  const auto u = fx::spherical_figure_eight();
  for (double s : {0.1, 0.4, 0.7}) {
    const Vec3 fd = (u.eval(s + h) - u.eval(s - h)) / (2 * h);
    CHECK((fd - u.eval_deriv(s)).norm() < 1e-6);
  }
}

TEST_CASE("fit recovers a trigonometric polynomial") {
  const auto t = fx::trefoil_curve();
  const auto f = ClosedCurve3::fit(t.sample(256));
  CHECK(f.degree() == 3);
  for (double s : {0.0, 0.2, 0.55}) CHECK((f.eval(s) - t.eval(s)).norm() < 1e-12);
}

TEST_CASE("outer edge of simple frames") {
  const auto base = fx::unit_circle();
  SUBCASE("zero width is the base") {
    const auto f = fx::fig8_field_frame();
    const auto y = outer_edge(f, 0.0);
    for (double s : {0.0, 0.3, 0.8}) CHECK((y.eval(s) - f.base.eval(s)).norm() < 1e-12);
  }
  SUBCASE("constant field translates") {
    const auto y = outer_edge(fx::parallel_frame(Vec3(0, 0, 1)), 2.0);
    for (double s : {0.0, 0.4}) CHECK((y.eval(s) - base.eval(s) - Vec3(0, 0, 2)).norm() < 1e-12);
  }
  SUBCASE("radial field scales") {
    const auto y = outer_edge(fx::radial_circle_frame(), 1.0);
    for (double s : {0.0, 0.1, 0.6}) CHECK(y.eval(s).norm() == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("rescaled edge relations") {
  const auto f = fx::fig8_field_frame();
  const double R = 7.0;
  const auto y = outer_edge(f, R);
  const auto z = rescaled_edge(f, 1 / R);
  for (double s : {0.0, 0.21, 0.5, 0.93}) CHECK((z.eval(s) - y.eval(s) / R).norm() < 1e-12);

  double xmax = 0, dev = 0;
  const auto zt = rescaled_edge(f, 1e-3);
  for (std::size_t i = 0; i < 4096; ++i) {
    const double s = i / 4096.0;
    xmax = std::max(xmax, f.base.eval(s).norm());
    dev = std::max(dev, (zt.eval(s) - f.field.eval(s)).norm());
  }
  // plus the 1e-9 coefficient truncation of the fitted edge
  CHECK(dev <= 1e-3 * xmax + 1e-9);
  CHECK(dev < 1e-2);
}

TEST_CASE("projected rescaled edge converges to the field") {
  const auto f = fx::fig8_field_frame();
  double prev = 1e9;
  for (double t : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto zhat = spherical_projection(rescaled_edge(f, t));
    const double d = c1_distance(zhat.evaluator(), f.field.evaluator(), 4096);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("spherical projection") {
  const auto u = spherical_projection(fx::unit_circle());
  for (const auto& p : u.sample(4096)) CHECK(std::abs(p.norm() - 1) < 1e-12);
  const auto through_origin = fx::unit_circle().translated(Vec3(1, 0, 0));
  CHECK_THROWS_AS(spherical_projection(through_origin), Error);
  try {
    spherical_projection(through_origin);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VanishingGenerator);
  }
}

TEST_CASE("frame distance") {
  const auto f = fx::fig8_field_frame();
  CHECK(frame_distance(f, f) == 0.0);
  const RibbonFrame moved(f.base.translated(Vec3(0.3, 0.4, 0)), f.field);
  CHECK(frame_distance(f, moved) == doctest::Approx(0.5).epsilon(1e-12));

  const double theta = 0.01;
  const Mat3 rot = rotation_matrix(Vec3::UnitZ(), theta);
  const RibbonFrame turned(f.base, SphericalCurve(f.field.generator().transformed(rot)));
  double max_du = 0;
  for (const auto& p : f.field.sample_both(4096)) max_du = std::max(max_du, p.d.norm());
  const double d = frame_distance(f, turned);
  CHECK(d > 0);
  CHECK(d <= 0.02 * (1 + max_du));

  const RibbonFrame other_grid(f.base, f.field, 1024);
  CHECK_THROWS_AS(frame_distance(f, other_grid), Error);
}

TEST_CASE("frame distance is a metric on random frames") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = fx::random_frame(rng, 4), b = fx::random_frame(rng, 4), c = fx::random_frame(rng, 4);
    CHECK(frame_distance(a, b) == frame_distance(b, a));
    CHECK(frame_distance(a, c) <= frame_distance(a, b) + frame_distance(b, c) + 1e-12);
  }
}

TEST_CASE("validation of fixtures") {
  const auto constant = validate_frame(fx::parallel_frame(Vec3(0, 0, 1)));
  CHECK_FALSE(constant.regular_u);

  const auto disjoint = validate_frame(RibbonFrame(
      fx::unit_circle(), SphericalCurve(ClosedCurve3(Vec3::Zero(), {Vec3(0, 0, 1)}, {Vec3(0, 1, 0)}))));
  CHECK(disjoint.all_passed());
  CHECK(disjoint.double_points == 0);

  const auto gp = validate_frame(fx::goalpost_frame());
  CHECK_FALSE(gp.no_goalposts);
  CHECK(gp.regular_x);
  CHECK(gp.x_embedded);
}

TEST_CASE("reparameterization") {
  const auto c = fx::trefoil_curve();
  const auto same = reparameterize(c, [](double s) { return s; });
  for (double s : {0.0, 0.3}) CHECK((same.eval(s) - c.eval(s)).norm() < 1e-9);

  const auto shifted = reparameterize(fx::unit_circle(), [](double s) { return s + 0.25; });
  CHECK((shifted.eval(0) - fx::unit_circle().eval(0.25)).norm() < 1e-9);

  const auto warped = reparameterize(c, [](double s) { return s + 0.05 * std::sin(2 * std::numbers::pi * s); });
  CHECK(hausdorff_distance(warped, c, 1 << 14) < 1e-6);

  CHECK_THROWS_AS(reparameterize(c, [](double s) { return s + 0.3 * std::sin(2 * std::numbers::pi * s); }), Error);
}

TEST_CASE("arclength normalization") {
  const auto circle = fx::unit_circle();
  const auto same = arclength_normalize(circle);
  for (double s : {0.0, 0.4}) CHECK((same.eval(s) - circle.eval(s)).norm() < 1e-9);

  const ClosedCurve3 ellipse(Vec3::Zero(), {Vec3(2, 0, 0)}, {Vec3(0, 1, 0)});
  CHECK(speed_ratio(ellipse) > 1.5);
  CHECK(speed_ratio(arclength_normalize(ellipse)) <= 1.01);

  // x = (cos^3, sin^3) has cusps
  const ClosedCurve3 astroid(Vec3::Zero(), {Vec3(0.75, 0, 0), Vec3(0, 0, 0), Vec3(0.25, 0, 0)},
                             {Vec3(0, 0.75, 0), Vec3(0, 0, 0), Vec3(0, -0.25, 0)});
  CHECK_THROWS_AS(arclength_normalize(astroid), Error);
}

TEST_CASE("tolerance set validation") {
  ToleranceSet t;
  CHECK_NOTHROW(t.validate());
  t.sep_lambda = 0.3;
  CHECK_THROWS_AS(t.validate(), Error);
  t = ToleranceSet{};
  t.eq_tol = 0;
  CHECK_THROWS_AS(t.validate(), Error);
}
