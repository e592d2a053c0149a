#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "oracles.hpp"
#include "ribbon/error.hpp"
#include "ribbon/intersect.hpp"
#include "shared.hpp"

using namespace ribbon;
namespace fx = ribbon::fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("double points of spherical fixtures") {
  CHECK(sphere_double_points(SphericalCurve(fx::unit_circle()), ToleranceSet{}).empty());

  const auto fig8 = fx::spherical_figure_eight();
  const auto dps = sphere_double_points(fig8, ToleranceSet{});
  REQUIRE(dps.size() == oracle::polyline_double_points(fig8, 1 << 16, 0.01));
  REQUIRE(dps.size() == 1);
  CHECK(dps[0].s == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(dps[0].s_bar == doctest::Approx(0.5).epsilon(1e-9));
  CHECK((dps[0].point - Vec3::UnitZ()).norm() < 1e-9);

  const auto field = shared::trefoil_flip().field;
  CHECK(sphere_double_points(field, ToleranceSet{}).size() == oracle::polyline_double_points(field, 1 << 16, 0.01));
}

TEST_CASE("degenerate spherical curves are refused") {
  CHECK(kind_of([] { sphere_double_points(fx::tangent_lobes(1e-4), ToleranceSet{}); }) ==
        ErrorKind::TangencyDetected);
  CHECK(kind_of([] { sphere_double_points(fx::triple_rose(), ToleranceSet{}); }) == ErrorKind::TriplePointDetected);
}

TEST_CASE("crossing width of the two-ray configuration") {
  const auto f = fx::two_ray_frame();
  const auto recs = crossing_widths(f);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].s == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(recs[0].s_bar == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(recs[0].width - 1.0) < 1e-6);
  const double r0 = crossing_residual(f, recs[0].s, recs[0].s_bar, recs[0].width);
  CHECK(crossing_residual(f, recs[0].s, recs[0].s_bar, recs[0].width + 0.1) > r0);
  CHECK(crossing_residual(f, recs[0].s, recs[0].s_bar, recs[0].width - 0.1) > r0);

  CHECK(crossing_widths(fx::parallel_frame(Vec3(0, 0, 1))).empty());
}

TEST_CASE("crossing widths of a constructed frame") {
  const auto& f = shared::trefoil_flip();
  const auto recs = crossing_widths(f);
  REQUIRE_FALSE(recs.empty());
  for (std::size_t i = 0; i + 1 < recs.size(); ++i)
    CHECK((recs[i].s < recs[i + 1].s || (recs[i].s == recs[i + 1].s && recs[i].s_bar <= recs[i + 1].s_bar)));
  for (const auto& r : recs) {
    CHECK(r.residual < f.tol.residual_tol);
    const double r0 = crossing_residual(f, r.s, r.s_bar, r.width);
    CHECK(crossing_residual(f, r.s, r.s_bar, r.width + 0.1) > r0);
    CHECK(crossing_residual(f, r.s, r.s_bar, std::max(0.0, r.width - 0.1)) > r0);
    const Vec3 gap = f.edge_point(r.width, r.s).p - f.edge_point(r.width, r.s_bar).p;
    CHECK(gap.norm() < 10 * f.tol.eq_tol);
    CHECK_FALSE(edge_embedded(f, r.width).embedded);
  }
  const auto st = stabilization_width(f);
  CHECK_FALSE(st.unbounded);
  CHECK(st.width > 0);
  CHECK(edge_embedded(f, 1.5 * st.width).embedded);
  CHECK(edge_embedded(f, 2 * st.width + 1).embedded);
  CHECK(edge_embedded(f, 0.0).embedded);
}

TEST_CASE("stabilization of special frames") {
  CHECK(stabilization_width(fx::radial_circle_frame()).width == 0.0);
  CHECK(stabilization_width(fx::goalpost_frame()).unbounded);
}

TEST_CASE("grid refinement separates the goal-post and stable cases") {
  auto max_width = [](RibbonFrame f, std::size_t n) {
    f.grid_n = n;
    double w = 0;
    for (const auto& r : crossing_widths(f)) w = std::max(w, r.width);
    return w;
  };
  const auto gp = fx::goalpost_frame();
  const double g10 = max_width(gp, 1 << 10), g12 = max_width(gp, 1 << 12), g14 = max_width(gp, 1 << 14);
  CHECK(g10 < g12);
  CHECK(g12 < g14);

  const auto& tf = shared::trefoil_flip();
  const double t10 = max_width(tf, 1 << 10), t12 = max_width(tf, 1 << 12), t14 = max_width(tf, 1 << 14);
  CHECK(std::abs(t12 - t10) / t14 < 0.01);
  CHECK(std::abs(t14 - t12) / t14 < 0.01);
}

TEST_CASE("goal posts") {
  const auto f = fx::goalpost_frame();
  const auto gps = detect_goalposts(f);
  REQUIRE(gps.size() == 1);
  CHECK(gps[0].orthogonality_residual < 1e-8);
  CHECK(gps[0].separation == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(detect_goalposts(shared::trefoil_flip()).empty());
  CHECK(detect_goalposts(shared::figure_eight_flip()).empty());
  CHECK(detect_goalposts(fx::fig8_field_frame()).empty());
}

TEST_CASE("chord direction") {
  const auto c = fx::unit_circle();
  CHECK((chord_direction(c, 0.0, 0.5) - Vec3(-1, 0, 0)).norm() < 1e-12);
  CHECK((chord_direction(c, 0.1, 0.35) + chord_direction(c, 0.35, 0.1)).norm() < 1e-12);
  CHECK(kind_of([&] { chord_direction(c, 0.2, 0.2 + 1e-8); }) == ErrorKind::CoincidentPoints);
}

TEST_CASE("goal-post removal") {
  const auto f = fx::goalpost_frame();
  const auto fixed = remove_goalposts(f, 0.05);
  CHECK(detect_goalposts(fixed).empty());
  const auto before = sphere_double_points(f.field, f.tol);
  const auto after = sphere_double_points(fixed.field, fixed.tol);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(circular_distance(before[i].s, after[i].s) < f.tol.sep_lambda);
    CHECK(circular_distance(before[i].s_bar, after[i].s_bar) < f.tol.sep_lambda);
  }
  double max_du = 0;
  for (const auto& p : f.field.sample_both(4096)) max_du = std::max(max_du, p.d.norm());
  CHECK(frame_distance(f, fixed) < 0.05 * (1 + max_du) + 0.05);

  const auto clean = fx::fig8_field_frame();
  CHECK(frame_distance(remove_goalposts(clean, 0.05), clean) == 0.0);
  CHECK(kind_of([&] { remove_goalposts(f, 0.0); }) == ErrorKind::RepairFailed);
}

TEST_CASE("matching double points of the rescaled edge") {
  const auto& f = shared::trefoil_flip();
  const auto u_dps = sphere_double_points(f.field, f.tol);
  const auto self = match_double_points(u_dps, f.field, f.tol);
  CHECK(self.bijective());
  CHECK(self.max_parameter_drift == 0.0);

  double drift_coarse = 0, drift_fine = 0;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    const auto zhat = spherical_projection(rescaled_edge(f, t));
    const auto m = match_double_points(u_dps, zhat, f.tol);
    CHECK(m.bijective());
    if (t == 1e-2) drift_coarse = m.max_parameter_drift;
    if (t == 1e-3) CHECK(m.max_parameter_drift < 1e-2);
    if (t == 1e-4) drift_fine = m.max_parameter_drift;
  }
  CHECK(drift_fine <= drift_coarse);

  // At t = 0.5 the projection has lost the correspondence.
  const auto& g = shared::figure_eight_flip();
  const auto g_dps = sphere_double_points(g.field, g.tol);
  bool refused = false;
  try {
    const auto zhat = spherical_projection(rescaled_edge(g, 0.5));
    refused = !match_double_points(g_dps, zhat, g.tol).bijective();
  } catch (const Error&) {
    refused = true;
  }
  CHECK(refused);
}

TEST_CASE("chord angle of a straight arc") {
  const std::vector<Vec3> line{Vec3(0, 0, 0), Vec3(0, 0, 1), Vec3(0, 0, 2)};
  CHECK(max_chord_angle(line, Vec3::UnitZ()) == 0.0);
  const std::vector<Vec3> bent{Vec3(0, 0, 0), Vec3(1, 0, 1)};
  CHECK(max_chord_angle(bent, Vec3::UnitZ()) == doctest::Approx(std::numbers::pi / 4));
}
