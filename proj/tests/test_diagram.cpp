#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ribbon/error.hpp"
#include "ribbon/intersect.hpp"
#include "ribbon/invariants.hpp"
#include "shared.hpp"

using namespace ribbon;
namespace fx = ribbon::fixtures;

namespace {

// Crossings of the projection along z, counted by pairwise segment tests.
std::size_t planar_crossings(const ClosedCurve3& c, std::size_t m) {
  const auto p = c.sample(m);
  auto orient = [](const Vec3& a, const Vec3& b, const Vec3& q) {
    return (b.x() - a.x()) * (q.y() - a.y()) - (b.y() - a.y()) * (q.x() - a.x());
  };
  std::size_t n = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      const Vec3 &a = p[i], &b = p[i + 1], &c2 = p[j], &d = p[(j + 1) % m];
      if (orient(a, b, c2) * orient(a, b, d) < 0 && orient(c2, d, a) * orient(c2, d, b) < 0) ++n;
    }
  return n;
}

bool alternating(const SignedGaussCode& c) {
  for (std::size_t i = 0; i < c.tokens.size(); ++i)
    if (c.tokens[i].over == c.tokens[(i + 1) % c.tokens.size()].over) return false;
  return true;
}

}  // namespace

TEST_CASE("gauss code text") {
  const auto c = SignedGaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(c.crossings() == 3);
  CHECK(c.str() == "O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(SignedGaussCode::parse("O1−, U1−").str() == "O1- U1-");
  CHECK(SignedGaussCode::parse("").empty());
  CHECK_THROWS_AS(SignedGaussCode::parse("O1+ X1+"), Error);
  CHECK_THROWS_AS(SignedGaussCode::parse("O1+ U1+ O2+").validate(), Error);
  CHECK_THROWS_AS(SignedGaussCode::parse("O1+ U1-").validate(), Error);
}

TEST_CASE("PD codes") {
  CHECK(gauss_to_pd(SignedGaussCode{}).size() == 0);
  const auto pd = gauss_to_pd(fx::trefoil_code());
  REQUIRE(pd.size() == 3);
  std::set<int> arcs;
  for (const auto& x : pd.crossings)
    for (int a : x) arcs.insert(a);
  CHECK(arcs == std::set<int>{1, 2, 3, 4, 5, 6});
  CHECK(pd_face_count(pd) == 5);
  CHECK(writhe(pd) == 3);
  try {
    gauss_to_pd(SignedGaussCode::parse("O1+ U2- U1+ O2-"));
    FAIL("expected NonRealizableCode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRealizableCode);
  }
}

TEST_CASE("reidemeister reduction") {
  CHECK(reidemeister_reduce(SignedGaussCode::parse("O1+ U2+ O3+ U1+ O4- U4- O2+ U3+")) == fx::trefoil_code());
  const auto fig8 = fx::figure_eight_code();
  CHECK(reidemeister_reduce(fig8) == fig8);
  CHECK(reidemeister_reduce(SignedGaussCode::parse("O1+ O2- O3+ O4- U4- U3+ U2- U1+")).empty());
}

TEST_CASE("canonical form, mirror and writhe") {
  const auto t = fx::trefoil_code();
  const auto rotated = SignedGaussCode::parse("U5+ O7+ U2+ O5+ U7+ O2+");
  CHECK(same_code(t, rotated));
  CHECK(canonical_form(t) == canonical_form(rotated));
  CHECK_FALSE(same_code(t, mirror(t)));
  CHECK(mirror(mirror(t)) == t);
  CHECK(writhe(mirror(t)) == -writhe(t));
  for (const auto& [name, code] : fx::code_fixtures()) {
    CAPTURE(name);
    CHECK(writhe(gauss_to_pd(code)) == writhe(code));
  }
}

TEST_CASE("planar projection of space curves") {
  CHECK(gauss_from_spatial(fx::unit_circle(), Projection::planar(Vec3(0.2, 0.3, 0.9).normalized())).empty());

  const auto t = fx::trefoil_curve();
  const auto code = gauss_from_spatial(t, Projection::planar(Vec3::UnitZ()));
  CHECK(code.crossings() == planar_crossings(t, 2048));
  CHECK(code.crossings() == 3);
  CHECK(alternating(code));
  CHECK(profile(code).determinant == 3);

  // x(0) and x(1/2) lie on the x-axis with parallel tangents
  const ClosedCurve3 pinched(Vec3::Zero(), {Vec3(1, 0, 0.1), Vec3(0, 0, 0), Vec3(0, 0, -0.1)},
                             {Vec3(0, 1, 0.3), Vec3(0, 0, 0), Vec3(0, 0, 0.2)});
  try {
    gauss_from_spatial(pinched, Projection::planar(Vec3::UnitX()));
    FAIL("expected NonGenericProjection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGenericProjection);
  }
}

TEST_CASE("limiting resolution") {
  CHECK(limiting_resolution(fx::radial_circle_frame()).empty());

  const auto code = limiting_resolution(shared::trefoil_flip());
  CHECK(code.crossings() == 3);
  CHECK(alternating(code));
  for (const auto& tok : code.tokens) CHECK(tok.sign == code.tokens[0].sign);

  try {
    limiting_resolution(fx::goalpost_frame());
    FAIL("expected GoalPostObstruction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GoalPostObstruction);
  }
}

TEST_CASE("resolutions") {
  const auto f = fx::fig8_field_frame();
  const auto dps = sphere_double_points(f.field, f.tol);
  REQUIRE(dps.size() == 1);
  for (bool bit : {false, true}) CHECK(reidemeister_reduce(resolve(dps, ResolutionChoice{{bit}}, f)).empty());

  const auto& g = shared::figure_eight_flip();
  const auto g_dps = sphere_double_points(g.field, g.tol);
  const std::size_t k = g_dps.size();
  REQUIRE(k == 4);
  const auto limit = limiting_resolution(g);
  std::set<std::string> seen;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    ResolutionChoice ch;
    for (std::size_t i = 0; i < k; ++i) ch.s_over.push_back((mask >> i & 1u) != 0);
    const auto code = resolve(g_dps, ch, g);
    seen.insert(code.str());
    found = found || code == limit;
  }
  CHECK(seen.size() == (1u << k));
  CHECK(found);
}

TEST_CASE("radial codes of the rescaled edge agree with the limit") {
  for (const auto* f : {&shared::trefoil_flip(), &shared::figure_eight_flip()}) {
    const auto limit = limiting_resolution(*f);
    for (double t : {1e-2, 1e-3, 1e-4}) {
      const auto z = rescaled_edge(*f, t);
      CHECK(same_code(gauss_from_spatial(z, Projection::radial(), f->tol, f->grid_n), limit));
    }
  }
}
