#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "ribbon/error.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/invariants.hpp"

using namespace ribbon;
namespace fx = ribbon::fixtures;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(e, c);
  return p;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const auto a = poly({{1, 2}, {-1, 1}});
  const auto b = poly({{1, -2}, {3, 1}});
  CHECK((a + b) == poly({{-1, 1}, {3, 1}}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == poly({{2, -4}, {4, 2}, {0, -2}, {2, 1}}));
  CHECK(a.negate_exponents() == poly({{-1, 2}, {1, 1}}));
  CHECK(poly({{1, 0}}).size() == 0);
}

TEST_CASE("kauffman bracket") {
  CHECK(kauffman_bracket(PDCode{}) == LaurentPoly::constant(1));
  CHECK(kauffman_bracket(gauss_to_pd(SignedGaussCode::parse("O1+ U1+"))) == poly({{3, -1}}));
  CHECK(kauffman_bracket(gauss_to_pd(SignedGaussCode::parse("O1- U1-"))) == poly({{-3, -1}}));
  CHECK(kauffman_bracket(gauss_to_pd(fx::trefoil_code())) == poly({{5, -1}, {-3, -1}, {-7, 1}}));

  PDCode big;
  for (int i = 0; i < 17; ++i) big.crossings.push_back({1, 1, 1, 1});
  CHECK_THROWS_AS(kauffman_bracket(big), Error);
}

TEST_CASE("jones polynomials of small knots") {
  // keys are four times the exponent of t
  const auto t = gauss_to_pd(fx::trefoil_code());
  CHECK(jones(t, 3) == poly({{4, 1}, {12, 1}, {16, -1}}));
  CHECK(jones(gauss_to_pd(fx::figure_eight_code()), writhe(fx::figure_eight_code())) ==
        poly({{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}));
}

TEST_CASE("determinants agree with the Goeritz oracle") {
  const std::map<std::string, std::int64_t> expected{
      {"unknot", 1},  {"kink", 1},   {"trefoil", 3},       {"trefoil_mirror", 3},  {"figure_eight", 5},
      {"cinquefoil", 5}, {"granny", 9}, {"square", 9}, {"trefoil_fig8", 15}, {"cinquefoil_sum", 25}};
  for (const auto& [name, code] : fx::code_fixtures()) {
    CAPTURE(name);
    const auto pd = gauss_to_pd(code);
    CHECK(determinant(pd) == oracle::goeritz_determinant(pd));
    CHECK(determinant(pd) == expected.at(name));
  }
}

TEST_CASE("invariants survive random Reidemeister moves") {
  std::mt19937_64 rng(2024);
  for (const auto& [name, code] : fx::code_fixtures()) {
    CAPTURE(name);
    const auto pd = gauss_to_pd(code);
    const auto j0 = jones(pd, writhe(code));
    const auto d0 = determinant(pd);
    for (int trial = 0; trial < 5; ++trial) {
      auto moved = code;
      for (int m = 0; m < 2 && moved.crossings() + 2 <= kMaxStateSumCrossings; ++m) moved = oracle::random_move(moved, rng);
      const auto mpd = gauss_to_pd(moved);
      CHECK(jones(mpd, writhe(moved)) == j0);
      CHECK(determinant(mpd) == d0);
    }
  }
}

TEST_CASE("mirror negates jones exponents") {
  for (const auto& [name, code] : fx::code_fixtures()) {
    CAPTURE(name);
    const auto pd = gauss_to_pd(code);
    const auto m = mirror(pd);
    CHECK(jones(m, -writhe(code)) == jones(pd, writhe(code)).negate_exponents());
    CHECK(writhe(m) == -writhe(pd));
  }
}

TEST_CASE("profiles and comparison") {
  const auto t = profile(fx::trefoil_code());
  CHECK(t.crossings == 3);
  CHECK(t.determinant == 3);
  CHECK(t.writhe == 3);
  const auto kinked = profile(SignedGaussCode::parse("O1+ U2+ O3+ U1+ O4- U4- O2+ U3+"));
  CHECK(same_knot_type(t, kinked) == KnotComparison::Indistinguishable);
  CHECK(same_knot_type(t, profile(mirror(fx::trefoil_code()))) == KnotComparison::Distinct);
  CHECK(same_knot_type(t, profile(fx::figure_eight_code())) == KnotComparison::Distinct);
  CHECK(to_string(KnotComparison::Distinct) == "distinct");
  CHECK(profile(fx::code_fixtures().back().code).determinant == 25);
}
