#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/curves.hpp"
#include "ribbon/intersect.hpp"

namespace ribbon {

struct GaussToken {
  int label = 0;
  bool over = false;
  int sign = +1;  // handedness, +1 right-handed

  bool operator==(const GaussToken&) const = default;
};

/// Cyclic signed Gauss code; every label occurs once as O and once as U with
/// the same sign.
struct SignedGaussCode {
  std::vector<GaussToken> tokens;

  static SignedGaussCode parse(std::string_view text);
  std::string str() const;

  std::size_t crossings() const { return tokens.size() / 2; }
  bool empty() const { return tokens.empty(); }
  /// Throws InvalidArgument when the label multiset or signs are inconsistent.
  void validate() const;

  bool operator==(const SignedGaussCode&) const = default;
};

/// Planar diagram code. Each crossing lists four arc labels counterclockwise,
/// starting from the incoming under-strand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::string str() const;
  std::size_t size() const { return crossings.size(); }
};

/// Per double point: true when the strand at s (the smaller parameter) is over.
struct ResolutionChoice {
  std::vector<bool> s_over;
};

enum class ProjectionKind { Radial, Planar };

struct Projection {
  ProjectionKind kind = ProjectionKind::Radial;
  Vec3 direction = Vec3::UnitZ();

  static Projection radial() { return {}; }
  static Projection planar(const Vec3& d) { return {ProjectionKind::Planar, d.normalized()}; }
};

/// Crossing data in parameter form, used to assemble codes.
struct ParamCrossing {
  double s = 0.0;
  double s_bar = 0.0;
  bool s_over = true;
  int sign = +1;
};

SignedGaussCode code_from_crossings(const std::vector<ParamCrossing>& crossings);

/// Over/under rule at small t: strand s is over iff u(s).x(s) > u(s_bar).x(s_bar).
ResolutionChoice limiting_choice(const RibbonFrame& frame, const std::vector<DoublePoint>& dps);
SignedGaussCode limiting_resolution(const RibbonFrame& frame);
SignedGaussCode resolve(const std::vector<DoublePoint>& dps, const ResolutionChoice& choice, const RibbonFrame& frame);

SignedGaussCode gauss_from_spatial(const ClosedCurve3& curve, const Projection& projection,
                                   const ToleranceSet& tol = {}, std::size_t grid_n = kDefaultGridN);
SignedGaussCode gauss_from_spatial(const CurveEval& curve, const Projection& projection, const ToleranceSet& tol,
                                   std::size_t grid_n);

PDCode gauss_to_pd(const SignedGaussCode& code);
/// Number of faces of the 4-valent map encoded by a PD code.
std::size_t pd_face_count(const PDCode& pd);

SignedGaussCode reidemeister_reduce(const SignedGaussCode& code);
/// Labels renumbered by first appearance, rotated to the lexicographic minimum.
SignedGaussCode canonical_form(const SignedGaussCode& code);
bool same_code(const SignedGaussCode& a, const SignedGaussCode& b);

SignedGaussCode mirror(const SignedGaussCode& code);
PDCode mirror(const PDCode& pd);
int writhe(const SignedGaussCode& code);
int writhe(const PDCode& pd);

}  // namespace ribbon
