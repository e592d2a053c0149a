#pragma once

#include <variant>
#include <vector>

#include "ribbon/curves.hpp"
#include "ribbon/diagram.hpp"

namespace ribbon {

/// A Gauss code rotated and relabeled so that tokens[0, arc_end) visit every
/// label once, in order 1..k.
struct ArcDiagram {
  SignedGaussCode code;
  std::size_t arc_end = 0;
  std::vector<int> omega;  // omega[j-1] = +1 when label j is over on the arc
  std::vector<int> tau;    // labels in second-visit order
  std::size_t rotation = 0;

  std::size_t crossings() const { return arc_end; }
};

ArcDiagram hamiltonian_arc_check(const SignedGaussCode& code);

struct LayoutPlan {
  std::vector<Vec3> north_points;
  std::vector<Vec3> south_points;
  std::vector<std::vector<Vec3>> connector_paths;
};

struct FieldLayout {
  SphericalCurve field;
  LayoutPlan plan;
  std::vector<DoublePoint> double_points;
  double arc_end_param = 0.0;  // u([0, arc_end_param]) is the straightened arc
  int smoothing_modes = 0;
};

FieldLayout build_field_layout(const ArcDiagram& diagram, std::size_t grid_n = kDefaultGridN);
SphericalCurve build_field(const ArcDiagram& diagram, std::size_t grid_n = kDefaultGridN);

struct UnknotPreset {};
using BaseKnot = std::variant<UnknotPreset, ClosedCurve3>;

/// Knot-free great circle through the poles, or that circle with k1 tied into
/// a ball of radius 0.1 about (1,0,0). Parameterized on the same circle as
/// pre-warp parameter sigma with x(0) at the north pole.
ClosedCurve3 base_prototype(const BaseKnot& k1, std::size_t grid_n = kDefaultGridN);

ClosedCurve3 build_base(const BaseKnot& k1, const ArcDiagram& diagram, const SphericalCurve& u,
                        std::size_t grid_n = kDefaultGridN);

RibbonFrame build_frame(const BaseKnot& k1, const SignedGaussCode& k2_code, std::size_t grid_n = kDefaultGridN);

/// Gauss code of a space curve read off a generic planar projection, retrying
/// a few perturbed directions on NonGenericProjection.
SignedGaussCode spatial_code(const ClosedCurve3& curve, std::size_t grid_n = kDefaultGridN);

}  // namespace ribbon
