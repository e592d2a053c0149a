#pragma once

#include <string>
#include <vector>

#include "ribbon/curves.hpp"

namespace ribbon::plot {

/// Equal-area azimuthal view of the field u, centred opposite the point of
/// the sphere farthest from the curve, with one labeled marker per double point.
std::string diagram_svg(const RibbonFrame& frame);

/// "R,embedded,min_gap" rows for the given radii, sorted ascending.
std::string sweep_csv(const RibbonFrame& frame, std::vector<double> radii);
/// Default sampling: 48 radii evenly spread over (0, 3 max(R*, 1)].
std::vector<double> sweep_radii(double r_star);

/// Orthographic projection of a space curve along `view`.
std::string curve_svg(const ClosedCurve3& curve, const Vec3& view = Vec3::UnitZ());

}  // namespace ribbon::plot
