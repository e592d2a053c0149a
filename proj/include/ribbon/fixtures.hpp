#pragma once

#include <random>
#include <string>
#include <vector>

#include "ribbon/curves.hpp"
#include "ribbon/diagram.hpp"

// Hand-built curves, fields, frames and codes shared by the tests, the
// acceptance suite and the CLI.
namespace ribbon::fixtures {

ClosedCurve3 unit_circle();  // (cos 2 pi s, sin 2 pi s, 0)
ClosedCurve3 trefoil_curve();
/// Figure-eight on the sphere with its single double point at s = 0, 1/2.
SphericalCurve spherical_figure_eight(double a = 0.6, double b = 0.8);
/// Two-lobed field whose crossing angle at s = 0 is `angle`.
SphericalCurve tangent_lobes(double angle);
/// Three-petal rose: three strands through the north pole.
SphericalCurve triple_rose();

RibbonFrame parallel_frame(const Vec3& u0);
RibbonFrame radial_circle_frame();
RibbonFrame goalpost_frame();
RibbonFrame fig8_field_frame();
/// Base points (0,0,0) and (1,0,0) at s = 0, 1/2 whose rays meet at width 1.
RibbonFrame two_ray_frame();
RibbonFrame trefoil_flip_frame();       // unknot base, trefoil limit
RibbonFrame figure_eight_flip_frame();  // unknot base, figure-eight limit
RibbonFrame trefoil_base_fig8_frame();  // trefoil base, figure-eight limit

/// Random frame with Fourier coefficients of the given degree, uniform in
/// [-1, 1] and damped by 1/k. Not guaranteed regular.
RibbonFrame random_frame(std::mt19937_64& rng, int degree);

SignedGaussCode trefoil_code();
SignedGaussCode figure_eight_code();

struct NamedFrame {
  std::string name;
  RibbonFrame frame;
};

/// Every bundled frame without goal posts.
std::vector<NamedFrame> bundled_frames();

/// Knot fixtures up to 10 crossings for invariant checks.
struct NamedCode {
  std::string name;
  SignedGaussCode code;
};
std::vector<NamedCode> code_fixtures();

}  // namespace ribbon::fixtures
