#pragma once

#include <cstdint>
#include <random>

#include "ribbon/curves.hpp"
#include "ribbon/diagram.hpp"

// Independent reference computations used to derive frozen test values.
namespace oracle {

/// |det| of the reduced Goeritz matrix from a checkerboard colouring of the
/// diagram's faces. Face tracing and colouring are done here from scratch.
std::int64_t goeritz_determinant(const ribbon::PDCode& pd);

/// Number of faces traced from corner adjacency alone.
std::size_t face_count(const ribbon::PDCode& pd);

/// Applies one random Reidemeister I or II move that keeps the code realizable.
ribbon::SignedGaussCode random_move(const ribbon::SignedGaussCode& code, std::mt19937_64& rng);

/// Self-intersections of a spherical polyline with m vertices, counted by
/// segment-pair tests over a bucketed grid; pairs closer than sep (in
/// parameter) are ignored.
std::size_t polyline_double_points(const ribbon::SphericalCurve& u, std::size_t m, double sep);

}  // namespace oracle
