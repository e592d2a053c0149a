#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/curves.hpp"
#include "ribbon/intersect.hpp"

namespace ribbon::cli {

struct SweepReport {
  std::vector<double> radii;
  std::vector<bool> embedded;
  std::vector<std::optional<std::string>> code;  // canonical radial code; empty optional when not generic
  Stabilization r_star;
  std::optional<double> stable_from;  // first radius from which every later code agrees
};

/// {1.5, 3, 6, 12} * max(R*, 1).
std::vector<double> default_radii(const Stabilization& st);

/// Canonical signed Gauss code of the radial projection of Y_R.
std::string radial_code(const RibbonFrame& frame, double R);

SweepReport sweep(const RibbonFrame& frame, std::vector<double> radii = {});

/// Exit codes: 0 success, 2 validation failure, 1 usage, I/O or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli
