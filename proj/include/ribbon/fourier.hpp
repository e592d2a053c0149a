#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ribbon/vec.hpp"

namespace ribbon {

// In-place radix-2 FFT. Forward uses exp(-2 pi i jk / n); the inverse is
// unnormalized. n must be a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(std::size_t n);

// Real trigonometric coefficients of a closed 3-vector curve:
//   f(s) = constant + sum_k cos_k cos(2 pi k s) + sin_k sin(2 pi k s),  k = 1..degree.
struct TrigCoefficients {
  Vec3 constant = Vec3::Zero();
  std::vector<Vec3> cos;
  std::vector<Vec3> sin;
};

// Full spectrum (degree n/2 - 1) of n uniform samples at s_j = j / n.
TrigCoefficients analyze(std::span<const Vec3> samples);

// Smallest degree whose dropped tail is bounded by tol in sup norm; the
// tail bound is sum_{k > degree} (|cos_k| + |sin_k|).
int degree_for_tolerance(const TrigCoefficients& spectrum, double tol);

TrigCoefficients truncate(const TrigCoefficients& spectrum, int degree);

// Values (and optionally derivatives) of a trig series on the n-point grid.
std::vector<Vec3> synthesize(const TrigCoefficients& c, std::size_t n, int derivative_order = 0);

}  // namespace ribbon
