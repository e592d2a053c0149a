#include "ribbon/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "ribbon/error.hpp"

namespace ribbon {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw Error(ErrorKind::InvalidArgument, "fft size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
    // Twiddles from direct trig calls; the recurrence drifts for long transforms.
    std::vector<std::complex<double>> w(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) w[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        auto u = a[i + k];
        auto v = a[i + k + len / 2] * w[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

TrigCoefficients analyze(std::span<const Vec3> samples) {
  const std::size_t n = samples.size();
  if (!is_power_of_two(n) || n < 4) throw Error(ErrorKind::InvalidArgument, "sample count must be a power of two >= 4");
  TrigCoefficients out;
  const int degree = static_cast<int>(n / 2) - 1;
  out.cos.assign(degree, Vec3::Zero());
  out.sin.assign(degree, Vec3::Zero());
  std::vector<std::complex<double>> buf(n);
  for (int c = 0; c < 3; ++c) {
    for (std::size_t j = 0; j < n; ++j) buf[j] = samples[j][c];
    fft(buf, false);
    const double inv = 1.0 / static_cast<double>(n);
    out.constant[c] = buf[0].real() * inv;
    for (int k = 1; k <= degree; ++k) {
      out.cos[k - 1][c] = 2.0 * buf[k].real() * inv;
      out.sin[k - 1][c] = -2.0 * buf[k].imag() * inv;
    }
  }
  return out;
}

int degree_for_tolerance(const TrigCoefficients& spectrum, double tol) {
  const int full = static_cast<int>(spectrum.cos.size());
  double tail = 0.0;
  int degree = full;
  for (int k = full; k >= 1; --k) {
    double term = 0.0;
    for (int c = 0; c < 3; ++c)
      term = std::max(term, std::abs(spectrum.cos[k - 1][c]) + std::abs(spectrum.sin[k - 1][c]));
    if (tail + term > tol) break;
    tail += term;
    degree = k - 1;
  }
  return degree;
}

TrigCoefficients truncate(const TrigCoefficients& spectrum, int degree) {
  TrigCoefficients out;
  out.constant = spectrum.constant;
  const int d = std::min<int>(degree, static_cast<int>(spectrum.cos.size()));
  out.cos.assign(spectrum.cos.begin(), spectrum.cos.begin() + d);
  out.sin.assign(spectrum.sin.begin(), spectrum.sin.begin() + d);
  return out;
}

std::vector<Vec3> synthesize(const TrigCoefficients& c, std::size_t n, int derivative_order) {
  const int degree = static_cast<int>(c.cos.size());
  std::vector<Vec3> out(n, Vec3::Zero());
  if (static_cast<std::size_t>(2 * degree + 1) > n || !is_power_of_two(n)) {
    // Grid too coarse for an FFT round trip; evaluate directly.
    for (std::size_t j = 0; j < n; ++j) {
      const double s = static_cast<double>(j) / static_cast<double>(n);
      Vec3 v = derivative_order == 0 ? c.constant : Vec3::Zero();
      for (int k = 1; k <= degree; ++k) {
        const double w = kTwoPi * k;
        const double cs = std::cos(w * s), sn = std::sin(w * s);
        switch (derivative_order) {
          case 0: v += c.cos[k - 1] * cs + c.sin[k - 1] * sn; break;
          case 1: v += w * (-c.cos[k - 1] * sn + c.sin[k - 1] * cs); break;
          default: v += -w * w * (c.cos[k - 1] * cs + c.sin[k - 1] * sn); break;
        }
      }
      out[j] = v;
    }
    return out;
  }
  std::vector<std::complex<double>> buf(n);
  const double half = static_cast<double>(n) / 2.0;
  for (int comp = 0; comp < 3; ++comp) {
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    if (derivative_order == 0) buf[0] = c.constant[comp] * static_cast<double>(n);
    for (int k = 1; k <= degree; ++k) {
      std::complex<double> x(half * c.cos[k - 1][comp], -half * c.sin[k - 1][comp]);
      const std::complex<double> ik(0.0, kTwoPi * k);
      for (int d = 0; d < derivative_order; ++d) x *= ik;
      buf[k] = x;
      buf[n - k] = std::conj(x);
    }
    fft(buf, true);
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) out[j][comp] = buf[j].real() * inv;
  }
  return out;
}

}  // namespace ribbon
