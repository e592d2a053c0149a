#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ribbon/diagram.hpp"

namespace ribbon {

/// Integer Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);
  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int exponent) const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly negate_exponents() const;
  LaurentPoly scale_exponents(int factor) const;
  std::string str(const std::string& var = "A") const;

 private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

inline constexpr std::size_t kMaxStateSumCrossings = 16;

/// Bracket in the variable A, full 2^k state sum.
LaurentPoly kauffman_bracket(const PDCode& pd);

/// Writhe-normalised bracket in t = A^-4. Keys are 4 times the t-exponent so
/// half-integer powers stay integral.
LaurentPoly jones(const PDCode& pd, int writhe);

/// |V(-1)| from an exact Gaussian-integer evaluation of the bracket at A = exp(i pi/4).
std::int64_t determinant(const PDCode& pd);

struct InvariantProfile {
  int crossings = 0;  // after greedy Reidemeister reduction
  std::int64_t determinant = 1;
  LaurentPoly jones = LaurentPoly::constant(1);
  int writhe = 0;
};

InvariantProfile profile(const SignedGaussCode& code);

enum class KnotComparison { Distinct, Indistinguishable };

/// Compares the knot-type invariants (determinant and Jones polynomial).
KnotComparison same_knot_type(const InvariantProfile& a, const InvariantProfile& b);

std::string to_string(KnotComparison c);

}  // namespace ribbon
