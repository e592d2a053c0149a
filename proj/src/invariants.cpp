#include "ribbon/invariants.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "ribbon/error.hpp"

namespace ribbon {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::negate_exponents() const { return scale_exponents(-1); }

LaurentPoly LaurentPoly::scale_exponents(int factor) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * factor, c);
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
    } else if (c < 0) {
      out += "-";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

// Arc labels -> dense indices for union-find.
struct ArcIndex {
  std::vector<std::array<int, 4>> x;
  int count = 0;

  explicit ArcIndex(const PDCode& pd) {
    std::unordered_map<int, int> id;
    for (const auto& c : pd.crossings) {
      std::array<int, 4> y{};
      for (int p = 0; p < 4; ++p) {
        auto [it, inserted] = id.try_emplace(c[p], count);
        if (inserted) ++count;
        y[p] = it->second;
      }
      x.push_back(y);
    }
  }
};

int find(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

// Calls visit(b_count, loops) once per state; bit set = B-smoothing.
template <class Visit>
void for_each_state(const PDCode& pd, Visit&& visit) {
  const std::size_t k = pd.size();
  if (k > kMaxStateSumCrossings)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(k) + " crossings exceed the state-sum bound of " + std::to_string(kMaxStateSumCrossings));
  const ArcIndex arcs(pd);
  std::vector<int> parent(arcs.count);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = arcs.count;
    auto join = [&](int a, int b) {
      a = find(parent, a);
      b = find(parent, b);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    };
    int b_count = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& x = arcs.x[c];
      if (mask >> c & 1u) {
        ++b_count;
        join(x[0], x[3]);
        join(x[1], x[2]);
      } else {
        join(x[0], x[1]);
        join(x[2], x[3]);
      }
    }
    visit(b_count, comps);
  }
}

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd) {
  const int k = static_cast<int>(pd.size());
  if (k == 0) return LaurentPoly::constant(1);
  // tally[b][loops]: the state sum only depends on these two numbers
  std::vector<std::vector<std::int64_t>> tally(k + 1, std::vector<std::int64_t>(2 * k + 1, 0));
  for_each_state(pd, [&](int b, int loops) { tally[b][loops]++; });

  const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1)};
  for (int i = 1; i <= 2 * k; ++i) delta_pow.push_back(delta_pow.back() * delta);

  LaurentPoly result;
  for (int b = 0; b <= k; ++b)
    for (int loops = 1; loops <= 2 * k; ++loops)
      if (tally[b][loops] != 0)
        result += LaurentPoly::monomial(k - 2 * b, tally[b][loops]) * delta_pow[loops - 1];
  return result;
}

LaurentPoly jones(const PDCode& pd, int writhe) {
  const LaurentPoly norm = LaurentPoly::monomial(-3 * writhe, (writhe % 2 == 0) ? 1 : -1);
  // A^e -> t^(-e/4); stored key is 4 * exponent of t
  return (norm * kauffman_bracket(pd)).negate_exponents();
}

std::int64_t determinant(const PDCode& pd) {
  if (pd.size() == 0) return 1;
  // At A = exp(i pi/4) the loop value vanishes, so only single-loop states
  // survive; each contributes A^(k - 2b), i.e. A^k times i^(-b).
  std::int64_t re = 0, im = 0;
  for_each_state(pd, [&](int b, int loops) {
    if (loops != 1) return;
    switch (((-b) % 4 + 4) % 4) {
      case 0: ++re; break;
      case 1: ++im; break;
      case 2: --re; break;
      default: --im; break;
    }
  });
  const std::int64_t n2 = re * re + im * im;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n2))));
  while (r * r > n2) --r;
  while ((r + 1) * (r + 1) <= n2) ++r;
  return r;
}

InvariantProfile profile(const SignedGaussCode& code) {
  gauss_to_pd(code);  // realizability of the input itself
  const auto reduced = reidemeister_reduce(code);
  const auto pd = gauss_to_pd(reduced);
  InvariantProfile p;
  p.crossings = static_cast<int>(reduced.crossings());
  p.writhe = writhe(reduced);
  p.jones = jones(pd, p.writhe);
  p.determinant = determinant(pd);
  return p;
}

KnotComparison same_knot_type(const InvariantProfile& a, const InvariantProfile& b) {
  if (a.determinant != b.determinant || !(a.jones == b.jones)) return KnotComparison::Distinct;
  return KnotComparison::Indistinguishable;
}

std::string to_string(KnotComparison c) {
  return c == KnotComparison::Distinct ? "distinct" : "indistinguishable";
}

}  // namespace ribbon
