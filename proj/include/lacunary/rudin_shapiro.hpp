#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lacunary/laurent_poly.hpp"

namespace lacunary {

inline constexpr unsigned kDefaultMaxDepth = 24;
inline constexpr std::size_t kDefaultMomentBudget = std::size_t{1} << 21;

// The pair (P_k, Q_k) of +-1 coefficient sequences of length 2^k.
struct RudinShapiroPair {
  unsigned k = 0;
  std::vector<std::int8_t> p;
  std::vector<std::int8_t> q;

  IntPoly p_poly() const;
  IntPoly q_poly() const;
};

// P_0 = Q_0 = 1, P_{j+1} = P_j + z^{2^j} Q_j, Q_{j+1} = P_j - z^{2^j} Q_j.
// Throws ResourceLimit when k > max_depth.
RudinShapiroPair generate(unsigned k, unsigned max_depth = kDefaultMaxDepth);

// Exact value of sum_i c_i x^i at x = +-1.
BigInt evaluate_at_one(const std::vector<std::int8_t>& coeffs);
BigInt evaluate_at_minus_one(const std::vector<std::int8_t>& coeffs);

struct ParsevalCheck {
  bool holds = false;
  // P(z)P(1/z) + Q(z)Q(1/z) - 2^{k+1}; zero exactly when the identity holds.
  IntPoly residual;
};

ParsevalCheck parseval_identity_check(unsigned k);

struct AltRecursionCheck {
  bool recursion_holds = false;
  // P_j(-1) == 0 for every odd j <= k + 2.
  bool odd_values_vanish = false;
  bool holds() const { return recursion_holds && odd_values_vanish; }
};

// P_{k+2} = (1 - z^{2^{k+1}}) P_{k+1} + 2 z^{2^{k+1}} P_k, checked exactly.
AltRecursionCheck alt_recursion_check(unsigned k);

// Normalized moment. Its value is `rational`, times 2^{-1/2} when
// `inv_sqrt2` is set (odd total normalization exponent in the mixed case).
struct ExactMoment {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m = 0;
  BigInt constant_term;
  Rational rational;
  bool inv_sqrt2 = false;

  double to_double() const;
  // "5/16" or "1/2*2^(-1/2)".
  std::string to_string() const;
};

// E|P_k(w)/sqrt(2^{k+1})|^{2n}, computed as
// constant_term((P_k(z) P_k(1/z))^n) / 2^{n(k+1)}.
ExactMoment exact_even_moment(unsigned k, unsigned n,
                              std::size_t budget = kDefaultMomentBudget);

// E[conj P_k(w)]^n [P_k(w)]^m / 2^{(n+m)(k+1)/2}.
ExactMoment exact_mixed_moment(unsigned k, unsigned n, unsigned m,
                               std::size_t budget = kDefaultMomentBudget);

}  // namespace lacunary
