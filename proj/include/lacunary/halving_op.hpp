#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lacunary/su2_rep.hpp"

namespace lacunary {

// Basis element e_h * w^j of the polynomial-vector space.
struct BasisIndex {
  int two_h = 0;
  std::int64_t exponent = 0;
};

// Matrix of the halving operator on (span{w^lo, ..., w^hi})^{2l+1}, where
// the span has 2l - 1 exponents centred at lambda/2.
//
// Basis (h, j) maps to sum_m tau_{m,h} (m, s/2) with s = lambda/2 + h + j
// when s is even, and to zero otherwise.
class HalvingOperator {
 public:
  HalfInteger ell() const { return ell_; }
  std::optional<int> lambda() const { return lambda_; }
  int dim() const { return static_cast<int>(index_map_.size()); }
  const CMatrix& matrix() const { return matrix_; }
  const std::vector<BasisIndex>& index_map() const { return index_map_; }
  std::int64_t exponent_low() const { return exp_low_; }
  std::int64_t exponent_high() const { return exp_high_; }

  // Basis position of (two_h, exponent), or -1 outside the space.
  int position(int two_h, std::int64_t exponent) const;

  friend HalvingOperator assemble_halving(int two_ell, int lambda,
                                          bool twisted);

 private:
  HalfInteger ell_;
  std::optional<int> lambda_;
  CMatrix matrix_;
  std::vector<BasisIndex> index_map_;
  std::int64_t exp_low_ = 0;
  std::int64_t exp_high_ = 0;
};

// Shared assembly; `twisted` records lambda on the result. No validation.
HalvingOperator assemble_halving(int two_ell, int lambda, bool twisted);

// Plain operator for integer l >= 1; InvalidArgument for half-integer l.
HalvingOperator build_S(int two_ell);

// Twisted operator; requires lambda == 2l (mod 2) and 0 strictly inside
// (lambda/2 - l, lambda/2 + l).
HalvingOperator build_S_lambda(int two_ell, int lambda);

struct SpectrumReport {
  std::vector<Complex> eigenvalues;  // sorted by decreasing modulus
  double spectral_radius = 0.0;
  double margin = 0.0;  // 1 - spectral_radius
};

// Full dense eigen-decomposition; NumericalFailure if the solver does not
// converge.
SpectrumReport spectral_radius(const HalvingOperator& op);

// Where 0 sits relative to [lambda/2 - l, lambda/2 + l], after parity.
enum class MomentCase {
  kParityZero,     // lambda + 2l odd: only odd powers of w occur
  kOutsideZero,    // 0 outside the interval
  kLowerBoundary,  // lambda/2 - l == 0
  kUpperBoundary,  // lambda/2 + l == 0
  kInterior,
};

MomentCase classify(int two_ell, int lambda);
const char* moment_case_name(MomentCase c);

// E t^l(g(w^{2^k})) ... t^l(g(w)) for k >= 0 (k + 1 factors).
CMatrix expected_rep(int two_ell, unsigned k);

// E (w^{2^{k+1}-1})^lambda t^l(g(w^{2^k}) ... g(w)).
CMatrix independence_moment(int two_ell, int lambda, unsigned k);

struct CrossCheck {
  double max_residual = 0.0;
  // Extreme exponents over every entry of the product, in the variable w.
  std::int64_t min_exponent = 0;
  std::int64_t max_exponent = 0;
  bool support_ok = false;
  // For lambda == 0 and integer l: constant terms against expected_rep.
  std::optional<double> expected_rep_residual;
};

inline constexpr std::size_t kCrossCheckBudget = std::size_t{1} << 22;

// Multiplies out w^{lambda 2^j} tau diag(w^{2n 2^j}) for j = k..0 as
// matrices of Laurent polynomials, takes constant terms, and compares them
// with independence_moment. ResourceLimit above the term budget.
CrossCheck cross_check_symbolic(int two_ell, int lambda, unsigned k,
                                std::size_t budget = kCrossCheckBudget);

}  // namespace lacunary
