#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lacunary/error.hpp"

namespace lacunary {

using BigInt = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

template <class T>
inline bool coeff_is_zero(const T& c) {
  return c == 0;
}

template <>
inline bool coeff_is_zero<Complex>(const Complex& c) {
  return c.real() == 0.0 && c.imag() == 0.0;
}

// Laurent polynomial sum_j coeffs[j] z^(low + j).
//
// Always canonical: the first and last stored coefficients are nonzero, and
// the zero polynomial is the empty sequence with low == 0.
template <class T>
class LaurentPoly {
 public:
  using coeff_type = T;

  LaurentPoly() = default;

  LaurentPoly(std::int64_t low, std::vector<T> coeffs)
      : low_(low), coeffs_(std::move(coeffs)) {
    canonicalize();
  }

  static LaurentPoly constant(T c) { return LaurentPoly(0, {std::move(c)}); }

  static LaurentPoly monomial(T c, std::int64_t exponent) {
    return LaurentPoly(exponent, {std::move(c)});
  }

  std::int64_t low() const { return low_; }
  // Highest exponent; equal to low() - 1 for the zero polynomial.
  std::int64_t high() const {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T coefficient(std::int64_t j) const {
    if (j < low_ || j > high()) return T(0);
    return coeffs_[static_cast<std::size_t>(j - low_)];
  }

  T constant_term() const { return coefficient(0); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t lo = std::min(a.low_, b.low_);
    const std::int64_t hi = std::max(a.high(), b.high());
    std::vector<T> out(static_cast<std::size_t>(hi - lo + 1), T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      out[static_cast<std::size_t>(a.low_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.size(); ++i)
      out[static_cast<std::size_t>(b.low_ - lo) + i] += b.coeffs_[i];
    return LaurentPoly(lo, std::move(out));
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    std::vector<T> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return LaurentPoly(a.low_, std::move(out));
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  LaurentPoly scaled(const T& s) const {
    std::vector<T> out(coeffs_);
    for (auto& c : out) c *= s;
    return LaurentPoly(low_, std::move(out));
  }

  LaurentPoly shifted(std::int64_t by) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.low_ += by;
    return out;
  }

 private:
  void canonicalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeff_is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeff_is_zero(coeffs_[last - 1])) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<T>(std::make_move_iterator(coeffs_.begin() + first),
                               std::make_move_iterator(coeffs_.begin() + last));
    }
    low_ += static_cast<std::int64_t>(first);
  }

  std::int64_t low_ = 0;
  std::vector<T> coeffs_;
};

using IntPoly = LaurentPoly<BigInt>;
using RationalPoly = LaurentPoly<Rational>;
using ComplexPoly = LaurentPoly<Complex>;

struct MultiplyOptions {
  // Operands shorter than this (in stored terms) use schoolbook convolution.
  std::size_t fast_threshold = 64;
};

// Plain O(n*m) convolution. Always available; the fast paths must agree with
// it exactly on exact coefficient types.
template <class T>
LaurentPoly<T> multiply_schoolbook(const LaurentPoly<T>& a,
                                   const LaurentPoly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeff_is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return LaurentPoly<T>(a.low() + b.low(), std::move(out));
}

namespace detail {

// Exact integer convolution of coefficient sequences by number-theoretic
// transforms modulo several primes followed by CRT recombination. Falls back
// to schoolbook when the coefficient bound exceeds the available primes.
std::vector<BigInt> convolve_multimodular(const std::vector<BigInt>& a,
                                          const std::vector<BigInt>& b);

std::vector<Rational> convolve_rational(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b);

}  // namespace detail

template <class T>
LaurentPoly<T> multiply(const LaurentPoly<T>& a, const LaurentPoly<T>& b,
                        const MultiplyOptions& options = {}) {
  if (a.is_zero() || b.is_zero()) return {};
  const bool fast = std::min(a.size(), b.size()) >= options.fast_threshold;
  if constexpr (std::is_same_v<T, BigInt>) {
    if (fast)
      return IntPoly(a.low() + b.low(),
                     detail::convolve_multimodular(a.coeffs(), b.coeffs()));
  } else if constexpr (std::is_same_v<T, Rational>) {
    if (fast)
      return RationalPoly(a.low() + b.low(),
                          detail::convolve_rational(a.coeffs(), b.coeffs()));
  }
  return multiply_schoolbook(a, b);
}

// z -> 1/z.
template <class T>
LaurentPoly<T> reverse(const LaurentPoly<T>& a) {
  if (a.is_zero()) return a;
  std::vector<T> out(a.coeffs().rbegin(), a.coeffs().rend());
  return LaurentPoly<T>(-a.high(), std::move(out));
}

// z -> z^s for s >= 1.
template <class T>
LaurentPoly<T> substitute_power(const LaurentPoly<T>& a, std::int64_t s) {
  if (s <= 0)
    throw InvalidArgument("substitute_power: exponent must be positive, got " +
                          std::to_string(s));
  if (a.is_zero() || s == 1) return a;
  std::vector<T> out((a.size() - 1) * static_cast<std::size_t>(s) + 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i * static_cast<std::size_t>(s)] = a.coeffs()[i];
  return LaurentPoly<T>(a.low() * s, std::move(out));
}

namespace detail {
inline std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
}  // namespace detail

// Keeps the even exponents 2j, reindexed as j.
template <class T>
LaurentPoly<T> halve(const LaurentPoly<T>& a) {
  if (a.is_zero()) return a;
  const std::int64_t lo = detail::floor_div2(a.low() + 1);  // ceil(low/2)
  const std::int64_t hi = detail::floor_div2(a.high());
  if (hi < lo) return {};
  std::vector<T> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j)
    out[static_cast<std::size_t>(j - lo)] = a.coefficient(2 * j);
  return LaurentPoly<T>(lo, std::move(out));
}

// a^n by repeated squaring; a^0 = 1.
template <class T>
LaurentPoly<T> power(const LaurentPoly<T>& a, unsigned n,
                     const MultiplyOptions& options = {}) {
  LaurentPoly<T> result = LaurentPoly<T>::constant(T(1));
  LaurentPoly<T> base = a;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base, options);
    n >>= 1U;
    if (n > 0) base = multiply(base, base, options);
  }
  return result;
}

std::string to_string(const BigInt& c);
std::string to_string(const Rational& c);
std::string to_string(const Complex& c);

// Human-readable form such as "2*z^-1 + 1 - z^3".
template <class T>
std::string to_string(const LaurentPoly<T>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeff_is_zero(a.coeffs()[i])) continue;
    if (!out.empty()) out += " + ";
    const std::int64_t e = a.low() + static_cast<std::int64_t>(i);
    out += "(" + to_string(a.coeffs()[i]) + ")";
    if (e != 0) out += "*z^" + std::to_string(e);
  }
  return out;
}

// Runtime-tagged polynomial for callers (the C API) that cannot carry the
// coefficient type statically.
enum class CoeffKind { kBigInt = 0, kRational = 1, kComplex = 2 };

using AnyPoly = std::variant<IntPoly, RationalPoly, ComplexPoly>;

CoeffKind kind_of(const AnyPoly& p);
const char* coeff_kind_name(CoeffKind kind);

// Throws VariantMismatch when the operands carry different coefficient kinds.
AnyPoly multiply(const AnyPoly& a, const AnyPoly& b,
                 const MultiplyOptions& options = {});
AnyPoly reverse(const AnyPoly& a);
AnyPoly substitute_power(const AnyPoly& a, std::int64_t s);
AnyPoly halve(const AnyPoly& a);

}  // namespace lacunary
