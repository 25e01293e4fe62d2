#include "lacunary/rudin_shapiro.hpp"

#include <cmath>
#include <numbers>

namespace lacunary {

namespace {

IntPoly to_poly(const std::vector<std::int8_t>& c) {
  std::vector<BigInt> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return IntPoly(0, std::move(out));
}

BigInt pow2(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

IntPoly RudinShapiroPair::p_poly() const { return to_poly(p); }
IntPoly RudinShapiroPair::q_poly() const { return to_poly(q); }

RudinShapiroPair generate(unsigned k, unsigned max_depth) {
  if (k > max_depth)
    throw ResourceLimit("generate: depth " + std::to_string(k) +
                        " exceeds maximum " + std::to_string(max_depth));
  RudinShapiroPair pair;
  pair.k = k;
  pair.p.reserve(std::size_t{1} << k);
  pair.q.reserve(std::size_t{1} << k);
  pair.p.push_back(1);
  pair.q.push_back(1);
  for (unsigned j = 0; j < k; ++j) {
    const std::size_t half = pair.p.size();
    std::vector<std::int8_t> p_next(2 * half), q_next(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      p_next[i] = pair.p[i];
      p_next[half + i] = pair.q[i];
      q_next[i] = pair.p[i];
      q_next[half + i] = static_cast<std::int8_t>(-pair.q[i]);
    }
    pair.p = std::move(p_next);
    pair.q = std::move(q_next);
  }
  return pair;
}

BigInt evaluate_at_one(const std::vector<std::int8_t>& coeffs) {
  long acc = 0;
  for (auto c : coeffs) acc += c;
  return BigInt(acc);
}

BigInt evaluate_at_minus_one(const std::vector<std::int8_t>& coeffs) {
  long acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc += (i % 2 == 0) ? coeffs[i] : -coeffs[i];
  return BigInt(acc);
}

ParsevalCheck parseval_identity_check(unsigned k) {
  const RudinShapiroPair pair = generate(k);
  const IntPoly p = pair.p_poly();
  const IntPoly q = pair.q_poly();
  const IntPoly sum = multiply(p, reverse(p)) + multiply(q, reverse(q));
  ParsevalCheck out;
  out.residual = sum - IntPoly::constant(pow2(k + 1));
  out.holds = out.residual.is_zero();
  return out;
}

AltRecursionCheck alt_recursion_check(unsigned k) {
  const IntPoly p0 = generate(k).p_poly();
  const IntPoly p1 = generate(k + 1).p_poly();
  const IntPoly p2 = generate(k + 2).p_poly();
  const auto shift = static_cast<std::int64_t>(std::int64_t{1} << (k + 1));
  const IntPoly one_minus =
      IntPoly(0, {BigInt(1)}) - IntPoly::monomial(BigInt(1), shift);
  const IntPoly rhs =
      multiply(one_minus, p1) + p0.scaled(BigInt(2)).shifted(shift);

  AltRecursionCheck out;
  out.recursion_holds = (rhs == p2);
  out.odd_values_vanish = true;
  for (unsigned j = 1; j <= k + 2; j += 2)
    if (evaluate_at_minus_one(generate(j).p) != 0) out.odd_values_vanish = false;
  return out;
}

double ExactMoment::to_double() const {
  const double r = rational.get_d();
  return inv_sqrt2 ? r / std::numbers::sqrt2 : r;
}

std::string ExactMoment::to_string() const {
  std::string s = rational.get_str();
  if (inv_sqrt2) s += "*2^(-1/2)";
  return s;
}

namespace {

void check_budget(std::size_t terms, std::size_t budget) {
  if (terms > budget)
    throw ResourceLimit("moment: product of " + std::to_string(terms) +
                        " terms exceeds budget " + std::to_string(budget));
}

}  // namespace

ExactMoment exact_even_moment(unsigned k, unsigned n, std::size_t budget) {
  ExactMoment out;
  out.k = k;
  out.n = n;
  out.m = n;
  if (k >= 40) throw ResourceLimit("moment: depth too large");
  const std::size_t width = (std::size_t{1} << (k + 1)) - 1;
  check_budget(static_cast<std::size_t>(n) * width, budget);
  const IntPoly p = generate(k).p_poly();
  const IntPoly autocorrelation = multiply(p, reverse(p));
  out.constant_term = power(autocorrelation, n).constant_term();
  out.rational = Rational(out.constant_term, pow2(n * (k + 1)));
  out.rational.canonicalize();
  return out;
}

ExactMoment exact_mixed_moment(unsigned k, unsigned n, unsigned m,
                               std::size_t budget) {
  ExactMoment out;
  out.k = k;
  out.n = n;
  out.m = m;
  if (k >= 40) throw ResourceLimit("moment: depth too large");
  const std::size_t degree = (std::size_t{1} << k) - 1;
  check_budget(static_cast<std::size_t>(n + m) * degree + 1, budget);
  const IntPoly p = generate(k).p_poly();
  const IntPoly prod = multiply(power(reverse(p), n), power(p, m));
  out.constant_term = prod.constant_term();
  const unsigned total = (n + m) * (k + 1);
  out.inv_sqrt2 = (total % 2) == 1;
  out.rational = Rational(out.constant_term, pow2(total / 2));
  out.rational.canonicalize();
  return out;
}

}  // namespace lacunary
