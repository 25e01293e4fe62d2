#include "lacunary/su2_rep.hpp"

#include <cmath>
#include <numbers>

#include "lacunary/circle_point.hpp"

namespace lacunary {

std::complex<double> CirclePoint::value() const {
  // Top two bits pick the quadrant; the rest is an angle in [0, pi/2).
  const auto top = static_cast<std::uint64_t>(phase_ >> 64U);
  const unsigned quadrant = static_cast<unsigned>(top >> 62U);
  const double frac =
      static_cast<double>(top & ((std::uint64_t{1} << 62U) - 1)) * 0x1p-62;
  const double a = 0.5 * std::numbers::pi * frac;
  const double c = std::cos(a);
  const double s = std::sin(a);
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

Mat2 g_matrix(Complex z) {
  const Complex i(0.0, 1.0);
  const Complex zinv = 1.0 / z;
  Mat2 g;
  g << i * zinv, i * z, i * zinv, -i * z;
  return g / std::numbers::sqrt2;
}

Mat2 big_g_matrix(Complex w) {
  Mat2 g;
  g << 1.0, w, 1.0, -w;
  return g / std::numbers::sqrt2;
}

namespace {

void check_two_ell(int two_ell) {
  if (two_ell < 1)
    throw InvalidArgument("representation label 2l must be >= 1, got " +
                          std::to_string(two_ell));
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// sqrt((L-r)! r! / ((L-c)! c!)) with L = 2l, r and c positions.
double factorial_ratio_sqrt(int two_ell, int r, int c) {
  Rational ratio(factorial(two_ell - r) * factorial(r),
                 factorial(two_ell - c) * factorial(c));
  ratio.canonicalize();
  return std::sqrt(ratio.get_d());
}

Complex i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Complex int_power(Complex w, int e) {
  Complex base = e < 0 ? 1.0 / w : w;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  Complex out(1.0, 0.0);
  while (n > 0) {
    if (n & 1U) out *= base;
    base *= base;
    n >>= 1U;
  }
  return out;
}

}  // namespace

RepMatrix tau_matrix(int two_ell) {
  check_two_ell(two_ell);
  const int dim = two_ell + 1;
  const IntPoly z_plus_1(0, {BigInt(1), BigInt(1)});
  const IntPoly z_minus_1(0, {BigInt(-1), BigInt(1)});
  // i^{2l} / 2^l
  const double scale_mag = std::ldexp(1.0, -(two_ell / 2)) /
                           (two_ell % 2 != 0 ? std::numbers::sqrt2 : 1.0);
  const Complex scale = i_power(two_ell) * scale_mag;

  RepMatrix out{HalfInteger(two_ell), CMatrix::Zero(dim, dim)};
  for (int c = 0; c < dim; ++c) {
    // (z+1)^{l-n} (z-1)^{l+n} with l-n = 2l - c, l+n = c.
    const IntPoly f =
        multiply(power(z_plus_1, static_cast<unsigned>(two_ell - c)),
                 power(z_minus_1, static_cast<unsigned>(c)));
    for (int r = 0; r < dim; ++r) {
      // coefficient of z^{l-m} = z^{2l - r}
      const BigInt coeff = f.coefficient(two_ell - r);
      if (coeff == 0) continue;
      out.entries(r, c) =
          scale * (coeff.get_d() * factorial_ratio_sqrt(two_ell, r, c));
    }
  }
  return out;
}

RepMatrix symmetric_power(int two_ell, const Mat2& m) {
  check_two_ell(two_ell);
  const int dim = two_ell + 1;
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);

  std::vector<double> fact(static_cast<std::size_t>(dim) + 1, 1.0);
  for (int i = 1; i <= dim; ++i) fact[i] = fact[i - 1] * i;
  auto binom = [&](int n, int k) { return fact[n] / (fact[k] * fact[n - k]); };
  // (x z + y)^p coefficients in z.
  auto expand = [&](Complex x, Complex y, int p) {
    std::vector<Complex> xp(p + 1), yp(p + 1), out(p + 1);
    xp[0] = yp[0] = 1.0;
    for (int i = 1; i <= p; ++i) {
      xp[i] = xp[i - 1] * x;
      yp[i] = yp[i - 1] * y;
    }
    for (int i = 0; i <= p; ++i) out[i] = binom(p, i) * xp[i] * yp[p - i];
    return out;
  };

  RepMatrix out{HalfInteger(two_ell), CMatrix::Zero(dim, dim)};
  for (int col = 0; col < dim; ++col) {
    const auto left = expand(a, c, two_ell - col);
    const auto right = expand(b, d, col);
    std::vector<Complex> prod(static_cast<std::size_t>(dim), 0.0);
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        prod[i + j] += left[i] * right[j];
    for (int row = 0; row < dim; ++row) {
      const double pref =
          std::sqrt(fact[two_ell - row] * fact[row] /
                    (fact[two_ell - col] * fact[col]));
      out.entries(row, col) = pref * prod[two_ell - row];
    }
  }
  return out;
}

RepMatrix rep_matrix(int two_ell, const Mat2& g) {
  check_two_ell(two_ell);
  const double defect =
      (g.adjoint() * g - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-10))
    throw InvalidArgument("rep_matrix: input is not unitary (defect " +
                          std::to_string(defect) + ")");
  return symmetric_power(two_ell, g);
}

RepMatrix rep_of_g_omega(int two_ell, Complex omega) {
  check_two_ell(two_ell);
  if (!(std::abs(std::abs(omega) - 1.0) <= 1e-12))
    throw InvalidArgument("rep_of_g_omega: point is not on the unit circle");
  RepMatrix out = tau_matrix(two_ell);
  for (int c = 0; c <= two_ell; ++c)
    out.entries.col(c) *= int_power(omega, 2 * c - two_ell);
  return out;
}

double unitarity_residual(const CMatrix& m) {
  return (m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double min_singular_value(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (m.rows() < m.cols()) return 0.0;  // nontrivial kernel
  return sv(sv.size() - 1);
}

bool PropertyReport::passes(double corner_margin,
                               double kernel_margin) const {
  if (!(tau_min_singular_value >= 1.0 - 1e-9)) return false;
  if (abs_tau_center && !(*abs_tau_center <= 1.0 - corner_margin)) return false;
  if (!(abs_tau_low_corner <= 1.0 - corner_margin)) return false;
  if (!(abs_tau_high_corner <= 1.0 - corner_margin)) return false;
  for (const auto& p : patterns)
    if (!(p.min_singular_value > kernel_margin)) return false;
  return true;
}

PropertyReport verify_propositions(int two_ell) {
  return verify_propositions(tau_matrix(two_ell));
}

PropertyReport verify_propositions(const RepMatrix& tau) {
  const int two_ell = tau.ell.doubled();
  const int dim = two_ell + 1;
  PropertyReport out;
  out.ell = tau.ell;
  out.tau_min_singular_value = min_singular_value(tau.entries);
  if (tau.ell.is_integer()) out.abs_tau_center = std::abs(tau.at(0, 0));
  out.abs_tau_low_corner = std::abs(tau.entries(0, 0));
  out.abs_tau_high_corner = std::abs(tau.entries(dim - 1, dim - 1));

  std::vector<int> negative, positive, odd_rows, even_rows;
  for (int p = 0; p < dim; ++p) {
    const int two_index = 2 * p - two_ell;
    if (two_index < 0) negative.push_back(p);
    if (two_index > 0) positive.push_back(p);
    (p % 2 == 0 ? even_rows : odd_rows).push_back(p);
  }
  struct Spec {
    const char* label;
    const std::vector<int>* cols;
    const std::vector<int>* rows;
  };
  const std::array<Spec, 4> specs = {{
      {"negative_support/odd_zero", &negative, &odd_rows},
      {"negative_support/even_zero", &negative, &even_rows},
      {"positive_support/odd_zero", &positive, &odd_rows},
      {"positive_support/even_zero", &positive, &even_rows},
  }};
  for (std::size_t s = 0; s < specs.size(); ++s) {
    PatternMargin pm;
    pm.label = specs[s].label;
    pm.rows = *specs[s].rows;
    pm.columns = *specs[s].cols;
    CMatrix sub(static_cast<Eigen::Index>(pm.rows.size()),
                static_cast<Eigen::Index>(pm.columns.size()));
    for (std::size_t i = 0; i < pm.rows.size(); ++i)
      for (std::size_t j = 0; j < pm.columns.size(); ++j)
        sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            tau.entries(pm.rows[i], pm.columns[j]);
    pm.min_singular_value = min_singular_value(sub);
    out.patterns[s] = std::move(pm);
  }
  return out;
}

}  // namespace lacunary
