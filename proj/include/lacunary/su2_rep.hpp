#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lacunary/laurent_poly.hpp"

namespace lacunary {

using CMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

// A semi-integer stored as twice its value: representation labels l and the
// indices m, n in {-l, -l+1, ..., l}.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int doubled) : doubled_(doubled) {}

  constexpr int doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  double value() const { return doubled_ / 2.0; }
  std::string to_string() const;

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

 private:
  int doubled_ = 0;
};

// (2l+1) x (2l+1) representation matrix; row r holds index m = -l + r and
// column c holds n = -l + c.
struct RepMatrix {
  HalfInteger ell;
  CMatrix entries;

  int size() const { return ell.doubled() + 1; }
  // Position of the index whose doubled value is `two_m`.
  int position(int two_m) const { return (two_m + ell.doubled()) / 2; }
  Complex at(int two_m, int two_n) const {
    return entries(position(two_m), position(two_n));
  }
};

// g(z) = (1/sqrt 2) [[i/z, i z], [i/z, -i z]].
Mat2 g_matrix(Complex z);
// G(w) = (1/sqrt 2) [[1, w], [1, -w]].
Mat2 big_g_matrix(Complex w);

// The matrix t^l(g(1)), assembled from exact integer coefficients of
// (z+1)^{l-n} (z-1)^{l+n}. Throws InvalidArgument for two_ell < 1.
RepMatrix tau_matrix(int two_ell);

// Coefficient formula applied to an arbitrary 2x2 matrix [[a, b], [c, d]]:
// entry (m, n) is sqrt((l-m)!(l+m)!/((l-n)!(l+n)!)) times the coefficient of
// z^{l-m} in (a z + c)^{l-n} (b z + d)^{l+n}. Multiplicative on GL(2).
RepMatrix symmetric_power(int two_ell, const Mat2& m);

// symmetric_power restricted to SU(2); throws InvalidArgument when
// ||g^H g - I||_max > 1e-10.
RepMatrix rep_matrix(int two_ell, const Mat2& g);

// t^l(g(w)) = tau^l diag(w^{2n}); throws unless |w| = 1 to 1e-12.
RepMatrix rep_of_g_omega(int two_ell, Complex omega);

double unitarity_residual(const CMatrix& m);
double min_singular_value(const CMatrix& m);

// One of the four constrained systems tau beta = gamma: beta supported on the
// negative (or positive) indices, gamma vanishing on odd (or even) positions.
struct PatternMargin {
  std::string label;
  std::vector<int> rows;     // positions where gamma must vanish
  std::vector<int> columns;  // support of beta
  double min_singular_value = 0.0;
};

struct PropertyReport {
  HalfInteger ell;
  double tau_min_singular_value = 0.0;
  std::optional<double> abs_tau_center;  // |tau_{0,0}|, integer l only
  double abs_tau_low_corner = 0.0;       // |tau_{-l,-l}|
  double abs_tau_high_corner = 0.0;      // |tau_{l,l}|
  std::array<PatternMargin, 4> patterns;

  bool passes(double corner_margin = 1e-6, double kernel_margin = 1e-8) const;
};

PropertyReport verify_propositions(int two_ell);
PropertyReport verify_propositions(const RepMatrix& tau);

}  // namespace lacunary
