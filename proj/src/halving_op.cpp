#include "lacunary/halving_op.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace lacunary {

namespace {

bool parity_matches(int two_ell, int lambda) {
  return ((lambda + two_ell) % 2 + 2) % 2 == 0;
}

}  // namespace

int HalvingOperator::position(int two_h, std::int64_t exponent) const {
  const int two_ell = ell_.doubled();
  if (two_h < -two_ell || two_h > two_ell || (two_h + two_ell) % 2 != 0)
    return -1;
  if (exponent < exp_low_ || exponent > exp_high_) return -1;
  const auto width = exp_high_ - exp_low_ + 1;
  return static_cast<int>(((two_h + two_ell) / 2) * width + (exponent - exp_low_));
}

HalvingOperator assemble_halving(int two_ell, int lambda, bool twisted) {
  const RepMatrix tau = tau_matrix(two_ell);
  HalvingOperator op;
  op.ell_ = HalfInteger(two_ell);
  if (twisted) op.lambda_ = lambda;
  // Exponents lambda/2 - l + 1, ..., lambda/2 + l - 1.
  op.exp_low_ = (lambda - two_ell) / 2 + 1;
  op.exp_high_ = (lambda + two_ell) / 2 - 1;
  const int rows = two_ell + 1;
  const auto width = op.exp_high_ - op.exp_low_ + 1;
  const int dim = static_cast<int>(rows * width);
  op.index_map_.reserve(static_cast<std::size_t>(dim));
  for (int r = 0; r < rows; ++r)
    for (auto j = op.exp_low_; j <= op.exp_high_; ++j)
      op.index_map_.push_back({2 * r - two_ell, j});

  op.matrix_ = CMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const auto [two_h, j] = op.index_map_[static_cast<std::size_t>(col)];
    // s = lambda/2 + h + j is an integer because lambda + 2h is even.
    const std::int64_t s = (lambda + two_h) / 2 + j;
    if (s % 2 != 0) continue;
    const std::int64_t target = s / 2;
    const int h_pos = tau.position(two_h);
    for (int m_pos = 0; m_pos < rows; ++m_pos) {
      const int row = op.position(2 * m_pos - two_ell, target);
      if (row < 0)
        throw NumericalFailure("halving operator: image leaves the span");
      op.matrix_(row, col) = tau.entries(m_pos, h_pos);
    }
  }
  return op;
}

HalvingOperator build_S(int two_ell) {
  if (two_ell < 2 || two_ell % 2 != 0)
    throw InvalidArgument(
        "build_S: l must be a positive integer (2l even and >= 2), got 2l=" +
        std::to_string(two_ell));
  return assemble_halving(two_ell, 0, false);
}

HalvingOperator build_S_lambda(int two_ell, int lambda) {
  if (two_ell < 1)
    throw InvalidArgument("build_S_lambda: 2l must be >= 1");
  if (!parity_matches(two_ell, lambda))
    throw InvalidArgument(
        "build_S_lambda: lambda and 2l must have equal parity; the moment is "
        "identically zero (see independence_moment)");
  if (!(lambda - two_ell < 0 && lambda + two_ell > 0))
    throw InvalidArgument(
        "build_S_lambda: 0 is not interior to [lambda/2 - l, lambda/2 + l]; use "
        "independence_moment for the closed forms");
  return assemble_halving(two_ell, lambda, true);
}

SpectrumReport spectral_radius(const HalvingOperator& op) {
  SpectrumReport report;
  if (op.dim() == 0) return report;
  Eigen::ComplexEigenSolver<CMatrix> solver(op.matrix(), false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("spectral_radius: eigensolver did not converge (dim " +
                           std::to_string(op.dim()) + ")");
  const auto& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::stable_sort(report.eigenvalues.begin(), report.eigenvalues.end(),
                   [](const Complex& a, const Complex& b) {
                     if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
                     if (a.real() != b.real()) return a.real() > b.real();
                     return a.imag() > b.imag();
                   });
  report.spectral_radius = std::abs(report.eigenvalues.front());
  report.margin = 1.0 - report.spectral_radius;
  return report;
}

MomentCase classify(int two_ell, int lambda) {
  if (!parity_matches(two_ell, lambda)) return MomentCase::kParityZero;
  const int lower = lambda - two_ell;  // 2 (lambda/2 - l)
  const int upper = lambda + two_ell;
  if (lower > 0 || upper < 0) return MomentCase::kOutsideZero;
  if (lower == 0) return MomentCase::kLowerBoundary;
  if (upper == 0) return MomentCase::kUpperBoundary;
  return MomentCase::kInterior;
}

const char* moment_case_name(MomentCase c) {
  switch (c) {
    case MomentCase::kParityZero: return "parity_zero";
    case MomentCase::kOutsideZero: return "outside_zero";
    case MomentCase::kLowerBoundary: return "lower_boundary";
    case MomentCase::kUpperBoundary: return "upper_boundary";
    case MomentCase::kInterior: return "interior";
  }
  return "unknown";
}

namespace {

// Column n: constant coefficients of op^{k+1} applied to e_n at exponent 0.
CMatrix constant_projection(const HalvingOperator& op, unsigned k) {
  const int two_ell = op.ell().doubled();
  const int size = two_ell + 1;
  CMatrix out = CMatrix::Zero(size, size);
  for (int n = 0; n < size; ++n) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(op.dim());
    v(op.position(2 * n - two_ell, 0)) = 1.0;
    for (unsigned step = 0; step <= k; ++step) v = op.matrix() * v;
    for (int m = 0; m < size; ++m) out(m, n) = v(op.position(2 * m - two_ell, 0));
  }
  return out;
}

Complex int_power(Complex c, unsigned k) {
  Complex out(1.0, 0.0);
  for (unsigned i = 0; i < k; ++i) out *= c;
  return out;
}

}  // namespace

CMatrix expected_rep(int two_ell, unsigned k) {
  if (two_ell < 1) throw InvalidArgument("expected_rep: 2l must be >= 1");
  if (two_ell % 2 != 0) return CMatrix::Zero(two_ell + 1, two_ell + 1);
  return constant_projection(build_S(two_ell), k);
}

CMatrix independence_moment(int two_ell, int lambda, unsigned k) {
  if (two_ell < 1) throw InvalidArgument("independence_moment: 2l must be >= 1");
  const int size = two_ell + 1;
  CMatrix out = CMatrix::Zero(size, size);
  switch (classify(two_ell, lambda)) {
    case MomentCase::kParityZero:
    case MomentCase::kOutsideZero:
      return out;
    case MomentCase::kLowerBoundary: {
      const RepMatrix tau = tau_matrix(two_ell);
      out.col(0) = tau.entries.col(0) * int_power(tau.entries(0, 0), k);
      return out;
    }
    case MomentCase::kUpperBoundary: {
      const RepMatrix tau = tau_matrix(two_ell);
      out.col(size - 1) = tau.entries.col(size - 1) *
                          int_power(tau.entries(size - 1, size - 1), k);
      return out;
    }
    case MomentCase::kInterior:
      return constant_projection(assemble_halving(two_ell, lambda, true), k);
  }
  return out;
}

CrossCheck cross_check_symbolic(int two_ell, int lambda, unsigned k,
                                std::size_t budget) {
  if (two_ell < 1) throw InvalidArgument("cross_check_symbolic: 2l must be >= 1");
  if (k > 30) throw ResourceLimit("cross_check_symbolic: k too large");
  const int size = two_ell + 1;
  const std::int64_t span_factor = (std::int64_t{1} << (k + 1)) - 1;
  const std::int64_t radius =
      span_factor * (static_cast<std::int64_t>(two_ell) + std::abs(lambda));
  const auto terms = static_cast<std::size_t>(size) * static_cast<std::size_t>(size) *
                     static_cast<std::size_t>(2 * radius + 1);
  if (terms > budget)
    throw ResourceLimit("cross_check_symbolic: " + std::to_string(terms) +
                        " terms exceed budget " + std::to_string(budget));

  const RepMatrix tau = tau_matrix(two_ell);
  using PolyMatrix = std::vector<ComplexPoly>;  // row-major size x size
  auto factor_exponent = [&](unsigned j, int col) {
    const std::int64_t two_n = 2 * col - two_ell;
    return (static_cast<std::int64_t>(lambda) + two_n) * (std::int64_t{1} << j);
  };

  PolyMatrix product(static_cast<std::size_t>(size * size));
  for (int m = 0; m < size; ++m)
    for (int n = 0; n < size; ++n)
      product[m * size + n] =
          ComplexPoly::monomial(tau.entries(m, n), factor_exponent(0, n));
  for (unsigned j = 1; j <= k; ++j) {
    PolyMatrix next(product.size());
    for (int m = 0; m < size; ++m) {
      for (int n = 0; n < size; ++n) {
        ComplexPoly acc;
        for (int h = 0; h < size; ++h) {
          const ComplexPoly& entry = product[h * size + n];
          if (entry.is_zero() || tau.entries(m, h) == Complex(0.0, 0.0)) continue;
          acc = acc + entry.scaled(tau.entries(m, h)).shifted(factor_exponent(j, h));
        }
        next[m * size + n] = std::move(acc);
      }
    }
    product = std::move(next);
  }

  CrossCheck out;
  const CMatrix reference = independence_moment(two_ell, lambda, k);
  CMatrix constant(size, size);
  out.min_exponent = INT64_MAX;
  out.max_exponent = INT64_MIN;
  for (int m = 0; m < size; ++m) {
    for (int n = 0; n < size; ++n) {
      const ComplexPoly& p = product[m * size + n];
      constant(m, n) = p.constant_term();
      out.max_residual =
          std::max(out.max_residual, std::abs(constant(m, n) - reference(m, n)));
      if (!p.is_zero()) {
        out.min_exponent = std::min(out.min_exponent, p.low());
        out.max_exponent = std::max(out.max_exponent, p.high());
      }
    }
  }
  const std::int64_t centre = static_cast<std::int64_t>(lambda) * span_factor;
  const std::int64_t half_width = static_cast<std::int64_t>(two_ell) * span_factor;
  out.support_ok = out.min_exponent >= centre - half_width &&
                   out.max_exponent <= centre + half_width;
  if (lambda == 0 && two_ell % 2 == 0) {
    out.expected_rep_residual =
        (constant - expected_rep(two_ell, k)).cwiseAbs().maxCoeff();
  }
  return out;
}

}  // namespace lacunary
