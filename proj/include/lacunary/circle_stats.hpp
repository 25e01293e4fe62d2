#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lacunary/laurent_poly.hpp"
#include "lacunary/rudin_shapiro.hpp"

namespace lacunary {

inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 22;

enum class Which { kP, kQ };

// Values of P_k (or Q_k) at the N-th roots of unity exp(2 pi i j / N).
struct EvaluationGrid {
  unsigned k = 0;
  std::size_t n = 0;
  std::vector<Complex> values;
};

// Throws InvalidArgument unless N is a power of two with 2^k <= N <= 2^22.
EvaluationGrid eval_at_roots(const RudinShapiroPair& pair, std::size_t n,
                             Which which = Which::kP);

struct HistogramBin {
  double low = 0.0;
  double high = 0.0;
  double mass = 0.0;
};

// Sup distance between the empirical CDF of `samples` and the uniform CDF on
// [0, 1]. Sorts a copy.
double ks_uniform(std::vector<double> samples);

// Area of [x0, x1] x [y0, y1] intersected with the closed unit disc.
double disc_rect_area(double x0, double x1, double y0, double y1);

struct DistributionReport {
  unsigned k = 0;
  std::size_t n = 0;
  double min_modulus = 0.0;
  double max_modulus = 0.0;

  // Normalized squared modulus |P_k / sqrt(2^{k+1})|^2 against U[0, 1].
  double ks_statistic = 0.0;
  std::vector<HistogramBin> bins;

  // Normalized values over a grid_size x grid_size partition of [-1, 1]^2.
  // Row-major, row index along the imaginary axis (bottom row first).
  std::size_t grid_size = 0;
  std::vector<double> cell_frequency;
  std::vector<double> cell_expected;  // area(cell and disc) / pi
  double max_cell_deviation = 0.0;
  double in_disc_frequency = 0.0;
};

DistributionReport saffari_report(unsigned k, std::size_t n, std::size_t bins);
DistributionReport montgomery_report(unsigned k, std::size_t n,
                                     std::size_t grid_size);

struct MinModulus {
  double value = 0.0;  // min_j |P_k(w_j)| / sqrt(2^{k+1})
  std::size_t index = 0;
  Complex point;
};

MinModulus min_modulus_report(unsigned k, std::size_t n);

struct LinkCheck {
  double max_residual = 0.0;
  // Same comparison with z^{+(2^{k+1}-1)} and P_k(z^2); nonzero for every k.
  double literal_form_residual = 0.0;
  // max | |g-product e1| - 1 |
  double max_norm_defect = 0.0;
};

// Compares both sides of
//   i^{k+1} z^{-(2^{k+1}-1)} (P_k(z^4), Q_k(z^4)) / sqrt(2^{k+1})
//     = g(z^{2^k}) ... g(z) (1, 0)^T
// at pseudo-random points of the unit circle. Each factor is
// g(z^{2^j}) = i z^{-2^j} [[1, z^{2^{j+1}}], [1, -z^{2^{j+1}}]] / sqrt 2, which
// fixes the exponent sign and the argument z^4.
LinkCheck link_check(unsigned k, std::size_t sample_count, std::uint64_t seed);

}  // namespace lacunary
