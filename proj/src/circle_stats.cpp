#include "lacunary/circle_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fft.hpp"
#include "lacunary/circle_point.hpp"
#include "lacunary/su2_rep.hpp"

namespace lacunary {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void validate_grid(unsigned k, std::size_t n) {
  if (!is_power_of_two(n))
    throw InvalidArgument("N must be a power of two, got " + std::to_string(n));
  if (k > 22 || n < (std::size_t{1} << k))
    throw InvalidArgument("N must be at least 2^k");
  if (n > kMaxGridPoints)
    throw InvalidArgument("N must not exceed 2^22");
}

double norm_factor(unsigned k) { return std::ldexp(1.0, static_cast<int>(k) + 1); }

}  // namespace

EvaluationGrid eval_at_roots(const RudinShapiroPair& pair, std::size_t n,
                             Which which) {
  validate_grid(pair.k, n);
  const auto& coeffs = which == Which::kP ? pair.p : pair.q;
  EvaluationGrid grid;
  grid.k = pair.k;
  grid.n = n;
  grid.values.assign(n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    grid.values[i] = static_cast<double>(coeffs[i]);
  detail::fft_in_place(grid.values, +1);
  return grid;
}

double ks_uniform(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = std::clamp(samples[i], 0.0, 1.0);
    d = std::max(d, static_cast<double>(i + 1) / n - x);
    d = std::max(d, x - static_cast<double>(i) / n);
  }
  return std::min(d, 1.0);
}

double disc_rect_area(double x0, double x1, double y0, double y1) {
  const double lo = std::max(x0, -1.0);
  const double hi = std::min(x1, 1.0);
  if (!(lo < hi) || !(y0 < y1)) return 0.0;
  std::vector<double> cuts = {lo, hi};
  for (double y : {y0, y1}) {
    if (std::abs(y) < 1.0) {
      const double x = std::sqrt(1.0 - y * y);
      for (double c : {-x, x})
        if (c > lo && c < hi) cuts.push_back(c);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  auto circle = [](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); };
  // Antiderivative of sqrt(1 - x^2).
  auto integral = [&](double x) {
    return 0.5 * (x * circle(x) + std::asin(std::clamp(x, -1.0, 1.0)));
  };
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double u = cuts[i], v = cuts[i + 1];
    if (!(u < v)) continue;
    const double s = circle(0.5 * (u + v));
    const bool top_is_circle = s <= y1;
    const bool bottom_is_circle = -s >= y0;
    const double top = top_is_circle ? s : y1;
    const double bottom = bottom_is_circle ? -s : y0;
    if (top <= bottom) continue;
    const double arc = integral(v) - integral(u);
    area += (top_is_circle ? arc : y1 * (v - u)) -
            (bottom_is_circle ? -arc : y0 * (v - u));
  }
  return area;
}

namespace {

void fill_modulus_range(DistributionReport& report,
                        const std::vector<Complex>& values, double scale) {
  double lo = INFINITY, hi = 0.0;
  for (const auto& v : values) {
    const double r = std::abs(v) / scale;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  report.min_modulus = lo;
  report.max_modulus = hi;
}

}  // namespace

DistributionReport saffari_report(unsigned k, std::size_t n, std::size_t bins) {
  if (bins < 2) throw InvalidArgument("bins must be at least 2");
  const EvaluationGrid grid = eval_at_roots(generate(k), n);
  DistributionReport report;
  report.k = k;
  report.n = n;
  const double norm = norm_factor(k);
  fill_modulus_range(report, grid.values, std::sqrt(norm));

  std::vector<double> x(n);
  std::vector<std::size_t> counts(bins, 0);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = std::norm(grid.values[j]) / norm;
    const auto b = static_cast<std::size_t>(
        std::clamp(x[j], 0.0, 1.0) * static_cast<double>(bins));
    ++counts[std::min(b, bins - 1)];
  }
  report.bins.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    report.bins[b].low = static_cast<double>(b) / static_cast<double>(bins);
    report.bins[b].high = static_cast<double>(b + 1) / static_cast<double>(bins);
    report.bins[b].mass = static_cast<double>(counts[b]) / static_cast<double>(n);
  }
  report.ks_statistic = ks_uniform(std::move(x));
  return report;
}

DistributionReport montgomery_report(unsigned k, std::size_t n,
                                     std::size_t grid_size) {
  if (grid_size < 2) throw InvalidArgument("grid_size must be at least 2");
  const EvaluationGrid grid = eval_at_roots(generate(k), n);
  DistributionReport report;
  report.k = k;
  report.n = n;
  report.grid_size = grid_size;
  const double scale = std::sqrt(norm_factor(k));
  fill_modulus_range(report, grid.values, scale);

  const double g = static_cast<double>(grid_size);
  auto cell_of = [&](double t) {
    const auto c = static_cast<std::ptrdiff_t>(std::floor((t + 1.0) * 0.5 * g));
    return static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(c, 0, static_cast<std::ptrdiff_t>(grid_size) - 1));
  };
  std::vector<std::size_t> counts(grid_size * grid_size, 0);
  std::size_t in_disc = 0;
  for (const auto& v : grid.values) {
    const Complex z = v / scale;
    if (std::abs(z) <= 1.0 + 1e-6) ++in_disc;
    ++counts[cell_of(z.imag()) * grid_size + cell_of(z.real())];
  }
  report.in_disc_frequency = static_cast<double>(in_disc) / static_cast<double>(n);
  report.cell_frequency.resize(counts.size());
  report.cell_expected.resize(counts.size());
  for (std::size_t iy = 0; iy < grid_size; ++iy) {
    for (std::size_t ix = 0; ix < grid_size; ++ix) {
      const std::size_t idx = iy * grid_size + ix;
      const double x0 = -1.0 + 2.0 * static_cast<double>(ix) / g;
      const double y0 = -1.0 + 2.0 * static_cast<double>(iy) / g;
      report.cell_frequency[idx] =
          static_cast<double>(counts[idx]) / static_cast<double>(n);
      report.cell_expected[idx] =
          disc_rect_area(x0, x0 + 2.0 / g, y0, y0 + 2.0 / g) / std::numbers::pi;
      report.max_cell_deviation =
          std::max(report.max_cell_deviation,
                   std::abs(report.cell_frequency[idx] - report.cell_expected[idx]));
    }
  }
  return report;
}

MinModulus min_modulus_report(unsigned k, std::size_t n) {
  const EvaluationGrid grid = eval_at_roots(generate(k), n);
  const double scale = std::sqrt(norm_factor(k));
  MinModulus out;
  out.value = INFINITY;
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::abs(grid.values[j]) / scale;
    if (r < out.value) {
      out.value = r;
      out.index = j;
    }
  }
  out.point = detail::root_of_unity(out.index, n);
  return out;
}

LinkCheck link_check(unsigned k, std::size_t sample_count, std::uint64_t seed) {
  if (k > 12) throw InvalidArgument("link_check: k must be at most 12");
  const RudinShapiroPair pair = generate(k);
  const double scale = std::sqrt(norm_factor(k));
  const Complex i_pow = [&] {
    Complex v(1.0, 0.0);
    for (unsigned j = 0; j <= k; ++j) v *= Complex(0.0, 1.0);
    return v;
  }();
  std::mt19937_64 rng(seed);
  LinkCheck out;
  for (std::size_t s = 0; s < sample_count; ++s) {
    const CirclePoint z = CirclePoint::random(rng);
    const std::uint64_t span = (std::uint64_t{1} << (k + 1)) - 1;
    const auto side = [&](const CirclePoint& arg, const CirclePoint& phase) {
      const Complex w = arg.value();
      Complex p_val(0.0, 0.0), q_val(0.0, 0.0);
      for (std::size_t i = pair.p.size(); i-- > 0;) {
        p_val = p_val * w + static_cast<double>(pair.p[i]);
        q_val = q_val * w + static_cast<double>(pair.q[i]);
      }
      const Complex prefactor = i_pow * phase.value() / scale;
      return Eigen::Vector2cd(prefactor * p_val, prefactor * q_val);
    };
    const Eigen::Vector2cd lhs = side(z.pow(4), z.pow(span).inverse());
    const Eigen::Vector2cd literal = side(z.pow(2), z.pow(span));

    Eigen::Vector2cd rhs(1.0, 0.0);
    for (unsigned j = 0; j <= k; ++j) rhs = g_matrix(z.pow2(j).value()) * rhs;

    out.max_residual = std::max(out.max_residual, (lhs - rhs).norm());
    out.literal_form_residual =
        std::max(out.literal_form_residual, (literal - rhs).norm());
    out.max_norm_defect = std::max(out.max_norm_defect, std::abs(rhs.norm() - 1.0));
  }
  return out;
}

}  // namespace lacunary
