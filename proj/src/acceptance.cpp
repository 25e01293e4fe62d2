#include "lacunary/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "lacunary/circle_stats.hpp"
#include "lacunary/dyadic_walk.hpp"
#include "lacunary/error.hpp"
#include "lacunary/halving_op.hpp"
#include "lacunary/rudin_shapiro.hpp"
#include "lacunary/su2_rep.hpp"

namespace lacunary {

using nlohmann::json;

AcceptanceLevel parse_acceptance_level(const std::string& name) {
  if (name == "fast") return AcceptanceLevel::kFast;
  if (name == "full") return AcceptanceLevel::kFull;
  throw InvalidArgument("acceptance level must be 'fast' or 'full', got '" + name + "'");
}

namespace {

struct Budget {
  unsigned parseval_k;
  unsigned alt_k;
  unsigned odd_k;
  unsigned moment_one_k;
  int rep_two_ell;
  int hom_two_ell;
  int hom_pairs;
  int prop_two_ell;
  int spec_ell;
  int spec_twisted_two_ell;
  unsigned dp_k;
  int random_instances;
  unsigned ks_n_log2;
  unsigned link_k;
  std::size_t link_samples;
};

Budget budget_for(AcceptanceLevel level) {
  if (level == AcceptanceLevel::kFull)
    return {16, 14, 15, 16, 16, 8, 100, 16, 8, 9, 12, 50, 20, 12, 1000};
  return {12, 10, 11, 12, 10, 6, 30, 10, 5, 7, 8, 20, 18, 10, 200};
}

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  double v[4];
  double norm = 0.0;
  for (double& x : v) {
    x = gauss(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  const Complex a(v[0] / norm, v[1] / norm);
  const Complex b(v[2] / norm, v[3] / norm);
  Mat2 g;
  g << a, -std::conj(b), b, std::conj(a);
  return g;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Aperiodic autocorrelation route to the constant term of (P P*)^2.
BigInt autocorrelation_fourth_moment(const RudinShapiroPair& pair) {
  const auto len = static_cast<std::ptrdiff_t>(pair.p.size());
  BigInt sum = 0;
  for (std::ptrdiff_t shift = -(len - 1); shift < len; ++shift) {
    long c = 0;
    for (std::ptrdiff_t i = 0; i < len; ++i) {
      const std::ptrdiff_t j = i + shift;
      if (j >= 0 && j < len) c += pair.p[static_cast<std::size_t>(i)] * pair.p[static_cast<std::size_t>(j)];
    }
    sum += BigInt(c) * BigInt(c);
  }
  return sum;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

CriterionResult criterion_identities(const Budget& b) {
  CriterionResult r{1, "exact recursion and identities", true, json::object(), 0.0};
  json failures = json::array();
  for (unsigned k = 0; k <= b.parseval_k; ++k)
    if (!parseval_identity_check(k).holds) failures.push_back("parseval k=" + std::to_string(k));
  for (unsigned k = 0; k <= b.alt_k; ++k)
    if (!alt_recursion_check(k).holds()) failures.push_back("alt_recursion k=" + std::to_string(k));
  for (unsigned k = 1; k <= b.odd_k; k += 2)
    if (evaluate_at_minus_one(generate(k).p) != 0)
      failures.push_back("P(-1) k=" + std::to_string(k));
  r.passed = failures.empty();
  r.measured = {{"parseval_k_max", b.parseval_k},
                {"alt_recursion_k_max", b.alt_k},
                {"odd_k_max", b.odd_k},
                {"failures", failures}};
  return r;
}

CriterionResult criterion_moments(const Budget& b) {
  CriterionResult r{2, "even moments and convergence", true, json::object(), 0.0};
  bool ok = true;

  unsigned first_bad = 0;
  bool n1_ok = true;
  for (unsigned k = 0; k <= b.moment_one_k && n1_ok; ++k) {
    if (exact_even_moment(k, 1).rational != Rational(1, 2)) {
      n1_ok = false;
      first_bad = k;
    }
  }
  r.measured["n1_all_half"] = n1_ok;
  if (!n1_ok) r.measured["n1_first_failure_k"] = first_bad;
  ok = ok && n1_ok;

  const Rational expected[] = {Rational(BigInt(3)) / 8, Rational(BigInt(5)) / 16, Rational(BigInt(88)) / 256};
  json exact = json::array();
  for (unsigned k = 1; k <= 3; ++k) {
    const ExactMoment m = exact_even_moment(k, 2);
    const BigInt oracle = autocorrelation_fourth_moment(generate(k));
    const bool agree = m.constant_term == oracle && m.rational == expected[k - 1];
    ok = ok && agree;
    exact.push_back({{"k", k},
                     {"value", m.to_string()},
                     {"oracle_constant_term", oracle.get_str()},
                     {"expected", rational_string(expected[k - 1])},
                     {"match", agree}});
  }
  r.measured["n2_exact"] = exact;

  json conv = json::array();
  for (unsigned n = 2; n <= 4; ++n) {
    const Rational target(1, n + 1);
    Rational gaps[3];
    unsigned ks[3] = {4, 8, 12};
    json row = {{"n", n}};
    for (int i = 0; i < 3; ++i) {
      const Rational d = exact_even_moment(ks[i], n).rational - target;
      gaps[i] = abs(d);
      row["gap_k" + std::to_string(ks[i])] = gaps[i].get_d();
    }
    const bool monotone = gaps[2] < gaps[1] && gaps[1] < gaps[0];
    row["monotone"] = monotone;
    ok = ok && monotone;
    conv.push_back(row);
  }
  r.measured["convergence"] = conv;
  r.passed = ok;
  return r;
}

CriterionResult criterion_representation(const Budget& b, double perturbation) {
  CriterionResult r{3, "representation correctness", true, json::object(), 0.0};
  double worst_unitarity = 0.0;
  for (int two_ell = 1; two_ell <= b.rep_two_ell; ++two_ell) {
    RepMatrix tau = tau_matrix(two_ell);
    tau.entries(0, 0) += perturbation;
    worst_unitarity = std::max(worst_unitarity, unitarity_residual(tau.entries));
  }
  RepMatrix half = tau_matrix(1);
  half.entries(0, 0) += perturbation;
  const double half_residual = max_abs(half.entries - CMatrix(g_matrix(Complex(1.0, 0.0))));

  std::mt19937_64 rng(0x5eed0003ULL);
  double worst_hom = 0.0;
  for (int two_ell = 1; two_ell <= b.hom_two_ell; ++two_ell) {
    for (int i = 0; i < b.hom_pairs; ++i) {
      const Mat2 a = random_su2(rng);
      const Mat2 c = random_su2(rng);
      const CMatrix lhs = rep_matrix(two_ell, a * c).entries;
      const CMatrix rhs = rep_matrix(two_ell, a).entries * rep_matrix(two_ell, c).entries;
      worst_hom = std::max(worst_hom, max_abs(lhs - rhs));
    }
  }
  r.passed = worst_unitarity <= 1e-12 && half_residual <= 1e-14 && worst_hom <= 1e-9;
  r.measured = {{"two_ell_max", b.rep_two_ell},
                {"max_unitarity_residual", worst_unitarity},
                {"tau_half_vs_g1", half_residual},
                {"homomorphism_pairs_per_ell", b.hom_pairs},
                {"max_homomorphism_residual", worst_hom}};
  if (perturbation != 0.0) r.measured["tau_perturbation"] = perturbation;
  return r;
}

CriterionResult criterion_kernel_bounds(const Budget& b, double perturbation) {
  CriterionResult r{4, "kernel and corner bounds", true, json::object(), 0.0};
  json per = json::array();
  bool ok = true;
  for (int two_ell = 1; two_ell <= b.prop_two_ell; ++two_ell) {
    RepMatrix tau = tau_matrix(two_ell);
    tau.entries(0, 0) += perturbation;
    const PropertyReport rep = verify_propositions(tau);
    double worst_pattern = INFINITY;
    for (const auto& p : rep.patterns)
      worst_pattern = std::min(worst_pattern, p.min_singular_value);
    const bool pass = rep.passes();
    ok = ok && pass;
    json row = {{"two_ell", two_ell},
                {"tau_min_singular_value", rep.tau_min_singular_value},
                {"abs_tau_low_corner", rep.abs_tau_low_corner},
                {"abs_tau_high_corner", rep.abs_tau_high_corner},
                {"min_pattern_singular_value", worst_pattern},
                {"passes", pass}};
    if (rep.abs_tau_center) row["abs_tau_center"] = *rep.abs_tau_center;
    per.push_back(row);
  }
  r.passed = ok;
  r.measured = {{"per_ell", per}};
  return r;
}

CriterionResult criterion_spectra(const Budget& b) {
  CriterionResult r{5, "halving operator spectral radii", true, json::object(), 0.0};
  bool ok = true;
  double max_eigen = 0.0;

  const SpectrumReport s1 = spectral_radius(build_S(2));
  r.measured["rho_S1"] = s1.spectral_radius;
  ok = ok && s1.spectral_radius <= 1e-12;
  max_eigen = std::max(max_eigen, s1.spectral_radius);

  json plain = json::array();
  for (int ell = 2; ell <= b.spec_ell; ++ell) {
    const SpectrumReport s = spectral_radius(build_S(2 * ell));
    plain.push_back({{"ell", ell}, {"spectral_radius", s.spectral_radius}});
    ok = ok && s.spectral_radius <= 1 - 1e-6;
    max_eigen = std::max(max_eigen, s.spectral_radius);
  }
  r.measured["plain"] = plain;

  json twisted = json::array();
  double worst_twisted = 0.0;
  for (int two_ell = 1; two_ell <= b.spec_twisted_two_ell; ++two_ell) {
    for (int lambda = -(two_ell - 1); lambda <= two_ell - 1; ++lambda) {
      if ((lambda + two_ell) % 2 != 0) continue;
      if (classify(two_ell, lambda) != MomentCase::kInterior) continue;
      const SpectrumReport s = spectral_radius(build_S_lambda(two_ell, lambda));
      twisted.push_back({{"two_ell", two_ell}, {"lambda", lambda},
                         {"spectral_radius", s.spectral_radius}});
      worst_twisted = std::max(worst_twisted, s.spectral_radius);
      max_eigen = std::max(max_eigen, s.spectral_radius);
    }
  }
  ok = ok && worst_twisted <= 1 - 1e-6;
  ok = ok && max_eigen <= 1 + 1e-9;
  r.measured["twisted_max_spectral_radius"] = worst_twisted;
  r.measured["twisted"] = twisted;
  r.measured["max_eigenvalue_modulus"] = max_eigen;
  r.passed = ok;
  return r;
}

CriterionResult criterion_weyl(const Budget&) {
  CriterionResult r{6, "moment cross-check and boundary decay", true, json::object(), 0.0};
  double worst = 0.0;
  double worst_expected = 0.0;
  bool support = true;
  int cases = 0;
  for (int two_ell = 1; two_ell <= 4; ++two_ell) {
    for (int lambda = -3; lambda <= 3; ++lambda) {
      for (unsigned k = 0; k <= 3; ++k) {
        const CrossCheck c = cross_check_symbolic(two_ell, lambda, k);
        worst = std::max(worst, c.max_residual);
        if (c.expected_rep_residual)
          worst_expected = std::max(worst_expected, *c.expected_rep_residual);
        support = support && c.support_ok;
        ++cases;
      }
    }
  }
  double boundary_symbolic = 0.0;
  for (unsigned k = 0; k <= 8; ++k)
    boundary_symbolic = std::max(boundary_symbolic, cross_check_symbolic(1, 1, k).max_residual);
  double worst_ratio_error = 0.0;
  double prev = independence_moment(1, 1, 0).norm();
  for (unsigned k = 1; k <= 12; ++k) {
    const double cur = independence_moment(1, 1, k).norm();
    worst_ratio_error = std::max(worst_ratio_error, std::abs(cur / prev - std::sqrt(0.5)));
    prev = cur;
  }
  r.passed = worst <= 1e-10 && worst_expected <= 1e-10 && support &&
             boundary_symbolic <= 1e-10 && worst_ratio_error <= 1e-10;
  r.measured = {{"cases", cases},
                {"max_cross_check_residual", worst},
                {"max_expected_rep_residual", worst_expected},
                {"support_ok", support},
                {"boundary_symbolic_residual", boundary_symbolic},
                {"boundary_ratio_error", worst_ratio_error}};
  return r;
}

CriterionResult criterion_counterexample(const Budget& b) {
  CriterionResult r{7, "dyadic counterexample", true, json::object(), 0.0};
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const DyadicStepFunction f = DyadicStepFunction::paper_counterexample();
  bool ok = true;
  json values = json::array();
  for (unsigned k = 0; k <= b.dp_k; ++k) {
    const Rational p0 = exact_product_distribution(z2, f, k).masses[0];
    const Rational want = k == 0 ? Rational(1, 2) : Rational(5, 8);
    ok = ok && p0 == want;
    values.push_back(p0.get_str());
  }
  r.measured["p0_by_k"] = values;

  bool brute_ok = true;
  for (unsigned k = 0; k <= 6; ++k)
    brute_ok = brute_ok && exact_product_distribution(z2, f, k).masses ==
                               brute_force_distribution(z2, f, k).masses;

  std::mt19937_64 rng(0x5eed0007ULL);
  const char* groups[] = {"z2", "z3", "z4", "z5", "z6", "s3"};
  int random_ok = 0;
  for (int i = 0; i < b.random_instances; ++i) {
    const FiniteGroup g = FiniteGroup::preset(groups[rng() % 6]);
    DyadicStepFunction h;
    h.resolution = 1 + static_cast<int>(rng() % 4);
    h.table.resize(std::size_t{1} << h.resolution);
    for (int& v : h.table) v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
    const unsigned k = static_cast<unsigned>(rng() % 7);
    if (exact_product_distribution(g, h, k).masses == brute_force_distribution(g, h, k).masses)
      ++random_ok;
  }
  r.measured["dp_equals_brute_force_k_le_6"] = brute_ok;
  r.measured["random_instances"] = b.random_instances;
  r.measured["random_instances_matching"] = random_ok;
  r.passed = ok && brute_ok && random_ok == b.random_instances;
  return r;
}

CriterionResult criterion_equidistribution(const Budget& b) {
  CriterionResult r{8, "empirical equidistribution", true, json::object(), 0.0};
  const std::size_t n = std::size_t{1} << b.ks_n_log2;
  json ks = json::array();
  double prev = INFINITY;
  bool decreasing = true;
  for (unsigned k : {4U, 8U, 12U, 16U}) {
    const double v = saffari_report(k, n, 10).ks_statistic;
    ks.push_back({{"k", k}, {"ks_statistic", v}});
    decreasing = decreasing && v < prev;
    prev = v;
  }
  const double dev8 = montgomery_report(8, n, 8).max_cell_deviation;
  const double dev16 = montgomery_report(16, n, 8).max_cell_deviation;
  double link = 0.0;
  double literal = 0.0;
  for (unsigned k = 0; k <= b.link_k; ++k) {
    const LinkCheck c = link_check(k, b.link_samples, 0x5eed0008ULL + k);
    link = std::max(link, c.max_residual);
    literal = std::max(literal, c.literal_form_residual);
  }
  r.passed = decreasing && dev16 < dev8 && link <= 1e-10;
  r.measured = {{"n", n},
                {"ks", ks},
                {"ks_strictly_decreasing", decreasing},
                {"montgomery_grid_size", 8},
                {"max_cell_deviation_k8", dev8},
                {"max_cell_deviation_k16", dev16},
                {"link_k_max", b.link_k},
                {"link_samples", b.link_samples},
                {"max_link_residual", link},
                {"max_literal_form_residual", literal}};
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const CriterionCallback& on_result) {
  const Budget b = budget_for(options.level);
  using Runner = std::function<CriterionResult()>;
  const Runner runners[] = {
      [&] { return criterion_identities(b); },
      [&] { return criterion_moments(b); },
      [&] { return criterion_representation(b, options.tau_perturbation); },
      [&] { return criterion_kernel_bounds(b, options.tau_perturbation); },
      [&] { return criterion_spectra(b); },
      [&] { return criterion_weyl(b); },
      [&] { return criterion_counterexample(b); },
      [&] { return criterion_equidistribution(b); },
  };
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 8; ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = runners[id - 1]();
    } catch (const std::exception& e) {
      res.id = id;
      res.title = "criterion " + std::to_string(id);
      res.passed = false;
      res.measured = {{"error", e.what()}};
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(res);
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace lacunary
