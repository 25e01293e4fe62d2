#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lacunary/laurent_poly.hpp"
#include "lacunary/su2_rep.hpp"

namespace lacunary {

// Finite group given by its Cayley table: cayley[a * order + b] = a * b.
class FiniteGroup {
 public:
  // Validates the table (Latin square, two-sided identity, associativity);
  // throws InvalidArgument on failure.
  FiniteGroup(int order, std::vector<int> cayley, int identity,
              std::vector<std::string> labels);

  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);  // order 2n
  static FiniteGroup symmetric3();
  static FiniteGroup quaternion();
  // "z2", "z<n>", "s3", "d<n>", "q8"
  static FiniteGroup preset(const std::string& name);
  static FiniteGroup from_json(const nlohmann::json& doc);

  int order() const { return order_; }
  int identity() const { return identity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& cayley() const { return cayley_; }
  int multiply(int a, int b) const {
    return cayley_[static_cast<std::size_t>(a * order_ + b)];
  }

 private:
  int order_;
  std::vector<int> cayley_;
  int identity_;
  std::vector<std::string> labels_;
};

// f constant on each [i / 2^r, (i + 1) / 2^r), extended with period 1.
struct DyadicStepFunction {
  int resolution = 1;
  std::vector<int> table;

  void validate(const FiniteGroup& group) const;

  // 0 on [0,1/8), [1/2,5/8), [3/4,1) and 1 elsewhere, as a map into Z/2.
  static DyadicStepFunction paper_counterexample();
  static DyadicStepFunction preset(const std::string& name);
  static DyadicStepFunction from_json(const nlohmann::json& doc);
};

struct ExactDistribution {
  std::vector<Rational> masses;  // indexed by group element

  Rational total() const;
};

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 20;
inline constexpr int kBruteForceMaxBits = 24;

// Law of f(2^k t) f(2^{k-1} t) ... f(t) for t uniform on [0, 1); each new
// factor multiplies on the left. Dynamic programming over the r-bit window
// of binary digits and the running product.
ExactDistribution exact_product_distribution(
    const FiniteGroup& group, const DyadicStepFunction& f, unsigned k,
    std::size_t state_budget = kDefaultStateBudget);

// Same law by enumerating all 2^{k+r} dyadic intervals.
ExactDistribution brute_force_distribution(const FiniteGroup& group,
                                           const DyadicStepFunction& f,
                                           unsigned k);

// (1/2) sum_g |mass(g) - 1/|H||.
Rational tv_distance_to_uniform(const ExactDistribution& dist);

nlohmann::json distribution_to_json(const FiniteGroup& group,
                                    const ExactDistribution& dist);

enum class WalkKind { kSu2G, kU2BigG };

WalkKind parse_walk_kind(const std::string& name);
const char* walk_kind_name(WalkKind kind);

struct RepMeanSummary {
  int two_ell = 0;
  double max_abs_mean = 0.0;
  CMatrix mean;
};

struct WalkStatistics {
  WalkKind kind = WalkKind::kSu2G;
  unsigned k = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double sigma = 0.0;  // samples^{-1/2}
  double max_unitarity_defect = 0.0;
  // Empirical means of the symmetric-power matrices, 2l = 1..4.
  std::vector<RepMeanSummary> rep_means;
  // |<e1, M e1>|^2 against U[0, 1].
  double entry_ks = 0.0;
  std::vector<double> entry_histogram;
  // max over entries and lambda = +-1 of |mean(zeta^lambda M_ab) -
  // mean(zeta^lambda) mean(M_ab)| with zeta = w^{2^{k+1}-1}.
  double phase_correlation = 0.0;
  // Phase of det M / (2 pi) against U[0, 1); u2 walk only.
  double det_phase_ks = 0.0;
  std::vector<double> det_phase_histogram;
};

inline constexpr std::size_t kWalkHistogramBins = 20;

// Samples M = A(w^{2^k}) ... A(w) with A = g or G. Chunked with per-chunk
// seeds and fixed-order aggregation, so the output depends only on
// (kind, k, samples, seed).
WalkStatistics monte_carlo_matrix_walk(WalkKind kind, unsigned k,
                                       std::size_t samples, std::uint64_t seed,
                                       unsigned threads = 0);

}  // namespace lacunary
