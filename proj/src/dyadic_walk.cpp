#include "lacunary/dyadic_walk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "lacunary/circle_point.hpp"
#include "lacunary/circle_stats.hpp"

namespace lacunary {

FiniteGroup::FiniteGroup(int order, std::vector<int> cayley, int identity,
                         std::vector<std::string> labels)
    : order_(order),
      cayley_(std::move(cayley)),
      identity_(identity),
      labels_(std::move(labels)) {
  if (order_ < 1) throw InvalidArgument("group: order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (cayley_.size() != n * n)
    throw InvalidArgument("group: Cayley table must have order^2 entries");
  if (identity_ < 0 || identity_ >= order_)
    throw InvalidArgument("group: identity index out of range");
  if (labels_.empty()) {
    for (int i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n)
    throw InvalidArgument("group: need one label per element");
  for (int v : cayley_)
    if (v < 0 || v >= order_)
      throw InvalidArgument("group: Cayley entry out of range");
  for (int a = 0; a < order_; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < order_; ++b) {
      row[static_cast<std::size_t>(multiply(a, b))] = true;
      col[static_cast<std::size_t>(multiply(b, a))] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw InvalidArgument("group: Cayley table is not a Latin square");
    if (multiply(identity_, a) != a || multiply(a, identity_) != a)
      throw InvalidArgument("group: identity does not act trivially");
  }
  auto associative = [&](int a, int b, int c) {
    return multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
  };
  if (order_ <= 24) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (!associative(a, b, c))
            throw InvalidArgument("group: multiplication is not associative");
  } else {
    std::mt19937_64 rng(static_cast<std::uint64_t>(order_));
    for (int t = 0; t < 20000; ++t) {
      const int a = static_cast<int>(rng() % n);
      const int b = static_cast<int>(rng() % n);
      const int c = static_cast<int>(rng() % n);
      if (!associative(a, b, c))
        throw InvalidArgument("group: multiplication is not associative");
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return FiniteGroup(n, std::move(t), 0, {});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw InvalidArgument("dihedral group parameter must be positive");
  // Element (s, r) = s^s r^r, index s * n + r, with r s = s r^{-1}.
  const int order = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(order * order));
  std::vector<std::string> labels;
  for (int i = 0; i < order; ++i)
    labels.push_back((i >= n ? "s" : "") + std::string("r") + std::to_string(i % n));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int sa = a / n, ra = a % n, sb = b / n, rb = b % n;
      const int r = ((sb ? -ra : ra) + rb) % n;
      t[static_cast<std::size_t>(a * order + b)] = ((sa + sb) % 2) * n + (r + n) % n;
    }
  }
  return FiniteGroup(order, std::move(t), 0, std::move(labels));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[static_cast<std::size_t>(a * 6 + b)] = static_cast<int>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(6, std::move(t), 0, std::move(labels));
}

FiniteGroup FiniteGroup::quaternion() {
  // Unit quaternions {1, i, j, k} with signs; index = 4 * sign + unit.
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sign = (a / 4 + b / 4 + kSign[ua][ub]) % 2;
      t[static_cast<std::size_t>(a * 8 + b)] = sign * 4 + kUnit[ua][ub];
    }
  }
  return FiniteGroup(8, std::move(t), 0,
                     {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

FiniteGroup FiniteGroup::preset(const std::string& name) {
  if (name == "s3") return symmetric3();
  if (name == "q8") return quaternion();
  auto parse_suffix = [&](std::size_t from) {
    const std::string digits = name.substr(from);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InvalidArgument("unknown group preset '" + name + "'");
    return std::stoi(digits);
  };
  if (name.size() > 1 && name[0] == 'z') return cyclic(parse_suffix(1));
  if (name.size() > 1 && name[0] == 'd') return dihedral(parse_suffix(1));
  throw InvalidArgument("unknown group preset '" + name + "'");
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& doc) {
  try {
    const int order = doc.at("order").get<int>();
    std::vector<int> cayley;
    const auto& table = doc.at("cayley");
    if (!table.is_array()) throw InvalidArgument("group: cayley must be an array");
    for (const auto& row : table) {
      if (row.is_array()) {
        for (const auto& v : row) cayley.push_back(v.get<int>());
      } else {
        cayley.push_back(row.get<int>());
      }
    }
    const int identity = doc.value("identity", 0);
    std::vector<std::string> labels;
    if (doc.contains("labels"))
      for (const auto& l : doc.at("labels"))
        labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    return FiniteGroup(order, std::move(cayley), identity, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("group JSON: ") + e.what());
  }
}

void DyadicStepFunction::validate(const FiniteGroup& group) const {
  if (resolution < 1 || resolution > 20)
    throw InvalidArgument("step function: resolution must be in [1, 20]");
  if (table.size() != (std::size_t{1} << resolution))
    throw InvalidArgument("step function: table must have 2^resolution entries");
  for (int v : table)
    if (v < 0 || v >= group.order())
      throw InvalidArgument("step function: value outside the group");
}

DyadicStepFunction DyadicStepFunction::paper_counterexample() {
  return {3, {0, 1, 1, 1, 0, 1, 0, 0}};
}

DyadicStepFunction DyadicStepFunction::preset(const std::string& name) {
  if (name == "paper-counterexample") return paper_counterexample();
  throw InvalidArgument("unknown step-function preset '" + name + "'");
}

DyadicStepFunction DyadicStepFunction::from_json(const nlohmann::json& doc) {
  try {
    DyadicStepFunction f;
    f.resolution = doc.at("resolution").get<int>();
    f.table = doc.at("table").get<std::vector<int>>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("step function JSON: ") + e.what());
  }
}

Rational ExactDistribution::total() const {
  Rational sum = 0;
  for (const auto& m : masses) sum += m;
  return sum;
}

namespace {

BigInt pow2(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

ExactDistribution normalize(const std::vector<BigInt>& counts, unsigned bits) {
  const BigInt den = pow2(bits);
  ExactDistribution out;
  out.masses.reserve(counts.size());
  for (const auto& c : counts) {
    Rational q(c, den);
    q.canonicalize();
    out.masses.push_back(q);
  }
  return out;
}

}  // namespace

ExactDistribution exact_product_distribution(const FiniteGroup& group,
                                             const DyadicStepFunction& f,
                                             unsigned k,
                                             std::size_t state_budget) {
  f.validate(group);
  const std::size_t windows = std::size_t{1} << f.resolution;
  const auto order = static_cast<std::size_t>(group.order());
  if (windows * order > state_budget)
    throw ResourceLimit("exact_product_distribution: " +
                        std::to_string(windows * order) +
                        " states exceed budget " + std::to_string(state_budget));
  const std::size_t mask = windows - 1;

  // counts[w * order + g]: digit strings whose current window is w and whose
  // accumulated product is g. Each string carries weight 2^{-(r + steps)}.
  std::vector<BigInt> counts(windows * order, 0);
  for (std::size_t w = 0; w < windows; ++w)
    counts[w * order + static_cast<std::size_t>(f.table[w])] += 1;
  std::vector<BigInt> next(counts.size());
  for (unsigned step = 0; step < k; ++step) {
    for (auto& c : next) c = 0;
    for (std::size_t w = 0; w < windows; ++w) {
      for (std::size_t bit = 0; bit < 2; ++bit) {
        const std::size_t w2 = ((w << 1U) & mask) | bit;
        const int factor = f.table[w2];
        for (std::size_t g = 0; g < order; ++g) {
          const BigInt& c = counts[w * order + g];
          if (c == 0) continue;
          const auto prod = static_cast<std::size_t>(
              group.multiply(factor, static_cast<int>(g)));
          next[w2 * order + prod] += c;
        }
      }
    }
    std::swap(counts, next);
  }
  std::vector<BigInt> totals(order, 0);
  for (std::size_t w = 0; w < windows; ++w)
    for (std::size_t g = 0; g < order; ++g) totals[g] += counts[w * order + g];
  return normalize(totals, static_cast<unsigned>(f.resolution) + k);
}

ExactDistribution brute_force_distribution(const FiniteGroup& group,
                                           const DyadicStepFunction& f,
                                           unsigned k) {
  f.validate(group);
  const unsigned bits = static_cast<unsigned>(f.resolution) + k;
  if (bits > static_cast<unsigned>(kBruteForceMaxBits))
    throw ResourceLimit("brute_force_distribution: 2^" + std::to_string(bits) +
                        " intervals exceed the enumeration limit");
  const std::uint64_t intervals = std::uint64_t{1} << bits;
  const std::uint64_t modulus = intervals;
  std::vector<BigInt> counts(static_cast<std::size_t>(group.order()), 0);
  std::vector<std::uint64_t> tally(counts.size(), 0);
  for (std::uint64_t i = 0; i < intervals; ++i) {
    // t = i / 2^bits; f(2^j t) looks up floor(frac(2^j t) * 2^r).
    int product = group.identity();
    for (unsigned j = 0; j <= k; ++j) {
      const std::uint64_t frac = (i << j) % modulus;
      const auto idx = static_cast<std::size_t>(frac >> k);
      product = group.multiply(f.table[idx], product);
    }
    ++tally[static_cast<std::size_t>(product)];
  }
  for (std::size_t g = 0; g < counts.size(); ++g)
    mpz_set_ui(counts[g].get_mpz_t(), tally[g]);
  return normalize(counts, bits);
}

Rational tv_distance_to_uniform(const ExactDistribution& dist) {
  if (dist.masses.empty()) return 0;
  const Rational uniform(1, static_cast<unsigned long>(dist.masses.size()));
  Rational sum = 0;
  for (const auto& m : dist.masses) sum += abs(Rational(m - uniform));
  Rational out = sum / 2;
  out.canonicalize();
  return out;
}

nlohmann::json distribution_to_json(const FiniteGroup& group,
                                    const ExactDistribution& dist) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t g = 0; g < dist.masses.size(); ++g)
    out[group.labels()[g]] = dist.masses[g].get_str();
  return out;
}

WalkKind parse_walk_kind(const std::string& name) {
  if (name == "su2_g") return WalkKind::kSu2G;
  if (name == "u2_G") return WalkKind::kU2BigG;
  throw InvalidArgument("walk kind must be su2_g or u2_G, got '" + name + "'");
}

const char* walk_kind_name(WalkKind kind) {
  return kind == WalkKind::kSu2G ? "su2_g" : "u2_G";
}

namespace {

constexpr int kMaxRepTwoEll = 4;
constexpr std::size_t kChunks = 64;

struct ChunkAccumulator {
  double max_defect = 0.0;
  std::vector<CMatrix> rep_sums;
  Mat2 entry_sum = Mat2::Zero();
  Mat2 zeta_entry_sum = Mat2::Zero();
  Mat2 zeta_inv_entry_sum = Mat2::Zero();
  Complex zeta_sum = 0.0;
  std::vector<double> entry_values;
  std::vector<double> det_phases;
};

void run_chunk(WalkKind kind, unsigned k, std::size_t count, std::seed_seq& seq,
               ChunkAccumulator& acc) {
  std::mt19937_64 rng(seq);
  for (int two_ell = 1; two_ell <= kMaxRepTwoEll; ++two_ell)
    acc.rep_sums.push_back(CMatrix::Zero(two_ell + 1, two_ell + 1));
  acc.entry_values.reserve(count);
  if (kind == WalkKind::kU2BigG) acc.det_phases.reserve(count);
  const std::uint64_t zeta_exponent = (std::uint64_t{1} << (k + 1)) - 1;
  for (std::size_t s = 0; s < count; ++s) {
    const CirclePoint w = CirclePoint::random(rng);
    Mat2 m = Mat2::Identity();
    for (unsigned j = 0; j <= k; ++j) {
      const Complex wj = w.pow2(j).value();
      m = (kind == WalkKind::kSu2G ? g_matrix(wj) : big_g_matrix(wj)) * m;
    }
    acc.max_defect = std::max(
        acc.max_defect, (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff());
    for (int two_ell = 1; two_ell <= kMaxRepTwoEll; ++two_ell)
      acc.rep_sums[static_cast<std::size_t>(two_ell - 1)] +=
          symmetric_power(two_ell, m).entries;
    const Complex zeta = w.pow(zeta_exponent).value();
    acc.entry_sum += m;
    acc.zeta_entry_sum += zeta * m;
    acc.zeta_inv_entry_sum += std::conj(zeta) * m;
    acc.zeta_sum += zeta;
    acc.entry_values.push_back(std::norm(m(0, 0)));
    if (kind == WalkKind::kU2BigG) {
      double phase = std::arg(m.determinant()) / (2.0 * std::numbers::pi);
      if (phase < 0.0) phase += 1.0;
      if (phase >= 1.0) phase -= 1.0;
      acc.det_phases.push_back(phase);
    }
  }
}

std::vector<double> histogram(const std::vector<double>& values, std::size_t bins) {
  std::vector<double> out(bins, 0.0);
  if (values.empty()) return out;
  for (double v : values) {
    const auto b = static_cast<std::size_t>(std::clamp(v, 0.0, 1.0) * static_cast<double>(bins));
    out[std::min(b, bins - 1)] += 1.0;
  }
  for (auto& m : out) m /= static_cast<double>(values.size());
  return out;
}

}  // namespace

WalkStatistics monte_carlo_matrix_walk(WalkKind kind, unsigned k,
                                       std::size_t samples, std::uint64_t seed,
                                       unsigned threads) {
  if (samples < 1) throw InvalidArgument("monte_carlo_matrix_walk: samples must be >= 1");
  if (k > 40) throw InvalidArgument("monte_carlo_matrix_walk: k must be <= 40");

  const std::size_t chunks = std::min(kChunks, samples);
  std::vector<ChunkAccumulator> acc(chunks);
  auto chunk_range = [&](std::size_t c) {
    return std::pair{c * samples / chunks, (c + 1) * samples / chunks};
  };
  auto work = [&](std::size_t c) {
    const auto [begin, end] = chunk_range(c);
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(c)};
    run_chunk(kind, k, end - begin, seq, acc[c]);
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t c; (c = next.fetch_add(1)) < chunks;) work(c);
      });
    for (auto& th : pool) th.join();
  }

  WalkStatistics out;
  out.kind = kind;
  out.k = k;
  out.samples = samples;
  out.seed = seed;
  out.sigma = 1.0 / std::sqrt(static_cast<double>(samples));
  const double inv_n = 1.0 / static_cast<double>(samples);

  Mat2 entry_sum = Mat2::Zero(), zeta_entry = Mat2::Zero(), zeta_inv_entry = Mat2::Zero();
  Complex zeta_sum = 0.0;
  std::vector<double> entries, phases;
  entries.reserve(samples);
  for (int two_ell = 1; two_ell <= kMaxRepTwoEll; ++two_ell)
    out.rep_means.push_back({two_ell, 0.0, CMatrix::Zero(two_ell + 1, two_ell + 1)});
  for (const auto& a : acc) {
    out.max_unitarity_defect = std::max(out.max_unitarity_defect, a.max_defect);
    for (std::size_t r = 0; r < out.rep_means.size(); ++r)
      out.rep_means[r].mean += a.rep_sums[r];
    entry_sum += a.entry_sum;
    zeta_entry += a.zeta_entry_sum;
    zeta_inv_entry += a.zeta_inv_entry_sum;
    zeta_sum += a.zeta_sum;
    entries.insert(entries.end(), a.entry_values.begin(), a.entry_values.end());
    phases.insert(phases.end(), a.det_phases.begin(), a.det_phases.end());
  }
  for (auto& r : out.rep_means) {
    r.mean *= inv_n;
    r.max_abs_mean = r.mean.cwiseAbs().maxCoeff();
  }
  const Mat2 mean_entry = entry_sum * inv_n;
  const Complex mean_zeta = zeta_sum * inv_n;
  const Mat2 cov_plus = zeta_entry * inv_n - mean_zeta * mean_entry;
  const Mat2 cov_minus = zeta_inv_entry * inv_n - std::conj(mean_zeta) * mean_entry;
  out.phase_correlation =
      std::max(cov_plus.cwiseAbs().maxCoeff(), cov_minus.cwiseAbs().maxCoeff());
  out.entry_histogram = histogram(entries, kWalkHistogramBins);
  out.entry_ks = ks_uniform(std::move(entries));
  if (kind == WalkKind::kU2BigG) {
    out.det_phase_histogram = histogram(phases, kWalkHistogramBins);
    out.det_phase_ks = ks_uniform(std::move(phases));
  }
  return out;
}

}  // namespace lacunary
