#include "lacunary/lacunary.h"

#include <new>
#include <optional>
#include <string>

#include "lacunary/acceptance.hpp"
#include "lacunary/circle_stats.hpp"
#include "lacunary/dyadic_walk.hpp"
#include "lacunary/error.hpp"
#include "lacunary/halving_op.hpp"
#include "lacunary/report.hpp"
#include "lacunary/rudin_shapiro.hpp"
#include "lacunary/su2_rep.hpp"

using nlohmann::json;
namespace lr = lacunary::report;

struct lac_poly {
  lacunary::AnyPoly value;
};
struct lac_rs_pair {
  lacunary::RudinShapiroPair value;
};
struct lac_matrix {
  lacunary::CMatrix value;
};
struct lac_halving_op {
  lacunary::HalvingOperator value;
};
struct lac_group {
  lacunary::FiniteGroup value;
};
struct lac_step_function {
  lacunary::DyadicStepFunction value;
};
struct lac_distribution {
  lacunary::ExactDistribution value;
  std::vector<std::string> labels;
  std::vector<std::string> mass_strings;
};
struct lac_report {
  std::string json_text;
  std::optional<std::string> csv_text;
};

namespace {

thread_local std::string g_last_error;

lac_status fail(lac_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
lac_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return LAC_OK;
  } catch (const lacunary::Error& e) {
    return fail(static_cast<lac_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LAC_ERR_INVALID_ARGUMENT, std::string("json: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(LAC_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::invalid_argument& e) {
    return fail(LAC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LAC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LAC_ERR_INTERNAL, "unknown exception");
  }
}

#define LAC_REQUIRE(ptr)                                                 \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(LAC_ERR_NULL_POINTER, #ptr " is null"); \
  } while (0)

lac_report* make_report(json doc, std::optional<std::string> csv = std::nullopt) {
  return new lac_report{doc.dump(), std::move(csv)};
}

json poly_json(const lacunary::AnyPoly& p) {
  json coeffs = json::array();
  std::int64_t low = 0;
  std::visit(
      [&](const auto& poly) {
        low = poly.low();
        for (const auto& c : poly.coeffs()) {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, lacunary::Complex>)
            coeffs.push_back(lr::complex_json(c));
          else
            coeffs.push_back(c.get_str());
        }
      },
      p);
  return {{"kind", lacunary::coeff_kind_name(lacunary::kind_of(p))},
          {"low", low},
          {"coefficients", coeffs}};
}

}  // namespace

extern "C" {

const char* lac_last_error(void) { return g_last_error.c_str(); }

const char* lac_status_name(lac_status status) {
  switch (status) {
    case LAC_OK: return "ok";
    case LAC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LAC_ERR_VARIANT_MISMATCH: return "variant_mismatch";
    case LAC_ERR_RESOURCE_LIMIT: return "resource_limit";
    case LAC_ERR_NUMERICAL: return "numerical_failure";
    case LAC_ERR_INTERNAL: return "internal_error";
    case LAC_ERR_NULL_POINTER: return "null_pointer";
  }
  return "unknown";
}

const char* lac_version(void) { return "1.0.0"; }
int lac_schema_version(void) { return lr::kSchemaVersion; }

const char* lac_report_json(const lac_report* report) {
  return report ? report->json_text.c_str() : nullptr;
}
const char* lac_report_csv(const lac_report* report) {
  return report && report->csv_text ? report->csv_text->c_str() : nullptr;
}
void lac_report_free(lac_report* report) { delete report; }

// ---- polynomials

lac_status lac_poly_from_ints(int64_t low, const int64_t* coeffs, size_t count,
                              lac_poly** out) {
  LAC_REQUIRE(out);
  if (count > 0) LAC_REQUIRE(coeffs);
  return guarded([&] {
    std::vector<lacunary::BigInt> c;
    c.reserve(count);
    for (size_t i = 0; i < count; ++i) c.emplace_back(static_cast<long>(coeffs[i]));
    *out = new lac_poly{lacunary::IntPoly(low, std::move(c))};
  });
}

lac_status lac_poly_from_strings(int64_t low, const char* const* coeffs, size_t count,
                                 lac_coeff_kind kind, lac_poly** out) {
  LAC_REQUIRE(out);
  if (count > 0) LAC_REQUIRE(coeffs);
  return guarded([&] {
    for (size_t i = 0; i < count; ++i)
      if (coeffs[i] == nullptr) throw lacunary::InvalidArgument("null coefficient string");
    if (kind == LAC_COEFF_BIGINT) {
      std::vector<lacunary::BigInt> c;
      for (size_t i = 0; i < count; ++i) c.emplace_back(coeffs[i], 10);
      *out = new lac_poly{lacunary::IntPoly(low, std::move(c))};
    } else if (kind == LAC_COEFF_RATIONAL) {
      std::vector<lacunary::Rational> c;
      for (size_t i = 0; i < count; ++i) {
        lacunary::Rational q(coeffs[i], 10);
        if (q.get_den() == 0) throw lacunary::InvalidArgument("zero denominator");
        q.canonicalize();
        c.push_back(q);
      }
      *out = new lac_poly{lacunary::RationalPoly(low, std::move(c))};
    } else {
      throw lacunary::InvalidArgument("string coefficients must be bigint or rational");
    }
  });
}

lac_status lac_poly_from_complex(int64_t low, const double* re_im, size_t count,
                                 lac_poly** out) {
  LAC_REQUIRE(out);
  if (count > 0) LAC_REQUIRE(re_im);
  return guarded([&] {
    std::vector<lacunary::Complex> c;
    for (size_t i = 0; i < count; ++i) c.emplace_back(re_im[2 * i], re_im[2 * i + 1]);
    *out = new lac_poly{lacunary::ComplexPoly(low, std::move(c))};
  });
}

lac_status lac_poly_kind(const lac_poly* p, lac_coeff_kind* out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  *out = static_cast<lac_coeff_kind>(lacunary::kind_of(p->value));
  return LAC_OK;
}

lac_status lac_poly_low(const lac_poly* p, int64_t* out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  *out = std::visit([](const auto& x) { return x.low(); }, p->value);
  return LAC_OK;
}

lac_status lac_poly_size(const lac_poly* p, size_t* out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  *out = std::visit([](const auto& x) { return x.size(); }, p->value);
  return LAC_OK;
}

lac_status lac_poly_multiply(const lac_poly* a, const lac_poly* b, lac_poly** out) {
  LAC_REQUIRE(a);
  LAC_REQUIRE(b);
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_poly{lacunary::multiply(a->value, b->value)}; });
}

lac_status lac_poly_reverse(const lac_poly* p, lac_poly** out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_poly{lacunary::reverse(p->value)}; });
}

lac_status lac_poly_substitute_power(const lac_poly* p, int64_t s, lac_poly** out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_poly{lacunary::substitute_power(p->value, s)}; });
}

lac_status lac_poly_halve(const lac_poly* p, lac_poly** out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_poly{lacunary::halve(p->value)}; });
}

lac_status lac_poly_report(const lac_poly* p, lac_report** out) {
  LAC_REQUIRE(p);
  LAC_REQUIRE(out);
  return guarded([&] { *out = make_report(poly_json(p->value)); });
}

void lac_poly_free(lac_poly* p) { delete p; }

// ---- Rudin-Shapiro

lac_status lac_rs_generate(unsigned k, lac_rs_pair** out) {
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_rs_pair{lacunary::generate(k)}; });
}

lac_status lac_rs_pair_length(const lac_rs_pair* pair, size_t* out) {
  LAC_REQUIRE(pair);
  LAC_REQUIRE(out);
  *out = pair->value.p.size();
  return LAC_OK;
}

lac_status lac_rs_pair_coeffs(const lac_rs_pair* pair, lac_which which, int8_t* buffer,
                              size_t capacity) {
  LAC_REQUIRE(pair);
  if (capacity > 0) LAC_REQUIRE(buffer);
  const auto& src = which == LAC_WHICH_Q ? pair->value.q : pair->value.p;
  const size_t n = std::min(capacity, src.size());
  for (size_t i = 0; i < n; ++i) buffer[i] = src[i];
  return LAC_OK;
}

lac_status lac_rs_pair_report(const lac_rs_pair* pair, lac_report** out) {
  LAC_REQUIRE(pair);
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = make_report(lr::to_json(pair->value), lr::rs_pair_csv(pair->value));
  });
}

void lac_rs_pair_free(lac_rs_pair* pair) { delete pair; }

lac_status lac_rs_parseval(unsigned k, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = make_report(lr::to_json(lacunary::parseval_identity_check(k), k));
  });
}

lac_status lac_rs_alt_recursion(unsigned k, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded(
      [&] { *out = make_report(lr::to_json(lacunary::alt_recursion_check(k), k)); });
}

lac_status lac_rs_even_moment(unsigned k, unsigned n, size_t budget, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    const size_t b = budget == 0 ? lacunary::kDefaultMomentBudget : budget;
    *out = make_report(lr::to_json(lacunary::exact_even_moment(k, n, b)));
  });
}

lac_status lac_rs_mixed_moment(unsigned k, unsigned n, unsigned m, size_t budget,
                               lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    const size_t b = budget == 0 ? lacunary::kDefaultMomentBudget : budget;
    json doc = lr::to_json(lacunary::exact_mixed_moment(k, n, m, b));
    doc["m"] = m;
    *out = make_report(doc);
  });
}

// ---- circle statistics

lac_status lac_circle_eval(unsigned k, size_t n, lac_which which, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    const auto grid = lacunary::eval_at_roots(
        lacunary::generate(k), n, which == LAC_WHICH_Q ? lacunary::Which::kQ : lacunary::Which::kP);
    json values = json::array();
    for (const auto& v : grid.values) values.push_back(lr::complex_json(v));
    json doc = {{"k", k},
                {"n", n},
                {"which", which == LAC_WHICH_Q ? "q" : "p"},
                {"values", values}};
    *out = make_report(doc, lr::evaluation_csv(grid));
  });
}

lac_status lac_circle_saffari(unsigned k, size_t n, size_t bins, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    const auto r = lacunary::saffari_report(k, n, bins);
    *out = make_report(lr::to_json(r), lr::histogram_csv(r.bins));
  });
}

lac_status lac_circle_montgomery(unsigned k, size_t n, size_t grid_size, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    const auto r = lacunary::montgomery_report(k, n, grid_size);
    *out = make_report(lr::to_json(r), lr::grid_csv(r));
  });
}

lac_status lac_circle_min_modulus(unsigned k, size_t n, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded(
      [&] { *out = make_report(lr::to_json(lacunary::min_modulus_report(k, n), k, n)); });
}

lac_status lac_circle_link(unsigned k, size_t samples, uint64_t seed, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = make_report(lr::to_json(lacunary::link_check(k, samples, seed), k, samples, seed));
  });
}

// ---- matrices and representations

lac_status lac_matrix_rows(const lac_matrix* m, size_t* out) {
  LAC_REQUIRE(m);
  LAC_REQUIRE(out);
  *out = static_cast<size_t>(m->value.rows());
  return LAC_OK;
}

lac_status lac_matrix_cols(const lac_matrix* m, size_t* out) {
  LAC_REQUIRE(m);
  LAC_REQUIRE(out);
  *out = static_cast<size_t>(m->value.cols());
  return LAC_OK;
}

lac_status lac_matrix_get(const lac_matrix* m, size_t row, size_t col, double* re,
                          double* im) {
  LAC_REQUIRE(m);
  if (row >= static_cast<size_t>(m->value.rows()) ||
      col >= static_cast<size_t>(m->value.cols()))
    return fail(LAC_ERR_INVALID_ARGUMENT, "matrix index out of range");
  const auto v = m->value(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  if (re) *re = v.real();
  if (im) *im = v.imag();
  return LAC_OK;
}

lac_status lac_matrix_report(const lac_matrix* m, lac_report** out) {
  LAC_REQUIRE(m);
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = make_report({{"rows", m->value.rows()},
                        {"cols", m->value.cols()},
                        {"entries", lr::matrix_json(m->value)}});
  });
}

void lac_matrix_free(lac_matrix* m) { delete m; }

lac_status lac_rep_tau(int two_ell, lac_matrix** out) {
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_matrix{lacunary::tau_matrix(two_ell).entries}; });
}

lac_status lac_rep_of_su2(int two_ell, const double* g_re_im, lac_matrix** out) {
  LAC_REQUIRE(g_re_im);
  LAC_REQUIRE(out);
  return guarded([&] {
    lacunary::Mat2 g;
    g << lacunary::Complex(g_re_im[0], g_re_im[1]), lacunary::Complex(g_re_im[2], g_re_im[3]),
        lacunary::Complex(g_re_im[4], g_re_im[5]), lacunary::Complex(g_re_im[6], g_re_im[7]);
    if (std::abs(g.determinant() - 1.0) > 1e-10)
      throw lacunary::InvalidArgument("matrix is not in SU(2): det != 1");
    *out = new lac_matrix{lacunary::rep_matrix(two_ell, g).entries};
  });
}

lac_status lac_rep_verify(int two_ell, lac_report** out) {
  LAC_REQUIRE(out);
  return guarded(
      [&] { *out = make_report(lr::to_json(lacunary::verify_propositions(two_ell))); });
}

// ---- halving operators

lac_status lac_halving_build(int two_ell, int has_lambda, int lambda, lac_halving_op** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = new lac_halving_op{has_lambda ? lacunary::build_S_lambda(two_ell, lambda)
                                         : lacunary::build_S(two_ell)};
  });
}

lac_status lac_halving_dim(const lac_halving_op* op, size_t* out) {
  LAC_REQUIRE(op);
  LAC_REQUIRE(out);
  *out = static_cast<size_t>(op->value.dim());
  return LAC_OK;
}

lac_status lac_halving_matrix(const lac_halving_op* op, lac_matrix** out) {
  LAC_REQUIRE(op);
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_matrix{op->value.matrix()}; });
}

lac_status lac_halving_report(const lac_halving_op* op, lac_report** out) {
  LAC_REQUIRE(op);
  LAC_REQUIRE(out);
  return guarded([&] { *out = make_report(lr::to_json(op->value)); });
}

lac_status lac_halving_spectrum(const lac_halving_op* op, int with_eigenvalues,
                                lac_report** out) {
  LAC_REQUIRE(op);
  LAC_REQUIRE(out);
  return guarded([&] {
    const auto s = lacunary::spectral_radius(op->value);
    *out = make_report(lr::to_json(s, op->value, with_eigenvalues != 0),
                       lr::spectrum_csv_header() + lr::spectrum_csv_row(s, op->value));
  });
}

void lac_halving_free(lac_halving_op* op) { delete op; }

lac_status lac_expected_rep(int two_ell, unsigned k, lac_matrix** out) {
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_matrix{lacunary::expected_rep(two_ell, k)}; });
}

lac_status lac_independence_moment(int two_ell, int lambda, unsigned k, lac_matrix** out) {
  LAC_REQUIRE(out);
  return guarded(
      [&] { *out = new lac_matrix{lacunary::independence_moment(two_ell, lambda, k)}; });
}

lac_status lac_cross_check(int two_ell, int lambda, unsigned k, size_t budget,
                           lac_report** out) {
  LAC_REQUIRE(out);
  return guarded([&] {
    const size_t b = budget == 0 ? lacunary::kCrossCheckBudget : budget;
    *out = make_report(
        lr::to_json(lacunary::cross_check_symbolic(two_ell, lambda, k, b), two_ell, lambda, k));
  });
}

// ---- groups and dyadic walks

lac_status lac_group_preset(const char* name, lac_group** out) {
  LAC_REQUIRE(name);
  LAC_REQUIRE(out);
  return guarded([&] { *out = new lac_group{lacunary::FiniteGroup::preset(name)}; });
}

lac_status lac_group_from_json(const char* text, lac_group** out) {
  LAC_REQUIRE(text);
  LAC_REQUIRE(out);
  return guarded(
      [&] { *out = new lac_group{lacunary::FiniteGroup::from_json(json::parse(text))}; });
}

lac_status lac_group_order(const lac_group* g, int* out) {
  LAC_REQUIRE(g);
  LAC_REQUIRE(out);
  *out = g->value.order();
  return LAC_OK;
}

void lac_group_free(lac_group* g) { delete g; }

lac_status lac_step_preset(const char* name, lac_step_function** out) {
  LAC_REQUIRE(name);
  LAC_REQUIRE(out);
  return guarded(
      [&] { *out = new lac_step_function{lacunary::DyadicStepFunction::preset(name)}; });
}

lac_status lac_step_from_json(const char* text, lac_step_function** out) {
  LAC_REQUIRE(text);
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = new lac_step_function{lacunary::DyadicStepFunction::from_json(json::parse(text))};
  });
}

void lac_step_free(lac_step_function* f) { delete f; }

namespace {
lac_distribution* wrap_distribution(const lacunary::FiniteGroup& g,
                                    lacunary::ExactDistribution d) {
  auto* out = new lac_distribution{std::move(d), g.labels(), {}};
  for (const auto& m : out->value.masses) out->mass_strings.push_back(m.get_str());
  return out;
}
}  // namespace

lac_status lac_walk_exact(const lac_group* g, const lac_step_function* f, unsigned k,
                          size_t state_budget, lac_distribution** out) {
  LAC_REQUIRE(g);
  LAC_REQUIRE(f);
  LAC_REQUIRE(out);
  return guarded([&] {
    const size_t b = state_budget == 0 ? lacunary::kDefaultStateBudget : state_budget;
    *out = wrap_distribution(g->value,
                             lacunary::exact_product_distribution(g->value, f->value, k, b));
  });
}

lac_status lac_walk_brute(const lac_group* g, const lac_step_function* f, unsigned k,
                          lac_distribution** out) {
  LAC_REQUIRE(g);
  LAC_REQUIRE(f);
  LAC_REQUIRE(out);
  return guarded([&] {
    *out = wrap_distribution(g->value,
                             lacunary::brute_force_distribution(g->value, f->value, k));
  });
}

lac_status lac_distribution_mass(const lac_distribution* d, int index, const char** out) {
  LAC_REQUIRE(d);
  LAC_REQUIRE(out);
  if (index < 0 || static_cast<size_t>(index) >= d->mass_strings.size())
    return fail(LAC_ERR_INVALID_ARGUMENT, "group element index out of range");
  *out = d->mass_strings[static_cast<size_t>(index)].c_str();
  return LAC_OK;
}

lac_status lac_distribution_equal(const lac_distribution* a, const lac_distribution* b,
                                  int* out) {
  LAC_REQUIRE(a);
  LAC_REQUIRE(b);
  LAC_REQUIRE(out);
  *out = a->value.masses == b->value.masses ? 1 : 0;
  return LAC_OK;
}

lac_status lac_distribution_report(const lac_distribution* d, lac_report** out) {
  LAC_REQUIRE(d);
  LAC_REQUIRE(out);
  return guarded([&] {
    json dist = json::object();
    std::string csv = "label,mass\n";
    for (size_t i = 0; i < d->labels.size(); ++i) {
      dist[d->labels[i]] = d->mass_strings[i];
      csv += d->labels[i] + "," + d->mass_strings[i] + "\n";
    }
    *out = make_report({{"distribution", dist},
                        {"total", d->value.total().get_str()},
                        {"tv_distance", lacunary::tv_distance_to_uniform(d->value).get_str()}},
                       csv);
  });
}

void lac_distribution_free(lac_distribution* d) { delete d; }

lac_status lac_walk_monte_carlo(const char* kind, unsigned k, size_t samples, uint64_t seed,
                                unsigned threads, lac_report** out) {
  LAC_REQUIRE(kind);
  LAC_REQUIRE(out);
  return guarded([&] {
    const auto stats = lacunary::monte_carlo_matrix_walk(lacunary::parse_walk_kind(kind), k,
                                                         samples, seed, threads);
    *out = make_report(lr::to_json(stats));
  });
}

// ---- acceptance

lac_status lac_acceptance_run(const char* level, double tau_perturbation, int include_timings,
                              int* all_passed, lac_report** out) {
  LAC_REQUIRE(level);
  LAC_REQUIRE(out);
  return guarded([&] {
    lacunary::AcceptanceOptions options;
    options.level = lacunary::parse_acceptance_level(level);
    options.tau_perturbation = tau_perturbation;
    const auto results = lacunary::run_acceptance(options);
    json criteria = json::array();
    bool ok = true;
    for (const auto& r : results) {
      json row = {{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                  {"measured", r.measured}};
      if (include_timings) row["seconds"] = r.seconds;
      criteria.push_back(row);
      ok = ok && r.passed;
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out = make_report({{"level", level}, {"all_passed", ok}, {"criteria", criteria}});
  });
}

}  // extern "C"
