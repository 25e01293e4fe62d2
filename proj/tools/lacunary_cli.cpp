#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lacunary/lacunary.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitResource = 3;

struct Config {
  unsigned k = 0;
  unsigned n = 1;
  unsigned m = 1;
  int two_ell = 1;
  std::optional<int> lambda;
  std::size_t big_n = std::size_t{1} << 20;
  std::size_t bins = 20;
  std::size_t grid_size = 8;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  unsigned threads = 0;
  std::string which = "p";
  std::string format = "json";
  std::string out;
  std::string group = "z2";
  std::string preset = "paper-counterexample";
  std::string input;
  std::string kind = "su2_g";
  std::string level = "fast";
  double perturb_tau = 0.0;
  bool eigenvalues = false;
  bool timings = false;
};

// Failure carrying the exit status and a machine-readable reason.
struct CliFailure {
  int exit_code;
  std::string reason;
  std::string message;
};

int exit_for(lac_status s) {
  switch (s) {
    case LAC_OK: return kExitOk;
    case LAC_ERR_RESOURCE_LIMIT: return kExitResource;
    case LAC_ERR_NUMERICAL:
    case LAC_ERR_INTERNAL: return kExitNumerical;
    default: return kExitValidation;
  }
}

void check(lac_status s) {
  if (s != LAC_OK) throw CliFailure{exit_for(s), lac_status_name(s), lac_last_error()};
}

void invalid(const std::string& message) {
  throw CliFailure{kExitValidation, "invalid_argument", message};
}

// Owns a report handle and exposes its parsed JSON and CSV.
struct Report {
  json doc;
  std::optional<std::string> csv;
};

Report take(lac_report* r) {
  Report out{json::parse(lac_report_json(r)), std::nullopt};
  if (const char* csv = lac_report_csv(r)) out.csv = csv;
  lac_report_free(r);
  return out;
}

template <class F>
Report report_of(F&& call) {
  lac_report* r = nullptr;
  check(call(&r));
  return take(r);
}

Report matrix_report(lac_matrix* m) {
  lac_report* r = nullptr;
  const lac_status s = lac_matrix_report(m, &r);
  lac_matrix_free(m);
  check(s);
  return take(r);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("--input: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct WalkInputs {
  lac_group* group = nullptr;
  lac_step_function* f = nullptr;
  ~WalkInputs() {
    lac_group_free(group);
    lac_step_free(f);
  }
};

void load_walk_inputs(const Config& c, WalkInputs& w) {
  if (!c.input.empty()) {
    const std::string text = read_file(c.input);
    check(lac_group_from_json(text.c_str(), &w.group));
    check(lac_step_from_json(text.c_str(), &w.f));
  } else {
    check(lac_group_preset(c.group.c_str(), &w.group));
    check(lac_step_preset(c.preset.c_str(), &w.f));
  }
}

Report distribution_report(lac_distribution* d) {
  lac_report* r = nullptr;
  const lac_status s = lac_distribution_report(d, &r);
  lac_distribution_free(d);
  check(s);
  return take(r);
}

struct Leaf {
  CLI::App* app;
  std::string command;
  std::vector<std::string> config_keys;
  std::function<Report(const Config&)> run;
};

json config_json(const Config& c, const std::vector<std::string>& keys) {
  json out = json::object();
  for (const auto& key : keys) {
    if (key == "k") out[key] = c.k;
    else if (key == "n") out[key] = c.n;
    else if (key == "m") out[key] = c.m;
    else if (key == "two_ell") out[key] = c.two_ell;
    else if (key == "lambda") out[key] = c.lambda ? json(*c.lambda) : json(nullptr);
    else if (key == "N") out[key] = c.big_n;
    else if (key == "bins") out[key] = c.bins;
    else if (key == "grid_size") out[key] = c.grid_size;
    else if (key == "samples") out[key] = c.samples;
    else if (key == "seed") out[key] = c.seed;
    else if (key == "budget") out[key] = c.budget;
    else if (key == "threads") out[key] = c.threads;
    else if (key == "which") out[key] = c.which;
    else if (key == "group") out[key] = c.input.empty() ? json(c.group) : json(nullptr);
    else if (key == "preset") out[key] = c.input.empty() ? json(c.preset) : json(nullptr);
    else if (key == "input") out[key] = c.input.empty() ? json(nullptr) : json(c.input);
    else if (key == "kind") out[key] = c.kind;
    else if (key == "level") out[key] = c.level;
    else if (key == "perturb_tau") out[key] = c.perturb_tau;
    else if (key == "eigenvalues") out[key] = c.eigenvalues;
  }
  return out;
}

void add_common(CLI::App* app, Config& c) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app->add_option("--out", c.out, "Write the report to this file instead of stdout");
}

void opt_k(CLI::App* app, Config& c, unsigned max_k, const std::string& what) {
  app->add_option("--k", c.k, what)->required()->check(CLI::Range(0U, max_k));
}

void opt_big_n(CLI::App* app, Config& c) {
  app->add_option("--N", c.big_n, "Number of roots of unity (power of two, 2^k <= N <= 2^22)")
      ->capture_default_str();
}

void opt_two_ell(CLI::App* app, Config& c) {
  app->add_option("--two-ell", c.two_ell, "Twice the representation label l (>= 1)")
      ->required()
      ->check(CLI::Range(1, 64));
}

void opt_walk_inputs(CLI::App* app, Config& c) {
  auto* input = app->add_option("--input", c.input,
                                "JSON file with order, cayley, identity, labels, resolution, table");
  app->add_option("--group", c.group, "Group preset: z<n>, d<n>, s3, q8")
      ->capture_default_str()
      ->excludes(input);
  app->add_option("--preset", c.preset, "Step-function preset")
      ->capture_default_str()
      ->excludes(input);
}

std::vector<Leaf> build_commands(CLI::App& app, Config& c) {
  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::vector<std::string> keys, std::function<Report(const Config&)> run) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_common(sub, c);
    leaves.push_back({sub, parent->get_name() + " " + name, std::move(keys), std::move(run)});
    return sub;
  };

  // rs
  CLI::App* rs = app.add_subcommand("rs", "Rudin-Shapiro polynomials and exact moments");
  rs->require_subcommand(1);
  opt_k(leaf(rs, "gen", "Coefficients of the pair P_k, Q_k", {"k"},
             [](const Config& c) {
               lac_rs_pair* pair = nullptr;
               check(lac_rs_generate(c.k, &pair));
               lac_report* r = nullptr;
               const lac_status s = lac_rs_pair_report(pair, &r);
               lac_rs_pair_free(pair);
               check(s);
               return take(r);
             }),
        c, 24, "Level k (length 2^k)");
  opt_k(leaf(rs, "parseval",
             "Exact check of P P* + Q Q* = 2^{k+1} and of the two-step recursion", {"k"},
             [](const Config& c) {
               Report out = report_of([&](lac_report** r) { return lac_rs_parseval(c.k, r); });
               out.doc["alt_recursion"] =
                   report_of([&](lac_report** r) { return lac_rs_alt_recursion(c.k, r); }).doc;
               return out;
             }),
        c, 20, "Level k");
  {
    CLI::App* sub = leaf(rs, "moments",
                         "Exact normalized moment E|P_k/sqrt(2^{k+1})|^{2n} as a fraction",
                         {"k", "n", "budget"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_rs_even_moment(c.k, c.n, c.budget, r);
                           });
                         });
    opt_k(sub, c, 24, "Level k");
    sub->add_option("--n", c.n, "Moment order n")->required()->check(CLI::Range(0U, 1U << 20));
    sub->add_option("--budget", c.budget, "Term budget (0 = default)")->capture_default_str();
  }
  {
    CLI::App* sub = leaf(rs, "mixed", "Exact mixed moment E conj(P)^n P^m, normalized",
                         {"k", "n", "m", "budget"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_rs_mixed_moment(c.k, c.n, c.m, c.budget, r);
                           });
                         });
    opt_k(sub, c, 24, "Level k");
    sub->add_option("--n", c.n, "Power of the conjugate")->required()->check(CLI::Range(0U, 1U << 20));
    sub->add_option("--m", c.m, "Power of P")->required()->check(CLI::Range(0U, 1U << 20));
    sub->add_option("--budget", c.budget, "Term budget (0 = default)")->capture_default_str();
  }

  // circle
  CLI::App* circle =
      app.add_subcommand("circle", "Values of P_k on the unit circle and their statistics");
  circle->require_subcommand(1);
  {
    CLI::App* sub = leaf(circle, "eval", "P_k (or Q_k) at the N-th roots of unity",
                         {"k", "N", "which"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_circle_eval(c.k, c.big_n,
                                                    c.which == "q" ? LAC_WHICH_Q : LAC_WHICH_P, r);
                           });
                         });
    opt_k(sub, c, 22, "Level k");
    opt_big_n(sub, c);
    sub->add_option("--which", c.which, "Polynomial to evaluate")
        ->check(CLI::IsMember({"p", "q"}))
        ->capture_default_str();
  }
  {
    CLI::App* sub = leaf(circle, "saffari",
                         "Histogram and KS distance of |P_k|^2 / 2^{k+1} against uniform [0,1]",
                         {"k", "N", "bins"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_circle_saffari(c.k, c.big_n, c.bins, r);
                           });
                         });
    opt_k(sub, c, 22, "Level k");
    opt_big_n(sub, c);
    sub->add_option("--bins", c.bins, "Histogram bins")->capture_default_str();
  }
  {
    CLI::App* sub = leaf(circle, "montgomery",
                         "Cell frequencies of P_k / sqrt(2^{k+1}) against area/pi on a grid "
                         "over the disc",
                         {"k", "N", "grid_size"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_circle_montgomery(c.k, c.big_n, c.grid_size, r);
                           });
                         });
    opt_k(sub, c, 22, "Level k");
    opt_big_n(sub, c);
    sub->add_option("--grid-size", c.grid_size, "Cells per axis")->capture_default_str();
  }
  {
    CLI::App* sub = leaf(circle, "min", "Smallest normalized modulus over the N-th roots of unity",
                         {"k", "N"}, [](const Config& c) {
                           return report_of(
                               [&](lac_report** r) { return lac_circle_min_modulus(c.k, c.big_n, r); });
                         });
    opt_k(sub, c, 22, "Level k");
    opt_big_n(sub, c);
  }
  {
    CLI::App* sub = leaf(circle, "link",
                         "Residual between the scaled pair (P_k, Q_k) and the product of the "
                         "unitary matrices g applied to e1",
                         {"k", "samples", "seed"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_circle_link(c.k, c.samples, c.seed, r);
                           });
                         });
    opt_k(sub, c, 12, "Level k");
    sub->add_option("--samples", c.samples, "Random points")->capture_default_str();
    sub->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  }

  // rep
  CLI::App* rep = app.add_subcommand("rep", "Irreducible representations of SU(2)");
  rep->require_subcommand(1);
  opt_two_ell(leaf(rep, "tau", "The matrix tau^l = t^l(g(1))", {"two_ell"},
                   [](const Config& c) {
                     lac_matrix* m = nullptr;
                     check(lac_rep_tau(c.two_ell, &m));
                     return matrix_report(m);
                   }),
              c);
  opt_two_ell(leaf(rep, "verify",
                   "Unitarity, corner bounds and the four constrained kernel systems of tau^l",
                   {"two_ell"},
                   [](const Config& c) {
                     return report_of([&](lac_report** r) { return lac_rep_verify(c.two_ell, r); });
                   }),
              c);

  // spec
  CLI::App* spec = app.add_subcommand("spec", "Halving operators and their spectra");
  spec->require_subcommand(1);
  auto with_op = [](const Config& c, const std::function<Report(lac_halving_op*)>& body) {
    lac_halving_op* op = nullptr;
    check(lac_halving_build(c.two_ell, c.lambda ? 1 : 0, c.lambda.value_or(0), &op));
    try {
      Report out = body(op);
      lac_halving_free(op);
      return out;
    } catch (...) {
      lac_halving_free(op);
      throw;
    }
  };
  {
    CLI::App* sub = leaf(spec, "build", "Matrix and basis of the halving operator",
                         {"two_ell", "lambda"}, [with_op](const Config& c) {
                           return with_op(c, [](lac_halving_op* op) {
                             return report_of([&](lac_report** r) { return lac_halving_report(op, r); });
                           });
                         });
    opt_two_ell(sub, c);
    sub->add_option("--lambda", c.lambda, "Twist lambda (omit for the plain operator)");
  }
  {
    CLI::App* sub = leaf(spec, "radius", "Spectral radius of the halving operator",
                         {"two_ell", "lambda", "eigenvalues"}, [with_op](const Config& c) {
                           return with_op(c, [&](lac_halving_op* op) {
                             return report_of([&](lac_report** r) {
                               return lac_halving_spectrum(op, c.eigenvalues ? 1 : 0, r);
                             });
                           });
                         });
    opt_two_ell(sub, c);
    sub->add_option("--lambda", c.lambda, "Twist lambda (omit for the plain operator)");
    sub->add_flag("--eigenvalues", c.eigenvalues, "Include the full spectrum");
  }
  {
    CLI::App* sub = leaf(spec, "expected", "E t^l(g(w^{2^k}) ... g(w)) via the halving operator",
                         {"two_ell", "k"}, [](const Config& c) {
                           lac_matrix* m = nullptr;
                           check(lac_expected_rep(c.two_ell, c.k, &m));
                           return matrix_report(m);
                         });
    opt_two_ell(sub, c);
    opt_k(sub, c, 64, "Number of factors minus one");
  }
  {
    CLI::App* sub = leaf(spec, "independence",
                         "E (w^{2^{k+1}-1})^lambda t^l(g(w^{2^k}) ... g(w))",
                         {"two_ell", "lambda", "k"}, [](const Config& c) {
                           lac_matrix* m = nullptr;
                           check(lac_independence_moment(c.two_ell, *c.lambda, c.k, &m));
                           return matrix_report(m);
                         });
    opt_two_ell(sub, c);
    sub->add_option("--lambda", c.lambda, "Twist lambda")->required();
    opt_k(sub, c, 64, "Number of factors minus one");
  }
  {
    CLI::App* sub = leaf(spec, "crosscheck",
                         "Compare the moment with an expansion of the product into Laurent "
                         "polynomials",
                         {"two_ell", "lambda", "k", "budget"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_cross_check(c.two_ell, *c.lambda, c.k, c.budget, r);
                           });
                         });
    opt_two_ell(sub, c);
    sub->add_option("--lambda", c.lambda, "Twist lambda")->required();
    opt_k(sub, c, 30, "Number of factors minus one");
    sub->add_option("--budget", c.budget, "Term budget (0 = default)")->capture_default_str();
  }

  // walk
  CLI::App* walk = app.add_subcommand("walk", "Lacunary products in finite groups and SU(2), U(2)");
  walk->require_subcommand(1);
  {
    CLI::App* sub = leaf(walk, "exact",
                         "Exact law of f(2^k t) ... f(t) for a dyadic step function f",
                         {"k", "group", "preset", "input", "budget"}, [](const Config& c) {
                           WalkInputs w;
                           load_walk_inputs(c, w);
                           lac_distribution* d = nullptr;
                           check(lac_walk_exact(w.group, w.f, c.k, c.budget, &d));
                           return distribution_report(d);
                         });
    opt_k(sub, c, 1U << 20, "Largest dilation exponent");
    opt_walk_inputs(sub, c);
    sub->add_option("--budget", c.budget, "State budget (0 = default)")->capture_default_str();
  }
  {
    CLI::App* sub = leaf(walk, "brute", "Same law by enumerating all dyadic intervals",
                         {"k", "group", "preset", "input"}, [](const Config& c) {
                           WalkInputs w;
                           load_walk_inputs(c, w);
                           lac_distribution* d = nullptr;
                           check(lac_walk_brute(w.group, w.f, c.k, &d));
                           return distribution_report(d);
                         });
    opt_k(sub, c, 24, "Largest dilation exponent");
    opt_walk_inputs(sub, c);
  }
  {
    CLI::App* sub = leaf(walk, "tv", "Total variation distance to uniform for each k' = 0..k",
                         {"k", "group", "preset", "input"}, [](const Config& c) {
                           WalkInputs w;
                           load_walk_inputs(c, w);
                           json rows = json::array();
                           std::string csv = "k,tv_distance\n";
                           for (unsigned j = 0; j <= c.k; ++j) {
                             lac_distribution* d = nullptr;
                             check(lac_walk_exact(w.group, w.f, j, c.budget, &d));
                             const Report one = distribution_report(d);
                             const std::string tv = one.doc.at("tv_distance").get<std::string>();
                             rows.push_back({{"k", j}, {"tv_distance", tv}});
                             csv += std::to_string(j) + "," + tv + "\n";
                           }
                           return Report{{{"tv_by_k", rows}}, csv};
                         });
    opt_k(sub, c, 4096, "Largest dilation exponent");
    opt_walk_inputs(sub, c);
  }
  {
    CLI::App* sub = leaf(walk, "mc",
                         "Monte Carlo statistics of g(w^{2^k}) ... g(w) or the U(2) analogue",
                         {"kind", "k", "samples", "seed", "threads"}, [](const Config& c) {
                           return report_of([&](lac_report** r) {
                             return lac_walk_monte_carlo(c.kind.c_str(), c.k, c.samples, c.seed,
                                                         c.threads, r);
                           });
                         });
    sub->add_option("--kind", c.kind, "Matrix family")
        ->check(CLI::IsMember({"su2_g", "u2_G"}))
        ->capture_default_str();
    opt_k(sub, c, 40, "Largest dilation exponent");
    sub->add_option("--samples", c.samples, "Number of samples")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30))
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    sub->add_option("--threads", c.threads, "Worker threads (0 = hardware); output does not depend on it")
        ->capture_default_str();
  }

  // accept
  {
    CLI::App* sub = app.add_subcommand("accept", "Run the acceptance criteria");
    add_common(sub, c);
    sub->add_option("--level", c.level, "Budget level")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    sub->add_option("--perturb-tau", c.perturb_tau,
                    "Add this to one entry of tau before the checks (sensitivity test)")
        ->capture_default_str();
    sub->add_flag("--timings", c.timings, "Include per-criterion wall time");
    leaves.push_back({sub, "accept", {"level", "perturb_tau"}, [](const Config& c) {
                        int all = 0;
                        Report out = report_of([&](lac_report** r) {
                          return lac_acceptance_run(c.level.c_str(), c.perturb_tau,
                                                    c.timings ? 1 : 0, &all, r);
                        });
                        std::string csv = "id,title,passed\n";
                        for (const auto& row : out.doc.at("criteria"))
                          csv += std::to_string(row.at("id").get<int>()) + "," +
                                 row.at("title").get<std::string>() + "," +
                                 (row.at("passed").get<bool>() ? "true" : "false") + "\n";
                        out.csv = csv;
                        return out;
                      }});
  }
  return leaves;
}

void emit_error(int code, const std::string& reason, const std::string& message) {
  std::cerr << json{{"error", reason}, {"exit_code", code}, {"message", message}}.dump() << "\n";
}

void write_output(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) invalid("--out: cannot open '" + c.out + "' for writing");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lacunary walks: Rudin-Shapiro polynomials, SU(2) representations, halving "
      "operators and dyadic products in finite groups"};
  app.require_subcommand(1);
  Config config;
  const std::vector<Leaf> leaves = build_commands(app, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(kExitValidation, "usage", e.what());
    return kExitValidation;
  }

  for (const Leaf& leaf : leaves) {
    if (!leaf.app->parsed()) continue;
    try {
      Report report = leaf.run(config);
      std::string text;
      if (config.format == "csv") {
        if (!report.csv) invalid("--format csv is not available for '" + leaf.command + "'");
        text = *report.csv;
      } else {
        json doc = {{"schema_version", lac_schema_version()},
                    {"command", leaf.command},
                    {"config", config_json(config, leaf.config_keys)}};
        for (auto& [key, value] : report.doc.items()) doc[key] = value;
        text = doc.dump(2) + "\n";
      }
      write_output(config, text);
      if (leaf.command == "accept" && !report.doc.at("all_passed").get<bool>())
        return kExitNumerical;
      return kExitOk;
    } catch (const CliFailure& f) {
      emit_error(f.exit_code, f.reason, f.message);
      return f.exit_code;
    } catch (const std::exception& e) {
      emit_error(kExitNumerical, "internal_error", e.what());
      return kExitNumerical;
    }
  }
  emit_error(kExitValidation, "usage", "no command selected");
  return kExitValidation;
}
