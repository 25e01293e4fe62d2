#include "lacunary/report.hpp"

#include <charconv>

namespace lacunary::report {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RudinShapiroPair& pair) {
  json p = json::array(), q = json::array();
  for (auto c : pair.p) p.push_back(static_cast<int>(c));
  for (auto c : pair.q) q.push_back(static_cast<int>(c));
  return {{"k", pair.k}, {"length", pair.p.size()}, {"p", p}, {"q", q}};
}

json to_json(const ParsevalCheck& check, unsigned k) {
  return {{"k", k},
          {"holds", check.holds},
          {"residual_terms", check.residual.size()},
          {"residual", to_string(check.residual)}};
}

json to_json(const AltRecursionCheck& check, unsigned k) {
  return {{"k", k},
          {"holds", check.holds()},
          {"recursion_holds", check.recursion_holds},
          {"odd_values_vanish", check.odd_values_vanish}};
}

json to_json(const ExactMoment& moment) {
  json out = {{"k", moment.k}, {"n", moment.n}};
  if (moment.m != moment.n || moment.inv_sqrt2) out["m"] = moment.m;
  out["value"] = moment.to_string();
  out["value_float"] = moment.to_double();
  out["constant_term"] = moment.constant_term.get_str();
  return out;
}

json to_json(const DistributionReport& r) {
  json out = {{"k", r.k},
              {"n", r.n},
              {"min_modulus", r.min_modulus},
              {"max_modulus", r.max_modulus}};
  if (!r.bins.empty()) {
    out["ks_statistic"] = r.ks_statistic;
    json bins = json::array();
    for (const auto& b : r.bins)
      bins.push_back({{"bin_low", b.low}, {"bin_high", b.high}, {"mass", b.mass}});
    out["bins"] = bins;
  }
  if (r.grid_size > 0) {
    out["grid_size"] = r.grid_size;
    out["max_cell_deviation"] = r.max_cell_deviation;
    out["in_disc_frequency"] = r.in_disc_frequency;
    out["cell_frequency"] = r.cell_frequency;
    out["cell_expected"] = r.cell_expected;
  }
  return out;
}

json to_json(const MinModulus& r, unsigned k, std::size_t n) {
  return {{"k", k},
          {"n", n},
          {"min_modulus", r.value},
          {"argmin_index", r.index},
          {"argmin_point", complex_json(r.point)}};
}

json to_json(const LinkCheck& r, unsigned k, std::size_t samples,
             std::uint64_t seed) {
  return {{"k", k},
          {"samples", samples},
          {"seed", seed},
          {"max_residual", r.max_residual},
          {"literal_form_residual", r.literal_form_residual},
          {"max_norm_defect", r.max_norm_defect}};
}

json to_json(const RepMatrix& m) {
  return {{"two_ell", m.ell.doubled()},
          {"ell", m.ell.to_string()},
          {"unitarity_residual", unitarity_residual(m.entries)},
          {"entries", matrix_json(m.entries)}};
}

json to_json(const PropertyReport& r) {
  json patterns = json::array();
  for (const auto& p : r.patterns)
    patterns.push_back({{"label", p.label},
                        {"rows", p.rows},
                        {"columns", p.columns},
                        {"min_singular_value", p.min_singular_value}});
  json out = {{"two_ell", r.ell.doubled()},
              {"ell", r.ell.to_string()},
              {"tau_min_singular_value", r.tau_min_singular_value},
              {"abs_tau_low_corner", r.abs_tau_low_corner},
              {"abs_tau_high_corner", r.abs_tau_high_corner},
              {"patterns", patterns},
              {"passes", r.passes()}};
  out["abs_tau_center"] = r.abs_tau_center ? json(*r.abs_tau_center) : json(nullptr);
  return out;
}

json to_json(const HalvingOperator& op) {
  json index = json::array();
  for (const auto& b : op.index_map()) index.push_back({b.two_h, b.exponent});
  std::size_t nonzero = 0;
  for (Eigen::Index c = 0; c < op.matrix().cols(); ++c)
    for (Eigen::Index r = 0; r < op.matrix().rows(); ++r)
      if (op.matrix()(r, c) != Complex(0.0, 0.0)) ++nonzero;
  return {{"two_ell", op.ell().doubled()},
          {"lambda", op.lambda() ? json(*op.lambda()) : json(nullptr)},
          {"dim", op.dim()},
          {"exponent_low", op.exponent_low()},
          {"exponent_high", op.exponent_high()},
          {"nonzero_entries", nonzero},
          {"index_map", index},
          {"matrix", matrix_json(op.matrix())}};
}

json to_json(const SpectrumReport& r, const HalvingOperator& op,
             bool with_eigenvalues) {
  json out = {{"two_ell", op.ell().doubled()},
              {"lambda", op.lambda() ? json(*op.lambda()) : json(nullptr)},
              {"dim", op.dim()},
              {"spectral_radius", r.spectral_radius},
              {"margin", r.margin}};
  if (with_eigenvalues) {
    json ev = json::array();
    for (const auto& e : r.eigenvalues) ev.push_back(complex_json(e));
    out["eigenvalues"] = ev;
  }
  return out;
}

json to_json(const CrossCheck& r, int two_ell, int lambda, unsigned k) {
  json out = {{"two_ell", two_ell},
              {"lambda", lambda},
              {"k", k},
              {"case", moment_case_name(classify(two_ell, lambda))},
              {"max_residual", r.max_residual},
              {"min_exponent", r.min_exponent},
              {"max_exponent", r.max_exponent},
              {"support_ok", r.support_ok}};
  if (r.expected_rep_residual) out["expected_rep_residual"] = *r.expected_rep_residual;
  return out;
}

json to_json(const WalkStatistics& s) {
  json reps = json::array();
  for (const auto& r : s.rep_means)
    reps.push_back({{"two_ell", r.two_ell},
                    {"max_abs_mean", r.max_abs_mean},
                    {"mean", matrix_json(r.mean)}});
  json out = {{"kind", walk_kind_name(s.kind)},
              {"k", s.k},
              {"samples", s.samples},
              {"seed", s.seed},
              {"sigma", s.sigma},
              {"max_unitarity_defect", s.max_unitarity_defect},
              {"rep_means", reps},
              {"entry_ks", s.entry_ks},
              {"entry_histogram", s.entry_histogram},
              {"phase_correlation", s.phase_correlation}};
  if (s.kind == WalkKind::kU2BigG) {
    out["det_phase_ks"] = s.det_phase_ks;
    out["det_phase_histogram"] = s.det_phase_histogram;
  }
  return out;
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::string out = "bin_low,bin_high,mass\n";
  for (const auto& b : bins)
    out += format_double(b.low) + "," + format_double(b.high) + "," +
           format_double(b.mass) + "\n";
  return out;
}

std::string grid_csv(const DistributionReport& r) {
  std::string out = "cell_x,cell_y,x_low,x_high,y_low,y_high,frequency,expected\n";
  const double g = static_cast<double>(r.grid_size);
  for (std::size_t iy = 0; iy < r.grid_size; ++iy) {
    for (std::size_t ix = 0; ix < r.grid_size; ++ix) {
      const std::size_t idx = iy * r.grid_size + ix;
      const double x0 = -1.0 + 2.0 * static_cast<double>(ix) / g;
      const double y0 = -1.0 + 2.0 * static_cast<double>(iy) / g;
      out += std::to_string(ix) + "," + std::to_string(iy) + "," +
             format_double(x0) + "," + format_double(x0 + 2.0 / g) + "," +
             format_double(y0) + "," + format_double(y0 + 2.0 / g) + "," +
             format_double(r.cell_frequency[idx]) + "," +
             format_double(r.cell_expected[idx]) + "\n";
    }
  }
  return out;
}

std::string spectrum_csv_header() {
  return "two_ell,lambda,dim,spectral_radius,margin\n";
}

std::string spectrum_csv_row(const SpectrumReport& r, const HalvingOperator& op) {
  return std::to_string(op.ell().doubled()) + "," +
         (op.lambda() ? std::to_string(*op.lambda()) : std::string()) + "," +
         std::to_string(op.dim()) + "," + format_double(r.spectral_radius) + "," +
         format_double(r.margin) + "\n";
}

std::string rs_pair_csv(const RudinShapiroPair& pair) {
  std::string out = "index,p,q\n";
  for (std::size_t i = 0; i < pair.p.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(pair.p[i]) + "," +
           std::to_string(pair.q[i]) + "\n";
  return out;
}

std::string evaluation_csv(const EvaluationGrid& grid) {
  std::string out = "index,re,im\n";
  for (std::size_t j = 0; j < grid.values.size(); ++j)
    out += std::to_string(j) + "," + format_double(grid.values[j].real()) + "," +
           format_double(grid.values[j].imag()) + "\n";
  return out;
}

}  // namespace lacunary::report
