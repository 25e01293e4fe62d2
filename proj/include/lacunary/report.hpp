#pragma once

#include <string>

#include <json.hpp>

#include "lacunary/circle_stats.hpp"
#include "lacunary/dyadic_walk.hpp"
#include "lacunary/halving_op.hpp"
#include "lacunary/rudin_shapiro.hpp"
#include "lacunary/su2_rep.hpp"

// JSON and CSV renderings shared by the C API and the CLI. Keys are
// lowercase snake case; complex numbers are [re, im] pairs.
namespace lacunary::report {

inline constexpr int kSchemaVersion = 1;

nlohmann::json complex_json(Complex c);
nlohmann::json matrix_json(const CMatrix& m);  // row-major [[re, im], ...]

nlohmann::json to_json(const RudinShapiroPair& pair);
nlohmann::json to_json(const ParsevalCheck& check, unsigned k);
nlohmann::json to_json(const AltRecursionCheck& check, unsigned k);
nlohmann::json to_json(const ExactMoment& moment);

nlohmann::json to_json(const DistributionReport& r);
nlohmann::json to_json(const MinModulus& r, unsigned k, std::size_t n);
nlohmann::json to_json(const LinkCheck& r, unsigned k, std::size_t samples,
                       std::uint64_t seed);

nlohmann::json to_json(const RepMatrix& m);
nlohmann::json to_json(const PropertyReport& r);

nlohmann::json to_json(const HalvingOperator& op);
nlohmann::json to_json(const SpectrumReport& r, const HalvingOperator& op,
                       bool with_eigenvalues);
nlohmann::json to_json(const CrossCheck& r, int two_ell, int lambda, unsigned k);

nlohmann::json to_json(const WalkStatistics& s);

std::string histogram_csv(const std::vector<HistogramBin>& bins);
std::string grid_csv(const DistributionReport& r);
std::string spectrum_csv_header();
std::string spectrum_csv_row(const SpectrumReport& r, const HalvingOperator& op);
std::string rs_pair_csv(const RudinShapiroPair& pair);
std::string evaluation_csv(const EvaluationGrid& grid);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace lacunary::report
