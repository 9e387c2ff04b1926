#pragma once

#include "loclab/montecarlo.hpp"
#include "loclab/theory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loclab {

/// One output row: the theory columns are always present, the Monte Carlo
/// columns are empty for theory-only runs.
struct OutputRecord {
    std::string measurement_case;
    double m = 0.0;
    double d_v = 0.0;
    double eps = 0.0;
    double eps_ratio = 0.0;
    std::string theory_kind; // "exact" or "bounds"
    std::optional<double> theory_n_loc;
    std::optional<double> theory_lower;
    std::optional<double> theory_upper;
    std::optional<double> mc_p_hat;
    std::optional<double> mc_ci_low;
    std::optional<double> mc_ci_high;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
};

OutputRecord make_record(const TheoryResult& theory, double d_v, double eps);
OutputRecord make_record(const TheoryResult& theory, const McEstimate& estimate,
                         double d_v, double eps);

/// 17 significant digits, enough for exact double round-trips.
std::string format_double(double v);

std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json(const std::vector<OutputRecord>& records);

} // namespace loclab
