#pragma once

#include "loclab/geometry.hpp"
#include "loclab/theory.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace loclab {

/// Monte Carlo estimate of the non-localizability probability.
struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0; // non-localizable events
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double confidence = 0.95;
    std::uint64_t master_seed = 0;
    MeasurementCase measurement_case = MeasurementCase::Count;
};

/// One paired-realization trial: two independent patterns from streams
/// (seed, trial, 0) and (seed, trial, 1); true iff their measurements overlap.
bool run_trial(const ScenarioParams& params, std::uint64_t master_seed,
               std::uint64_t trial_index);

/// The same trial evaluated under all four measurement cases on the same
/// pattern pair (common random numbers). Order: Count, RangeVector,
/// RelativeLocationSet, RangeSet.
std::array<bool, 4> run_trial_all_cases(const ScenarioParams& params,
                                        std::uint64_t master_seed,
                                        std::uint64_t trial_index);

/// Standard Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t hits,
                                          std::uint64_t trials,
                                          double confidence);

/// Estimate P_N-Loc over the given number of trials. The result is
/// identical for any parallelism because trials own their rng streams.
McEstimate estimate_n_loc(const ScenarioParams& params, std::uint64_t trials,
                          std::uint64_t master_seed, unsigned parallelism,
                          double confidence);

struct SweepCell {
    ScenarioParams params;
    McEstimate estimate;
    TheoryResult theory;
};

/// Full cross product of cases x m values x eps values; each cell draws
/// its own derived seed from the master seed and the grid indices.
std::vector<SweepCell> sweep(const std::vector<MeasurementCase>& cases,
                             const std::vector<double>& m_values,
                             const std::vector<double>& eps_values, double d_v,
                             std::uint64_t trials, std::uint64_t master_seed,
                             unsigned parallelism, double confidence);

} // namespace loclab
