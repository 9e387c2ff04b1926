#include "loclab/montecarlo.hpp"

#include "loclab/matching.hpp"
#include "loclab/measurements.hpp"
#include "loclab/rng.hpp"
#include "loclab/spatial.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace loclab {
namespace {

// Acklam's rational approximation to the standard normal quantile,
// polished with one Halley step against erfc.
double normal_quantile(double p)
{
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("quantile probability must lie in (0, 1)");

    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
             a[5]) *
            q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r +
             1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
              c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(2.0 * 3.14159265358979323846) *
               std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

std::pair<LandmarkPattern, LandmarkPattern>
sample_trial_patterns(const ScenarioParams& params, std::uint64_t master_seed,
                      std::uint64_t trial_index)
{
    RngStream rng_a = RngStream::derive(master_seed, trial_index, 0);
    RngStream rng_b = RngStream::derive(master_seed, trial_index, 1);
    return {sample_landmark_pattern(params, rng_a),
            sample_landmark_pattern(params, rng_b)};
}

bool overlap_for_case(MeasurementCase c, const LandmarkPattern& a,
                      const LandmarkPattern& b, double eps)
{
    return overlap_indicator(c, extract_measurement(c, a),
                             extract_measurement(c, b), eps);
}

} // namespace

bool run_trial(const ScenarioParams& params, std::uint64_t master_seed,
               std::uint64_t trial_index)
{
    auto [a, b] = sample_trial_patterns(params, master_seed, trial_index);
    return overlap_for_case(params.measurement_case(), a, b,
                            params.noise_span());
}

std::array<bool, 4> run_trial_all_cases(const ScenarioParams& params,
                                        std::uint64_t master_seed,
                                        std::uint64_t trial_index)
{
    auto [a, b] = sample_trial_patterns(params, master_seed, trial_index);
    double eps = params.noise_span();
    return {
        overlap_for_case(MeasurementCase::Count, a, b, eps),
        overlap_for_case(MeasurementCase::RangeVector, a, b, eps),
        overlap_for_case(MeasurementCase::RelativeLocationSet, a, b, eps),
        overlap_for_case(MeasurementCase::RangeSet, a, b, eps),
    };
}

std::pair<double, double> wilson_interval(std::uint64_t hits,
                                          std::uint64_t trials,
                                          double confidence)
{
    if (trials == 0)
        throw std::invalid_argument("Wilson interval requires trials >= 1");
    if (hits > trials)
        throw std::invalid_argument("hits must not exceed trials");
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw std::invalid_argument("confidence must lie in (0, 1)");

    double z = normal_quantile(0.5 + confidence / 2.0);
    double n = static_cast<double>(trials);
    double p = static_cast<double>(hits) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

McEstimate estimate_n_loc(const ScenarioParams& params, std::uint64_t trials,
                          std::uint64_t master_seed, unsigned parallelism,
                          double confidence)
{
    if (trials == 0)
        throw std::invalid_argument("trials must be >= 1");
    if (parallelism == 0)
        throw std::invalid_argument("parallelism must be >= 1");

    unsigned workers = parallelism;
    if (workers > trials)
        workers = static_cast<unsigned>(trials);

    // Contiguous trial ranges per worker; hit counts add associatively,
    // so the total is schedule-independent.
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = trials / workers;
    std::uint64_t rem = trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            std::uint64_t local = 0;
            for (std::uint64_t t = begin; t < end; ++t)
                if (run_trial(params, master_seed, t))
                    ++local;
            partial[w] = local;
        });
        begin = end;
    }
    for (auto& th : pool)
        th.join();

    std::uint64_t hits = 0;
    for (std::uint64_t h : partial)
        hits += h;

    McEstimate est;
    est.trials = trials;
    est.hits = hits;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    auto [lo, hi] = wilson_interval(hits, trials, confidence);
    est.ci_low = lo;
    est.ci_high = hi;
    est.confidence = confidence;
    est.master_seed = master_seed;
    est.measurement_case = params.measurement_case();
    return est;
}

std::vector<SweepCell> sweep(const std::vector<MeasurementCase>& cases,
                             const std::vector<double>& m_values,
                             const std::vector<double>& eps_values, double d_v,
                             std::uint64_t trials, std::uint64_t master_seed,
                             unsigned parallelism, double confidence)
{
    if (cases.empty() || m_values.empty() || eps_values.empty())
        throw std::invalid_argument("sweep grids must be nonempty");

    std::vector<SweepCell> cells;
    cells.reserve(cases.size() * m_values.size() * eps_values.size());
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        for (std::size_t mi = 0; mi < m_values.size(); ++mi) {
            for (std::size_t ei = 0; ei < eps_values.size(); ++ei) {
                double m = m_values[mi];
                double eps = eps_values[ei];
                ScenarioParams params = ScenarioParams::from_mean(
                    m, d_v, eps, cases[ci]);
                std::uint64_t cell_seed = RngStream::mix_key(
                    RngStream::mix_key(RngStream::mix_key(master_seed, ci), mi),
                    ei);
                McEstimate est = estimate_n_loc(params, trials, cell_seed,
                                                parallelism, confidence);
                est.master_seed = master_seed; // report the user-facing seed
                TheoryResult theory = theory_for(cases[ci], m, eps, d_v);
                cells.push_back(SweepCell{params, est, theory});
            }
        }
    }
    return cells;
}

} // namespace loclab
