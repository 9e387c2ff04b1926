#include "loclab/validation.hpp"

#include "loclab/matching.hpp"
#include "loclab/montecarlo.hpp"
#include "loclab/report.hpp"
#include "loclab/rng.hpp"
#include "loclab/spatial.hpp"
#include "loclab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace loclab {
namespace {

constexpr long double kPiL = 3.14159265358979323846264338328L;

// Extended-precision reference for e^{-x} I_0(x): 201 power-series terms
// centered on the dominant term, accumulated as a log-sum in long double.
double reference_scaled_i0(double x)
{
    if (x == 0.0)
        return 1.0;
    long double lx = static_cast<long double>(x);
    long double log_half = std::log(lx / 2.0L);
    long k_peak = static_cast<long>(lx / 2.0L);
    long k_lo = std::max(0L, k_peak - 100);
    long k_hi = k_lo + 200;

    long double log_peak = 2.0L * k_peak * log_half - 2.0L * std::lgamma(k_peak + 1.0L);
    long double sum = 0.0L;
    for (long k = k_lo; k <= k_hi; ++k) {
        long double lt = 2.0L * k * log_half - 2.0L * std::lgamma(k + 1.0L);
        sum += std::exp(lt - log_peak);
    }
    return static_cast<double>(std::exp(log_peak + std::log(sum) - lx));
}

double mutated_alpha(double eps, double d_v, double scale)
{
    return std::min(1.0, alpha_range(eps, d_v) * scale);
}

double mutated_n_loc_range_vector(double m, double eps, double d_v, double scale)
{
    double a = mutated_alpha(eps, d_v, scale);
    return std::exp(-2.0 * m * (1.0 - a)) * scaled_bessel_i0(2.0 * a * m);
}

struct SuiteContext {
    std::uint64_t seed;
    unsigned threads;
    std::uint64_t trials;
    double alpha_scale;
};

const std::vector<double> kMValues = {2, 3, 4, 5, 6, 7, 8};
const std::vector<double> kEpsRatios = {0.01, 0.05, 0.1};
constexpr double kDv = 50.0;

CriterionResult criterion_count_coverage(const SuiteContext& ctx)
{
    // 3 repeated seeds x m in {2..8}; 99% Wilson CI must cover
    // e^{-2m} I_0(2m) in all but at most one cell.
    int covered = 0, total = 0;
    for (std::uint64_t s = 0; s < 3; ++s) {
        for (std::size_t mi = 0; mi < kMValues.size(); ++mi) {
            double m = kMValues[mi];
            auto params = ScenarioParams::from_mean(m, kDv, 0.0,
                                                    MeasurementCase::Count);
            std::uint64_t cell_seed = RngStream::mix_key(
                RngStream::mix_key(ctx.seed + s, 101), mi);
            McEstimate est = estimate_n_loc(params, ctx.trials, cell_seed,
                                            ctx.threads, 0.99);
            double truth = n_loc_count(m);
            ++total;
            if (est.ci_low <= truth && truth <= est.ci_high)
                ++covered;
        }
    }
    std::ostringstream detail;
    detail << covered << "/" << total << " cells covered";
    return {"count-closed-form-coverage", covered >= total - 1, detail.str()};
}

CriterionResult criterion_range_vector_coverage(const SuiteContext& ctx)
{
    int covered = 0, total = 0;
    for (std::size_t mi = 0; mi < kMValues.size(); ++mi) {
        for (std::size_t ei = 0; ei < kEpsRatios.size(); ++ei) {
            double m = kMValues[mi];
            double eps = kEpsRatios[ei] * kDv;
            auto params = ScenarioParams::from_mean(
                m, kDv, eps, MeasurementCase::RangeVector);
            std::uint64_t cell_seed = RngStream::mix_key(
                RngStream::mix_key(RngStream::mix_key(ctx.seed, 202), mi), ei);
            McEstimate est = estimate_n_loc(params, ctx.trials, cell_seed,
                                            ctx.threads, 0.99);
            double truth =
                mutated_n_loc_range_vector(m, eps, kDv, ctx.alpha_scale);
            ++total;
            if (est.ci_low <= truth && truth <= est.ci_high)
                ++covered;
        }
    }
    std::ostringstream detail;
    detail << covered << "/" << total << " cells covered";
    bool pass = covered >= static_cast<int>(std::ceil(0.95 * total));
    return {"range-vector-closed-form-coverage", pass, detail.str()};
}

CriterionResult criterion_bound_sandwich(const SuiteContext& ctx)
{
    int lower_ok = 0, lower_total = 0;
    int upper_ok = 0, upper_total = 0;
    for (MeasurementCase c : {MeasurementCase::RelativeLocationSet,
                              MeasurementCase::RangeSet}) {
        for (std::size_t mi = 0; mi < kMValues.size(); ++mi) {
            for (std::size_t ei = 0; ei < kEpsRatios.size(); ++ei) {
                double m = kMValues[mi];
                double ratio = kEpsRatios[ei];
                double eps = ratio * kDv;
                auto params = ScenarioParams::from_mean(m, kDv, eps, c);
                std::uint64_t cell_seed = RngStream::mix_key(
                    RngStream::mix_key(
                        RngStream::mix_key(
                            RngStream::mix_key(ctx.seed, 303 + (c == MeasurementCase::RangeSet)),
                            mi),
                        ei),
                    7);
                McEstimate est = estimate_n_loc(params, ctx.trials, cell_seed,
                                                ctx.threads, 0.99);
                BoundPair bounds =
                    c == MeasurementCase::RelativeLocationSet
                        ? n_loc_relative_bounds(m, eps, kDv)
                        : n_loc_range_set_bounds(m, eps, kDv);
                if (ctx.alpha_scale != 1.0)
                    bounds.lower *= ctx.alpha_scale;
                double halfwidth = 0.5 * (est.ci_high - est.ci_low);
                ++lower_total;
                if (est.p_hat >= bounds.lower - 3.0 * halfwidth)
                    ++lower_ok;
                if (ratio <= 0.05 && m <= 4.0) {
                    ++upper_total;
                    if (est.p_hat <= bounds.upper + 3.0 * halfwidth)
                        ++upper_ok;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "lower " << lower_ok << "/" << lower_total << ", upper "
           << upper_ok << "/" << upper_total;
    bool pass = lower_ok == lower_total && upper_ok == upper_total;
    return {"set-case-bound-sandwich", pass, detail.str()};
}

CriterionResult criterion_saturated_noise(const SuiteContext& ctx)
{
    RngStream rng = RngStream::derive(ctx.seed, 404, 0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double m = 100.0 * (1.0 - rng.next_double()); // in (0, 100]
        double eps = kDv * (1.0 + rng.next_double()); // eps >= d_v
        double a = n_loc_range_vector(m, eps, kDv);
        double b = n_loc_count(m);
        worst = std::max(worst, std::abs(a - b) / b);
    }
    std::ostringstream detail;
    detail << "max relative difference " << worst;
    return {"saturated-noise-reduction", worst <= 1e-14, detail.str()};
}

CriterionResult criterion_asymptotics(const SuiteContext& ctx)
{
    (void)ctx;
    double r50 = n_loc_count(50.0) / asymptotic_n_loc(50.0, 1.0);
    double r100 = n_loc_count(100.0) / asymptotic_n_loc(100.0, 1.0);
    bool ratios_ok = r50 >= 0.99 && r50 <= 1.01 && r100 >= 0.995 && r100 <= 1.005;

    double eps = 0.1 * kDv;
    bool monotone = true;
    double prev = n_loc_range_vector(1.0, eps, kDv);
    for (int m = 2; m <= 40; ++m) {
        double cur = n_loc_range_vector(static_cast<double>(m), eps, kDv);
        if (cur >= prev)
            monotone = false;
        prev = cur;
    }
    bool vanishes = prev < 1e-12;

    std::ostringstream detail;
    detail << "ratio(50)=" << r50 << " ratio(100)=" << r100
           << " P(m=40)=" << prev;
    return {"large-m-asymptotics", ratios_ok && monotone && vanishes,
            detail.str()};
}

CriterionResult criterion_matching_oracle(const SuiteContext& ctx)
{
    RngStream rng = RngStream::derive(ctx.seed, 505, 0);
    std::uint64_t mismatches = 0;
    for (std::size_t k = 1; k <= 7; ++k) {
        for (int rep = 0; rep < 1000; ++rep) {
            std::vector<double> sa(k), sb(k);
            std::vector<Point2D> pa(k), pb(k);
            for (std::size_t i = 0; i < k; ++i) {
                sa[i] = kDv * rng.next_double();
                sb[i] = kDv * rng.next_double();
                pa[i] = sample_uniform_disk(kDv, rng);
                pb[i] = sample_uniform_disk(kDv, rng);
            }
            if (bottleneck_scalar_distance(sa, sb) !=
                brute_force_set_distance(std::span<const double>(sa),
                                         std::span<const double>(sb)))
                ++mismatches;
            if (bottleneck_point_distance(pa, pb) !=
                brute_force_set_distance(std::span<const Point2D>(pa),
                                         std::span<const Point2D>(pb)))
                ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << mismatches << " mismatches over 7000 instances";
    return {"matching-oracle-equivalence", mismatches == 0, detail.str()};
}

CriterionResult criterion_dominance(const SuiteContext& ctx)
{
    auto params = ScenarioParams::from_mean(4.0, kDv, 0.05 * kDv,
                                            MeasurementCase::Count);
    std::uint64_t seed = RngStream::mix_key(ctx.seed, 606);
    std::uint64_t trials = ctx.trials;

    unsigned workers = std::max(1u, ctx.threads);
    std::vector<std::array<std::uint64_t, 4>> hits(workers, {0, 0, 0, 0});
    std::vector<std::uint64_t> violations(workers, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = trials / workers, rem = trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            for (std::uint64_t t = begin; t < end; ++t) {
                auto r = run_trial_all_cases(params, seed, t);
                // [0] count, [1] range vector, [2] relative set, [3] range set
                for (int c = 0; c < 4; ++c)
                    hits[w][c] += r[c];
                if ((r[2] && !r[3]) || (r[3] && !r[0]) || (r[1] && !r[0]))
                    ++violations[w];
            }
        });
        begin = end;
    }
    for (auto& th : pool)
        th.join();

    std::array<std::uint64_t, 4> total{0, 0, 0, 0};
    std::uint64_t bad = 0;
    for (unsigned w = 0; w < workers; ++w) {
        for (int c = 0; c < 4; ++c)
            total[c] += hits[w][c];
        bad += violations[w];
    }
    bool ordered = total[2] <= total[3] && total[3] <= total[0];
    std::ostringstream detail;
    detail << "hits count=" << total[0] << " range-vector=" << total[1]
           << " relative-set=" << total[2] << " range-set=" << total[3]
           << " per-trial violations=" << bad;
    return {"common-randomness-dominance", ordered && bad == 0, detail.str()};
}

CriterionResult criterion_uniqueness(const SuiteContext&)
{
    double p = uniqueness_prob(0.999, 100);
    std::ostringstream detail;
    detail << "uniqueness_prob(0.999, 100) = " << p;
    return {"uniqueness-probability", p >= 0.9047 && p <= 0.9058, detail.str()};
}

CriterionResult criterion_bessel(const SuiteContext&)
{
    double worst = 0.0;
    for (double x : {0.1, 1.0, 4.0, 19.0, 21.0, 100.0, 700.0}) {
        double ref = reference_scaled_i0(x);
        double got = scaled_bessel_i0(x);
        worst = std::max(worst, std::abs(got - ref) / ref);
    }
    std::ostringstream detail;
    detail << "max relative error " << worst;
    return {"scaled-bessel-reference", worst <= 1e-12, detail.str()};
}

CriterionResult criterion_sweep_determinism(const SuiteContext& ctx)
{
    std::vector<MeasurementCase> cases = {MeasurementCase::Count,
                                          MeasurementCase::RangeVector};
    std::vector<double> ms = {2.0, 4.0};
    std::vector<double> epses = {0.5, 2.5};
    std::uint64_t trials = std::max<std::uint64_t>(1, ctx.trials / 5);

    auto render = [&](unsigned parallelism) {
        auto cells = sweep(cases, ms, epses, kDv, trials, ctx.seed,
                           parallelism, 0.95);
        std::vector<OutputRecord> records;
        for (const auto& cell : cells)
            records.push_back(make_record(cell.theory, cell.estimate, kDv,
                                          cell.params.noise_span()));
        return to_csv(records);
    };

    bool same = render(1) == render(8);
    return {"sweep-parallel-determinism", same,
            same ? "csv identical at parallelism 1 and 8"
                 : "csv differs between parallelism 1 and 8"};
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(const ValidationOptions& opts)
{
    SuiteContext ctx;
    ctx.seed = opts.master_seed;
    ctx.threads = opts.threads ? opts.threads
                               : std::max(1u, std::thread::hardware_concurrency());
    ctx.trials = opts.quick ? 10'000 : 100'000;
    ctx.alpha_scale = opts.alpha_scale;

    std::vector<CriterionResult> results;
    results.push_back(criterion_count_coverage(ctx));
    results.push_back(criterion_range_vector_coverage(ctx));
    results.push_back(criterion_bound_sandwich(ctx));
    results.push_back(criterion_saturated_noise(ctx));
    results.push_back(criterion_asymptotics(ctx));
    results.push_back(criterion_matching_oracle(ctx));
    results.push_back(criterion_dominance(ctx));
    results.push_back(criterion_uniqueness(ctx));
    results.push_back(criterion_bessel(ctx));
    results.push_back(criterion_sweep_determinism(ctx));
    return results;
}

} // namespace loclab
