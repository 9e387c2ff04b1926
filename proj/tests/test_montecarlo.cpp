#include "loclab/montecarlo.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace loclab;

TEST_CASE("wilson interval reference values")
{
    auto [lo, hi] = wilson_interval(10, 100, 0.95);
    CHECK(lo == doctest::Approx(0.055229137056425712).epsilon(1e-10));
    CHECK(hi == doctest::Approx(0.17436566151489788).epsilon(1e-10));

    auto [lo0, hi0] = wilson_interval(0, 50, 0.95);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);
    CHECK(hi0 < 0.2);

    auto [lo1, hi1] = wilson_interval(50, 50, 0.95);
    CHECK(hi1 == 1.0);
    CHECK(lo1 > 0.8);

    CHECK_THROWS_AS(wilson_interval(0, 0, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(5, 4, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(1, 10, 1.5), std::invalid_argument);
}

TEST_CASE("wilson interval brackets the point estimate")
{
    for (std::uint64_t hits : {0ull, 1ull, 7ull, 42ull, 100ull}) {
        auto [lo, hi] = wilson_interval(hits, 100, 0.99);
        double p = double(hits) / 100.0;
        CHECK(lo <= p);
        CHECK(hi >= p);
        CHECK(lo >= 0.0);
        CHECK(hi <= 1.0);
    }
}

TEST_CASE("run_trial is deterministic in (seed, trial)")
{
    auto p = ScenarioParams::from_mean(4.0, 50.0, 2.5,
                                       MeasurementCase::RangeVector);
    for (std::uint64_t t = 0; t < 200; ++t)
        CHECK(run_trial(p, 99, t) == run_trial(p, 99, t));
}

TEST_CASE("degenerate scenarios")
{
    // zero intensity: both maps empty, counts match, always a hit
    auto empty = ScenarioParams::from_mean(0.0, 50.0, 1.0,
                                           MeasurementCase::Count);
    for (std::uint64_t t = 0; t < 50; ++t)
        CHECK(run_trial(empty, 7, t));

    // saturated noise: range-vector overlap reduces to a count match
    auto sat = ScenarioParams::from_mean(3.0, 50.0, 120.0,
                                         MeasurementCase::RangeVector);
    auto cnt = ScenarioParams::from_mean(3.0, 50.0, 120.0,
                                         MeasurementCase::Count);
    for (std::uint64_t t = 0; t < 500; ++t)
        CHECK(run_trial(sat, 11, t) == run_trial(cnt, 11, t));
}

TEST_CASE("all-cases trial matches the single-case trials")
{
    auto base = ScenarioParams::from_mean(4.0, 50.0, 2.5,
                                          MeasurementCase::Count);
    const MeasurementCase order[4] = {MeasurementCase::Count,
                                      MeasurementCase::RangeVector,
                                      MeasurementCase::RelativeLocationSet,
                                      MeasurementCase::RangeSet};
    for (std::uint64_t t = 0; t < 100; ++t) {
        auto all = run_trial_all_cases(base, 5, t);
        for (int c = 0; c < 4; ++c) {
            auto p = ScenarioParams::from_mean(4.0, 50.0, 2.5, order[c]);
            CHECK(all[std::size_t(c)] == run_trial(p, 5, t));
        }
    }
}

TEST_CASE("estimate is independent of parallelism")
{
    auto p = ScenarioParams::from_mean(4.0, 50.0, 2.5,
                                       MeasurementCase::RangeSet);
    auto serial = estimate_n_loc(p, 4000, 31, 1, 0.95);
    auto wide = estimate_n_loc(p, 4000, 31, 8, 0.95);
    CHECK(serial.hits == wide.hits);
    CHECK(serial.p_hat == wide.p_hat);
    CHECK(serial.ci_low == wide.ci_low);
    CHECK(serial.ci_high == wide.ci_high);
}

TEST_CASE("estimate edge cases")
{
    auto p = ScenarioParams::from_mean(2.0, 50.0, 1.0, MeasurementCase::Count);
    auto one = estimate_n_loc(p, 1, 3, 1, 0.95);
    CHECK((one.p_hat == 0.0 || one.p_hat == 1.0));
    CHECK(one.trials == 1);
    CHECK_THROWS_AS(estimate_n_loc(p, 0, 3, 1, 0.95), std::invalid_argument);
}

TEST_CASE("count-case estimate covers the closed form")
{
    auto p = ScenarioParams::from_mean(2.0, 50.0, 0.0, MeasurementCase::Count);
    auto est = estimate_n_loc(p, 200000, 2024, 4, 0.99);
    double truth = n_loc_count(2.0);
    CHECK(est.ci_low <= truth);
    CHECK(est.ci_high >= truth);
    CHECK(est.p_hat == doctest::Approx(truth).epsilon(0.05));
}

TEST_CASE("sweep produces the full grid with attached theory")
{
    std::vector<MeasurementCase> cases = {MeasurementCase::Count,
                                          MeasurementCase::RangeSet};
    std::vector<double> ms = {2.0, 4.0};
    std::vector<double> eps = {0.5, 2.5};
    auto cells = sweep(cases, ms, eps, 50.0, 500, 77, 2, 0.95);
    CHECK(cells.size() == 8);
    for (const auto& cell : cells) {
        CHECK(cell.estimate.trials == 500);
        CHECK(cell.theory.m == doctest::Approx(cell.params.mean_count()));
        if (cell.params.measurement_case() == MeasurementCase::Count)
            CHECK(cell.theory.kind == TheoryResult::Kind::Exact);
        else
            CHECK(cell.theory.kind == TheoryResult::Kind::Bounds);
    }

    // rerun is byte-identical
    auto again = sweep(cases, ms, eps, 50.0, 500, 77, 5, 0.95);
    REQUIRE(again.size() == cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(cells[i].estimate.hits == again[i].estimate.hits);
        CHECK(cells[i].estimate.p_hat == again[i].estimate.p_hat);
    }

    CHECK_THROWS_AS(sweep({}, ms, eps, 50.0, 10, 1, 1, 0.95),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep(cases, {}, eps, 50.0, 10, 1, 1, 0.95),
                    std::invalid_argument);
}
