#include "loclab/rng.hpp"
#include "loclab/spatial.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace loclab;

TEST_CASE("poisson mean zero is degenerate")
{
    RngStream rng = RngStream::derive(1, 0, 0);
    for (int i = 0; i < 100; ++i)
        CHECK(sample_poisson_count(0.0, rng) == 0);
}

TEST_CASE("poisson rejects invalid mean")
{
    RngStream rng = RngStream::derive(1, 0, 0);
    CHECK_THROWS_AS(sample_poisson_count(-1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_poisson_count(std::nan(""), rng),
                    std::invalid_argument);
}

TEST_CASE("poisson sample moments at mean 4")
{
    RngStream rng = RngStream::derive(7, 0, 0);
    const int n = 1'000'000;
    double sum = 0.0;
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
        std::size_t k = sample_poisson_count(4.0, rng);
        sum += static_cast<double>(k);
        zeros += k == 0;
    }
    double mean = sum / n;
    // 3 sigma CLT band on the sample mean, sd = sqrt(4)
    CHECK(std::abs(mean - 4.0) < 3.0 * 2.0 / std::sqrt(double(n)));

    double p0 = std::exp(-4.0);
    double sigma0 = std::sqrt(p0 * (1.0 - p0) / n);
    CHECK(std::abs(double(zeros) / n - p0) < 3.0 * sigma0);
}

TEST_CASE("poisson rejection branch matches pmf at mean 40")
{
    RngStream rng = RngStream::derive(11, 0, 0);
    const int n = 400'000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        double k = static_cast<double>(sample_poisson_count(40.0, rng));
        sum += k;
        sumsq += k * k;
    }
    double mean = sum / n;
    double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean - 40.0) < 3.0 * std::sqrt(40.0 / n));
    CHECK(std::abs(var - 40.0) < 0.5);
}

TEST_CASE("uniform disk support and area ratio")
{
    RngStream rng = RngStream::derive(13, 0, 0);
    const int n = 1'000'000;
    int inner = 0;
    double norm_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        Point2D p = sample_uniform_disk(1.0, rng);
        double r = p.norm();
        CHECK(r <= 1.0);
        inner += r <= 1.0 / std::sqrt(2.0);
        norm_sum += r;
    }
    double sigma = std::sqrt(0.25 / n);
    CHECK(std::abs(double(inner) / n - 0.5) < 3.0 * sigma);
    // E[r] = 2/3 on the unit disk, var = 1/2 - 4/9
    double sd = std::sqrt((0.5 - 4.0 / 9.0) / n);
    CHECK(std::abs(norm_sum / n - 2.0 / 3.0) < 3.0 * sd);
}

TEST_CASE("uniform disk rejects nonpositive radius")
{
    RngStream rng = RngStream::derive(1, 0, 0);
    CHECK_THROWS_AS(sample_uniform_disk(0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_uniform_disk(-2.0, rng), std::invalid_argument);
}

TEST_CASE("landmark pattern stays inside the visibility disk")
{
    auto params = ScenarioParams::from_mean(6.0, 50.0, 1.0,
                                            MeasurementCase::Count);
    for (std::uint64_t t = 0; t < 200; ++t) {
        RngStream rng = RngStream::derive(17, t, 0);
        LandmarkPattern pattern = sample_landmark_pattern(params, rng);
        CHECK(pattern.radius == 50.0);
        for (const Point2D& p : pattern.points)
            CHECK(p.norm() <= 50.0);
    }
}

TEST_CASE("landmark count matches the Poisson mean")
{
    auto params = ScenarioParams::from_mean(4.0, 50.0, 0.0,
                                            MeasurementCase::Count);
    const int n = 100'000;
    double sum = 0.0;
    for (std::uint64_t t = 0; t < n; ++t) {
        RngStream rng = RngStream::derive(19, t, 0);
        sum += static_cast<double>(sample_landmark_pattern(params, rng).size());
    }
    CHECK(std::abs(sum / n - 4.0) < 3.0 * 2.0 / std::sqrt(double(n)));
}

TEST_CASE("zero intensity yields empty patterns")
{
    auto params = ScenarioParams(0.0, 50.0, 1.0, MeasurementCase::Count);
    RngStream rng = RngStream::derive(23, 0, 0);
    CHECK(sample_landmark_pattern(params, rng).empty());
}

TEST_CASE("conditional radius distribution is r^2/d^2 (KS test)")
{
    // Conditioned on the count, points are i.i.d. uniform; the radius CDF
    // is (r/d)^2. One-sample Kolmogorov-Smirnov at alpha ~= 1e-3.
    auto params = ScenarioParams::from_mean(5.0, 50.0, 0.0,
                                            MeasurementCase::Count);
    std::vector<double> radii;
    for (std::uint64_t t = 0; t < 20'000 && radii.size() < 50'000; ++t) {
        RngStream rng = RngStream::derive(29, t, 0);
        for (const Point2D& p : sample_landmark_pattern(params, rng).points)
            radii.push_back(p.norm());
    }
    std::sort(radii.begin(), radii.end());
    double n = static_cast<double>(radii.size());
    double dmax = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        double cdf = (radii[i] / 50.0) * (radii[i] / 50.0);
        dmax = std::max(dmax, std::abs(cdf - (i + 1) / n));
        dmax = std::max(dmax, std::abs(cdf - i / n));
    }
    CHECK(dmax < 1.95 / std::sqrt(n)); // K-S critical value at alpha ~ 0.001
}

TEST_CASE("identical stream triple reproduces the pattern exactly")
{
    auto params = ScenarioParams::from_mean(4.0, 50.0, 0.0,
                                            MeasurementCase::Count);
    RngStream a = RngStream::derive(31, 9, 1);
    RngStream b = RngStream::derive(31, 9, 1);
    LandmarkPattern pa = sample_landmark_pattern(params, a);
    LandmarkPattern pb = sample_landmark_pattern(params, b);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        CHECK(pa.points[i].x == pb.points[i].x);
        CHECK(pa.points[i].y == pb.points[i].y);
    }
}

TEST_CASE("distinct realization streams are uncorrelated")
{
    auto params = ScenarioParams::from_mean(4.0, 50.0, 0.0,
                                            MeasurementCase::Count);
    const int n = 100'000;
    double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
        RngStream ra = RngStream::derive(37, t, 0);
        RngStream rb = RngStream::derive(37, t, 1);
        double ka = static_cast<double>(sample_landmark_pattern(params, ra).size());
        double kb = static_cast<double>(sample_landmark_pattern(params, rb).size());
        sa += ka;
        sb += kb;
        saa += ka * ka;
        sbb += kb * kb;
        sab += ka * kb;
    }
    double cov = sab / n - (sa / n) * (sb / n);
    double va = saa / n - (sa / n) * (sa / n);
    double vb = sbb / n - (sb / n) * (sb / n);
    double corr = cov / std::sqrt(va * vb);
    CHECK(std::abs(corr) < 3.0 / std::sqrt(double(n)));
}
