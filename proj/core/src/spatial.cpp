#include "loclab/spatial.hpp"

#include <cmath>

namespace loclab {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Chained multiplication inversion; exact and fast for small means.
std::size_t poisson_inversion(double mean, RngStream& rng)
{
    double threshold = std::exp(-mean);
    std::size_t k = 0;
    double prod = rng.next_double();
    while (prod > threshold) {
        ++k;
        prod *= rng.next_double();
    }
    return k;
}

// Hoermann's PTRS transformed rejection, valid for mean >= 10.
std::size_t poisson_ptrs(double mean, RngStream& rng)
{
    double log_mean = std::log(mean);
    double b = 0.931 + 2.53 * std::sqrt(mean);
    double a = -0.059 + 0.02483 * b;
    double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        double u = rng.next_double() - 0.5;
        double v = rng.next_double();
        double us = 0.5 - std::abs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r)
            return static_cast<std::size_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us))
            continue;
        double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        double rhs = -mean + kf * log_mean - std::lgamma(kf + 1.0);
        if (lhs <= rhs)
            return static_cast<std::size_t>(kf);
    }
}

} // namespace

std::size_t sample_poisson_count(double mean, RngStream& rng)
{
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("Poisson mean must be finite and >= 0");
    if (mean == 0.0)
        return 0;
    if (mean < 30.0)
        return poisson_inversion(mean, rng);
    return poisson_ptrs(mean, rng);
}

Point2D sample_uniform_disk(double radius, RngStream& rng)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("disk radius must be finite and > 0");
    double r = radius * std::sqrt(rng.next_double());
    double theta = 2.0 * kPi * rng.next_double();
    return Point2D{r * std::cos(theta), r * std::sin(theta)};
}

LandmarkPattern sample_landmark_pattern(const ScenarioParams& params,
                                        RngStream& rng)
{
    LandmarkPattern pattern;
    pattern.radius = params.visibility();
    std::size_t count = sample_poisson_count(params.mean_count(), rng);
    pattern.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pattern.points.push_back(sample_uniform_disk(params.visibility(), rng));
    return pattern;
}

} // namespace loclab
