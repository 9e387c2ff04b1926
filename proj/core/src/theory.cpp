#include "loclab/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace loclab {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_finite_nonneg(double x, const char* name)
{
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument(std::string(name) +
                                    " must be finite and >= 0");
}

void require_positive(double x, const char* name)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument(std::string(name) +
                                    " must be finite and > 0");
}

// log of the Poisson pmf m^k e^{-m} / k!; handles m = 0 cleanly.
double log_poisson_pmf(std::size_t k, double m)
{
    if (m == 0.0)
        return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    double kd = static_cast<double>(k);
    return kd * std::log(m) - std::lgamma(kd + 1.0) - m;
}

} // namespace

double scaled_bessel_i0(double x)
{
    require_finite_nonneg(x, "scaled_bessel_i0 argument");

    if (x < 20.0) {
        // All-positive power series, no cancellation.
        double half_sq = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= half_sq / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        return sum * std::exp(-x);
    }

    // Asymptotic expansion: (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! 8^k x^k),
    // truncated at the smallest term.
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        double odd = 2.0 * k - 1.0;
        double next = term * odd * odd / (8.0 * k * x);
        if (next >= term)
            break;
        term = next;
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

double n_loc_count(double m)
{
    require_finite_nonneg(m, "m");
    return scaled_bessel_i0(2.0 * m);
}

double n_loc_count_lower(double m)
{
    require_finite_nonneg(m, "m");
    return std::exp(-2.0 * m);
}

double alpha_range(double eps, double d_v)
{
    require_finite_nonneg(eps, "eps");
    require_positive(d_v, "d_v");
    if (eps >= d_v)
        return 1.0;
    double d2 = d_v * d_v;
    double num = 8.0 * d2 * d_v * eps - 6.0 * d2 * eps * eps +
                 eps * eps * eps * eps;
    return std::sqrt(num / (3.0 * d2 * d2));
}

double n_loc_range_vector(double m, double eps, double d_v)
{
    require_finite_nonneg(m, "m");
    double alpha = alpha_range(eps, d_v);
    return std::exp(-2.0 * m * (1.0 - alpha)) * scaled_bessel_i0(2.0 * alpha * m);
}

BoundPair n_loc_relative_bounds(double m, double eps, double d_v)
{
    require_finite_nonneg(m, "m");
    require_finite_nonneg(eps, "eps");
    require_positive(d_v, "d_v");
    double ratio = eps / d_v;
    double lower =
        std::exp(-2.0 * m * (1.0 - ratio)) * scaled_bessel_i0(2.0 * m * ratio);
    double upper = std::exp(m * m * ratio * ratio - 2.0 * m);
    return BoundPair{lower, upper};
}

BoundPair n_loc_range_set_bounds(double m, double eps, double d_v)
{
    require_finite_nonneg(m, "m");
    require_finite_nonneg(eps, "eps");
    require_positive(d_v, "d_v");
    double lower = n_loc_range_vector(m, eps, d_v);
    double d2 = d_v * d_v;
    double poly =
        eps * (8.0 * d2 * d_v - 6.0 * d2 * eps + eps * eps * eps) /
        (3.0 * d2 * d2);
    double upper = std::exp(m * m * poly - 2.0 * m);
    return BoundPair{lower, upper};
}

double range_pdf(double r, double d_v)
{
    require_positive(d_v, "d_v");
    if (r < 0.0 || r > d_v)
        return 0.0;
    return 2.0 * r / (d_v * d_v);
}

double range_window_prob(double r, double eps, double d_v)
{
    require_positive(d_v, "d_v");
    require_finite_nonneg(eps, "eps");
    if (!(r >= 0.0) || !(r <= d_v))
        throw std::invalid_argument("r must lie in [0, d_v]");

    double d2 = d_v * d_v;
    if (eps >= d_v)
        return 1.0;
    if (eps < 0.5 * d_v) {
        if (r < eps)
            return (r + eps) * (r + eps) / d2;
        if (r < d_v - eps)
            return 4.0 * eps * r / d2;
        return 1.0 - (r - eps) * (r - eps) / d2;
    }
    // d_v/2 <= eps < d_v
    if (r < d_v - eps)
        return (r + eps) * (r + eps) / d2;
    if (r < eps)
        return 1.0;
    return 1.0 - (r - eps) * (r - eps) / d2;
}

double conditional_loc_range_vector(std::span<const double> r_vec, double m,
                                    double eps, double d_v)
{
    require_finite_nonneg(m, "m");
    double window_product = 1.0;
    for (double r : r_vec)
        window_product *= range_window_prob(r, eps, d_v);
    double log_pois = log_poisson_pmf(r_vec.size(), m);
    return 1.0 - std::exp(log_pois) * window_product;
}

double joint_pdf_range_vector(std::span<const double> r_vec, std::size_t k,
                              double m, double d_v)
{
    require_finite_nonneg(m, "m");
    require_positive(d_v, "d_v");
    if (r_vec.size() != k)
        throw std::logic_error("range vector length does not match k");

    double log_density = log_poisson_pmf(k, m);
    for (double r : r_vec) {
        double f = range_pdf(r, d_v);
        if (f == 0.0)
            return 0.0;
        log_density += std::log(f);
    }
    return std::exp(log_density);
}

double expected_annulus_area(double eps, double d_v)
{
    require_finite_nonneg(eps, "eps");
    require_positive(d_v, "d_v");
    if (eps > d_v)
        throw std::invalid_argument("expected_annulus_area requires eps <= d_v");
    double d2 = d_v * d_v;
    return kPi * eps * (8.0 * d2 * d_v - 6.0 * d2 * eps + eps * eps * eps) /
           (3.0 * d2);
}

double asymptotic_n_loc(double m, double alpha)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("asymptote requires m > 0");
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("asymptote requires 0 < alpha <= 1");
    return std::exp(-2.0 * (1.0 - alpha) * m) /
           std::sqrt(4.0 * kPi * alpha * m);
}

double uniqueness_prob(double p_loc, std::size_t n)
{
    if (!(p_loc >= 0.0) || !(p_loc <= 1.0))
        throw std::invalid_argument("p_loc must lie in [0, 1]");
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    return std::pow(p_loc, static_cast<double>(n - 1));
}

TheoryResult theory_for(MeasurementCase c, double m, double eps, double d_v)
{
    TheoryResult result;
    result.measurement_case = c;
    result.m = m;
    result.eps_ratio = eps / d_v;

    switch (c) {
    case MeasurementCase::Count:
        result.kind = TheoryResult::Kind::Exact;
        result.n_loc = n_loc_count(m);
        break;
    case MeasurementCase::RangeVector:
        result.kind = TheoryResult::Kind::Exact;
        result.n_loc = n_loc_range_vector(m, eps, d_v);
        break;
    case MeasurementCase::RelativeLocationSet: {
        BoundPair b = n_loc_relative_bounds(m, eps, d_v);
        result.kind = TheoryResult::Kind::Bounds;
        result.n_loc_lower = b.lower;
        result.n_loc_upper = b.upper;
        break;
    }
    case MeasurementCase::RangeSet: {
        BoundPair b = n_loc_range_set_bounds(m, eps, d_v);
        result.kind = TheoryResult::Kind::Bounds;
        result.n_loc_lower = b.lower;
        result.n_loc_upper = b.upper;
        break;
    }
    }
    return result;
}

} // namespace loclab
