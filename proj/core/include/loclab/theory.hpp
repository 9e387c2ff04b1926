#pragma once

#include "loclab/geometry.hpp"

#include <span>

namespace loclab {

/// Closed-form value or bound pair for the non-localizability probability.
struct TheoryResult {
    enum class Kind { Exact, Bounds };

    MeasurementCase measurement_case = MeasurementCase::Count;
    Kind kind = Kind::Exact;
    double n_loc = 0.0;       // valid when kind == Exact
    double n_loc_lower = 0.0; // valid when kind == Bounds
    double n_loc_upper = 0.0; // may exceed 1; reported unclamped
    double m = 0.0;
    double eps_ratio = 0.0;
};

/// e^{-x} * I_0(x): power series below x = 20, asymptotic expansion above.
double scaled_bessel_i0(double x);

/// Non-localizability probability when the measurement is the landmark
/// count: e^{-2m} * I_0(2m).
double n_loc_count(double m);

/// The k = 0 (both maps empty) mass, e^{-2m}; a lower bound for every case.
double n_loc_count_lower(double m);

/// Case-specific noise factor for range-based measurements,
/// sqrt((8 d^3 e - 6 d^2 e^2 + e^4) / (3 d^4)), clamped to 1 for eps >= d_v.
double alpha_range(double eps, double d_v);

/// Range-vector case: e^{-2m} * I_0(2 m alpha_range), evaluated stably
/// as e^{-2m(1-alpha)} * scaled_bessel_i0(2 alpha m).
double n_loc_range_vector(double m, double eps, double d_v);

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

/// Relative-location case bounds:
/// e^{-2m} I_0(2 m eps/d_v) <= P_N-Loc <= e^{-2m} exp(m^2 eps^2 / d_v^2).
BoundPair n_loc_relative_bounds(double m, double eps, double d_v);

/// Range-set case bounds; the lower bound coincides with the
/// range-vector closed form.
BoundPair n_loc_range_set_bounds(double m, double eps, double d_v);

/// Density of the range to a visible landmark: 2r/d_v^2 on [0, d_v].
double range_pdf(double r, double d_v);

/// P[|R - r| <= eps] for R with the range_pdf density; piecewise in eps.
double range_window_prob(double r, double eps, double d_v);

/// Conditional localizability given an observed range vector.
double conditional_loc_range_vector(std::span<const double> r_vec, double m,
                                    double eps, double d_v);

/// Joint density of the range vector and its length.
double joint_pdf_range_vector(std::span<const double> r_vec, std::size_t k,
                              double m, double d_v);

/// Mean area of the eps-annulus around a uniformly placed landmark's range.
double expected_annulus_area(double eps, double d_v);

/// Leading-order asymptote e^{-2(1-alpha)m} (4 pi alpha m)^{-1/2}.
double asymptotic_n_loc(double m, double alpha);

/// Probability a measurement is unique among n candidate locations.
double uniqueness_prob(double p_loc, std::size_t n);

/// Closed form or bounds for the given case and parameters.
TheoryResult theory_for(MeasurementCase c, double m, double eps, double d_v);

} // namespace loclab
