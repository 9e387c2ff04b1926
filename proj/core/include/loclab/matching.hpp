#pragma once

#include "loclab/measurements.hpp"

#include <limits>
#include <span>

namespace loclab {

/// Nonnegative distance that is infinite exactly when the two
/// measurements have different cardinalities.
class ExtendedDistance {
  public:
    static ExtendedDistance finite(double v) { return ExtendedDistance(v); }
    static ExtendedDistance infinite()
    {
        return ExtendedDistance(std::numeric_limits<double>::infinity());
    }

    bool is_infinite() const { return std::isinf(value_); }
    double value() const { return value_; }

    friend bool operator==(const ExtendedDistance& a,
                           const ExtendedDistance& b) = default;

  private:
    explicit ExtendedDistance(double v) : value_(v) {}
    double value_;
};

/// max_i |a_i - b_i| for equal-length vectors, infinity otherwise.
/// Two empty vectors have distance 0.
ExtendedDistance chebyshev_vec_distance(std::span<const double> a,
                                        std::span<const double> b);

/// Bottleneck distance between two range multisets: min over pairings of
/// the max per-element |difference|, which the sorted pairing attains.
ExtendedDistance bottleneck_scalar_distance(std::span<const double> a,
                                            std::span<const double> b);

/// Bottleneck assignment distance between two point multisets under
/// Euclidean per-element cost, exact via threshold search over the
/// k^2 pairwise distances with a bipartite-matching feasibility test.
ExtendedDistance bottleneck_point_distance(std::span<const Point2D> a,
                                           std::span<const Point2D> b);

/// Exact min-over-permutations oracles; sizes above 9 are rejected.
ExtendedDistance brute_force_set_distance(std::span<const double> a,
                                          std::span<const double> b);
ExtendedDistance brute_force_set_distance(std::span<const Point2D> a,
                                          std::span<const Point2D> b);

/// True iff the two measurements' noisy observation sets can overlap,
/// i.e. the trial counts as a non-localizable event.
bool overlap_indicator(MeasurementCase c, const Measurement& a,
                       const Measurement& b, double eps);

} // namespace loclab
