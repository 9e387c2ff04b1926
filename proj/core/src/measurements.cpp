#include "loclab/measurements.hpp"

#include <algorithm>
#include <cmath>

namespace loclab {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Angle measured clockwise from the +y axis, in [0, 2*pi).
// A landmark exactly at the origin gets angle 0.
double clockwise_from_north(const Point2D& p)
{
    if (p.x == 0.0 && p.y == 0.0)
        return 0.0;
    double a = std::atan2(p.x, p.y);
    if (a < 0.0)
        a += kTwoPi;
    return a;
}

} // namespace

const char* to_string(MeasurementCase c)
{
    switch (c) {
    case MeasurementCase::Count: return "count";
    case MeasurementCase::RangeVector: return "range-vector";
    case MeasurementCase::RelativeLocationSet: return "relative-set";
    case MeasurementCase::RangeSet: return "range-set";
    }
    return "unknown";
}

CountMeasurement count_measurement(const LandmarkPattern& pattern)
{
    return CountMeasurement{pattern.size()};
}

RangeVectorMeasurement range_vector(const LandmarkPattern& pattern)
{
    std::vector<std::pair<double, double>> keyed; // (angle, range)
    keyed.reserve(pattern.size());
    for (const Point2D& p : pattern.points)
        keyed.emplace_back(clockwise_from_north(p), p.norm());
    std::sort(keyed.begin(), keyed.end());

    RangeVectorMeasurement out;
    out.ranges.reserve(keyed.size());
    for (const auto& [angle, range] : keyed)
        out.ranges.push_back(range);
    return out;
}

RelativeLocationSetMeasurement relative_location_set(const LandmarkPattern& pattern)
{
    return RelativeLocationSetMeasurement{pattern.points};
}

RangeSetMeasurement range_set(const LandmarkPattern& pattern)
{
    RangeSetMeasurement out;
    out.ranges.reserve(pattern.size());
    for (const Point2D& p : pattern.points)
        out.ranges.push_back(p.norm());
    return out;
}

Measurement extract_measurement(MeasurementCase c, const LandmarkPattern& pattern)
{
    switch (c) {
    case MeasurementCase::Count: return count_measurement(pattern);
    case MeasurementCase::RangeVector: return range_vector(pattern);
    case MeasurementCase::RelativeLocationSet: return relative_location_set(pattern);
    case MeasurementCase::RangeSet: return range_set(pattern);
    }
    throw std::logic_error("unknown measurement case");
}

} // namespace loclab
