#pragma once

#include "loclab/geometry.hpp"

#include <variant>
#include <vector>

namespace loclab {

/// Number of visible landmarks.
struct CountMeasurement {
    std::size_t count = 0;
};

/// Ranges ordered clockwise from north (+y axis); ties broken by range.
struct RangeVectorMeasurement {
    std::vector<double> ranges;
};

/// Unordered multiset of relative landmark locations.
struct RelativeLocationSetMeasurement {
    std::vector<Point2D> points;
};

/// Unordered multiset of ranges.
struct RangeSetMeasurement {
    std::vector<double> ranges;
};

using Measurement = std::variant<CountMeasurement, RangeVectorMeasurement,
                                 RelativeLocationSetMeasurement,
                                 RangeSetMeasurement>;

CountMeasurement count_measurement(const LandmarkPattern& pattern);
RangeVectorMeasurement range_vector(const LandmarkPattern& pattern);
RelativeLocationSetMeasurement relative_location_set(const LandmarkPattern& pattern);
RangeSetMeasurement range_set(const LandmarkPattern& pattern);

/// Extract the measurement matching the requested case.
Measurement extract_measurement(MeasurementCase c, const LandmarkPattern& pattern);

} // namespace loclab
