#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace loclab {

/// A 2-D position in meters, relative to the observer.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Point2D& a, const Point2D& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// The measurement type extracted from a landmark pattern.
enum class MeasurementCase {
    Count,
    RangeVector,
    RelativeLocationSet,
    RangeSet,
};

const char* to_string(MeasurementCase c);

/// Relative positions of the landmarks visible from the observer,
/// all within the disk of the given radius around the origin.
struct LandmarkPattern {
    std::vector<Point2D> points;
    double radius = 0.0;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

/// Scenario parameters: landmark intensity, visibility radius and noise span.
class ScenarioParams {
  public:
    ScenarioParams(double intensity, double visibility, double noise_span,
                   MeasurementCase c)
        : intensity_(intensity), visibility_(visibility),
          noise_span_(noise_span), case_(c)
    {
        if (!(intensity >= 0.0) || !std::isfinite(intensity))
            throw std::invalid_argument("intensity must be finite and >= 0");
        if (!(visibility > 0.0) || !std::isfinite(visibility))
            throw std::invalid_argument("visibility must be finite and > 0");
        if (!(noise_span >= 0.0) || !std::isfinite(noise_span))
            throw std::invalid_argument("noise span must be finite and >= 0");
    }

    static ScenarioParams from_mean(double mean, double visibility,
                                    double noise_span, MeasurementCase c)
    {
        if (!(mean >= 0.0) || !std::isfinite(mean))
            throw std::invalid_argument("mean landmark count must be finite and >= 0");
        double pi = 3.14159265358979323846;
        return ScenarioParams(mean / (pi * visibility * visibility),
                              visibility, noise_span, c);
    }

    double intensity() const { return intensity_; }
    double visibility() const { return visibility_; }
    double noise_span() const { return noise_span_; }
    MeasurementCase measurement_case() const { return case_; }

    /// Mean number of visible landmarks, lambda * pi * d_v^2.
    double mean_count() const
    {
        double pi = 3.14159265358979323846;
        return intensity_ * pi * visibility_ * visibility_;
    }

  private:
    double intensity_;
    double visibility_;
    double noise_span_;
    MeasurementCase case_;
};

} // namespace loclab
