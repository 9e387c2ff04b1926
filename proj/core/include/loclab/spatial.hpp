#pragma once

#include "loclab/geometry.hpp"
#include "loclab/rng.hpp"

namespace loclab {

/// Draw from Poisson(mean). Inversion below mean 30, PTRS rejection above.
std::size_t sample_poisson_count(double mean, RngStream& rng);

/// Uniform point on the disk of the given radius, via r = R*sqrt(u).
Point2D sample_uniform_disk(double radius, RngStream& rng);

/// One realization of the visible landmark pattern around the origin:
/// Poisson count, positions i.i.d. uniform on the visibility disk.
LandmarkPattern sample_landmark_pattern(const ScenarioParams& params,
                                        RngStream& rng);

} // namespace loclab
