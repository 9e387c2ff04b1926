#include "loclab/matching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace loclab {
namespace {

// Try to extend the matching with an augmenting path from left node u,
// using only edges with cost <= threshold.
bool augment(std::size_t u, double threshold,
             const std::vector<std::vector<double>>& cost,
             std::vector<int>& match_right, std::vector<char>& visited)
{
    std::size_t n = cost.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (visited[v] || cost[u][v] > threshold)
            continue;
        visited[v] = 1;
        if (match_right[v] < 0 ||
            augment(static_cast<std::size_t>(match_right[v]), threshold, cost,
                    match_right, visited)) {
            match_right[v] = static_cast<int>(u);
            return true;
        }
    }
    return false;
}

bool perfect_matching_exists(double threshold,
                             const std::vector<std::vector<double>>& cost)
{
    std::size_t n = cost.size();
    std::vector<int> match_right(n, -1);
    std::vector<char> visited(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(u, threshold, cost, match_right, visited))
            return false;
    }
    return true;
}

ExtendedDistance bottleneck_from_costs(std::vector<std::vector<double>> cost)
{
    std::size_t n = cost.size();
    std::vector<double> candidates;
    candidates.reserve(n * n);
    for (const auto& row : cost)
        candidates.insert(candidates.end(), row.begin(), row.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    // Smallest candidate threshold admitting a perfect matching.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (perfect_matching_exists(candidates[mid], cost))
            hi = mid;
        else
            lo = mid + 1;
    }
    return ExtendedDistance::finite(candidates[lo]);
}

template <typename T, typename Metric>
ExtendedDistance brute_force_impl(std::span<const T> a, std::span<const T> b,
                                  Metric metric)
{
    if (a.size() != b.size())
        return ExtendedDistance::infinite();
    if (a.empty())
        return ExtendedDistance::finite(0.0);
    if (a.size() > 9)
        throw std::length_error("brute-force matcher limited to 9 elements");

    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, metric(a[i], b[perm[i]]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ExtendedDistance::finite(best);
}

} // namespace

ExtendedDistance chebyshev_vec_distance(std::span<const double> a,
                                        std::span<const double> b)
{
    if (a.size() != b.size())
        return ExtendedDistance::infinite();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return ExtendedDistance::finite(worst);
}

ExtendedDistance bottleneck_scalar_distance(std::span<const double> a,
                                            std::span<const double> b)
{
    if (a.size() != b.size())
        return ExtendedDistance::infinite();
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i)
        worst = std::max(worst, std::abs(sa[i] - sb[i]));
    return ExtendedDistance::finite(worst);
}

ExtendedDistance bottleneck_point_distance(std::span<const Point2D> a,
                                           std::span<const Point2D> b)
{
    if (a.size() != b.size())
        return ExtendedDistance::infinite();
    if (a.empty())
        return ExtendedDistance::finite(0.0);

    std::size_t n = a.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[i][j] = distance(a[i], b[j]);
    return bottleneck_from_costs(std::move(cost));
}

ExtendedDistance brute_force_set_distance(std::span<const double> a,
                                          std::span<const double> b)
{
    return brute_force_impl(a, b,
                            [](double x, double y) { return std::abs(x - y); });
}

ExtendedDistance brute_force_set_distance(std::span<const Point2D> a,
                                          std::span<const Point2D> b)
{
    return brute_force_impl(a, b, [](const Point2D& x, const Point2D& y) {
        return distance(x, y);
    });
}

bool overlap_indicator(MeasurementCase c, const Measurement& a,
                       const Measurement& b, double eps)
{
    switch (c) {
    case MeasurementCase::Count: {
        const auto* ma = std::get_if<CountMeasurement>(&a);
        const auto* mb = std::get_if<CountMeasurement>(&b);
        if (!ma || !mb)
            throw std::logic_error("measurement does not match Count case");
        return ma->count == mb->count;
    }
    case MeasurementCase::RangeVector: {
        const auto* ma = std::get_if<RangeVectorMeasurement>(&a);
        const auto* mb = std::get_if<RangeVectorMeasurement>(&b);
        if (!ma || !mb)
            throw std::logic_error("measurement does not match RangeVector case");
        ExtendedDistance d = chebyshev_vec_distance(ma->ranges, mb->ranges);
        return !d.is_infinite() && d.value() <= eps;
    }
    case MeasurementCase::RelativeLocationSet: {
        const auto* ma = std::get_if<RelativeLocationSetMeasurement>(&a);
        const auto* mb = std::get_if<RelativeLocationSetMeasurement>(&b);
        if (!ma || !mb)
            throw std::logic_error("measurement does not match RelativeLocationSet case");
        ExtendedDistance d = bottleneck_point_distance(ma->points, mb->points);
        return !d.is_infinite() && d.value() <= eps;
    }
    case MeasurementCase::RangeSet: {
        const auto* ma = std::get_if<RangeSetMeasurement>(&a);
        const auto* mb = std::get_if<RangeSetMeasurement>(&b);
        if (!ma || !mb)
            throw std::logic_error("measurement does not match RangeSet case");
        ExtendedDistance d = bottleneck_scalar_distance(ma->ranges, mb->ranges);
        return !d.is_infinite() && d.value() <= eps;
    }
    }
    throw std::logic_error("unknown measurement case");
}

} // namespace loclab
