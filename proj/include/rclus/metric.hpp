#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rclus/types.hpp"

namespace rclus {

/// Distance between two observation rows. Custom metrics need not be
/// strictly metric, but must be symmetric, nonnegative and zero on equal rows.
using RowMetric = std::function<double(std::span<const double>, std::span<const double>)>;

/// Registers a metric under a name; the registry is the extension point for
/// anything beyond the built-in Euclidean.
void register_metric(const std::string& name, RowMetric metric);

/// Names of all registered metrics, sorted.
std::vector<std::string> registered_metrics();

/// Looks up a metric; throws ComputeError listing registered names on a miss.
RowMetric metric_by_name(const std::string& name);

/// Full pairwise Euclidean distance matrix (SIMD kernel under the hood).
DistanceMatrix euclidean_distances(const DataMatrix& data);

/// Pairwise distances under a registered metric ("euclidean" fast-pathed).
DistanceMatrix distance_for(const std::string& metric_name, const DataMatrix& data);

}  // namespace rclus
