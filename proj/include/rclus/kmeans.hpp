#pragma once

#include "rclus/types.hpp"

namespace rclus {

struct KMeansConfig {
    int k = 2;
    int restarts = 25;
    int max_iterations = 100;
    Seed seed;
};

/// Hartigan-Wong k-means: uniform random members as initial centers, then
/// single-point reallocations accepted whenever
///   n_b/(n_b+1) * d2(x, c_b) < n_a/(n_a-1) * d2(x, c_a)
/// until a full pass moves nothing. Best of cfg.restarts runs by
/// within-cluster sum of squares. Clusters are renumbered by smallest
/// member index, so output ids are deterministic.
Labeling kmeans(const DataMatrix& data, const KMeansConfig& cfg);

/// Within-cluster sum of squared distances to centroids for a labeling.
double kmeans_objective(const DataMatrix& data, const Labeling& labels);

}  // namespace rclus
