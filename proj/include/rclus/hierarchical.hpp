#pragma once

#include <vector>

#include "rclus/types.hpp"

namespace rclus {

enum class Linkage { Single, Average };

/// One agglomeration step: clusters a and b (each identified by the smallest
/// member index it contains, a < b) merged at the given linkage distance.
struct Merge {
    int a = 0;
    int b = 0;
    double dist = 0.0;
};

/// Full agglomerative merge sequence (n-1 steps). Ties on distance are broken
/// by the smallest (a, b) pair, so the sequence is deterministic.
std::vector<Merge> merge_sequence(const DistanceMatrix& dist, Linkage linkage);

/// Cuts the dendrogram when exactly k clusters remain. Cluster ids are
/// assigned by smallest member index, ascending.
Labeling hierarchical(const DistanceMatrix& dist, Linkage linkage, int k);

/// Cut labels for every k in [k_min, k_max] from a single merge sequence.
std::vector<Labeling> hierarchical_cuts(const DistanceMatrix& dist, Linkage linkage, int k_min,
                                        int k_max);

}  // namespace rclus
