#pragma once

#include <string>
#include <vector>

#include "rclus/types.hpp"

namespace rclus {

/// Whether a bigger or smaller value of an index means a better clustering.
enum class Orientation { Maximize, Minimize };

struct IndexValue {
    std::string name;
    double value = 0.0;
    Orientation orientation = Orientation::Maximize;
};

/// For each non-noise member, the other non-noise members sorted by
/// (distance, member index). Shared by connectivity and nncer so a K-sweep
/// sorts each row once.
class NeighborOrder {
public:
    NeighborOrder() = default;
    /// Orders among the given member set only (noise excluded by callers).
    NeighborOrder(const DistanceMatrix& dist, const std::vector<int>& members);

    /// Neighbors of member i (global index), nearest first; empty if i was
    /// not part of the ordered set.
    const std::vector<int>& neighbors(int i) const { return order_[i]; }

private:
    std::vector<std::vector<int>> order_;
};

NeighborOrder neighbor_order(const DistanceMatrix& dist, const Labeling& labels);

/// Average silhouette width: mean over non-noise members of
/// (b - a) / max(a, b); members of singleton clusters score 0.
double silhouette_asw(const DistanceMatrix& dist, const Labeling& labels);

/// Smallest inter-cluster distance over largest cluster diameter.
/// Throws when every cluster is a singleton (zero diameter).
double dunn_index(const DistanceMatrix& dist, const Labeling& labels);

/// Sum over members and j = 1..J of 0 if the j-th nearest member shares the
/// cluster, else 1/j. Lower is better.
double connectivity(const DistanceMatrix& dist, const Labeling& labels, int j_neighbors = 10);
double connectivity(const Labeling& labels, const NeighborOrder& order, int j_neighbors = 10);

/// Calinski-Harabasz variance-ratio criterion on raw coordinates:
/// between-cluster over within-cluster squared scatter, df-normalized.
double calinski_harabasz(const DataMatrix& data, const Labeling& labels);

/// Fraction of members whose l nearest neighbors vote them out of their own
/// cluster (plurality; exact vote ties resolved on the member-keyed stream).
double nncer(const DistanceMatrix& dist, const Labeling& labels, int l_neighbors, Seed seed);
double nncer(const Labeling& labels, const NeighborOrder& order, int l_neighbors, Seed seed);

}  // namespace rclus
