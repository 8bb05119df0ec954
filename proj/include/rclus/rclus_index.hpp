#pragma once

#include <span>
#include <vector>

#include "rclus/types.hpp"

namespace rclus {

/// N equal-width intervals partitioning (0,1]: (0,w], (w,2w], ..., ((N-1)w, 1]
/// with w = 1/N. Midpoint of bin h is (h - 1/2)/N.
struct BinGrid {
    int n_bins = 10;

    explicit BinGrid(int n = 10) : n_bins(n) {
        if (n < 2) throw ComputeError("bin grid needs N >= 2");
    }
    double width() const { return 1.0 / n_bins; }
    double midpoint(int h) const { return (h - 0.5) / n_bins; }

    /// Bin index in 1..N for a normalized value in [0, 1]: h = ceil(v*N).
    int bin_of(double v) const;

    /// Grid for a requested width; w must equal 1/N for an integer N >= 2.
    static BinGrid from_width(double w);
};

/// Per-bin counts of normalized own-cluster (f1) and nearest-cluster (f2)
/// distances. Exact zeros (duplicate points) lie in no interval of (0,1]
/// and are tallied separately so conservation stays checkable:
/// sum(f1) + zeros1 = n_k - 1 and sum(f2) + zeros2 = n_nc.
struct FrequencyPair {
    std::vector<int> f1;
    std::vector<int> f2;
    int zeros1 = 0;
    int zeros2 = 0;
};

/// One member's step-through: nearest cluster, scaling constant, bin counts
/// and the resulting rank correlation.
struct MemberScore {
    int member = 0;         // global row index
    int cluster = 0;        // k
    int position = 0;       // m, 1-based position within cluster k
    int nearest_cluster = 0;
    double scale = 0.0;     // M, max of the two raw distance sets
    FrequencyPair freq;
    double rho = 0.0;
};

/// Nearest cluster of a member: the cluster (other than its own) with the
/// least average distance to the member. Exact ties are broken uniformly at
/// random on the member-keyed stream.
int nearest_cluster(int member, const DistanceMatrix& dist, const Labeling& labels, Seed seed);

/// Own-cluster and nearest-cluster distances divided by their joint maximum M.
/// Outputs lie in [0,1] with max exactly 1; s1 is empty for singleton
/// clusters (M is then taken over s2 alone). scale reports M.
struct NormalizedSets {
    std::vector<double> s1;
    std::vector<double> s2;
    double scale = 0.0;
};
NormalizedSets normalized_distance_sets(int member, const DistanceMatrix& dist,
                                        const Labeling& labels, int nc);

/// Bins both normalized sets; values must lie in [0,1].
FrequencyPair bin_frequencies(std::span<const double> s1_norm, std::span<const double> s2_norm,
                              const BinGrid& grid);

/// Ascending ranks 1..n with tied groups receiving the mean of the integer
/// ranks they span.
std::vector<double> midranks(std::span<const double> series);

/// Spearman rank correlation of the per-bin differences f2 - f1 against the
/// bin midpoints (whose ranks are 1..N): midranks substituted into the
/// sample correlation, i.e. the tie-corrected form. 0 when degenerate.
double member_rho(const FrequencyPair& freq, const BinGrid& grid);

/// The index: mean of member_rho over all non-noise members. Requires K >= 2
/// and at least one non-noise member. Members in singleton clusters score 0;
/// a member coinciding with every relevant point (M = 0) scores 0.
double r_clus(const DistanceMatrix& dist, const Labeling& labels, const BinGrid& grid, Seed seed);

/// Full per-member diagnostics (same computation as r_clus, one row per
/// non-noise member, ordered by cluster then position).
std::vector<MemberScore> r_clus_diagnostics(const DistanceMatrix& dist, const Labeling& labels,
                                            const BinGrid& grid, Seed seed);

}  // namespace rclus
