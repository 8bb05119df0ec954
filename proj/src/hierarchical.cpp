#include "rclus/hierarchical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rclus {

namespace {

// Disjoint clusters over a working inter-cluster distance matrix indexed by
// representative (smallest member index). Lance-Williams updates keep the
// single/average linkage distances exact.
struct Agglomerator {
    explicit Agglomerator(const DistanceMatrix& dist)
        : n(dist.size()), work(n * n, 0.0), size(n, 1), active(n, 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) work[i * n + j] = dist.at(i, j);
    }

    Merge step(Linkage linkage) {
        int best_a = -1;
        int best_b = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < n; ++a) {
            if (!active[a]) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!active[b]) continue;
                const double d = work[a * n + b];
                if (d < best_d) {
                    best_d = d;
                    best_a = static_cast<int>(a);
                    best_b = static_cast<int>(b);
                }
            }
        }
        const std::size_t a = static_cast<std::size_t>(best_a);
        const std::size_t b = static_cast<std::size_t>(best_b);
        for (std::size_t c = 0; c < n; ++c) {
            if (!active[c] || c == a || c == b) continue;
            const double dac = work[a * n + c];
            const double dbc = work[b * n + c];
            const double d = linkage == Linkage::Single
                                 ? std::min(dac, dbc)
                                 : (size[a] * dac + size[b] * dbc) / (size[a] + size[b]);
            work[a * n + c] = d;
            work[c * n + a] = d;
        }
        size[a] += size[b];
        active[b] = 0;
        return {best_a, best_b, best_d};
    }

    std::size_t n;
    std::vector<double> work;
    std::vector<int> size;
    std::vector<char> active;
};

Labeling labels_from_merges(std::size_t n, const std::vector<Merge>& merges, int k) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const std::size_t steps = n - static_cast<std::size_t>(k);
    for (std::size_t s = 0; s < steps; ++s) parent[find(merges[s].b)] = find(merges[s].a);

    std::vector<int> id(n, 0);
    int next = 0;
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int root = find(static_cast<int>(i));
        if (id[root] == 0) id[root] = ++next;
        labels[i] = id[root];
    }
    return Labeling::from_labels(std::move(labels));
}

}  // namespace

std::vector<Merge> merge_sequence(const DistanceMatrix& dist, Linkage linkage) {
    Agglomerator agg(dist);
    std::vector<Merge> merges;
    merges.reserve(dist.size() - 1);
    for (std::size_t s = 0; s + 1 < dist.size(); ++s) merges.push_back(agg.step(linkage));
    return merges;
}

Labeling hierarchical(const DistanceMatrix& dist, Linkage linkage, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > dist.size())
        throw ComputeError("hierarchical cut needs 1 <= K <= n");
    return labels_from_merges(dist.size(), merge_sequence(dist, linkage), k);
}

std::vector<Labeling> hierarchical_cuts(const DistanceMatrix& dist, Linkage linkage, int k_min,
                                        int k_max) {
    if (k_min < 1 || k_min > k_max || static_cast<std::size_t>(k_max) > dist.size())
        throw ComputeError("hierarchical cuts need 1 <= k_min <= k_max <= n");
    const auto merges = merge_sequence(dist, linkage);
    std::vector<Labeling> out;
    out.reserve(k_max - k_min + 1);
    for (int k = k_min; k <= k_max; ++k) out.push_back(labels_from_merges(dist.size(), merges, k));
    return out;
}

}  // namespace rclus
