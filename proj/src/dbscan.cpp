#include "rclus/dbscan.hpp"

#include <vector>

namespace rclus {

Labeling dbscan(const DistanceMatrix& dist, const DbscanConfig& cfg) {
    if (!(cfg.eps > 0.0)) throw ComputeError("dbscan needs eps > 0");
    if (cfg.min_pts < 1) throw ComputeError("dbscan needs min_pts >= 1");
    const std::size_t n = dist.size();

    std::vector<std::vector<int>> neigh(n);
    std::vector<char> core(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (dist.at(i, j) <= cfg.eps) neigh[i].push_back(static_cast<int>(j));
        core[i] = neigh[i].size() >= static_cast<std::size_t>(cfg.min_pts);
    }

    std::vector<int> labels(n, kNoise);
    int next_id = 0;
    std::vector<int> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (!core[i] || labels[i] != kNoise) continue;
        ++next_id;
        labels[i] = next_id;
        stack.assign(1, static_cast<int>(i));
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            for (const int q : neigh[cur]) {
                if (core[q] && labels[q] == kNoise) {
                    labels[q] = next_id;
                    stack.push_back(q);
                }
            }
        }
    }
    // border members attach to the lowest reachable core cluster
    for (std::size_t i = 0; i < n; ++i) {
        if (core[i] || labels[i] != kNoise) continue;
        int best = 0;
        for (const int q : neigh[i])
            if (core[q] && (best == 0 || labels[q] < best)) best = labels[q];
        labels[i] = best;
    }
    return Labeling::from_labels(std::move(labels));
}

}  // namespace rclus
