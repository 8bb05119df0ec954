#include "rclus/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rclus/kernels.hpp"
#include "rclus/rng.hpp"

namespace rclus {

namespace {

struct RunState {
    std::vector<int> assign;
    std::vector<double> sums;   // k x p centroid sums
    std::vector<double> cents;  // k x p centroids
    std::vector<int> sizes;
};

double point_center_d2(const DataMatrix& data, const RunState& st, std::size_t i, int c) {
    return kernels::l2_sq(data.values.data() + i * data.cols, st.cents.data() + c * data.cols,
                          data.cols);
}

double objective(const DataMatrix& data, const RunState& st) {
    double obj = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) obj += point_center_d2(data, st, i, st.assign[i]);
    return obj;
}

void recenter(const DataMatrix& data, RunState& st, int k) {
    const std::size_t p = data.cols;
    std::fill(st.sums.begin(), st.sums.end(), 0.0);
    std::fill(st.sizes.begin(), st.sizes.end(), 0);
    for (std::size_t i = 0; i < data.rows; ++i) {
        const int c = st.assign[i];
        ++st.sizes[c];
        const auto row = data.row(i);
        for (std::size_t j = 0; j < p; ++j) st.sums[c * p + j] += row[j];
    }
    for (int c = 0; c < k; ++c)
        for (std::size_t j = 0; j < p; ++j)
            st.cents[c * p + j] = st.sums[c * p + j] / std::max(1, st.sizes[c]);
}

// One run: returns true with the converged state, false on a degenerate
// initialization (some cluster captured no points).
bool run_once(const DataMatrix& data, int k, int max_iterations, rng::Stream& stream,
              RunState& st) {
    const std::size_t n = data.rows;
    const std::size_t p = data.cols;

    // k distinct members as initial centers
    std::vector<int> centers_idx;
    centers_idx.reserve(k);
    std::vector<char> used(n, 0);
    while (static_cast<int>(centers_idx.size()) < k) {
        const auto c = stream.next_below(n);
        if (!used[c]) {
            used[c] = 1;
            centers_idx.push_back(static_cast<int>(c));
        }
    }
    st.assign.assign(n, 0);
    st.sums.assign(static_cast<std::size_t>(k) * p, 0.0);
    st.cents.assign(static_cast<std::size_t>(k) * p, 0.0);
    st.sizes.assign(k, 0);
    for (int c = 0; c < k; ++c) {
        const auto row = data.row(centers_idx[c]);
        std::copy(row.begin(), row.end(), st.cents.begin() + static_cast<std::size_t>(c) * p);
    }
    for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        double best_d = point_center_d2(data, st, i, 0);
        for (int c = 1; c < k; ++c) {
            const double d = point_center_d2(data, st, i, c);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        st.assign[i] = best;
    }
    recenter(data, st, k);
    for (int c = 0; c < k; ++c)
        if (st.sizes[c] == 0) return false;

    double prev_obj = objective(data, st);
    for (int pass = 0; pass < max_iterations; ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            const int a = st.assign[i];
            if (st.sizes[a] <= 1) continue;  // removing the last point never pays
            const double da = point_center_d2(data, st, i, a);
            const double removal = st.sizes[a] / (st.sizes[a] - 1.0) * da;
            int best_b = -1;
            double best_cost = removal;
            for (int b = 0; b < k; ++b) {
                if (b == a) continue;
                const double cost =
                    st.sizes[b] / (st.sizes[b] + 1.0) * point_center_d2(data, st, i, b);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_b = b;
                }
            }
            if (best_b < 0) continue;
            const auto row = data.row(i);
            for (std::size_t j = 0; j < p; ++j) {
                st.sums[a * p + j] -= row[j];
                st.sums[best_b * p + j] += row[j];
            }
            --st.sizes[a];
            ++st.sizes[best_b];
            for (std::size_t j = 0; j < p; ++j) {
                st.cents[a * p + j] = st.sums[a * p + j] / st.sizes[a];
                st.cents[best_b * p + j] = st.sums[best_b * p + j] / st.sizes[best_b];
            }
            st.assign[i] = best_b;
            moved = true;
        }
        const double obj = objective(data, st);
        if (obj > prev_obj + 1e-9 * (1.0 + std::abs(prev_obj)))
            throw ComputeError("k-means objective increased across a reallocation pass");
        prev_obj = obj;
        if (!moved) break;
    }
    return true;
}

}  // namespace

Labeling kmeans(const DataMatrix& data, const KMeansConfig& cfg) {
    data.validate();
    const std::size_t n = data.rows;
    if (cfg.k < 1) throw ComputeError("k-means needs K >= 1");
    if (static_cast<std::size_t>(cfg.k) > n)
        throw ComputeError("k-means needs K <= n (" + std::to_string(cfg.k) + " > " +
                           std::to_string(n) + ")");
    if (cfg.restarts < 1) throw ComputeError("k-means needs at least one restart");

    RunState best_state;
    double best_obj = std::numeric_limits<double>::infinity();
    bool found = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        rng::Stream stream(cfg.seed, rng::Tag::KmeansInit, static_cast<std::uint64_t>(r));
        RunState st;
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt)
            ok = run_once(data, cfg.k, cfg.max_iterations, stream, st);
        if (!ok) continue;
        const double obj = objective(data, st);
        if (obj < best_obj) {
            best_obj = obj;
            best_state = std::move(st);
            found = true;
        }
    }
    if (!found) throw ComputeError("k-means found no non-degenerate initialization");

    // renumber clusters by smallest member index
    std::vector<int> new_id(cfg.k, 0);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int c = best_state.assign[i];
        if (new_id[c] == 0) new_id[c] = ++next;
    }
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = new_id[best_state.assign[i]];
    return Labeling::from_labels(std::move(labels));
}

double kmeans_objective(const DataMatrix& data, const Labeling& labels) {
    const std::size_t p = data.cols;
    double obj = 0.0;
    for (int c = 1; c <= labels.k(); ++c) {
        const auto& members = labels.members(c);
        std::vector<double> mean(p, 0.0);
        for (const int i : members) {
            const auto row = data.row(i);
            for (std::size_t j = 0; j < p; ++j) mean[j] += row[j];
        }
        for (std::size_t j = 0; j < p; ++j) mean[j] /= static_cast<double>(members.size());
        for (const int i : members) {
            const auto row = data.row(i);
            for (std::size_t j = 0; j < p; ++j) {
                const double d = row[j] - mean[j];
                obj += d * d;
            }
        }
    }
    return obj;
}

}  // namespace rclus
