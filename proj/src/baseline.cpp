#include "rclus/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rclus/rng.hpp"

namespace rclus {

NeighborOrder::NeighborOrder(const DistanceMatrix& dist, const std::vector<int>& members) {
    order_.assign(dist.size(), {});
    for (const int i : members) {
        auto& row = order_[i];
        row.reserve(members.size() - 1);
        for (const int j : members)
            if (j != i) row.push_back(j);
        std::sort(row.begin(), row.end(), [&](int a, int b) {
            const double da = dist.at(i, a);
            const double db = dist.at(i, b);
            return da != db ? da < db : a < b;
        });
    }
}

NeighborOrder neighbor_order(const DistanceMatrix& dist, const Labeling& labels) {
    std::vector<int> members;
    members.reserve(labels.active_count());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!labels.is_noise(i)) members.push_back(static_cast<int>(i));
    return {dist, members};
}

double silhouette_asw(const DistanceMatrix& dist, const Labeling& labels) {
    if (labels.k() < 2) throw ComputeError("silhouette undefined for a single cluster");
    if (labels.active_count() == 0) throw ComputeError("silhouette undefined: all members noise");
    double total = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels.is_noise(i)) continue;
        const int own = labels.label(i);
        if (labels.cluster_size(own) < 2) continue;  // s = 0 for singleton clusters
        double a = 0.0;
        for (const int j : labels.members(own))
            if (j != static_cast<int>(i)) a += dist.at(i, j);
        a /= static_cast<double>(labels.cluster_size(own) - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 1; c <= labels.k(); ++c) {
            if (c == own) continue;
            double avg = 0.0;
            for (const int j : labels.members(c)) avg += dist.at(i, j);
            avg /= static_cast<double>(labels.cluster_size(c));
            b = std::min(b, avg);
        }
        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(labels.active_count());
}

double dunn_index(const DistanceMatrix& dist, const Labeling& labels) {
    if (labels.k() < 2) throw ComputeError("Dunn undefined for a single cluster");
    double min_between = std::numeric_limits<double>::infinity();
    double max_within = 0.0;
    for (int a = 1; a <= labels.k(); ++a) {
        const auto& ma = labels.members(a);
        for (std::size_t p = 0; p < ma.size(); ++p)
            for (std::size_t q = p + 1; q < ma.size(); ++q)
                max_within = std::max(max_within, dist.at(ma[p], ma[q]));
        for (int b = a + 1; b <= labels.k(); ++b)
            for (const int i : ma)
                for (const int j : labels.members(b))
                    min_between = std::min(min_between, dist.at(i, j));
    }
    if (max_within <= 0.0) throw ComputeError("Dunn undefined: zero diameter");
    return min_between / max_within;
}

double connectivity(const Labeling& labels, const NeighborOrder& order, int j_neighbors) {
    if (j_neighbors < 1) throw ComputeError("connectivity needs J >= 1");
    if (static_cast<std::size_t>(j_neighbors) >= labels.active_count())
        throw ComputeError("connectivity needs J < number of members");
    double total = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels.is_noise(i)) continue;
        const auto& neigh = order.neighbors(static_cast<int>(i));
        for (int j = 0; j < j_neighbors; ++j)
            if (labels.label(neigh[j]) != labels.label(i)) total += 1.0 / (j + 1);
    }
    return total;
}

double connectivity(const DistanceMatrix& dist, const Labeling& labels, int j_neighbors) {
    return connectivity(labels, neighbor_order(dist, labels), j_neighbors);
}

double calinski_harabasz(const DataMatrix& data, const Labeling& labels) {
    if (labels.k() < 2) throw ComputeError("CH undefined for a single cluster");
    const std::size_t n_active = labels.active_count();
    if (n_active <= static_cast<std::size_t>(labels.k()))
        throw ComputeError("CH needs more members than clusters");
    const std::size_t p = data.cols;

    std::vector<double> grand(p, 0.0);
    std::vector<std::vector<double>> means(labels.k() + 1, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels.is_noise(i)) continue;
        const auto row = data.row(i);
        auto& m = means[labels.label(i)];
        for (std::size_t j = 0; j < p; ++j) {
            m[j] += row[j];
            grand[j] += row[j];
        }
    }
    for (std::size_t j = 0; j < p; ++j) grand[j] /= static_cast<double>(n_active);
    for (int c = 1; c <= labels.k(); ++c)
        for (std::size_t j = 0; j < p; ++j)
            means[c][j] /= static_cast<double>(labels.cluster_size(c));

    double between = 0.0;
    double within = 0.0;
    for (int c = 1; c <= labels.k(); ++c) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            const double d = means[c][j] - grand[j];
            d2 += d * d;
        }
        between += static_cast<double>(labels.cluster_size(c)) * d2;
        for (const int i : labels.members(c)) {
            const auto row = data.row(i);
            for (std::size_t j = 0; j < p; ++j) {
                const double d = row[j] - means[c][j];
                within += d * d;
            }
        }
    }
    if (within <= 0.0) throw ComputeError("CH undefined: every member sits at its cluster mean");
    return (between / (labels.k() - 1)) /
           (within / static_cast<double>(n_active - static_cast<std::size_t>(labels.k())));
}

double nncer(const Labeling& labels, const NeighborOrder& order, int l_neighbors, Seed seed) {
    if (l_neighbors < 1) throw ComputeError("nncer needs l >= 1");
    if (static_cast<std::size_t>(l_neighbors) >= labels.active_count())
        throw ComputeError("nncer needs l < number of members");
    double errors = 0.0;
    std::vector<int> counts(labels.k() + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels.is_noise(i)) continue;
        std::fill(counts.begin(), counts.end(), 0);
        const auto& neigh = order.neighbors(static_cast<int>(i));
        for (int j = 0; j < l_neighbors; ++j) ++counts[labels.label(neigh[j])];
        const int own = counts[labels.label(i)];
        int best_other = 0;
        for (int c = 1; c <= labels.k(); ++c)
            if (c != labels.label(i)) best_other = std::max(best_other, counts[c]);
        if (own < best_other) {
            errors += 1.0;
        } else if (own == best_other) {
            rng::Stream stream(seed, rng::Tag::NncerTie, i);
            errors += static_cast<double>(stream.next_below(2));
        }
    }
    return errors / static_cast<double>(labels.active_count());
}

double nncer(const DistanceMatrix& dist, const Labeling& labels, int l_neighbors, Seed seed) {
    return nncer(labels, neighbor_order(dist, labels), l_neighbors, seed);
}

}  // namespace rclus
