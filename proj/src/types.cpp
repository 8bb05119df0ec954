#include "rclus/types.hpp"

#include <cmath>

namespace rclus {

void DataMatrix::validate() const {
    if (rows < 2) throw DataError("data matrix needs at least 2 rows, got " + std::to_string(rows));
    if (cols < 1) throw DataError("data matrix needs at least 1 column");
    if (values.size() != rows * cols) throw DataError("data matrix storage does not match shape");
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!std::isfinite(at(i, j))) {
                throw DataError("non-finite value at row " + std::to_string(i + 1) + ", column " +
                                std::to_string(j + 1));
            }
        }
    }
}

void DistanceMatrix::validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, i) != 0.0)
            throw DataError("distance matrix diagonal not zero at " + std::to_string(i));
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double v = at(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw DataError("invalid distance at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            if (v != at(j, i))
                throw DataError("distance matrix asymmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        }
    }
}

Labeling Labeling::from_labels(std::vector<int> labels) {
    Labeling out;
    int k = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int v = labels[i];
        if (v < 0)
            throw DataError("label at member " + std::to_string(i + 1) +
                            " is negative; cluster ids are 1..K, 0 marks noise");
        if (v > k) k = v;
    }
    // k == 0 (all noise) is a legal clustering outcome; index computations
    // reject it separately.
    out.members_.assign(static_cast<std::size_t>(k) + 1, {});
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == kNoise)
            ++out.noise_count_;
        else
            out.members_[labels[i]].push_back(static_cast<int>(i));
    }
    for (int c = 1; c <= k; ++c) {
        if (out.members_[c].empty())
            throw DataError("cluster id " + std::to_string(c) + " has no members");
    }
    out.labels_ = std::move(labels);
    out.k_ = k;
    return out;
}

}  // namespace rclus
