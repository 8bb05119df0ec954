#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rclus {

/// Thrown for unreadable/malformed input data (CSV, label files, non-finite values).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an index or algorithm precondition is violated.
class ComputeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Label value marking a member assigned to no cluster.
inline constexpr int kNoise = 0;

/// Dense n x p matrix of observations, row-major. Rows are members.
struct DataMatrix {
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;

    DataMatrix() = default;
    DataMatrix(std::size_t n, std::size_t p) : values(n * p, 0.0), rows(n), cols(p) {}

    double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }

    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * cols, cols};
    }
    std::span<double> row(std::size_t i) {
        return {values.data() + i * cols, cols};
    }

    /// Checks shape and finiteness; throws DataError naming the offending cell.
    void validate() const;
};

/// Symmetric n x n matrix of pairwise distances with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : d_(n * n, 0.0), n_(n) {}

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }
    std::span<const double> row(std::size_t i) const { return {d_.data() + i * n_, n_}; }

    /// Throws DataError if asymmetric, nonzero diagonal, negative or non-finite.
    void validate() const;

    void scale(double c) {
        for (auto& v : d_) v *= c;
    }

private:
    std::vector<double> d_;
    std::size_t n_ = 0;
};

/// Cluster assignment: labels[i] in 1..K, or kNoise. Every id in 1..K occurs.
class Labeling {
public:
    Labeling() = default;

    /// Builds from raw labels; computes K = max id and validates that
    /// ids 1..K all occur and nothing negative slips in.
    static Labeling from_labels(std::vector<int> labels);

    int k() const { return k_; }
    std::size_t size() const { return labels_.size(); }
    int label(std::size_t i) const { return labels_[i]; }
    bool is_noise(std::size_t i) const { return labels_[i] == kNoise; }
    const std::vector<int>& labels() const { return labels_; }

    /// Member indices of cluster id (1-based); empty vector for kNoise queries.
    const std::vector<int>& members(int cluster_id) const { return members_[cluster_id]; }
    std::size_t cluster_size(int cluster_id) const { return members_[cluster_id].size(); }
    std::size_t noise_count() const { return noise_count_; }
    std::size_t active_count() const { return labels_.size() - noise_count_; }

private:
    std::vector<int> labels_;
    std::vector<std::vector<int>> members_;  // index 0 unused (noise not listed)
    std::size_t noise_count_ = 0;
    int k_ = 0;
};

/// Seed for the deterministic counter-based generator; same seed, same bytes.
struct Seed {
    std::uint64_t value = 0;
};

}  // namespace rclus
