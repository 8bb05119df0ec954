#include "rclus/metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "rclus/kernels.hpp"

namespace rclus {

namespace {

std::map<std::string, RowMetric>& registry() {
    static std::map<std::string, RowMetric> reg = {
        {"euclidean",
         [](std::span<const double> a, std::span<const double> b) {
             return std::sqrt(kernels::l2_sq(a.data(), b.data(), a.size()));
         }},
    };
    return reg;
}

std::mutex g_registry_mutex;

}  // namespace

void register_metric(const std::string& name, RowMetric metric) {
    std::lock_guard lock(g_registry_mutex);
    registry()[name] = std::move(metric);
}

std::vector<std::string> registered_metrics() {
    std::lock_guard lock(g_registry_mutex);
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

RowMetric metric_by_name(const std::string& name) {
    std::lock_guard lock(g_registry_mutex);
    const auto it = registry().find(name);
    if (it == registry().end()) {
        std::string msg = "unknown metric '" + name + "'; registered:";
        for (const auto& [n, fn] : registry()) msg += " " + n;
        throw ComputeError(msg);
    }
    return it->second;
}

DistanceMatrix euclidean_distances(const DataMatrix& data) {
    data.validate();
    const std::size_t n = data.rows;
    DistanceMatrix dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* ri = data.values.data() + i * data.cols;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double* rj = data.values.data() + j * data.cols;
            dist.set(i, j, std::sqrt(kernels::l2_sq(ri, rj, data.cols)));
        }
    }
    return dist;
}

DistanceMatrix distance_for(const std::string& metric_name, const DataMatrix& data) {
    if (metric_name == "euclidean") return euclidean_distances(data);
    const RowMetric metric = metric_by_name(metric_name);
    data.validate();
    const std::size_t n = data.rows;
    DistanceMatrix dist(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) dist.set(i, j, metric(data.row(i), data.row(j)));
    dist.validate();
    return dist;
}

}  // namespace rclus
