#pragma once

#include "rclus/types.hpp"

namespace rclus {

struct DbscanConfig {
    double eps = 0.0;
    int min_pts = 1;
};

/// Density-based clustering. Core members have >= min_pts members within eps
/// (self included); clusters are the connected components of core members
/// under eps-reachability; non-core members within eps of a core join that
/// core's cluster (lowest id on ties); everything else is noise. K comes out
/// of the data and may be 0.
Labeling dbscan(const DistanceMatrix& dist, const DbscanConfig& cfg);

}  // namespace rclus
