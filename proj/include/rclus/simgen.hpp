#pragma once

#include <array>
#include <vector>

#include "rclus/types.hpp"

namespace rclus {

struct GeneratedDataset {
    DataMatrix data;
    Labeling truth;
};

/// Independent univariate normal samples per group, concatenated (p = 1).
GeneratedDataset gen_univariate_normals(const std::vector<std::size_t>& sizes,
                                        const std::vector<double>& means,
                                        const std::vector<double>& sds, Seed seed);
GeneratedDataset gen_univariate_normals(Seed seed);  // sizes 100/100/100, means -3/0/3, sds 1

/// Placement of the four 2-D shape loci. Defaults keep every locus dense
/// enough (~1.3-2.2 units of perimeter per 100 points) that the groups stay
/// contiguous under a 0.05-noise, eps~0.165 density scan, with inter-shape
/// gaps >= 0.5.
struct ShapeGeometry {
    // square: boundary, lower-left corner + side
    std::array<double, 2> square_origin{0.0, 0.0};
    double square_side = 0.5;
    // rectangle: boundary, lower-left corner + extents
    std::array<double, 2> rect_origin{1.2, 0.0};
    std::array<double, 2> rect_extent{0.8, 0.3};
    // circle
    std::array<double, 2> circle_center{0.25, 1.3};
    double circle_radius = 0.3;
    // sine arc: y = base + amplitude * sin(pi * (x - x0) / (x1 - x0)), x in [x0, x1]
    std::array<double, 2> sine_x{1.2, 2.2};
    double sine_base = 1.3;
    double sine_amplitude = 0.3;
};

/// Four noisy shape groups (square, rectangle, circle, sine curve), each
/// sampled uniformly along its locus and perturbed coordinate-wise by
/// Gaussian(0, noise_sd).
GeneratedDataset gen_four_shapes(std::size_t size_per_group, double noise_sd, Seed seed,
                                 const ShapeGeometry& geometry = {});

/// High-dimensional groups with a t-copula dependence structure: per row a
/// dim-variate t vector (df degrees of freedom, equicorrelated off_diag) is
/// pushed through its marginal t distribution function to uniforms, then
/// through the standard normal quantile, shifted by the group mean.
GeneratedDataset gen_tcopula_highdim(const std::vector<std::size_t>& sizes, std::size_t dim,
                                     const std::vector<double>& means, double df, double off_diag,
                                     Seed seed);
GeneratedDataset gen_tcopula_highdim(Seed seed);  // sizes 20/15/10, dim 100, means 0/-3/3, df 2, 0.15

}  // namespace rclus
