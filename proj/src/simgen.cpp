#include "rclus/simgen.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "rclus/rng.hpp"

namespace rclus {

namespace {

constexpr double kPi = 3.14159265358979323846;

Labeling truth_from_sizes(const std::vector<std::size_t>& sizes) {
    std::vector<int> labels;
    for (std::size_t g = 0; g < sizes.size(); ++g)
        labels.insert(labels.end(), sizes[g], static_cast<int>(g) + 1);
    return Labeling::from_labels(std::move(labels));
}

}  // namespace

GeneratedDataset gen_univariate_normals(const std::vector<std::size_t>& sizes,
                                        const std::vector<double>& means,
                                        const std::vector<double>& sds, Seed seed) {
    if (sizes.empty() || sizes.size() != means.size() || sizes.size() != sds.size())
        throw ComputeError("normals generator needs matching sizes/means/sds");
    for (const auto s : sizes)
        if (s == 0) throw ComputeError("normals generator needs positive group sizes");
    for (const double s : sds)
        if (!(s > 0.0)) throw ComputeError("normals generator needs positive sds");

    std::size_t total = 0;
    for (const auto s : sizes) total += s;
    DataMatrix data(total, 1);
    std::size_t row = 0;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        rng::Stream stream(seed, rng::Tag::GenNormals, g);
        for (std::size_t i = 0; i < sizes[g]; ++i)
            data.at(row++, 0) = means[g] + sds[g] * stream.next_normal();
    }
    return {std::move(data), truth_from_sizes(sizes)};
}

GeneratedDataset gen_univariate_normals(Seed seed) {
    return gen_univariate_normals({100, 100, 100}, {-3.0, 0.0, 3.0}, {1.0, 1.0, 1.0}, seed);
}

GeneratedDataset gen_four_shapes(std::size_t size_per_group, double noise_sd, Seed seed,
                                 const ShapeGeometry& geo) {
    if (size_per_group == 0) throw ComputeError("shapes generator needs a positive group size");
    if (noise_sd < 0.0) throw ComputeError("shapes generator needs noise_sd >= 0");

    DataMatrix data(4 * size_per_group, 2);
    std::size_t row = 0;

    const auto emit = [&](rng::Stream& stream, double x, double y) {
        data.at(row, 0) = x + (noise_sd > 0.0 ? noise_sd * stream.next_normal() : 0.0);
        data.at(row, 1) = y + (noise_sd > 0.0 ? noise_sd * stream.next_normal() : 0.0);
        ++row;
    };

    {  // square boundary, uniform along the perimeter
        rng::Stream stream(seed, rng::Tag::GenShapes, 1);
        const double s = geo.square_side;
        for (std::size_t i = 0; i < size_per_group; ++i) {
            const double t = stream.next_double() * 4.0 * s;
            const int side = std::min(3, static_cast<int>(t / s));
            const double u = t - side * s;
            double x = geo.square_origin[0];
            double y = geo.square_origin[1];
            switch (side) {
                case 0: x += u; break;
                case 1: x += s; y += u; break;
                case 2: x += s - u; y += s; break;
                default: y += s - u; break;
            }
            emit(stream, x, y);
        }
    }
    {  // rectangle boundary
        rng::Stream stream(seed, rng::Tag::GenShapes, 2);
        const double w = geo.rect_extent[0];
        const double h = geo.rect_extent[1];
        const double per = 2.0 * (w + h);
        for (std::size_t i = 0; i < size_per_group; ++i) {
            double t = stream.next_double() * per;
            double x = geo.rect_origin[0];
            double y = geo.rect_origin[1];
            if (t < w) {
                x += t;
            } else if (t < w + h) {
                x += w;
                y += t - w;
            } else if (t < 2 * w + h) {
                x += w - (t - w - h);
                y += h;
            } else {
                y += h - (t - 2 * w - h);
            }
            emit(stream, x, y);
        }
    }
    {  // circle
        rng::Stream stream(seed, rng::Tag::GenShapes, 3);
        for (std::size_t i = 0; i < size_per_group; ++i) {
            const double a = stream.next_double() * 2.0 * kPi;
            emit(stream, geo.circle_center[0] + geo.circle_radius * std::cos(a),
                 geo.circle_center[1] + geo.circle_radius * std::sin(a));
        }
    }
    {  // sine arc, uniform in arc length via a cumulative-length table
        rng::Stream stream(seed, rng::Tag::GenShapes, 4);
        const double x0 = geo.sine_x[0];
        const double x1 = geo.sine_x[1];
        const double span = x1 - x0;
        constexpr int kSegments = 2048;
        std::vector<double> cum(kSegments + 1, 0.0);
        const auto point = [&](double frac) {
            const double x = x0 + frac * span;
            return std::pair{x, geo.sine_base + geo.sine_amplitude * std::sin(kPi * frac)};
        };
        for (int s = 1; s <= kSegments; ++s) {
            const auto [xa, ya] = point((s - 1.0) / kSegments);
            const auto [xb, yb] = point(static_cast<double>(s) / kSegments);
            cum[s] = cum[s - 1] + std::hypot(xb - xa, yb - ya);
        }
        for (std::size_t i = 0; i < size_per_group; ++i) {
            const double target = stream.next_double() * cum.back();
            const auto it = std::lower_bound(cum.begin(), cum.end(), target);
            const int s = std::max(1, static_cast<int>(it - cum.begin()));
            const double within = (target - cum[s - 1]) / std::max(cum[s] - cum[s - 1], 1e-300);
            const auto [x, y] = point((s - 1 + within) / kSegments);
            emit(stream, x, y);
        }
    }
    return {std::move(data),
            truth_from_sizes({size_per_group, size_per_group, size_per_group, size_per_group})};
}

GeneratedDataset gen_tcopula_highdim(const std::vector<std::size_t>& sizes, std::size_t dim,
                                     const std::vector<double>& means, double df, double off_diag,
                                     Seed seed) {
    if (sizes.empty() || sizes.size() != means.size())
        throw ComputeError("t-copula generator needs matching sizes/means");
    if (!(df > 0.0)) throw ComputeError("t-copula generator needs df > 0");
    if (dim < 2) throw ComputeError("t-copula generator needs dim >= 2");
    const double lo = -1.0 / (static_cast<double>(dim) - 1.0);
    if (!(off_diag > lo && off_diag < 1.0))
        throw ComputeError("equicorrelation matrix not positive definite for off_diag " +
                           std::to_string(off_diag));

    const boost::math::students_t_distribution<double> t_dist(df);
    const boost::math::normal_distribution<double> std_normal;
    // sqrt of the equicorrelated matrix, applied analytically:
    // R^(1/2) z = a (z - zbar 1) + b zbar 1 with the eigenvalue roots below.
    const double a = std::sqrt(1.0 - off_diag);
    const double b = std::sqrt(1.0 + (static_cast<double>(dim) - 1.0) * off_diag);

    std::size_t total = 0;
    for (const auto s : sizes) total += s;
    DataMatrix data(total, dim);
    std::size_t row = 0;
    std::vector<double> z(dim);
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        rng::Stream stream(seed, rng::Tag::GenCopula, g);
        for (std::size_t i = 0; i < sizes[g]; ++i) {
            double zsum = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                z[j] = stream.next_normal();
                zsum += z[j];
            }
            const double zbar = zsum / static_cast<double>(dim);
            const double scale = 1.0 / std::sqrt(stream.next_chisq(df) / df);
            for (std::size_t j = 0; j < dim; ++j) {
                const double t = (a * (z[j] - zbar) + b * zbar) * scale;
                // clamp away from {0,1}: the normal quantile must stay finite
                const double u =
                    std::clamp(boost::math::cdf(t_dist, t), 1e-15, 1.0 - 1e-15);
                data.at(row, j) = boost::math::quantile(std_normal, u) + means[g];
            }
            ++row;
        }
    }
    return {std::move(data), truth_from_sizes(sizes)};
}

GeneratedDataset gen_tcopula_highdim(Seed seed) {
    return gen_tcopula_highdim({20, 15, 10}, 100, {0.0, -3.0, 3.0}, 2.0, 0.15, seed);
}

}  // namespace rclus
