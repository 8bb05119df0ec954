#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rclus/baseline.hpp"
#include "rclus/metric.hpp"
#include "rclus/rng.hpp"

using namespace rclus;

namespace {

DataMatrix from_1d(const std::vector<double>& xs) {
    DataMatrix d(xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) d.at(i, 0) = xs[i];
    return d;
}

}  // namespace

TEST_CASE("silhouette: coincident clusters score zero") {
    const DataMatrix d = from_1d({2.0, 2.0, 2.0, 2.0});
    const DistanceMatrix dist = euclidean_distances(d);
    CHECK(silhouette_asw(dist, Labeling::from_labels({1, 1, 2, 2})) == 0.0);
}

TEST_CASE("silhouette: hand-evaluated two-pair example") {
    const DataMatrix d = from_1d({0.0, 1.0, 10.0, 11.0});
    const DistanceMatrix dist = euclidean_distances(d);
    const double asw = silhouette_asw(dist, Labeling::from_labels({1, 1, 2, 2}));
    // members 0 and 11: a=1, b=10.5 -> 19/21; members 1 and 10: a=1, b=9.5 -> 17/19
    CHECK(std::abs(asw - 0.5 * (19.0 / 21.0 + 17.0 / 19.0)) < 1e-12);
}

TEST_CASE("silhouette: singleton cluster members score zero") {
    const DataMatrix d = from_1d({0.0, 5.0, 6.0});
    const DistanceMatrix dist = euclidean_distances(d);
    const Labeling lab = Labeling::from_labels({1, 2, 2});
    // member 0 scores 0; members 1,2: a=1, b=(5 or 6)
    const double expect = (0.0 + (5.0 - 1.0) / 5.0 + (6.0 - 1.0) / 6.0) / 3.0;
    CHECK(std::abs(silhouette_asw(dist, lab) - expect) < 1e-12);
}

TEST_CASE("dunn on a hand example") {
    const DataMatrix d = from_1d({0.0, 1.0, 5.0, 6.0});
    const DistanceMatrix dist = euclidean_distances(d);
    CHECK(dunn_index(dist, Labeling::from_labels({1, 1, 2, 2})) == 4.0);
}

TEST_CASE("dunn undefined when every cluster is a singleton") {
    const DataMatrix d = from_1d({0.0, 1.0, 2.0});
    const DistanceMatrix dist = euclidean_distances(d);
    CHECK_THROWS_WITH_AS(dunn_index(dist, Labeling::from_labels({1, 2, 3})),
                         doctest::Contains("zero diameter"), ComputeError);
}

TEST_CASE("dunn value is scale-invariant") {
    const auto inst = oracle::random_instance(17, 9, 2, 3);
    const DistanceMatrix dist = euclidean_distances(inst.data);
    const double base = dunn_index(dist, inst.labels);
    DistanceMatrix s2 = dist;
    s2.scale(8.0);  // power of two: exact
    CHECK(dunn_index(s2, inst.labels) == base);
    DistanceMatrix s3 = dist;
    s3.scale(3.0);
    CHECK(dunn_index(s3, inst.labels) == doctest::Approx(base).epsilon(1e-14));
}

TEST_CASE("connectivity is zero for well-separated clusters bigger than J") {
    std::vector<double> xs;
    for (int i = 0; i < 12; ++i) xs.push_back(i * 0.01);
    for (int i = 0; i < 12; ++i) xs.push_back(100.0 + i * 0.01);
    const DistanceMatrix dist = euclidean_distances(from_1d(xs));
    std::vector<int> labels(24, 1);
    std::fill(labels.begin() + 12, labels.end(), 2);
    CHECK(connectivity(dist, Labeling::from_labels(labels), 10) == 0.0);
}

TEST_CASE("connectivity matches the row-sort oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = oracle::random_instance(seed + 40, 8, 2, 2 + seed % 2);
        const DistanceMatrix dist = euclidean_distances(inst.data);
        const double got = connectivity(dist, inst.labels, 4);
        CHECK(std::abs(got - oracle::conn(dist, inst.labels, 4)) <= 1e-12);
    }
}

TEST_CASE("connectivity value is unchanged under distance scaling") {
    const auto inst = oracle::random_instance(55, 10, 2, 3);
    const DistanceMatrix dist = euclidean_distances(inst.data);
    const double base = connectivity(dist, inst.labels, 5);
    DistanceMatrix scaled = dist;
    scaled.scale(4.0);
    CHECK(connectivity(scaled, inst.labels, 5) == base);
}

TEST_CASE("connectivity rejects J >= n") {
    const DataMatrix d = from_1d({0.0, 1.0, 5.0});
    const DistanceMatrix dist = euclidean_distances(d);
    const Labeling lab = Labeling::from_labels({1, 1, 2});
    CHECK_THROWS_AS(connectivity(dist, lab, 3), ComputeError);
    CHECK_NOTHROW(connectivity(dist, lab, 2));
}

TEST_CASE("CH is zero when cluster means coincide with the grand mean") {
    DataMatrix d(4, 2);
    const double pts[4][2] = {{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    for (int i = 0; i < 4; ++i) {
        d.at(i, 0) = pts[i][0];
        d.at(i, 1) = pts[i][1];
    }
    CHECK(calinski_harabasz(d, Labeling::from_labels({1, 1, 2, 2})) == 0.0);
}

TEST_CASE("CH undefined when every member sits at its cluster mean") {
    const DataMatrix d = from_1d({1.0, 1.0, 7.0, 7.0, 3.0});
    CHECK_THROWS_WITH_AS(calinski_harabasz(d, Labeling::from_labels({1, 1, 2, 2, 3})),
                         doctest::Contains("CH undefined"), ComputeError);
}

TEST_CASE("CH matches the transcription oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = oracle::random_instance(seed + 60, 9, 3, 3);
        const double got = calinski_harabasz(inst.data, inst.labels);
        CHECK(std::abs(got - oracle::ch(inst.data, inst.labels)) <=
              1e-10 * std::max(1.0, std::abs(got)));
    }
}

TEST_CASE("CH argmax over K is invariant under coordinate scaling") {
    const auto inst = oracle::random_instance(72, 18, 2, 2);
    DataMatrix scaled = inst.data;
    for (auto& v : scaled.values) v *= 7.5;
    int best_k = 0;
    int best_k_scaled = 0;
    double best = -1.0;
    double best_s = -1.0;
    for (int k = 2; k <= 4; ++k) {
        const auto lab = oracle::random_instance(72 + k, 18, 2, k).labels;
        const double v = calinski_harabasz(inst.data, lab);
        const double vs = calinski_harabasz(scaled, lab);
        if (v > best) {
            best = v;
            best_k = k;
        }
        if (vs > best_s) {
            best_s = vs;
            best_k_scaled = k;
        }
    }
    CHECK(best_k == best_k_scaled);
}

TEST_CASE("nncer is zero for far clusters much bigger than l") {
    std::vector<double> xs;
    for (int i = 0; i < 15; ++i) xs.push_back(i * 0.01);
    for (int i = 0; i < 15; ++i) xs.push_back(50.0 + i * 0.01);
    const DistanceMatrix dist = euclidean_distances(from_1d(xs));
    std::vector<int> labels(30, 1);
    std::fill(labels.begin() + 15, labels.end(), 2);
    CHECK(nncer(dist, Labeling::from_labels(labels), 10, Seed{1}) == 0.0);
}

TEST_CASE("nncer matches the neighbor-sort oracle with a fixed seed") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = oracle::random_instance(seed + 80, 12, 2, 2 + seed % 3);
        const DistanceMatrix dist = euclidean_distances(inst.data);
        const double got = nncer(dist, inst.labels, 5, Seed{seed});
        CHECK(got == oracle::nncer(dist, inst.labels, 5, Seed{seed}));
    }
}

TEST_CASE("nncer rejects l >= n") {
    const DataMatrix d = from_1d({0.0, 1.0, 5.0});
    const DistanceMatrix dist = euclidean_distances(d);
    CHECK_THROWS_AS(nncer(dist, Labeling::from_labels({1, 1, 2}), 3, Seed{0}), ComputeError);
}

TEST_CASE("nncer vote ties resolve randomly per member") {
    // l = 2: each boundary member sees one neighbor per cluster
    const DataMatrix d = from_1d({0.0, 1.0, 2.5, 10.0});
    const DistanceMatrix dist = euclidean_distances(d);
    const Labeling lab = Labeling::from_labels({1, 1, 2, 2});
    int distinct = 0;
    double first = nncer(dist, lab, 2, Seed{0});
    for (std::uint64_t s = 1; s < 40; ++s)
        distinct += nncer(dist, lab, 2, Seed{s}) != first;
    CHECK(distinct > 0);  // the tie rule actually randomizes
}

TEST_CASE("indices are invariant under cluster relabeling") {
    const auto inst = oracle::random_instance(91, 11, 2, 3);
    const DistanceMatrix dist = euclidean_distances(inst.data);
    const int perm[4] = {0, 2, 3, 1};
    std::vector<int> relabeled(inst.labels.size());
    for (std::size_t i = 0; i < relabeled.size(); ++i)
        relabeled[i] = perm[inst.labels.label(i)];
    const Labeling rel = Labeling::from_labels(relabeled);
    CHECK(dunn_index(dist, rel) == dunn_index(dist, inst.labels));
    CHECK(connectivity(dist, rel, 4) == connectivity(dist, inst.labels, 4));
    CHECK(nncer(dist, rel, 4, Seed{7}) == nncer(dist, inst.labels, 4, Seed{7}));
    CHECK(silhouette_asw(dist, rel) ==
          doctest::Approx(silhouette_asw(dist, inst.labels)).epsilon(1e-14));
    CHECK(calinski_harabasz(inst.data, rel) ==
          doctest::Approx(calinski_harabasz(inst.data, inst.labels)).epsilon(1e-14));
}

TEST_CASE("noise members are excluded from baseline indices") {
    const DataMatrix base = from_1d({0.0, 1.0, 10.0, 11.0});
    const DistanceMatrix dist_base = euclidean_distances(base);
    const Labeling lab_base = Labeling::from_labels({1, 1, 2, 2});

    const DataMatrix noisy = from_1d({0.0, 1.0, 10.0, 11.0, 500.0});
    const DistanceMatrix dist_noisy = euclidean_distances(noisy);
    const Labeling lab_noisy = Labeling::from_labels({1, 1, 2, 2, kNoise});

    CHECK(dunn_index(dist_noisy, lab_noisy) == dunn_index(dist_base, lab_base));
    CHECK(connectivity(dist_noisy, lab_noisy, 2) == connectivity(dist_base, lab_base, 2));
    CHECK(silhouette_asw(dist_noisy, lab_noisy) == silhouette_asw(dist_base, lab_base));
    CHECK(nncer(dist_noisy, lab_noisy, 2, Seed{4}) == nncer(dist_base, lab_base, 2, Seed{4}));
    CHECK(calinski_harabasz(noisy, lab_noisy) == calinski_harabasz(base, lab_base));
}

TEST_CASE("orientation metadata") {
    const IndexValue dunn{"dunn", 1.0, Orientation::Maximize};
    const IndexValue conn{"conn", 1.0, Orientation::Minimize};
    CHECK(dunn.orientation == Orientation::Maximize);
    CHECK(conn.orientation == Orientation::Minimize);
}
