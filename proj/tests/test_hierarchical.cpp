#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "rclus/hierarchical.hpp"
#include "rclus/metric.hpp"

using namespace rclus;

namespace {

DataMatrix from_1d(const std::vector<double>& xs) {
    DataMatrix d(xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) d.at(i, 0) = xs[i];
    return d;
}

}  // namespace

TEST_CASE("K = 1 puts everything in one cluster") {
    const DistanceMatrix dist = euclidean_distances(from_1d({0.0, 5.0, 9.0}));
    const Labeling lab = hierarchical(dist, Linkage::Single, 1);
    CHECK(lab.k() == 1);
    CHECK(lab.cluster_size(1) == 3);
}

TEST_CASE("single linkage separates the obvious gap") {
    const DistanceMatrix dist = euclidean_distances(from_1d({0.0, 1.0, 10.0}));
    const Labeling lab = hierarchical(dist, Linkage::Single, 2);
    CHECK(lab.labels() == std::vector<int>{1, 1, 2});
}

TEST_CASE("average linkage uses mean pairwise distances") {
    // single linkage would chain 0-2-4 first; average linkage keeps {0,2} vs {4,6.5}
    const DistanceMatrix dist = euclidean_distances(from_1d({0.0, 2.0, 4.0, 6.5}));
    const Labeling avg = hierarchical(dist, Linkage::Average, 2);
    CHECK(avg.labels() == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("merge sequence equals the naive recomputation oracle") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto inst = oracle::random_instance(seed + 10, 7, 2, 2);
        const DistanceMatrix dist = euclidean_distances(inst.data);
        for (const Linkage link : {Linkage::Single, Linkage::Average}) {
            const auto got = merge_sequence(dist, link);
            const auto want = oracle::merge_sequence_naive(dist, link);
            REQUIRE(got.size() == want.size());
            for (std::size_t s = 0; s < got.size(); ++s) {
                CHECK(got[s].a == want[s].a);
                CHECK(got[s].b == want[s].b);
                CHECK(std::abs(got[s].dist - want[s].dist) <= 1e-12);
            }
        }
    }
}

TEST_CASE("cuts at K and K-1 differ by exactly one merge") {
    const auto inst = oracle::random_instance(99, 12, 2, 2);
    const DistanceMatrix dist = euclidean_distances(inst.data);
    for (const Linkage link : {Linkage::Single, Linkage::Average}) {
        const auto cuts = hierarchical_cuts(dist, link, 2, 6);
        for (std::size_t idx = 1; idx < cuts.size(); ++idx) {
            const Labeling& coarse = cuts[idx - 1];  // K-1 relative to fine
            const Labeling& fine = cuts[idx];
            // every fine cluster maps into one coarse cluster, and exactly one
            // coarse cluster is split in two
            std::map<int, std::set<int>> children;
            for (std::size_t i = 0; i < fine.size(); ++i)
                children[coarse.label(i)].insert(fine.label(i));
            int split = 0;
            for (const auto& [c, fs] : children) {
                REQUIRE(fs.size() <= 2);
                split += fs.size() == 2;
            }
            CHECK(split == 1);
        }
    }
}

TEST_CASE("duplicate points merge first at distance zero") {
    const DistanceMatrix dist = euclidean_distances(from_1d({3.0, 7.0, 3.0, 9.0}));
    const auto merges = merge_sequence(dist, Linkage::Single);
    CHECK(merges[0].a == 0);
    CHECK(merges[0].b == 2);
    CHECK(merges[0].dist == 0.0);
}

TEST_CASE("cut bounds are enforced") {
    const DistanceMatrix dist = euclidean_distances(from_1d({0.0, 1.0, 2.0}));
    CHECK_THROWS_AS(hierarchical(dist, Linkage::Single, 0), ComputeError);
    CHECK_THROWS_AS(hierarchical(dist, Linkage::Single, 4), ComputeError);
}
