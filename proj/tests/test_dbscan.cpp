#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "rclus/dbscan.hpp"
#include "rclus/metric.hpp"
#include "rclus/rng.hpp"

using namespace rclus;

namespace {

DataMatrix from_1d(const std::vector<double>& xs) {
    DataMatrix d(xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) d.at(i, 0) = xs[i];
    return d;
}

// canonical form: cluster ids in order of first appearance
std::vector<int> canonical(const std::vector<int>& labels) {
    std::map<int, int> remap;
    std::vector<int> out(labels.size());
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == kNoise) {
            out[i] = kNoise;
            continue;
        }
        if (!remap.count(labels[i])) remap[labels[i]] = ++next;
        out[i] = remap[labels[i]];
    }
    return out;
}

}  // namespace

TEST_CASE("all-isolated points become noise, K = 0") {
    const DataMatrix d = from_1d({0.0, 10.0, 20.0, 30.0});
    const Labeling lab = dbscan(euclidean_distances(d), {1.0, 2});
    CHECK(lab.k() == 0);
    CHECK(lab.noise_count() == 4);
}

TEST_CASE("a chain within eps forms one cluster") {
    std::vector<double> xs;
    for (int i = 0; i < 10; ++i) xs.push_back(i * 1.0);
    const Labeling lab = dbscan(euclidean_distances(from_1d(xs)), {1.5, 3});
    CHECK(lab.k() == 1);
    CHECK(lab.noise_count() == 0);
}

TEST_CASE("labels equal the reachability-closure oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = oracle::random_instance(seed + 500, 10, 1, 2);
        const DistanceMatrix dist = euclidean_distances(inst.data);
        for (const double eps : {1.0, 2.5}) {
            for (const int mp : {2, 3}) {
                const Labeling got = dbscan(dist, {eps, mp});
                const auto want = oracle::dbscan_closure(dist, eps, mp);
                CHECK(got.labels() == want);
            }
        }
    }
}

TEST_CASE("border point between two clusters attaches to the lowest id") {
    const DataMatrix d = from_1d({-1.9, -1.5, -1.0, 0.0, 1.0, 1.5, 1.9});
    const Labeling lab = dbscan(euclidean_distances(d), {1.0, 4});
    CHECK(lab.labels() == std::vector<int>{1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("output is invariant to member order up to renumbering") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto inst = oracle::random_instance(seed + 600, 12, 2, 2);
        const DistanceMatrix dist = euclidean_distances(inst.data);
        const Labeling base = dbscan(dist, {2.0, 3});

        std::vector<int> perm(12);
        for (int i = 0; i < 12; ++i) perm[i] = i;
        rng::Stream s(Seed{seed}, rng::Tag::Fuzz, 8);
        for (std::size_t i = 11; i > 0; --i) std::swap(perm[i], perm[s.next_below(i + 1)]);
        DataMatrix pd(12, 2);
        for (int i = 0; i < 12; ++i) {
            pd.at(i, 0) = inst.data.at(perm[i], 0);
            pd.at(i, 1) = inst.data.at(perm[i], 1);
        }
        const Labeling permuted = dbscan(euclidean_distances(pd), {2.0, 3});
        // map the permuted labels back to original member order and canonicalize
        std::vector<int> back(12);
        for (int i = 0; i < 12; ++i) back[perm[i]] = permuted.label(i);
        CHECK(canonical(back) == canonical(base.labels()));
    }
}

TEST_CASE("config validation") {
    const DistanceMatrix dist = euclidean_distances(from_1d({0.0, 1.0}));
    CHECK_THROWS_AS(dbscan(dist, {0.0, 2}), ComputeError);
    CHECK_THROWS_AS(dbscan(dist, {1.0, 0}), ComputeError);
}
