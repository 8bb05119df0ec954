#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rclus/rng.hpp"

using rclus::Seed;
using rclus::rng::Stream;
using rclus::rng::Tag;

TEST_CASE("same key replays the same sequence") {
    Stream a(Seed{42}, Tag::Fuzz, 7);
    Stream b(Seed{42}, Tag::Fuzz, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different tags and keys decorrelate") {
    Stream a(Seed{42}, Tag::Fuzz, 7);
    Stream b(Seed{42}, Tag::Fuzz, 8);
    Stream c(Seed{42}, Tag::NearestTie, 7);
    int same_ab = 0;
    int same_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const auto x = a.next_u64();
        same_ab += x == b.next_u64();
        same_ac += x == c.next_u64();
    }
    CHECK(same_ab == 0);
    CHECK(same_ac == 0);
}

TEST_CASE("uniform doubles live in [0,1) with a sane mean") {
    Stream s(Seed{1}, Tag::Fuzz, 0);
    double sum = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double u = s.next_double();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / 20000 - 0.5) < 0.02);
}

TEST_CASE("next_below is exact and in range") {
    Stream s(Seed{2}, Tag::Fuzz, 0);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = s.next_below(7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (const int c : counts) CHECK(c > 800);
}

TEST_CASE("normal draws have matching first two moments") {
    Stream s(Seed{3}, Tag::Fuzz, 0);
    double sum = 0.0;
    double sum2 = 0.0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
        const double x = s.next_normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::abs(sum2 / n - 1.0) < 0.03);
}

TEST_CASE("chi-square mean equals df") {
    for (const double df : {0.7, 1.0, 2.0, 5.0}) {
        Stream s(Seed{4}, Tag::Fuzz, static_cast<std::uint64_t>(df * 10));
        double sum = 0.0;
        const int n = 20000;
        for (int i = 0; i < n; ++i) sum += s.next_chisq(df);
        CHECK(std::abs(sum / n - df) < 0.1 * df + 0.05);
    }
}
