#include "rclus/rclus_index.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "rclus/rng.hpp"

namespace rclus {

int BinGrid::bin_of(double v) const {
    const int h = static_cast<int>(std::ceil(v * n_bins));
    return std::clamp(h, 1, n_bins);
}

BinGrid BinGrid::from_width(double w) {
    if (!(w > 0.0 && w < 1.0)) throw ComputeError("bin width must lie in (0,1)");
    const double n_real = 1.0 / w;
    const int n = static_cast<int>(std::lround(n_real));
    if (n < 2 || std::abs(n * w - 1.0) > 1e-9)
        throw ComputeError("bin width must equal 1/N for an integer N >= 2");
    return BinGrid(n);
}

int nearest_cluster(int member, const DistanceMatrix& dist, const Labeling& labels, Seed seed) {
    const int own = labels.label(member);
    if (own == kNoise) throw ComputeError("nearest cluster undefined for a noise member");
    if (labels.k() < 2) throw ComputeError("index undefined for a single cluster");

    double best = 0.0;
    std::vector<int> tied;
    for (int c = 1; c <= labels.k(); ++c) {
        if (c == own) continue;
        const auto& members = labels.members(c);
        double sum = 0.0;
        for (const int j : members) sum += dist.at(member, j);
        const double avg = sum / static_cast<double>(members.size());
        if (tied.empty() || avg < best) {
            best = avg;
            tied.assign(1, c);
        } else if (avg == best) {
            tied.push_back(c);
        }
    }
    if (tied.size() == 1) return tied.front();
    rng::Stream stream(seed, rng::Tag::NearestTie, static_cast<std::uint64_t>(member));
    return tied[stream.next_below(tied.size())];
}

NormalizedSets normalized_distance_sets(int member, const DistanceMatrix& dist,
                                        const Labeling& labels, int nc) {
    NormalizedSets out;
    const int own = labels.label(member);
    for (const int j : labels.members(own))
        if (j != member) out.s1.push_back(dist.at(member, j));
    for (const int j : labels.members(nc)) out.s2.push_back(dist.at(member, j));

    double m = 0.0;
    for (const double v : out.s1) m = std::max(m, v);
    for (const double v : out.s2) m = std::max(m, v);
    out.scale = m;
    if (m > 0.0) {
        for (double& v : out.s1) v /= m;
        for (double& v : out.s2) v /= m;
    }
    return out;
}

FrequencyPair bin_frequencies(std::span<const double> s1_norm, std::span<const double> s2_norm,
                              const BinGrid& grid) {
    FrequencyPair freq;
    freq.f1.assign(grid.n_bins, 0);
    freq.f2.assign(grid.n_bins, 0);
    for (const double v : s1_norm) {
        if (v == 0.0)
            ++freq.zeros1;
        else
            ++freq.f1[grid.bin_of(v) - 1];
    }
    for (const double v : s2_norm) {
        if (v == 0.0)
            ++freq.zeros2;
        else
            ++freq.f2[grid.bin_of(v) - 1];
    }
    assert(std::accumulate(freq.f1.begin(), freq.f1.end(), 0) + freq.zeros1 ==
           static_cast<int>(s1_norm.size()));
    assert(std::accumulate(freq.f2.begin(), freq.f2.end(), 0) + freq.zeros2 ==
           static_cast<int>(s2_norm.size()));
    return freq;
}

std::vector<double> midranks(std::span<const double> series) {
    const std::size_t n = series.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return series[a] < series[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && series[order[j + 1]] == series[order[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + 1 + j + 1);
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
        i = j + 1;
    }
    return ranks;
}

double member_rho(const FrequencyPair& freq, const BinGrid& grid) {
    const int n = grid.n_bins;
    std::vector<double> diff(n);
    for (int h = 0; h < n; ++h) diff[h] = static_cast<double>(freq.f2[h] - freq.f1[h]);
    const std::vector<double> r1 = midranks(diff);
    const double center = 0.5 * (n + 1);
    double num = 0.0;
    double ss1 = 0.0;
    double ss2 = 0.0;
    for (int h = 0; h < n; ++h) {
        const double a = r1[h] - center;
        const double b = (h + 1) - center;
        num += a * b;
        ss1 += a * a;
        ss2 += b * b;
    }
    if (ss1 <= 0.0) return 0.0;  // all differences tied: no ordering information
    return num / std::sqrt(ss1 * ss2);
}

namespace {

double score_member(int i, const DistanceMatrix& dist, const Labeling& labels,
                    const BinGrid& grid, Seed seed, MemberScore* detail) {
    const int own = labels.label(i);
    const int nc = nearest_cluster(i, dist, labels, seed);
    double rho = 0.0;
    NormalizedSets sets = normalized_distance_sets(i, dist, labels, nc);
    FrequencyPair freq = bin_frequencies(sets.s1, sets.s2, grid);
    if (labels.cluster_size(own) >= 2 && sets.scale > 0.0) rho = member_rho(freq, grid);
    if (detail) {
        detail->member = i;
        detail->cluster = own;
        detail->nearest_cluster = nc;
        detail->scale = sets.scale;
        detail->freq = std::move(freq);
        detail->rho = rho;
    }
    return rho;
}

}  // namespace

double r_clus(const DistanceMatrix& dist, const Labeling& labels, const BinGrid& grid, Seed seed) {
    if (labels.k() < 2) throw ComputeError("index undefined for a single cluster");
    if (labels.active_count() == 0) throw ComputeError("index undefined: all members are noise");
    double sum = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels.is_noise(i)) continue;
        sum += score_member(static_cast<int>(i), dist, labels, grid, seed, nullptr);
    }
    return sum / static_cast<double>(labels.active_count());
}

std::vector<MemberScore> r_clus_diagnostics(const DistanceMatrix& dist, const Labeling& labels,
                                            const BinGrid& grid, Seed seed) {
    if (labels.k() < 2) throw ComputeError("index undefined for a single cluster");
    std::vector<MemberScore> out;
    out.reserve(labels.active_count());
    for (int c = 1; c <= labels.k(); ++c) {
        int position = 0;
        for (const int i : labels.members(c)) {
            MemberScore score;
            score_member(i, dist, labels, grid, seed, &score);
            score.position = ++position;
            out.push_back(std::move(score));
        }
    }
    return out;
}

}  // namespace rclus
