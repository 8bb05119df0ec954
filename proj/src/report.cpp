#include "rclus/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "rclus/baseline.hpp"
#include "rclus/dbscan.hpp"
#include "rclus/hierarchical.hpp"
#include "rclus/kmeans.hpp"
#include "rclus/metric.hpp"
#include "rclus/rclus_index.hpp"
#include "rclus/simgen.hpp"

namespace rclus {

std::string algo_name(Algo algo) {
    switch (algo) {
        case Algo::KMeans: return "kmeans";
        case Algo::HierSingle: return "hier-single";
        case Algo::HierAverage: return "hier-average";
        default: return "dbscan";
    }
}

Algo algo_from_name(const std::string& name) {
    if (name == "kmeans") return Algo::KMeans;
    if (name == "hier-single") return Algo::HierSingle;
    if (name == "hier-average") return Algo::HierAverage;
    if (name == "dbscan") return Algo::Dbscan;
    throw ComputeError("unknown algorithm '" + name +
                       "'; expected kmeans, hier-single, hier-average or dbscan");
}

void RunManifest::validate() const {
    if (csv_path.empty() == generator.empty())
        throw ComputeError("exactly one data source (csv path or generator) must be given");
    if (!generator.empty() && generator != "normals" && generator != "shapes" &&
        generator != "tcopula")
        throw ComputeError("unknown generator '" + generator +
                           "'; expected normals, shapes or tcopula");
    if (algo == Algo::Dbscan) {
        if (eps_list.empty() || min_pts_list.empty())
            throw ComputeError("dbscan needs --eps and --minpts");
        for (const double e : eps_list)
            if (!(e > 0.0)) throw ComputeError("dbscan eps must be > 0");
        for (const int m : min_pts_list)
            if (m < 1) throw ComputeError("dbscan min_pts must be >= 1");
    } else {
        if (k_min < 2 || k_min > k_max)
            throw ComputeError("K range needs 2 <= k_min <= k_max");
    }
    if (w_list.empty()) throw ComputeError("at least one w value required");
    for (const double w : w_list) BinGrid::from_width(w);  // throws unless w = 1/N
    if (j_neighbors < 1 || l_neighbors < 1) throw ComputeError("J and l must be >= 1");
    if (restarts < 1) throw ComputeError("restarts must be >= 1");
}

DataMatrix manifest_data(const RunManifest& manifest, Labeling* truth_out) {
    DataMatrix data;
    if (!manifest.csv_path.empty()) {
        data = read_csv(manifest.csv_path, manifest.csv);
    } else {
        GeneratedDataset gen;
        if (manifest.generator == "normals") {
            gen = gen_univariate_normals(manifest.gen.sizes, manifest.gen.means, manifest.gen.sds,
                                         manifest.seed);
        } else if (manifest.generator == "shapes") {
            gen = gen_four_shapes(manifest.gen.size_per_group, manifest.gen.noise_sd,
                                  manifest.seed);
        } else {
            gen = gen_tcopula_highdim(manifest.gen.sizes, manifest.gen.dim, manifest.gen.means,
                                      manifest.gen.df, manifest.gen.off_diag, manifest.seed);
        }
        data = std::move(gen.data);
        if (truth_out) *truth_out = std::move(gen.truth);
    }
    data.validate();
    if (manifest.standardize) data = standardize_columns(data);
    return data;
}

namespace {

std::vector<std::string> rclus_column_names(const std::vector<double>& w_list) {
    std::vector<std::string> names;
    for (const double w : w_list) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "rclus(w=%g)", w);
        names.emplace_back(buf);
    }
    return names;
}

ReportRow evaluate_row(const DataMatrix& data, const DistanceMatrix& dist,
                       const Labeling& labels, const RunManifest& m,
                       const NeighborOrder* shared_order) {
    ReportRow row;
    row.k = labels.k();
    row.noise = labels.noise_count();
    row.rclus.assign(m.w_list.size(), std::nullopt);
    if (labels.k() < 2) {
        row.notes.push_back("fewer than 2 clusters: indices undefined");
        return row;
    }
    const auto guard = [&row](const char* name, auto&& fn) {
        try {
            fn();
        } catch (const ComputeError& e) {
            row.notes.push_back(std::string(name) + ": " + e.what());
        }
    };
    for (std::size_t wi = 0; wi < m.w_list.size(); ++wi)
        guard("rclus", [&] {
            row.rclus[wi] = r_clus(dist, labels, BinGrid::from_width(m.w_list[wi]), m.seed);
        });
    guard("dunn", [&] { row.dunn = dunn_index(dist, labels); });
    NeighborOrder local;
    const NeighborOrder* order = shared_order;
    if (order == nullptr || labels.noise_count() > 0) {
        local = neighbor_order(dist, labels);
        order = &local;
    }
    guard("conn", [&] { row.conn = connectivity(labels, *order, m.j_neighbors); });
    guard("ch", [&] { row.ch = calinski_harabasz(data, labels); });
    guard("asw", [&] { row.asw = silhouette_asw(dist, labels); });
    guard("nncer", [&] { row.nncer = nncer(labels, *order, m.l_neighbors, m.seed); });
    return row;
}

void mark_best(IndexReport& report) {
    const auto rclus_names = rclus_column_names(report.w_list);
    const auto pick = [&report](const std::string& name, auto getter, Orientation orient) {
        std::size_t best_idx = 0;
        bool found = false;
        double best_val = 0.0;
        for (std::size_t r = 0; r < report.rows.size(); ++r) {
            const auto v = getter(report.rows[r]);
            if (!v.has_value()) continue;
            const bool better = !found || (orient == Orientation::Maximize ? *v > best_val
                                                                           : *v < best_val);
            if (better) {
                best_val = *v;
                best_idx = r;
                found = true;
            }
        }
        if (found) report.best[name] = best_idx;
    };
    for (std::size_t wi = 0; wi < report.w_list.size(); ++wi)
        pick(rclus_names[wi], [wi](const ReportRow& r) { return r.rclus[wi]; },
             Orientation::Maximize);
    pick("dunn", [](const ReportRow& r) { return r.dunn; }, Orientation::Maximize);
    pick("conn", [](const ReportRow& r) { return r.conn; }, Orientation::Minimize);
    pick("ch", [](const ReportRow& r) { return r.ch; }, Orientation::Maximize);
    pick("asw", [](const ReportRow& r) { return r.asw; }, Orientation::Maximize);
    pick("nncer", [](const ReportRow& r) { return r.nncer; }, Orientation::Minimize);
}

Labeling cluster_at(const RunManifest& m, const DataMatrix& data, const DistanceMatrix& dist,
                    int k) {
    switch (m.algo) {
        case Algo::KMeans: {
            KMeansConfig cfg;
            cfg.k = k;
            cfg.restarts = m.restarts;
            cfg.max_iterations = m.max_iterations;
            cfg.seed = m.seed;
            return kmeans(data, cfg);
        }
        case Algo::HierSingle: return hierarchical(dist, Linkage::Single, k);
        case Algo::HierAverage: return hierarchical(dist, Linkage::Average, k);
        default: throw ComputeError("dbscan does not take a K");
    }
}

}  // namespace

IndexReport run_sweep(const RunManifest& manifest, const DataMatrix& data,
                      std::vector<Labeling>* labelings_out) {
    manifest.validate();
    const DistanceMatrix dist = distance_for(manifest.metric, data);
    IndexReport report;
    report.w_list = manifest.w_list;
    report.dbscan_rows = manifest.algo == Algo::Dbscan;

    std::vector<Labeling> labelings;
    std::vector<ReportRow> heads;
    if (manifest.algo == Algo::Dbscan) {
        for (const double eps : manifest.eps_list) {
            for (const int mp : manifest.min_pts_list) {
                labelings.push_back(dbscan(dist, DbscanConfig{eps, mp}));
                ReportRow head;
                head.eps = eps;
                head.min_pts = mp;
                heads.push_back(head);
            }
        }
    } else if (manifest.algo == Algo::HierSingle || manifest.algo == Algo::HierAverage) {
        const Linkage link =
            manifest.algo == Algo::HierSingle ? Linkage::Single : Linkage::Average;
        for (auto& lab : hierarchical_cuts(dist, link, manifest.k_min, manifest.k_max))
            labelings.push_back(std::move(lab));
        heads.resize(labelings.size());
    } else {
        for (int k = manifest.k_min; k <= manifest.k_max; ++k) {
            labelings.push_back(cluster_at(manifest, data, dist, k));
            heads.emplace_back();
        }
    }

    // noise-free labelings can all share one neighbor ordering
    NeighborOrder shared = neighbor_order(dist, Labeling::from_labels(
                                                    std::vector<int>(data.rows, 1)));
    for (std::size_t r = 0; r < labelings.size(); ++r) {
        ReportRow row = evaluate_row(data, dist, labelings[r], manifest, &shared);
        row.eps = heads[r].eps;
        row.min_pts = heads[r].min_pts;
        report.rows.push_back(std::move(row));
    }
    mark_best(report);
    if (labelings_out) *labelings_out = std::move(labelings);
    return report;
}

IndexReport run_sweep(const RunManifest& manifest) {
    manifest.validate();
    const DataMatrix data = manifest_data(manifest);
    return run_sweep(manifest, data);
}

namespace {

std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string fmtg(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

nlohmann::ordered_json manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    if (!m.csv_path.empty()) {
        j["data"] = m.csv_path;
        j["csv"] = {{"delimiter", std::string(1, m.csv.delimiter)}, {"header", m.csv.header}};
    } else {
        j["generator"] = m.generator;
        nlohmann::ordered_json g;
        if (m.generator == "normals" || m.generator == "tcopula") {
            g["sizes"] = m.gen.sizes;
            g["means"] = m.gen.means;
        }
        if (m.generator == "normals") g["sds"] = m.gen.sds;
        if (m.generator == "shapes") {
            g["size_per_group"] = m.gen.size_per_group;
            g["noise_sd"] = m.gen.noise_sd;
        }
        if (m.generator == "tcopula") {
            g["dim"] = m.gen.dim;
            g["df"] = m.gen.df;
            g["off_diag"] = m.gen.off_diag;
        }
        j["generator_params"] = g;
    }
    j["standardize"] = m.standardize;
    j["metric"] = m.metric;
    j["algo"] = algo_name(m.algo);
    if (m.algo == Algo::Dbscan) {
        j["eps"] = m.eps_list;
        j["min_pts"] = m.min_pts_list;
    } else {
        j["k_min"] = m.k_min;
        j["k_max"] = m.k_max;
        if (m.algo == Algo::KMeans) {
            j["restarts"] = m.restarts;
            j["max_iterations"] = m.max_iterations;
        }
    }
    j["w"] = m.w_list;
    j["J"] = m.j_neighbors;
    j["l"] = m.l_neighbors;
    j["seed"] = m.seed.value;
    return j;
}

}  // namespace

std::string emit_report(const IndexReport& report, OutputFormat format,
                        const RunManifest& manifest) {
    if (report.rows.empty()) throw ComputeError("cannot emit an empty report");
    const auto rclus_names = rclus_column_names(report.w_list);

    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["manifest"] = manifest_json(manifest);
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : report.rows) {
            nlohmann::ordered_json r;
            if (report.dbscan_rows) {
                r["eps"] = row.eps;
                r["min_pts"] = row.min_pts;
            }
            r["k"] = row.k;
            for (std::size_t wi = 0; wi < report.w_list.size(); ++wi)
                r[rclus_names[wi]] =
                    row.rclus[wi] ? nlohmann::ordered_json(*row.rclus[wi]) : nullptr;
            r["dunn"] = row.dunn ? nlohmann::ordered_json(*row.dunn) : nullptr;
            r["conn"] = row.conn ? nlohmann::ordered_json(*row.conn) : nullptr;
            r["ch"] = row.ch ? nlohmann::ordered_json(*row.ch) : nullptr;
            r["asw"] = row.asw ? nlohmann::ordered_json(*row.asw) : nullptr;
            r["nncer"] = row.nncer ? nlohmann::ordered_json(*row.nncer) : nullptr;
            r["noise"] = row.noise;
            if (!row.notes.empty()) r["notes"] = row.notes;
            j["rows"].push_back(std::move(r));
        }
        nlohmann::ordered_json best;
        for (const auto& [name, idx] : report.best) best[name] = idx;
        j["best"] = best;
        return j.dump(2) + "\n";
    }

    const char sep = format == OutputFormat::Tsv ? '\t' : ',';
    std::ostringstream out;
    if (report.dbscan_rows) out << "eps" << sep << "minpts" << sep;
    out << "K";
    for (std::size_t wi = 0; wi < report.w_list.size(); ++wi)
        out << sep << "Rclusx100(w=" << fmtg(report.w_list[wi]) << ")";
    out << sep << "Dunnx100" << sep << "Conn" << sep << "CH" << sep << "ASW" << sep << "NNCER%"
        << sep << "noise\n";

    const auto cell = [&](const std::optional<double>& v, double scale, const std::string& col,
                          std::size_t row_idx) {
        if (!v.has_value()) return std::string("-");
        std::string s = fmt3(*v * scale);
        const auto it = report.best.find(col);
        if (it != report.best.end() && it->second == row_idx) s += '*';
        return s;
    };
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
        const auto& row = report.rows[r];
        if (report.dbscan_rows) out << fmtg(row.eps) << sep << row.min_pts << sep;
        out << row.k;
        for (std::size_t wi = 0; wi < report.w_list.size(); ++wi)
            out << sep << cell(row.rclus[wi], 100.0, rclus_names[wi], r);
        out << sep << cell(row.dunn, 100.0, "dunn", r);
        out << sep << cell(row.conn, 1.0, "conn", r);
        out << sep << cell(row.ch, 1.0, "ch", r);
        out << sep << cell(row.asw, 1.0, "asw", r);
        out << sep << cell(row.nncer, 100.0, "nncer", r);
        out << sep << row.noise << '\n';
    }
    return out.str();
}

std::string dump_member_diagnostics(const RunManifest& manifest, const DataMatrix& data, int k) {
    manifest.validate();
    const DistanceMatrix dist = distance_for(manifest.metric, data);
    Labeling labels;
    if (manifest.algo == Algo::Dbscan) {
        labels = dbscan(dist, DbscanConfig{manifest.eps_list.front(), manifest.min_pts_list.front()});
    } else {
        labels = cluster_at(manifest, data, dist, k);
    }
    const BinGrid grid = BinGrid::from_width(manifest.w_list.front());
    const auto scores = r_clus_diagnostics(dist, labels, grid, manifest.seed);

    std::ostringstream out;
    out << "k\tm\tmember\tnc\tM";
    for (int h = 1; h <= grid.n_bins; ++h) out << "\tf1_" << h;
    for (int h = 1; h <= grid.n_bins; ++h) out << "\tf2_" << h;
    out << "\tzeros1\tzeros2\trho\n";
    char buf[64];
    for (const auto& s : scores) {
        out << s.cluster << '\t' << s.position << '\t' << s.member << '\t' << s.nearest_cluster;
        std::snprintf(buf, sizeof(buf), "%.12g", s.scale);
        out << '\t' << buf;
        for (const int f : s.freq.f1) out << '\t' << f;
        for (const int f : s.freq.f2) out << '\t' << f;
        out << '\t' << s.freq.zeros1 << '\t' << s.freq.zeros2;
        std::snprintf(buf, sizeof(buf), "%.12g", s.rho);
        out << '\t' << buf << '\n';
    }
    return out.str();
}

}  // namespace rclus
