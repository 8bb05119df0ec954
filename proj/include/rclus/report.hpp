#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rclus/csv.hpp"
#include "rclus/types.hpp"

namespace rclus {

enum class Algo { KMeans, HierSingle, HierAverage, Dbscan };
enum class OutputFormat { Tsv, Csv, Json };

/// Generator parameters (only the fields for the selected generator matter).
struct GenParams {
    std::vector<std::size_t> sizes{100, 100, 100};
    std::vector<double> means{-3.0, 0.0, 3.0};
    std::vector<double> sds{1.0, 1.0, 1.0};
    std::size_t size_per_group = 100;
    double noise_sd = 0.05;
    std::size_t dim = 100;
    double df = 2.0;
    double off_diag = 0.15;
};

/// Everything a batch run needs; serialized into the JSON report so runs are
/// reproducible from their own output.
struct RunManifest {
    std::string csv_path;    // exactly one of csv_path / generator is set
    std::string generator;   // "", "normals", "shapes" or "tcopula"
    CsvOptions csv;
    GenParams gen;
    bool standardize = false;
    std::string metric = "euclidean";
    Algo algo = Algo::KMeans;
    int k_min = 2;
    int k_max = 6;
    std::vector<double> w_list{0.1};
    std::vector<double> eps_list;
    std::vector<int> min_pts_list;
    int j_neighbors = 10;
    int l_neighbors = 10;
    int restarts = 25;
    int max_iterations = 100;
    Seed seed;
    OutputFormat format = OutputFormat::Tsv;

    /// Throws ComputeError on an inconsistent manifest (bad K range, w not
    /// 1/N, missing source, ...).
    void validate() const;
};

/// One table row: a clustering run and every index computed on it. Values
/// that could not be computed are absent, with the reason in notes.
struct ReportRow {
    double eps = 0.0;   // dbscan rows only
    int min_pts = 0;    // dbscan rows only
    int k = 0;          // number of clusters in this row's labeling
    std::vector<std::optional<double>> rclus;  // parallel to w_list
    std::optional<double> dunn;
    std::optional<double> conn;
    std::optional<double> ch;
    std::optional<double> asw;
    std::optional<double> nncer;  // fraction in [0,1]
    std::size_t noise = 0;
    std::vector<std::string> notes;
};

struct IndexReport {
    bool dbscan_rows = false;
    std::vector<double> w_list;
    std::vector<ReportRow> rows;
    /// column name -> 0-based row index of the best value (per orientation)
    std::map<std::string, std::size_t> best;
};

/// Loads the manifest's data source (CSV or generator), standardized when
/// requested. truth_out receives generated ground-truth labels when present.
DataMatrix manifest_data(const RunManifest& manifest, Labeling* truth_out = nullptr);

/// Clusters per the manifest (one run per K, or per DBSCAN parameter pair)
/// and computes every index on each partition. labelings_out, when given,
/// receives the partition behind each row.
IndexReport run_sweep(const RunManifest& manifest, const DataMatrix& data,
                      std::vector<Labeling>* labelings_out = nullptr);
IndexReport run_sweep(const RunManifest& manifest);

/// Serializes a report: tsv/csv print 3-decimal tables in reporting units
/// (R_clus and Dunn x100, NNCER in percent) with '*' marking each column's
/// best row; json carries full-precision raw values plus the manifest echo.
std::string emit_report(const IndexReport& report, OutputFormat format,
                        const RunManifest& manifest);

/// Per-member diagnostic table (cluster, position, nearest cluster, scaling
/// constant M, bin counts, dropped zero counts, rho) for the clustering the
/// manifest produces at the given K, using the first w in the list.
std::string dump_member_diagnostics(const RunManifest& manifest, const DataMatrix& data, int k);

std::string algo_name(Algo algo);
Algo algo_from_name(const std::string& name);

}  // namespace rclus
