#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rclus/csv.hpp"
#include "rclus/kernels.hpp"
#include "rclus/report.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{
        "rclus: cluster-validity batch tool. Ingests or generates data, runs a clustering\n"
        "sweep and reports the interpoint-distance rank-correlation index alongside Dunn,\n"
        "connectivity, Calinski-Harabasz, average silhouette width and the nearest-neighbor\n"
        "classification error rate."};

    rclus::RunManifest m;
    std::string algo = "kmeans";
    std::string format = "tsv";
    std::string kernel = "auto";
    std::string out_path;
    std::string dump_data_path;
    std::string dump_truth_path;
    std::string dump_labels_path;
    std::string csv_delim = ",";
    int diagnostics_k = 0;

    app.add_option("--data", m.csv_path, "input CSV (rows = members, columns = variables)");
    app.add_option("--generator", m.generator, "synthetic source: normals, shapes or tcopula");
    app.add_flag("--csv-header", m.csv.header, "skip the first CSV row");
    app.add_option("--csv-delim", csv_delim, "CSV delimiter (default ',')");
    app.add_flag("--standardize", m.standardize, "standardize columns to mean 0, sd 1");
    app.add_option("--metric", m.metric, "distance metric (default euclidean)");
    app.add_option("--algo", algo, "kmeans | hier-single | hier-average | dbscan");
    app.add_option("--k-min", m.k_min, "smallest K in the sweep (default 2)");
    app.add_option("--k-max", m.k_max, "largest K in the sweep (default 6)");
    app.add_option("--w", m.w_list, "bin width(s) for the rank index, each 1/N (default 0.1)")
        ->expected(-1);
    app.add_option("--eps", m.eps_list, "dbscan radius (repeatable)")->expected(-1);
    app.add_option("--minpts", m.min_pts_list, "dbscan min_pts (repeatable)")->expected(-1);
    app.add_option("--J", m.j_neighbors, "connectivity neighbor count (default 10)");
    app.add_option("--l", m.l_neighbors, "NNCER neighbor count (default 10)");
    app.add_option("--restarts", m.restarts, "k-means restarts (default 25)");
    app.add_option("--max-iter", m.max_iterations, "k-means pass limit (default 100)");
    app.add_option("--seed", m.seed.value, "seed for every randomized choice (default 0)");
    app.add_option("--format", format, "tsv | csv | json (default tsv)");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--diagnostics", diagnostics_k,
                   "emit the per-member diagnostic table for this K instead of the report");
    app.add_option("--kernel", kernel, "distance kernel: auto | scalar | avx2");
    app.add_option("--sizes", m.gen.sizes, "generator group sizes")->expected(-1);
    app.add_option("--means", m.gen.means, "generator group means")->expected(-1);
    app.add_option("--sds", m.gen.sds, "normals generator group sds")->expected(-1);
    app.add_option("--size-per-group", m.gen.size_per_group, "shapes generator group size");
    app.add_option("--noise-sd", m.gen.noise_sd, "shapes generator noise sd");
    app.add_option("--dim", m.gen.dim, "tcopula generator dimension");
    app.add_option("--df", m.gen.df, "tcopula degrees of freedom");
    app.add_option("--off-diag", m.gen.off_diag, "tcopula equicorrelation");
    app.add_option("--dump-data", dump_data_path, "write the (generated) data as CSV");
    app.add_option("--dump-truth", dump_truth_path, "write generated ground-truth labels");
    app.add_option("--dump-labels", dump_labels_path,
                   "write clustering labels (suffix .K<k> when the sweep has several rows)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    }  // other parse errors propagate to main -> exit code 1

    if (csv_delim.size() != 1) throw CLI::ValidationError("--csv-delim", "must be one character");
    m.csv.delimiter = csv_delim[0];
    m.algo = rclus::algo_from_name(algo);
    if (format == "tsv")
        m.format = rclus::OutputFormat::Tsv;
    else if (format == "csv")
        m.format = rclus::OutputFormat::Csv;
    else if (format == "json")
        m.format = rclus::OutputFormat::Json;
    else
        throw CLI::ValidationError("--format", "expected tsv, csv or json");
    if (kernel == "scalar")
        rclus::kernels::set_simd_mode(rclus::kernels::Simd::Scalar);
    else if (kernel == "avx2")
        rclus::kernels::set_simd_mode(rclus::kernels::Simd::Avx2);
    else if (kernel != "auto")
        throw CLI::ValidationError("--kernel", "expected auto, scalar or avx2");

    try {
        m.validate();  // manifest problems are usage errors here
    } catch (const rclus::ComputeError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    rclus::Labeling truth;
    const rclus::DataMatrix data = rclus::manifest_data(m, &truth);
    if (!dump_data_path.empty()) rclus::write_csv(dump_data_path, data);
    if (!dump_truth_path.empty()) {
        if (truth.size() == 0)
            throw rclus::ComputeError("--dump-truth needs a generator data source");
        rclus::write_labels(dump_truth_path, truth);
    }

    std::string output;
    if (diagnostics_k > 0) {
        output = rclus::dump_member_diagnostics(m, data, diagnostics_k);
    } else {
        std::vector<rclus::Labeling> labelings;
        const rclus::IndexReport report = rclus::run_sweep(m, data, &labelings);
        if (!dump_labels_path.empty()) {
            for (std::size_t r = 0; r < labelings.size(); ++r) {
                std::string path = dump_labels_path;
                if (labelings.size() > 1)
                    path += ".K" + std::to_string(labelings[r].k());
                rclus::write_labels(path, labelings[r]);
            }
        }
        output = rclus::emit_report(report, m.format, m);
    }

    if (out_path.empty()) {
        std::cout << output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw rclus::DataError("cannot write '" + out_path + "'");
        out << output;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const rclus::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const rclus::ComputeError& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
