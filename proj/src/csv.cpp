#include "rclus/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rclus {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, std::size_t row, std::size_t col) {
    const std::string t = trim(field);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw DataError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                        ": cannot parse '" + t + "' as a number");
    if (!std::isfinite(v))
        throw DataError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                        ": non-finite value '" + t + "'");
    return v;
}

}  // namespace

DataMatrix read_csv(std::istream& in, const CsvOptions& options) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t lineno = 0;
    std::string line;
    bool skip_header = options.header;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        if (skip_header) {
            skip_header = false;
            continue;
        }
        const auto fields = split(line, options.delimiter);
        if (cols == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw DataError("row " + std::to_string(lineno) + ": expected " + std::to_string(cols) +
                            " columns, got " + std::to_string(fields.size()));
        }
        for (std::size_t j = 0; j < fields.size(); ++j)
            values.push_back(parse_double(fields[j], lineno, j + 1));
        ++rows;
    }
    if (rows < 2) throw DataError("need at least 2 data rows, got " + std::to_string(rows));
    DataMatrix data;
    data.values = std::move(values);
    data.rows = rows;
    data.cols = cols;
    return data;
}

DataMatrix read_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_csv(in, options);
}

void write_csv(std::ostream& out, const DataMatrix& data, char delimiter) {
    std::ostringstream buf;
    buf.precision(17);
    for (std::size_t i = 0; i < data.rows; ++i) {
        for (std::size_t j = 0; j < data.cols; ++j) {
            if (j) buf << delimiter;
            buf << data.at(i, j);
        }
        buf << '\n';
    }
    out << buf.str();
}

void write_csv(const std::string& path, const DataMatrix& data, char delimiter) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_csv(out, data, delimiter);
}

std::vector<int> read_labels(std::istream& in) {
    std::vector<int> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "NOISE") {
            labels.push_back(kNoise);
            continue;
        }
        int v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || v < 1)
            throw DataError("label line " + std::to_string(lineno) + ": expected integer >= 1 or NOISE, got '" + t + "'");
        labels.push_back(v);
    }
    return labels;
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_labels(in);
}

void write_labels(std::ostream& out, const Labeling& labeling) {
    for (std::size_t i = 0; i < labeling.size(); ++i) {
        if (labeling.is_noise(i))
            out << "NOISE\n";
        else
            out << labeling.label(i) << '\n';
    }
}

void write_labels(const std::string& path, const Labeling& labeling) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_labels(out, labeling);
}

DataMatrix standardize_columns(const DataMatrix& data) {
    DataMatrix out = data;
    const double n = static_cast<double>(data.rows);
    for (std::size_t j = 0; j < data.cols; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) mean += data.at(i, j);
        mean /= n;
        double ss = 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) {
            const double d = data.at(i, j) - mean;
            ss += d * d;
        }
        const double sd = data.rows > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) {
            const double centered = data.at(i, j) - mean;
            out.at(i, j) = sd > 0.0 ? centered / sd : centered;
        }
    }
    return out;
}

}  // namespace rclus
