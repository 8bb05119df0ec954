#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rclus/types.hpp"

namespace rclus {

struct CsvOptions {
    char delimiter = ',';
    bool header = false;  // skip the first row when true
};

/// Reads a numeric CSV (rows = members, columns = variables). Decimal point
/// only; ragged or non-numeric rows raise DataError naming the row.
DataMatrix read_csv(const std::string& path, const CsvOptions& options = {});
DataMatrix read_csv(std::istream& in, const CsvOptions& options = {});

void write_csv(std::ostream& out, const DataMatrix& data, char delimiter = ',');
void write_csv(const std::string& path, const DataMatrix& data, char delimiter = ',');

/// Label files: one entry per line, an integer >= 1 or the token NOISE.
std::vector<int> read_labels(const std::string& path);
std::vector<int> read_labels(std::istream& in);
void write_labels(std::ostream& out, const Labeling& labeling);
void write_labels(const std::string& path, const Labeling& labeling);

/// Per-column standardization to mean 0, sample sd 1 (constant columns are
/// centered and left at zero).
DataMatrix standardize_columns(const DataMatrix& data);

}  // namespace rclus
