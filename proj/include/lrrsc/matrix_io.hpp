#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "lrrsc/errors.hpp"

namespace lrrsc {

/// Reads a dense matrix from delimiter-separated text (rows = features,
/// columns = samples; '#'/'%' comment lines and an optional non-numeric
/// header line are skipped) or from a Matrix Market file (array or
/// coordinate, general or symmetric), detected by the %%MatrixMarket banner.
/// Throws io_error on unreadable or malformed input.
Eigen::MatrixXd read_matrix(const std::string& path);

/// Writes a dense matrix as space-separated text with 17 significant digits,
/// enough for an exact round-trip. Throws io_error when the file cannot be
/// written.
void write_matrix(const std::string& path, const Eigen::MatrixXd& m);

/// Reads one integer label per line (blank and '#' comment lines skipped).
std::vector<int> read_labels(const std::string& path);

/// Writes one integer label per line.
void write_labels(const std::string& path, const std::vector<int>& labels);

} // namespace lrrsc
