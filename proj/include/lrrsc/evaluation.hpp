#pragma once

#include <cstdint>
#include <vector>

#include "lrrsc/errors.hpp"

namespace lrrsc {

/// Optimal one-to-one relabeling between two label alphabets.
struct LabelMatching {
    std::vector<int> map;        ///< map[predicted label] = matched truth label
    std::int64_t agreement = 0;  ///< samples that agree under the matching
};

/// One scored clustering run.
struct ClusteringResult {
    std::vector<int> predicted;
    std::vector<int> ground_truth;
    double error = 0.0;           ///< misclassification rate under the best matching
    std::vector<int> matching;    ///< predicted label -> matched ground-truth label
    double elapsed_seconds = 0.0;
};

/// Summary statistics over a batch of per-trial error rates.
struct ErrorAggregate {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  ///< sample standard deviation (n - 1 denominator)
    double max = 0.0;
};

/// Finds the label permutation maximizing agreement between two labelings.
///
/// Labels must be nonnegative; the alphabet size is max(label) + 1 over both
/// inputs. Throws argument_error on empty, mismatched, or negative input.
LabelMatching match_labels(const std::vector<int>& predicted, const std::vector<int>& truth);

/// Misclassification rate in [0, 1] under the best label matching.
double clustering_error(const std::vector<int>& predicted, const std::vector<int>& truth);

/// Mean / median / sample-stddev / max over per-trial error rates.
/// Throws argument_error when errors is empty.
ErrorAggregate aggregate_errors(const std::vector<double>& errors);

} // namespace lrrsc
