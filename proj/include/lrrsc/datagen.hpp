#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "lrrsc/errors.hpp"

namespace lrrsc {

/// Parameters for the union-of-subspaces generator.
struct SynthSpec {
    int k = 0;                  ///< number of subspaces
    int d_sub = 0;              ///< dimension of each subspace
    int ambient = 0;            ///< ambient dimension (k * d_sub <= ambient)
    int n_per = 0;              ///< samples per subspace
    double noise_sigma = 0.0;   ///< entrywise Gaussian noise scale
    double corrupt_frac = 0.0;  ///< fraction of columns hit by gross corruption
    std::uint64_t seed = 0;

    void validate() const;
};

/// Generated sample matrix with ground truth.
struct SynthData {
    Eigen::MatrixXd X;            ///< ambient x (k * n_per), columns are samples
    std::vector<int> labels;      ///< subspace index per column
    std::vector<int> corrupted;   ///< corrupted column indices, ascending
};

/// Draws k independent subspaces (disjoint blocks of one random orthonormal
/// frame), samples unit-norm points from each, adds entrywise noise, then
/// overwhelms ceil(corrupt_frac * n) random columns with Gaussian corruption
/// at ten times the clean per-entry RMS. Deterministic per seed.
SynthData generate(const SynthSpec& spec);

} // namespace lrrsc
