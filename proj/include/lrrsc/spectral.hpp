#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lrrsc/errors.hpp"

namespace lrrsc {

struct SpectralConfig {
    int k = 0; ///< number of clusters
    int kmeans_restarts = 20;
    int kmeans_max_iter = 300;
    std::uint64_t seed = 0;
};

/// Normalized spectral clustering over a symmetric nonnegative affinity:
/// embeds the nodes with the k bottom eigenvectors of L_sym = I - D^-1/2 W D^-1/2,
/// row-normalizes, and runs seeded k-means (best of kmeans_restarts by
/// within-cluster sum of squares). Returns one label in [0, k) per node.
std::vector<int> spectral_cluster(const Eigen::MatrixXd& W, const SpectralConfig& config);

} // namespace lrrsc
