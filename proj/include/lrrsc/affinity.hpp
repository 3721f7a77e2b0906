#pragma once

#include <Eigen/Dense>

#include "lrrsc/errors.hpp"

namespace lrrsc {

/// Skinny SVD of the symmetric representation, plus the weighted factors
/// M = U sqrt(Sigma) and N = sqrt(Sigma) Vᵀ with Z ~ M N.
struct PrincipalFactors {
    Eigen::MatrixXd U;     ///< n x r left singular vectors
    Eigen::VectorXd sigma; ///< r singular values, strictly positive, descending
    Eigen::MatrixXd V;     ///< n x r right singular vectors
    Eigen::MatrixXd M;     ///< n x r
    Eigen::MatrixXd N;     ///< r x n
    Eigen::Index rank = 0;
};

struct AffinityGraph {
    Eigen::MatrixXd W; ///< symmetric, entries in [0,1], unit diagonal
    int alpha = 0;     ///< sharpening exponent the graph was built with
};

/// Skinny SVD of a symmetric matrix, truncating singular values at
/// rank_tol * sigma_max. Throws degenerate_representation_error on Z = 0.
PrincipalFactors skinny_svd(const Eigen::MatrixXd& Z, double rank_tol = 1e-10);

/// W_ij = cos(m_i, m_j)^(2*alpha) over the rows of M. Zero rows become
/// singletons (unit diagonal, zero off-diagonal). Output is exactly symmetric.
AffinityGraph build_affinity(const PrincipalFactors& factors, int alpha);

} // namespace lrrsc
