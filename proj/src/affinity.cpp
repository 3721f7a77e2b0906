#include "lrrsc/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

namespace lrrsc {

PrincipalFactors skinny_svd(const Eigen::MatrixXd& Z, double rank_tol) {
    if (Z.rows() != Z.cols())
        throw argument_error("skinny_svd: input must be square");
    if (!(rank_tol > 0.0))
        throw argument_error("skinny_svd: rank_tol must be positive");
    if (!Z.allFinite())
        throw argument_error("skinny_svd: input contains non-finite values");

    const double znorm = Z.norm();
    if (znorm > 0.0 && (Z - Z.transpose()).norm() > 1e-8 * znorm)
        throw argument_error("skinny_svd: input is not symmetric within tolerance");

    const Eigen::Index n = Z.rows();
    const Eigen::MatrixXd S = 0.5 * (Z + Z.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
    if (eig.info() != Eigen::Success)
        throw numeric_error("skinny_svd: eigendecomposition failed");

    const Eigen::VectorXd& lam = eig.eigenvalues();

    // singular values of a symmetric matrix are |eigenvalues|; order descending
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(lam[a]) > std::abs(lam[b]);
    });

    const double sigma_max = std::abs(lam[order.front()]);
    if (sigma_max == 0.0)
        throw degenerate_representation_error("skinny_svd: representation is identically zero");

    const double cutoff = rank_tol * sigma_max;
    Eigen::Index r = 0;
    while (r < n && std::abs(lam[order[static_cast<std::size_t>(r)]]) > cutoff) ++r;

    PrincipalFactors f;
    f.rank = r;
    f.U.resize(n, r);
    f.V.resize(n, r);
    f.sigma.resize(r);
    for (Eigen::Index j = 0; j < r; ++j) {
        const Eigen::Index src = order[static_cast<std::size_t>(j)];
        const double l = lam[src];
        f.sigma[j] = std::abs(l);
        f.U.col(j) = eig.eigenvectors().col(src);
        f.V.col(j) = (l < 0.0 ? -1.0 : 1.0) * eig.eigenvectors().col(src);
    }
    const Eigen::VectorXd w = f.sigma.cwiseSqrt();
    f.M = f.U * w.asDiagonal();
    f.N = w.asDiagonal() * f.V.transpose();
    return f;
}

AffinityGraph build_affinity(const PrincipalFactors& factors, int alpha) {
    if (alpha < 1)
        throw argument_error("build_affinity: alpha must be a positive integer");
    if (factors.rank == 0 || factors.M.size() == 0)
        throw degenerate_representation_error("build_affinity: factors have rank zero");

    const Eigen::Index n = factors.M.rows();
    const Eigen::VectorXd norms = factors.M.rowwise().norm();

    AffinityGraph g;
    g.alpha = alpha;
    g.W = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        g.W(i, i) = 1.0; // zero rows stay singletons
        if (norms[i] == 0.0) continue;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (norms[j] == 0.0) continue;
            double c = factors.M.row(i).dot(factors.M.row(j)) / (norms[i] * norms[j]);
            c = std::clamp(c, -1.0, 1.0);
            double w = c * c; // even power keeps entries in [0,1] regardless of sign
            for (int a = 1; a < alpha; ++a) w *= c * c;
            g.W(i, j) = w;
            g.W(j, i) = w;
        }
    }
    return g;
}

} // namespace lrrsc
