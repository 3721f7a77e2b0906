#include "lrrsc/proximal.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace lrrsc {

double soft_threshold(double x, ShrinkageThreshold tau) {
    const double t = tau.value();
    if (x > t) return x - t;
    if (x < -t) return x + t;
    return 0.0;
}

Eigen::MatrixXd symmetric_svt(const Eigen::MatrixXd& Q, ShrinkageThreshold tau) {
    if (Q.rows() != Q.cols())
        throw argument_error("symmetric_svt: input must be square");

    const double t = tau.value();
    Eigen::MatrixXd S = 0.5 * (Q + Q.transpose());
    if (t == 0.0) return S; // identity prox in the limit

    // For symmetric input the SVD-shrinkage solution equals shrinking the
    // eigenvalues by sign(l)*max(|l|-tau, 0): singular values are |l| and the
    // right factor absorbs the sign. One factorization, exactly symmetric.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
    if (eig.info() != Eigen::Success)
        throw numeric_error("symmetric_svt: eigendecomposition failed");

    const Eigen::VectorXd& lam = eig.eigenvalues();
    const Eigen::Index n = lam.size();
    std::vector<Eigen::Index> kept;
    kept.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(lam[i]) > t) kept.push_back(i); // strict: boundary values drop

    if (kept.empty()) return Eigen::MatrixXd::Zero(n, n);

    Eigen::MatrixXd B(n, static_cast<Eigen::Index>(kept.size()));
    Eigen::VectorXd shrunk(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) {
        B.col(static_cast<Eigen::Index>(j)) = eig.eigenvectors().col(kept[j]);
        const double l = lam[kept[j]];
        shrunk[static_cast<Eigen::Index>(j)] = (l > 0.0 ? l - t : l + t);
    }
    Eigen::MatrixXd W = B * shrunk.asDiagonal() * B.transpose();
    return 0.5 * (W + W.transpose());
}

Eigen::MatrixXd svt(const Eigen::MatrixXd& Q, ShrinkageThreshold tau) {
    const double t = tau.value();
    if (t == 0.0) return Q;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(Q, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv[r] > t) ++r;
    if (r == 0) return Eigen::MatrixXd::Zero(Q.rows(), Q.cols());

    Eigen::VectorXd shrunk = sv.head(r).array() - t;
    return svd.matrixU().leftCols(r) * shrunk.asDiagonal() *
           svd.matrixV().leftCols(r).transpose();
}

Eigen::MatrixXd l21_shrink(const Eigen::MatrixXd& Q, ShrinkageThreshold tau) {
    const double t = tau.value();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Q.rows(), Q.cols());
    for (Eigen::Index j = 0; j < Q.cols(); ++j) {
        const double nrm = Q.col(j).norm();
        if (nrm > t) out.col(j) = ((nrm - t) / nrm) * Q.col(j);
    }
    return out;
}

} // namespace lrrsc
