#include "lrrsc/spectral.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "lrrsc/rng.hpp"

namespace lrrsc {

namespace {

struct KmeansRun {
    std::vector<int> labels;
    double wcss = std::numeric_limits<double>::infinity();
};

int nearest_centroid(const Eigen::MatrixXd& C, const Eigen::RowVectorXd& y) {
    int best = 0;
    double best_d = (C.row(0) - y).squaredNorm();
    for (int c = 1; c < C.rows(); ++c) {
        const double d = (C.row(c) - y).squaredNorm();
        if (d < best_d) { // strict: ties keep the lower index
            best_d = d;
            best = c;
        }
    }
    return best;
}

KmeansRun lloyd(const Eigen::MatrixXd& Y, int k, int max_iter, std::uint64_t seed) {
    const Eigen::Index n = Y.rows();
    Rng rng(seed);

    // k-means++ seeding
    Eigen::MatrixXd C(k, Y.cols());
    C.row(0) = Y.row(static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(n))));
    Eigen::VectorXd d2 = (Y.rowwise() - C.row(0)).rowwise().squaredNorm();
    for (int c = 1; c < k; ++c) {
        const double total = d2.sum();
        Eigen::Index pick = 0;
        if (total > 0.0) {
            const double r = rng.uniform() * total;
            double cum = 0.0;
            pick = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                cum += d2[i];
                if (cum > r) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(n)));
        }
        C.row(c) = Y.row(pick);
        d2 = d2.cwiseMin((Y.rowwise() - C.row(c)).rowwise().squaredNorm());
    }

    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (int it = 0; it < max_iter; ++it) {
        bool changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            const int a = nearest_centroid(C, Y.row(i));
            if (a != labels[static_cast<std::size_t>(i)]) {
                labels[static_cast<std::size_t>(i)] = a;
                changed = true;
            }
        }

        std::vector<Eigen::Index> count(static_cast<std::size_t>(k), 0);
        for (int a : labels) ++count[static_cast<std::size_t>(a)];

        // reseed empty clusters with the point farthest from its centroid
        for (int c = 0; c < k; ++c) {
            if (count[static_cast<std::size_t>(c)] > 0) continue;
            Eigen::Index far = -1;
            double far_d = -1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const int a = labels[static_cast<std::size_t>(i)];
                if (count[static_cast<std::size_t>(a)] <= 1) continue;
                const double d = (Y.row(i) - C.row(a)).squaredNorm();
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            if (far < 0) continue; // fewer distinct points than clusters
            --count[static_cast<std::size_t>(labels[static_cast<std::size_t>(far)])];
            labels[static_cast<std::size_t>(far)] = c;
            ++count[static_cast<std::size_t>(c)];
            changed = true;
        }

        C.setZero();
        for (Eigen::Index i = 0; i < n; ++i)
            C.row(labels[static_cast<std::size_t>(i)]) += Y.row(i);
        for (int c = 0; c < k; ++c)
            if (count[static_cast<std::size_t>(c)] > 0)
                C.row(c) /= static_cast<double>(count[static_cast<std::size_t>(c)]);

        if (!changed) break;
    }

    KmeansRun run;
    run.labels = std::move(labels);
    run.wcss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        run.wcss += (Y.row(i) - C.row(run.labels[static_cast<std::size_t>(i)])).squaredNorm();
    return run;
}

} // namespace

std::vector<int> spectral_cluster(const Eigen::MatrixXd& W, const SpectralConfig& config) {
    const Eigen::Index n = W.rows();
    if (W.cols() != n) throw argument_error("spectral_cluster: affinity must be square");
    if (config.k < 1 || static_cast<Eigen::Index>(config.k) > n)
        throw argument_error("spectral_cluster: k must satisfy 1 <= k <= n");
    if (config.kmeans_restarts < 1 || config.kmeans_max_iter < 1)
        throw argument_error("spectral_cluster: k-means settings must be positive");
    if (!W.allFinite() || W.minCoeff() < 0.0)
        throw argument_error("spectral_cluster: affinity must be finite and nonnegative");
    if ((W - W.transpose()).lpNorm<Eigen::Infinity>() > 1e-10)
        throw argument_error("spectral_cluster: affinity must be symmetric");

    // L_sym = I - D^-1/2 W D^-1/2; zero-degree nodes keep a zero scaling row
    Eigen::VectorXd deg = W.rowwise().sum();
    Eigen::VectorXd dinv(n);
    for (Eigen::Index i = 0; i < n; ++i) dinv[i] = deg[i] > 0.0 ? 1.0 / std::sqrt(deg[i]) : 0.0;
    Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n);
    L.noalias() -= dinv.asDiagonal() * W * dinv.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(L);
    if (eig.info() != Eigen::Success)
        throw numeric_error("spectral_cluster: eigendecomposition failed");

    // bottom-k eigenvectors, rows normalized onto the unit sphere
    Eigen::MatrixXd Y = eig.eigenvectors().leftCols(config.k);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double nrm = Y.row(i).norm();
        if (nrm > 0.0) Y.row(i) /= nrm;
    }

    KmeansRun best;
    for (int r = 0; r < config.kmeans_restarts; ++r) {
        KmeansRun run = lloyd(Y, config.k, config.kmeans_max_iter,
                              mix_seed(config.seed, static_cast<std::uint64_t>(r)));
        if (run.wcss < best.wcss) best = std::move(run); // ties keep the earlier restart
    }
    return best.labels;
}

} // namespace lrrsc
