#include "lrrsc/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/QR>

#include "lrrsc/rng.hpp"

namespace lrrsc {

void SynthSpec::validate() const {
    if (k < 1 || d_sub < 1 || ambient < 1 || n_per < 1)
        throw argument_error("generate: k, d_sub, ambient, n_per must be positive");
    if (d_sub * k > ambient)
        throw argument_error("generate: independent subspaces need d_sub * k <= ambient");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        throw argument_error("generate: noise_sigma must be finite and nonnegative");
    if (!(corrupt_frac >= 0.0 && corrupt_frac <= 1.0))
        throw argument_error("generate: corrupt_frac must lie in [0, 1]");
}

SynthData generate(const SynthSpec& spec) {
    spec.validate();
    const int n = spec.k * spec.n_per;
    const int span = spec.k * spec.d_sub;
    Rng rng(spec.seed);

    // one random orthonormal frame, partitioned into k disjoint bases
    Eigen::MatrixXd G(spec.ambient, span);
    for (Eigen::Index j = 0; j < G.cols(); ++j)
        for (Eigen::Index i = 0; i < G.rows(); ++i) G(i, j) = rng.normal();
    Eigen::MatrixXd frame =
        Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ() *
        Eigen::MatrixXd::Identity(spec.ambient, span);

    SynthData out;
    out.X.resize(spec.ambient, n);
    out.labels.resize(static_cast<std::size_t>(n));

    for (int s = 0; s < spec.k; ++s) {
        const auto basis = frame.middleCols(static_cast<Eigen::Index>(s) * spec.d_sub, spec.d_sub);
        for (int j = 0; j < spec.n_per; ++j) {
            Eigen::VectorXd coef(spec.d_sub);
            double nrm = 0.0;
            do {
                for (int t = 0; t < spec.d_sub; ++t) coef[t] = rng.normal();
                nrm = coef.norm();
            } while (nrm == 0.0);
            const int col = s * spec.n_per + j;
            out.X.col(col) = basis * (coef / nrm);
            out.labels[static_cast<std::size_t>(col)] = s;
        }
    }

    if (spec.noise_sigma > 0.0)
        for (Eigen::Index j = 0; j < out.X.cols(); ++j)
            for (Eigen::Index i = 0; i < out.X.rows(); ++i)
                out.X(i, j) += spec.noise_sigma * rng.normal();

    // the -1e-9 slack keeps ceil from inflating counts on inexact products
    // like 0.1 * 100
    const int m = static_cast<int>(std::ceil(spec.corrupt_frac * n - 1e-9));
    if (m > 0) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        out.corrupted.assign(order.begin(), order.begin() + m);
        std::sort(out.corrupted.begin(), out.corrupted.end());

        // clean columns are unit norm, so per-entry RMS is 1/sqrt(ambient)
        const double sigma = 10.0 / std::sqrt(static_cast<double>(spec.ambient));
        for (int col : out.corrupted)
            for (Eigen::Index i = 0; i < out.X.rows(); ++i)
                out.X(i, col) += sigma * rng.normal();
    }
    return out;
}

} // namespace lrrsc
