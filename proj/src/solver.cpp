#include "lrrsc/solver.hpp"

#include <algorithm>
#include <string>

#include "lrrsc/proximal.hpp"

namespace lrrsc {

void SolverConfig::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw argument_error("SolverConfig: lambda must be positive");
    if (!(mu0 > 0.0)) throw argument_error("SolverConfig: mu0 must be positive");
    if (!(mu_max >= mu0)) throw argument_error("SolverConfig: mu_max must be >= mu0");
    if (!(rho > 1.0)) throw argument_error("SolverConfig: rho must be > 1");
    if (!(epsilon > 0.0)) throw argument_error("SolverConfig: epsilon must be positive");
    if (max_iter < 1) throw argument_error("SolverConfig: max_iter must be >= 1");
}

NormalEquationFactor::NormalEquationFactor(const Eigen::MatrixXd& A) {
    if (!A.allFinite())
        throw argument_error("NormalEquationFactor: input must be finite");
    const Eigen::Index n = A.cols();
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(n, n);
    G.noalias() += A.transpose() * A;
    if (!G.allFinite())
        throw numeric_error("NormalEquationFactor: I + AᵀA overflowed to non-finite values");
    llt_.compute(G);
    if (llt_.info() != Eigen::Success)
        throw numeric_error("NormalEquationFactor: Cholesky factorization of I + AᵀA failed");
}

Eigen::MatrixXd NormalEquationFactor::solve(const Eigen::MatrixXd& B) const {
    if (B.rows() != dim())
        throw argument_error("NormalEquationFactor: right-hand side has wrong row count");
    return llt_.solve(B);
}

NormalEquationFactor precompute_normal_factor(const Eigen::MatrixXd& A) {
    return NormalEquationFactor(A);
}

SolverResult solve(const Eigen::MatrixXd& X, const SolverConfig& config) {
    config.validate();
    if (X.cols() < 2) throw argument_error("solve: need at least two samples");
    if (!X.allFinite()) throw argument_error("solve: input contains non-finite values");

    const Eigen::Index d = X.rows();
    const Eigen::Index n = X.cols();
    const Eigen::MatrixXd& A = X; // the samples are their own dictionary

    const NormalEquationFactor factor = precompute_normal_factor(A);
    const Eigen::MatrixXd AtX = A.transpose() * X;

    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, n);
    Eigen::MatrixXd Y1 = Eigen::MatrixXd::Zero(d, n);
    Eigen::MatrixXd Y2 = Eigen::MatrixXd::Zero(n, n);
    double mu = config.mu0;

    SolverResult out;
    out.trace.reserve(static_cast<std::size_t>(std::min(config.max_iter, 4096)));

    for (int iter = 1; iter <= config.max_iter; ++iter) {
        const double mu_used = mu;

        // J-step: nuclear-norm prox of Z + Y2/mu at threshold 1/mu
        const Eigen::MatrixXd T = Z + Y2 / mu_used;
        J = (config.variant == Variant::symmetric)
                ? symmetric_svt(T, ShrinkageThreshold(1.0 / mu_used))
                : svt(T, ShrinkageThreshold(1.0 / mu_used));

        // Z-step: (I + AᵀA) Z = AᵀX - AᵀE + J + (AᵀY1 - Y2)/mu
        Eigen::MatrixXd rhs = AtX + J;
        rhs.noalias() -= A.transpose() * E;
        rhs.noalias() += (A.transpose() * Y1 - Y2) / mu_used;
        Z = factor.solve(rhs);

        // E-step: column shrinkage of X - AZ + Y1/mu at threshold lambda/mu
        const Eigen::MatrixXd AZ = A * Z;
        E = l21_shrink(X - AZ + Y1 / mu_used, ShrinkageThreshold(config.lambda / mu_used));

        if (!J.allFinite() || !Z.allFinite() || !E.allFinite())
            throw divergence_error(
                iter, "solve: non-finite iterate at iteration " + std::to_string(iter));

        // multiplier gradient steps, then penalty growth
        const Eigen::MatrixXd R1 = X - AZ - E;
        const Eigen::MatrixXd R2 = Z - J;
        Y1.noalias() += mu_used * R1;
        Y2.noalias() += mu_used * R2;
        mu = std::min(config.rho * mu_used, config.mu_max);

        const double rc = R1.lpNorm<Eigen::Infinity>();
        const double rg = R2.lpNorm<Eigen::Infinity>();
        out.trace.push_back({iter, rc, rg, mu_used});
        out.iterations = iter;
        out.residual_constraint = rc;
        out.residual_gap = rg;
        if (rc < config.epsilon && rg < config.epsilon) {
            out.converged = true;
            break;
        }
    }

    // Z satisfies Z = J only up to epsilon; downstream consumers assume exact
    // symmetry, so leave with the symmetrized iterate.
    out.Z = 0.5 * (Z + Z.transpose());
    out.E = std::move(E);
    return out;
}

} // namespace lrrsc
