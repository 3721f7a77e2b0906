#pragma once

#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "lrrsc/errors.hpp"

namespace lrrsc {

/// Which nuclear-norm prox drives the J-step.
enum class Variant { symmetric, plain };

struct SolverConfig {
    double lambda = 0.0; ///< noise trade-off; must be set, there is no sensible default
    double mu0 = 1e-2;
    double mu_max = 1e10;
    double rho = 1.1;
    double epsilon = 1e-6;
    int max_iter = 1000;
    Variant variant = Variant::symmetric;

    void validate() const; ///< throws argument_error on any violated bound
};

struct TraceEntry {
    int iter;
    double residual_constraint; ///< max |X - AZ - E| after the iteration
    double residual_gap;        ///< max |Z - J| after the iteration
    double mu;                  ///< penalty used during the iteration
};

struct SolverResult {
    Eigen::MatrixXd Z; ///< n x n representation, exactly symmetric on return
    Eigen::MatrixXd E; ///< d x n error term
    int iterations = 0;
    double residual_constraint = 0.0;
    double residual_gap = 0.0;
    bool converged = false;
    std::vector<TraceEntry> trace;
};

/// Reusable Cholesky factor of I + AᵀA; the system matrix of the Z-step never
/// changes across iterations.
class NormalEquationFactor {
public:
    explicit NormalEquationFactor(const Eigen::MatrixXd& A);

    Eigen::MatrixXd solve(const Eigen::MatrixXd& B) const;
    Eigen::Index dim() const { return llt_.matrixLLT().rows(); }

private:
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

NormalEquationFactor precompute_normal_factor(const Eigen::MatrixXd& A);

/// Alternating-direction augmented-Lagrangian solver for the nuclear-norm
/// regularized least-squares problem
///     min ||Z||_* + lambda ||E||_{2,1}  s.t.  X = XZ + E  (and Z = Zᵀ for
/// the symmetric variant), with the samples themselves as the dictionary.
SolverResult solve(const Eigen::MatrixXd& X, const SolverConfig& config);

} // namespace lrrsc
