#pragma once

#include <Eigen/Dense>

#include "lrrsc/errors.hpp"

namespace lrrsc {

/// Nonnegative shrinkage amount handed to the proximal operators
/// (1/mu for the nuclear-norm steps, lambda/mu for the column shrinkage).
class ShrinkageThreshold {
public:
    explicit ShrinkageThreshold(double tau) : tau_(tau) {
        if (!(tau >= 0.0) || !std::isfinite(tau))
            throw argument_error("ShrinkageThreshold: tau must be finite and >= 0");
    }

    double value() const noexcept { return tau_; }

private:
    double tau_;
};

/// Scalar soft-thresholding: x-tau if x>tau, x+tau if x<-tau, 0 otherwise.
double soft_threshold(double x, ShrinkageThreshold tau);

/// Nuclear-norm prox restricted to symmetric matrices. The input is
/// symmetrized to (Q+Qᵀ)/2 first; the result is exactly symmetric and keeps
/// only spectral components strictly above tau.
Eigen::MatrixXd symmetric_svt(const Eigen::MatrixXd& Q, ShrinkageThreshold tau);

/// Classical singular value thresholding (no symmetrization).
Eigen::MatrixXd svt(const Eigen::MatrixXd& Q, ShrinkageThreshold tau);

/// Column-wise l2 shrinkage: columns with norm <= tau are zeroed, the rest
/// are scaled by (norm - tau)/norm.
Eigen::MatrixXd l21_shrink(const Eigen::MatrixXd& Q, ShrinkageThreshold tau);

} // namespace lrrsc
