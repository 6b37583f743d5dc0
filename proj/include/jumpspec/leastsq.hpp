#pragma once

#include <Eigen/Dense>
#include <functional>

namespace jumpspec {

/// Damped (Levenberg-Marquardt) least squares with a central-difference
/// Jacobian and optional box clamps on the parameters. Small and
/// deterministic; the fitting module drives it in log/logit space so
/// positivity and bounds hold by construction.
struct LeastSquaresOptions {
    int max_iter = 500;
    double ftol = 1e-10;    // relative chi2 change
    double xtol = 1e-8;     // step norm
    double fd_step = 1e-5;  // h_j = fd_step * (1 + |x_j|)
};

struct LeastSquaresResult {
    Eigen::VectorXd x;
    double chi2 = 0.0;
    bool converged = false;
    int n_iter = 0;
    Eigen::MatrixXd jtj;  // J^T J at the optimum, for parameter errors
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

Eigen::MatrixXd central_difference_jacobian(const ResidualFn& fn, const Eigen::VectorXd& x,
                                            double fd_step);

LeastSquaresResult lm_minimize(const ResidualFn& fn, const Eigen::VectorXd& x0,
                               const LeastSquaresOptions& options = {},
                               const Eigen::VectorXd* lower = nullptr,
                               const Eigen::VectorXd* upper = nullptr);

}  // namespace jumpspec
