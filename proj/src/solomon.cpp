#include "jumpspec/solomon.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpspec {

namespace {

// -expm1(-x)/x, the stable form of (1 - e^{-x})/x; -> 1 as x -> 0.
double one_minus_exp_over(double x) {
    if (x == 0.0) return 1.0;
    return -std::expm1(-x) / x;
}

constexpr double kClampTolerance = 1e-12;

double clamp_population(double p, const char* where) {
    if (p < 0.0) {
        if (p < -kClampTolerance)
            throw std::runtime_error(std::string("internal consistency: population ") + where +
                                     " below 0 by more than 1e-12");
        return 0.0;
    }
    if (p > 1.0) {
        if (p > 1.0 + kClampTolerance)
            throw std::runtime_error(std::string("internal consistency: population ") + where +
                                     " above 1 by more than 1e-12");
        return 1.0;
    }
    return p;
}

}  // namespace

InteractionMatrix build_matrix(const RateSet& rates) {
    rates.validate();
    const auto n = static_cast<Eigen::Index>(rates.n_tls());
    InteractionMatrix out;
    out.m = Eigen::MatrixXd::Zero(n + 1, n + 1);
    out.b = Eigen::VectorXd::Zero(n + 1);
    out.m(0, 0) = rates.total_qubit_decay();
    out.b(0) = rates.gamma_q;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double g = rates.gamma_qt[static_cast<std::size_t>(i)];
        out.m(0, i + 1) = -g;
        out.m(i + 1, 0) = -g;
        out.m(i + 1, i + 1) = g + rates.gamma_t;
        out.b(i + 1) = rates.gamma_t;
    }
    return out;
}

SolomonPropagator::SolomonPropagator(const RateSet& rates) : rates_(rates) {
    const InteractionMatrix im = build_matrix(rates);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(im.m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition of the rate matrix failed");
    vecs_ = solver.eigenvectors();
    vals_ = solver.eigenvalues();
    beta_ = vecs_.transpose() * im.b;
    scale_ = vals_.size() > 0 ? std::abs(vals_(vals_.size() - 1)) : 0.0;
}

Eigen::VectorXd SolomonPropagator::solve_modes(const PopulationVector& p0, double t) const {
    const auto n = static_cast<Eigen::Index>(rates_.n_tls());
    Eigen::VectorXd v(n + 1);
    v(0) = p0.p_q;
    for (Eigen::Index i = 0; i < n; ++i) v(i + 1) = p0.p_t[static_cast<std::size_t>(i)];

    Eigen::VectorXd q = vecs_.transpose() * v;
    // Per mode: dq/dt = -lambda q + beta p_th, so
    //   q(t) = q0 e^{-lambda t} + beta p_th t f(lambda t),  f(x) = (1-e^{-x})/x.
    // Zero modes (decoupled from every bath) have beta = 0 and stay constant;
    // the linear form below covers them without a special case.
    const double zero_cut = scale_ * 1e-14;
    for (Eigen::Index k = 0; k <= n; ++k) {
        const double lam = vals_(k) < zero_cut ? 0.0 : vals_(k);
        const double x = lam * t;
        q(k) = q(k) * std::exp(-x) + beta_(k) * rates_.p_th * t * one_minus_exp_over(x);
    }
    return vecs_ * q;
}

PopulationVector SolomonPropagator::at(const PopulationVector& p0, double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("propagation time must be >= 0");
    if (p0.n_tls() != rates_.n_tls())
        throw std::invalid_argument("population vector size does not match the rate set");
    p0.validate();

    const Eigen::VectorXd p = solve_modes(p0, t);
    PopulationVector out;
    out.p_q = clamp_population(p(0), "p_q");
    out.p_t.resize(rates_.n_tls());
    for (std::size_t i = 0; i < rates_.n_tls(); ++i)
        out.p_t[i] = clamp_population(p(static_cast<Eigen::Index>(i) + 1), "p_t");
    return out;
}

std::vector<double> SolomonPropagator::qubit_curve(const PopulationVector& p0, double dt,
                                                   std::size_t n_points) const {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    std::vector<double> curve(n_points);
    for (std::size_t k = 0; k < n_points; ++k)
        curve[k] = at(p0, dt * static_cast<double>(k)).p_q;
    return curve;
}

PopulationVector propagate(const RateSet& rates, const PopulationVector& p0, double t) {
    return SolomonPropagator(rates).at(p0, t);
}

PopulationVector steady_state(const RateSet& rates) {
    rates.validate();
    const InteractionMatrix im = build_matrix(rates);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(im.m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition of the rate matrix failed");
    const Eigen::VectorXd& vals = solver.eigenvalues();
    const double lam_max = vals(vals.size() - 1);
    const double lam_min = vals(0);
    if (lam_max <= 0.0 || lam_min <= lam_max * 1e-12)
        throw std::runtime_error(
            "steady state is not unique: some degree of freedom has no path to a bath");
    const Eigen::VectorXd q = solver.eigenvectors().transpose() * im.b;
    Eigen::VectorXd p = solver.eigenvectors() * (q.array() / vals.array() * rates.p_th).matrix();

    PopulationVector out;
    out.p_q = clamp_population(p(0), "p_q");
    out.p_t.resize(rates.n_tls());
    for (std::size_t i = 0; i < rates.n_tls(); ++i)
        out.p_t[i] = clamp_population(p(static_cast<Eigen::Index>(i) + 1), "p_t");
    return out;
}

double post_jump_tls_population(const RateSet& rates, std::size_t tls_index) {
    rates.validate();
    if (tls_index >= rates.n_tls()) throw std::invalid_argument("tls_index out of range");
    const double total = rates.total_qubit_decay();
    if (total <= 0.0)
        throw std::invalid_argument("qubit has no decay channel, post-jump population undefined");
    return rates.p_th + (1.0 - rates.p_th) * rates.gamma_qt[tls_index] / total;
}

PopulationVector scenario_initial_populations(const RateSet& rates,
                                              const SelectionPattern& scenario) {
    if (scenario == ground_pattern()) {
        PopulationVector p0 = uniform_populations(rates.p_th, rates.n_tls());
        p0.p_q = 0.0;
        return p0;
    }
    if (scenario == post_jump_pattern()) {
        PopulationVector p0;
        p0.p_q = 0.0;
        p0.p_t.resize(rates.n_tls());
        for (std::size_t i = 0; i < rates.n_tls(); ++i)
            p0.p_t[i] = post_jump_tls_population(rates, i);
        return p0;
    }
    throw std::invalid_argument("scenario '" + scenario.to_string() +
                                "' has no deterministic initial condition; use the stochastic "
                                "simulator (unravel_conditioned) for complex selections");
}

std::vector<double> model_trajectory(const RateSet& rates, const SelectionPattern& scenario,
                                     double dt, std::size_t n_points) {
    const PopulationVector p0 = scenario_initial_populations(rates, scenario);
    return SolomonPropagator(rates).qubit_curve(p0, dt, n_points);
}

}  // namespace jumpspec
