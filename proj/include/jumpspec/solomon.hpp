#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "jumpspec/pattern.hpp"
#include "jumpspec/rates.hpp"

namespace jumpspec {

/// Rate matrix M and bath drive vector b of the linear system
///   dp/dt = -M p + b * p_th
/// for a qubit (row 0) coupled to N TLSs (rows 1..N). M is symmetric,
/// weakly diagonally dominant with nonnegative diagonal, hence PSD.
struct InteractionMatrix {
    Eigen::MatrixXd m;
    Eigen::VectorXd b;
};

InteractionMatrix build_matrix(const RateSet& rates);

/// Exact propagator for one RateSet. The symmetric eigendecomposition of M
/// is computed once at construction; evaluating p(t) is then O(N^2) per call
/// and exact for any t >= 0, including singular M (zero modes are retained).
class SolomonPropagator {
public:
    explicit SolomonPropagator(const RateSet& rates);

    PopulationVector at(const PopulationVector& p0, double t) const;

    // p_q(k*dt) for k = 0..n_points-1.
    std::vector<double> qubit_curve(const PopulationVector& p0, double dt,
                                    std::size_t n_points) const;

    const RateSet& rates() const { return rates_; }

private:
    Eigen::VectorXd solve_modes(const PopulationVector& p0, double t) const;

    RateSet rates_;
    Eigen::MatrixXd vecs_;   // eigenvectors of M, columnwise
    Eigen::VectorXd vals_;   // eigenvalues, ascending
    Eigen::VectorXd beta_;   // V^T b
    double scale_;           // largest eigenvalue, for zero-mode detection
};

/// Exact solution of dp/dt = -M p + b*p_th at time t with p(0) = p0.
PopulationVector propagate(const RateSet& rates, const PopulationVector& p0, double t);

/// Solution of M p = b*p_th. For every valid RateSet this is the uniform
/// thermal vector. Throws if the steady state is not unique (no path from
/// some degree of freedom to a bath).
PopulationVector steady_state(const RateSet& rates);

/// TLS population immediately after a measured downward qubit jump:
///   p_th + (1 - p_th) * gamma_qt[i] / (gamma_q + sum_j gamma_qt[j]).
/// The denominator is the qubit's total decay, so the second term is the
/// branching probability of the qubit photon into TLS i.
double post_jump_tls_population(const RateSet& rates, std::size_t tls_index);

/// Deterministic qubit relaxation curve p_q(k*dt) for the two canonical
/// selection scenarios: "0" (ground-state selection, TLSs thermal) and
/// "10" (post-jump selection, TLS populations from the branching formula).
/// Other scenarios have no closed-form initial condition and must go
/// through the stochastic simulator.
std::vector<double> model_trajectory(const RateSet& rates, const SelectionPattern& scenario,
                                     double dt, std::size_t n_points);

/// Initial populations used by model_trajectory for a canonical scenario.
PopulationVector scenario_initial_populations(const RateSet& rates,
                                              const SelectionPattern& scenario);

}  // namespace jumpspec
