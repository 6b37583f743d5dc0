#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "jumpspec/conditioning.hpp"
#include "jumpspec/rates.hpp"
#include "jumpspec/trace.hpp"

namespace jumpspec {

/// Synthetic single-shot readout: two Gaussian clusters in the IQ plane plus
/// an optional symmetric misassignment probability.
struct ReadoutModel {
    std::complex<double> center_g{1.0, 0.0};
    std::complex<double> center_e{-1.0, 0.0};
    double sigma = 0.1;             // per quadrature
    double assignment_error = 0.0;  // in [0, 0.5)

    void validate() const;
};

struct SimConfig {
    RateSet rates;
    double dt_strobe = 6e-6;  // s
    std::uint64_t n_strobes = 1;
    std::uint64_t seed = 0;
    std::optional<ReadoutModel> readout;
    bool record_hidden = true;

    // Default: joint state sampled from the stationary product-Bernoulli(p_th)
    // distribution, so conditioned statistics need no burn-in. A fixed initial
    // state (qubit first, then each TLS) plus burn-in strobes can be set for
    // non-stationary starts.
    std::optional<std::vector<std::uint8_t>> initial_state;
    std::uint64_t burn_in_strobes = 0;

    void validate() const;
};

/// Event-driven simulation of the joint classical Markov chain on
/// {qubit} x {TLS}^N. Transition rates: bath excitation Gamma*p_th and decay
/// Gamma*(1-p_th) for the qubit (Gamma=gamma_q) and each TLS (Gamma=gamma_t),
/// plus flip-flop exchange at gamma_qt[i] whenever qubit and TLS i are in
/// opposite states. The chain is sampled exactly between strobes, so the
/// recorded trace has no time-discretization bias. Deterministic per seed.
///
/// Throws if any strobe interval accumulates more than 1e6 events
/// (pathological rates for the chosen dt_strobe).
JumpTrace simulate_trace(const SimConfig& config);

/// One IQ point per strobe: the cluster center of the (possibly flipped)
/// state plus independent Gaussian noise per quadrature. Deterministic per
/// seed.
std::vector<std::complex<double>> synthesize_iq(const JumpTrace& trace,
                                                const ReadoutModel& model,
                                                std::uint64_t seed);

/// Conditioned averages of the measured qubit state and of each hidden TLS
/// state, pooled over an ensemble of simulated traces. The TLS curves also
/// cover negative lags (strobes before the selection anchor).
struct UnraveledDynamics {
    ConditionedTrajectory qubit;
    std::vector<ConditionedTrajectory> tls;
    std::uint64_t n_matches = 0;
};

/// Simulates n_traces traces from config (per-trace seeds derived from
/// config.seed via derive_seed), applies the selection pattern and averages.
/// pre_horizon < 0 means "same as horizon". Throws if the pattern never
/// matches in the whole ensemble.
UnraveledDynamics unravel_conditioned(const SimConfig& config, const SelectionPattern& pattern,
                                      double horizon, std::uint64_t n_traces,
                                      double pre_horizon = -1.0, int workers = 1);

}  // namespace jumpspec
