#pragma once

#include <cstddef>
#include <vector>

namespace jumpspec {

/// Coupling rates defining one qubit-environment model: qubit decay into the
/// bath, energy exchange with each TLS, TLS decay into the bath (one shared
/// value), and the bath thermal population governing both excitation channels.
struct RateSet {
    double gamma_q = 0.0;          // qubit -> bath, 1/s
    std::vector<double> gamma_qt;  // qubit <-> TLS i, 1/s
    double gamma_t = 0.0;          // TLS -> bath, 1/s, shared by all TLSs
    double p_th = 0.0;             // thermal population, in [0, 0.5]

    std::size_t n_tls() const { return gamma_qt.size(); }

    // Sum of all qubit decay channels, gamma_q + sum(gamma_qt).
    double total_qubit_decay() const;

    // Throws std::invalid_argument on negative rates, non-finite entries,
    // or p_th outside [0, 0.5].
    void validate() const;
};

/// Mean excitation probabilities of the qubit and of each TLS.
struct PopulationVector {
    double p_q = 0.0;
    std::vector<double> p_t;

    std::size_t n_tls() const { return p_t.size(); }
    void validate() const;  // every entry in [0, 1]
};

PopulationVector uniform_populations(double value, std::size_t n_tls);

}  // namespace jumpspec
