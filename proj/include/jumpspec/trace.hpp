#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jumpspec {

struct TraceMeta {
    double f_q_hz = 0.0;
    double field_v_per_m = 0.0;
    std::string source = "simulated";  // "simulated" or "measured"
    std::optional<std::uint64_t> seed;
};

/// Stroboscopically sampled binary qubit-state sequence. Simulated traces may
/// carry the hidden TLS states alongside (one array per TLS, same length);
/// measured traces never do.
struct JumpTrace {
    std::vector<std::uint8_t> states;                    // 0/1 per strobe
    std::vector<std::vector<std::uint8_t>> hidden_tls;   // [tls][strobe]
    double dt_strobe = 6e-6;                             // s
    TraceMeta meta;

    std::size_t n_strobes() const { return states.size(); }
    double duration() const { return states.empty() ? 0.0 : dt_strobe * static_cast<double>(states.size() - 1); }

    void validate() const;  // non-empty, dt > 0, hidden arrays match length
};

}  // namespace jumpspec
