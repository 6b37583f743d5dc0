#include "jumpspec/trace.hpp"

#include <stdexcept>

namespace jumpspec {

void JumpTrace::validate() const {
    if (states.empty()) throw std::invalid_argument("trace has no strobes");
    if (!(dt_strobe > 0.0)) throw std::invalid_argument("dt_strobe must be positive");
    for (auto s : states)
        if (s > 1) throw std::invalid_argument("trace states must be 0 or 1");
    for (const auto& tls : hidden_tls) {
        if (tls.size() != states.size())
            throw std::invalid_argument("hidden TLS sequence length differs from trace length");
        for (auto s : tls)
            if (s > 1) throw std::invalid_argument("hidden TLS states must be 0 or 1");
    }
}

}  // namespace jumpspec
