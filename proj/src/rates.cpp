#include "jumpspec/rates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jumpspec {

double RateSet::total_qubit_decay() const {
    double total = gamma_q;
    for (double g : gamma_qt) total += g;
    return total;
}

void RateSet::validate() const {
    auto check_rate = [](double r, const char* name) {
        if (!std::isfinite(r) || r < 0.0)
            throw std::invalid_argument(std::string(name) + " must be a finite nonnegative rate");
    };
    check_rate(gamma_q, "gamma_q");
    check_rate(gamma_t, "gamma_t");
    for (double g : gamma_qt) check_rate(g, "gamma_qt");
    if (!std::isfinite(p_th) || p_th < 0.0 || p_th > 0.5)
        throw std::invalid_argument("p_th must lie in [0, 0.5]");
}

void PopulationVector::validate() const {
    auto check = [](double p) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0)
            throw std::invalid_argument("population outside [0, 1]");
    };
    check(p_q);
    for (double p : p_t) check(p);
}

PopulationVector uniform_populations(double value, std::size_t n_tls) {
    PopulationVector p;
    p.p_q = value;
    p.p_t.assign(n_tls, value);
    return p;
}

}  // namespace jumpspec
