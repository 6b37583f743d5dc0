#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace jumpspec {

/// splitmix64 finalizer. Used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-trace seed: base seed XOR trace index, passed through mix64.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base ^ index);
}

/// mt19937_64 engine with in-house transforms so that every sampled value is
/// fully determined by the standard engine output, independent of the C++
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in (0, 1]; never returns 0 so log() is safe.
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;
    }

    double exponential(double rate) { return -std::log(uniform01()) / rate; }

    bool bernoulli(double p) { return uniform01() <= p; }

    // Box-Muller, pairwise; the spare value is consumed on the next call.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform01();
        const double v = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace jumpspec
