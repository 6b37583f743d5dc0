#include "jumpspec/kernels.hpp"

#include <atomic>

namespace jumpspec::kernels {

namespace scalar {

std::uint64_t sum_u8(const std::uint8_t* p, std::size_t n) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += p[i];
    return sum;
}

void pair_count_lags(const std::uint8_t* ev, std::size_t n, std::size_t max_lag,
                     std::uint64_t* counts) {
    for (std::size_t m = 1; m <= max_lag; ++m) {
        std::uint64_t c = 0;
        if (m < n) {
            const std::size_t len = n - m;
            for (std::size_t k = 0; k < len; ++k) c += ev[k] & ev[k + m];
        }
        counts[m - 1] = c;
    }
}

void accumulate_window_sums(const std::uint8_t* values, std::size_t n,
                            const std::uint32_t* matches, std::size_t n_matches,
                            std::int64_t lag_begin, std::int64_t lag_end,
                            std::uint32_t* sums) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < n_matches; ++i) {
        const std::int64_t k = static_cast<std::int64_t>(matches[i]);
        const std::int64_t lo = std::max(lag_begin, -k);
        const std::int64_t hi = std::min(lag_end, sn - k);
        for (std::int64_t m = lo; m < hi; ++m) sums[m - lag_begin] += values[k + m];
    }
}

}  // namespace scalar

namespace {

Backend pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return Backend::avx2;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{pick_default()};
    return slot;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) b = Backend::scalar;
    backend_slot().store(b, std::memory_order_relaxed);
}

std::uint64_t sum_u8(const std::uint8_t* p, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) return avx2::sum_u8(p, n);
#endif
    return scalar::sum_u8(p, n);
}

void pair_count_lags(const std::uint8_t* ev, std::size_t n, std::size_t max_lag,
                     std::uint64_t* counts) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) {
        avx2::pair_count_lags(ev, n, max_lag, counts);
        return;
    }
#endif
    scalar::pair_count_lags(ev, n, max_lag, counts);
}

void accumulate_window_sums(const std::uint8_t* values, std::size_t n,
                            const std::uint32_t* matches, std::size_t n_matches,
                            std::int64_t lag_begin, std::int64_t lag_end,
                            std::uint32_t* sums) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) {
        avx2::accumulate_window_sums(values, n, matches, n_matches, lag_begin, lag_end, sums);
        return;
    }
#endif
    scalar::accumulate_window_sums(values, n, matches, n_matches, lag_begin, lag_end, sums);
}

}  // namespace jumpspec::kernels
