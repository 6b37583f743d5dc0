#pragma once

#include <cstddef>
#include <cstdint>

// Integer kernels for the trace-statistics inner loops: byte sums, lagged
// pair counting (g2 numerators) and windowed accumulation around match
// indices (conditioned averages). Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant selected at runtime.
// The variants are exact drop-ins: identical integer results, bit for bit.

namespace jumpspec::kernels {

enum class Backend { scalar, avx2 };

bool avx2_available();

// Active backend for the dispatching entry points below. Defaults to the
// widest supported one; tests pin it explicitly.
Backend active_backend();
void set_backend(Backend b);  // silently falls back to scalar if unsupported

// Sum of n bytes.
std::uint64_t sum_u8(const std::uint8_t* p, std::size_t n);

// counts[m-1] = sum_k ev[k] * ev[k+m] for m = 1..max_lag.
// ev entries must be 0 or 1.
void pair_count_lags(const std::uint8_t* ev, std::size_t n, std::size_t max_lag,
                     std::uint64_t* counts);

// For each match index k, adds values[k+m] to sums[m - lag_begin] for every
// lag m in [lag_begin, lag_end) with k+m inside [0, n). values must be 0/1
// so the u32 accumulators cannot overflow for any realistic match count.
void accumulate_window_sums(const std::uint8_t* values, std::size_t n,
                            const std::uint32_t* matches, std::size_t n_matches,
                            std::int64_t lag_begin, std::int64_t lag_end,
                            std::uint32_t* sums);

namespace scalar {
std::uint64_t sum_u8(const std::uint8_t* p, std::size_t n);
void pair_count_lags(const std::uint8_t* ev, std::size_t n, std::size_t max_lag,
                     std::uint64_t* counts);
void accumulate_window_sums(const std::uint8_t* values, std::size_t n,
                            const std::uint32_t* matches, std::size_t n_matches,
                            std::int64_t lag_begin, std::int64_t lag_end,
                            std::uint32_t* sums);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
// Callers must check avx2_available() first.
namespace avx2 {
std::uint64_t sum_u8(const std::uint8_t* p, std::size_t n);
void pair_count_lags(const std::uint8_t* ev, std::size_t n, std::size_t max_lag,
                     std::uint64_t* counts);
void accumulate_window_sums(const std::uint8_t* values, std::size_t n,
                            const std::uint32_t* matches, std::size_t n_matches,
                            std::int64_t lag_begin, std::int64_t lag_end,
                            std::uint32_t* sums);
}  // namespace avx2
#endif

}  // namespace jumpspec::kernels
