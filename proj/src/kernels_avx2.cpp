// AVX2 variants of the trace-statistics kernels. This translation unit is
// compiled with -mavx2; callers dispatch through kernels.cpp only after a
// runtime CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

#include "jumpspec/kernels.hpp"

namespace jumpspec::kernels::avx2 {

namespace {

// Horizontal sum of the four u64 lanes produced by _mm256_sad_epu8.
inline std::uint64_t hsum_u64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

std::uint64_t sum_u8(const std::uint8_t* p, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
    }
    std::uint64_t sum = hsum_u64(acc);
    for (; i < n; ++i) sum += p[i];
    return sum;
}

void pair_count_lags(const std::uint8_t* ev, std::size_t n, std::size_t max_lag,
                     std::uint64_t* counts) {
    const __m256i zero = _mm256_setzero_si256();
    for (std::size_t m = 1; m <= max_lag; ++m) {
        std::uint64_t c = 0;
        if (m < n) {
            const std::size_t len = n - m;
            __m256i acc = zero;
            std::size_t k = 0;
            for (; k + 32 <= len; k += 32) {
                __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ev + k));
                __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ev + k + m));
                acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_and_si256(a, b), zero));
            }
            c = hsum_u64(acc);
            for (; k < len; ++k) c += ev[k] & ev[k + m];
        }
        counts[m - 1] = c;
    }
}

void accumulate_window_sums(const std::uint8_t* values, std::size_t n,
                            const std::uint32_t* matches, std::size_t n_matches,
                            std::int64_t lag_begin, std::int64_t lag_end,
                            std::uint32_t* sums) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
    const std::int64_t span = lag_end - lag_begin;
    for (std::size_t i = 0; i < n_matches; ++i) {
        const std::int64_t k = static_cast<std::int64_t>(matches[i]);
        const std::int64_t lo = std::max(lag_begin, -k);
        const std::int64_t hi = std::min(lag_end, sn - k);
        if (lo == lag_begin && hi == lag_end) {
            // window fully inside the trace: vector path over the whole span
            const std::uint8_t* src = values + (k + lag_begin);
            std::int64_t j = 0;
            for (; j + 8 <= span; j += 8) {
                __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(src + j));
                __m256i wide = _mm256_cvtepu8_epi32(bytes);
                __m256i acc = _mm256_loadu_si256(reinterpret_cast<__m256i*>(sums + j));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(sums + j),
                                    _mm256_add_epi32(acc, wide));
            }
            for (; j < span; ++j) sums[j] += src[j];
        } else {
            for (std::int64_t m = lo; m < hi; ++m) sums[m - lag_begin] += values[k + m];
        }
    }
}

}  // namespace jumpspec::kernels::avx2

#endif  // x86-64
