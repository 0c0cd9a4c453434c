// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "pipkit/kernels.hpp"

namespace pipkit::kernels {

namespace {

inline std::int64_t floor_div64(std::int64_t a, std::int64_t d) {
    std::int64_t q = a / d;
    if ((a % d != 0) && (a < 0)) --q;
    return q;
}

}  // namespace

// Four lanes walk columns k, k+1, k+2, k+3 in strides of four. Each lane keeps
// its quotient q and remainder r in [0, den); advancing by 4*step adds a fixed
// quotient and remainder and carries once when r overflows den.
std::int64_t floor_sum_avx2(std::int64_t start, std::int64_t step, std::int64_t den,
                            std::int64_t count) {
    if (count < 8) return floor_sum_scalar(start, step, den, count);

    alignas(32) std::int64_t q0[4];
    alignas(32) std::int64_t r0[4];
    for (int lane = 0; lane < 4; ++lane) {
        const std::int64_t v = start + step * lane;
        q0[lane] = floor_div64(v, den);
        r0[lane] = v - q0[lane] * den;
    }
    const std::int64_t stride = 4 * step;
    const std::int64_t dq = floor_div64(stride, den);
    const std::int64_t dr = stride - dq * den;

    __m256i q = _mm256_load_si256(reinterpret_cast<const __m256i*>(q0));
    __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(r0));
    const __m256i vdq = _mm256_set1_epi64x(dq);
    const __m256i vdr = _mm256_set1_epi64x(dr);
    const __m256i vden = _mm256_set1_epi64x(den);
    const __m256i vden_minus_one = _mm256_set1_epi64x(den - 1);
    __m256i acc = _mm256_setzero_si256();

    const std::int64_t blocks = count / 4;
    for (std::int64_t b = 0; b < blocks; ++b) {
        acc = _mm256_add_epi64(acc, q);
        q = _mm256_add_epi64(q, vdq);
        r = _mm256_add_epi64(r, vdr);
        const __m256i carry = _mm256_cmpgt_epi64(r, vden_minus_one);  // all-ones where r >= den
        r = _mm256_sub_epi64(r, _mm256_and_si256(carry, vden));
        q = _mm256_sub_epi64(q, carry);
    }

    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];

    const std::int64_t done = blocks * 4;
    sum += floor_sum_scalar(start + step * done, step, den, count - done);
    return sum;
}

}  // namespace pipkit::kernels
