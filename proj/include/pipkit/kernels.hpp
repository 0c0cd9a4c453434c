#pragma once

// Column-sum kernels behind the lattice-point counter.
//
// Every column of a dilated polygon contributes floor((N - A x) / B) for the
// edge bounding it, so counting reduces to sums of floors of an arithmetic
// progression:
//
//     floor_sum(start, step, den, count) = sum_{k < count} floor((start + step k) / den)
//
// The scalar kernel is the reference; the AVX2 kernel must agree with it bit
// for bit. Both run on int64 and require the caller to check fits_int64 first.

#include <cstdint>
#include <string_view>

#include "pipkit/exact.hpp"

namespace pipkit::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

// True when the int64 kernels cannot overflow for these arguments (den > 0).
bool fits_int64(const BigInt& start, const BigInt& step, const BigInt& den, const BigInt& count);

std::int64_t floor_sum_scalar(std::int64_t start, std::int64_t step, std::int64_t den,
                              std::int64_t count);

#if defined(__x86_64__) || defined(_M_X64)
std::int64_t floor_sum_avx2(std::int64_t start, std::int64_t step, std::int64_t den,
                            std::int64_t count);
#endif

bool backend_available(Backend b);

// The backend used by floor_sum. Defaults to the widest one the CPU supports.
Backend active_backend();
// Throws pipkit::Error if the CPU lacks the requested instruction set.
void set_backend(Backend b);

std::int64_t floor_sum(std::int64_t start, std::int64_t step, std::int64_t den,
                       std::int64_t count);

// Arbitrary-precision fallback, one division per column.
BigInt floor_sum_big(const BigInt& start, const BigInt& step, const BigInt& den,
                     const BigInt& count);

}  // namespace pipkit::kernels
