#include "pipkit/kernels.hpp"

namespace pipkit::kernels {

namespace {

inline std::int64_t floor_div64(std::int64_t a, std::int64_t d) {
    std::int64_t q = a / d;
    if ((a % d != 0) && (a < 0)) --q;
    return q;
}

}  // namespace

std::int64_t floor_sum_scalar(std::int64_t start, std::int64_t step, std::int64_t den,
                              std::int64_t count) {
    std::int64_t sum = 0;
    for (std::int64_t k = 0; k < count; ++k) sum += floor_div64(start + step * k, den);
    return sum;
}

BigInt floor_sum_big(const BigInt& start, const BigInt& step, const BigInt& den,
                     const BigInt& count) {
    BigInt sum = 0;
    BigInt value = start;
    BigInt q;
    for (BigInt k = 0; k < count; ++k) {
        mpz_fdiv_q(q.get_mpz_t(), value.get_mpz_t(), den.get_mpz_t());
        sum += q;
        value += step;
    }
    return sum;
}

}  // namespace pipkit::kernels
