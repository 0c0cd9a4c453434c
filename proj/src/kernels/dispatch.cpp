#include <atomic>

#include "pipkit/errors.hpp"
#include "pipkit/kernels.hpp"

namespace pipkit::kernels {

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

Backend best_backend() { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{best_backend()};
    return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool fits_int64(const BigInt& start, const BigInt& step, const BigInt& den, const BigInt& count) {
    static const BigInt limit = BigInt(1) << 62;
    if (den <= 0 || count < 0) return false;
    // Largest |numerator| any lane touches, including the overshoot of the last stride.
    const BigInt reach = abs(start) + abs(step) * (count + 8) + 1;
    return den < limit && reach < limit && BigInt(count * reach) < limit;
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw Error("kernel backend '" + std::string(backend_name(b)) + "' is not supported here");
    }
    current().store(b, std::memory_order_relaxed);
}

std::int64_t floor_sum(std::int64_t start, std::int64_t step, std::int64_t den,
                       std::int64_t count) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2) return floor_sum_avx2(start, step, den, count);
#endif
    return floor_sum_scalar(start, step, den, count);
}

}  // namespace pipkit::kernels
