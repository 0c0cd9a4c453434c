#include "pipkit/vieta.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "pipkit/errors.hpp"

namespace pipkit {

namespace {

void require_b_range(const BigInt& b) {
    if (b < 1 || b > 9) throw OutOfRange("b must satisfy 1 <= b <= 9, got " + b.get_str());
}

std::string triple_text(const BigInt& x, const BigInt& y, const BigInt& z) {
    return "(" + x.get_str() + "," + y.get_str() + "," + z.get_str() + ")";
}

}  // namespace

VietaSolution::VietaSolution(BigInt x, BigInt y, BigInt z, BigInt b)
    : e_{std::move(x), std::move(y), std::move(z)}, b_(std::move(b)) {
    std::sort(e_.begin(), e_.end());
    if (e_[0] < 1) throw OutOfRange("solution entries must be positive");
    const BigInt s = e_[0] + e_[1] + e_[2];
    if (s * s != b_ * e_[0] * e_[1] * e_[2]) {
        throw Error(triple_text(e_[0], e_[1], e_[2]) + " is not a solution for b=" + b_.get_str());
    }
}

VietaSolution VietaSolution::from_triple(BigInt x, BigInt y, BigInt z) {
    auto b = is_solution(x, y, z);
    if (!b) throw Error(triple_text(x, y, z) + ": xyz does not divide (x+y+z)^2");
    return VietaSolution(std::move(x), std::move(y), std::move(z), std::move(*b));
}

std::string VietaSolution::key() const {
    return e_[0].get_str() + "," + e_[1].get_str() + "," + e_[2].get_str();
}

std::optional<BigInt> is_solution(const BigInt& x, const BigInt& y, const BigInt& z) {
    if (x < 1 || y < 1 || z < 1) {
        throw OutOfRange("entries must be positive: " + triple_text(x, y, z));
    }
    const BigInt s = x + y + z;
    const BigInt sq = s * s;
    const BigInt prod = x * y * z;
    if (!mpz_divisible_p(sq.get_mpz_t(), prod.get_mpz_t())) return std::nullopt;
    return BigInt(sq / prod);
}

bool is_vieta_reduced(const VietaSolution& s) { return s.z() <= s.x() + s.y(); }

VietaSolution vieta_jump(const VietaSolution& s, std::size_t position) {
    if (position > 2) throw OutOfRange("jump position must be 0, 1 or 2");
    const BigInt& e = s[position];
    const BigInt& p = s[(position + 1) % 3];
    const BigInt& q = s[(position + 2) % 3];
    const BigInt jumped = s.b() * p * q - 2 * (p + q) - e;
    // The two roots multiply to (p + q)², so the conjugate is always positive.
    if (jumped < 1 || jumped * e != (p + q) * (p + q)) {
        throw InternalConsistency("Vieta jump of " + s.key() + " produced " + jumped.get_str());
    }
    return VietaSolution(p, q, jumped, s.b());
}

VietaSolution vieta_reduce(const VietaSolution& s) {
    VietaSolution cur = s;
    while (!is_vieta_reduced(cur)) {
        VietaSolution next = vieta_jump(cur, 2);
        if (!(next.z() < cur.z())) {
            throw InternalConsistency("reduction of " + cur.key() + " did not decrease z");
        }
        cur = std::move(next);
    }
    return cur;
}

std::size_t reduced_search_choices(const BigInt& b) {
    require_b_range(b);
    const unsigned long x_max = BigInt(16 / b).get_ui();
    std::size_t n = 0;
    for (unsigned long x = 1; x <= x_max; ++x) n += x + 1;
    return n;
}

std::vector<VietaSolution> enumerate_reduced(const BigInt& b) {
    require_b_range(b);
    std::set<VietaSolution> found;
    const BigInt x_max = 16 / b;  // from 16y² >= (x + 3y)² >= b x y²
    for (BigInt x = 1; x <= x_max; ++x) {
        for (BigInt w = 0; w <= x; ++w) {
            // (x + 2y + w)² = b x y (y + w), as A y² + B y + C = 0.
            const BigInt qa = 4 - b * x;
            const BigInt qb = 4 * (x + w) - b * x * w;
            const BigInt qc = (x + w) * (x + w);
            std::vector<BigInt> roots;
            if (qa == 0) {
                if (qb != 0 && mpz_divisible_p(qc.get_mpz_t(), qb.get_mpz_t())) {
                    roots.push_back(BigInt(-qc / qb));
                }
            } else {
                const BigInt disc = qb * qb - 4 * qa * qc;
                if (auto root = exact_sqrt(disc)) {
                    for (const BigInt& num : {BigInt(-qb + *root), BigInt(-qb - *root)}) {
                        const BigInt den = 2 * qa;
                        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
                            roots.push_back(BigInt(num / den));
                        }
                    }
                }
            }
            for (const auto& y : roots) {
                if (y < x) continue;
                const BigInt z = y + w;
                auto got = is_solution(x, y, z);
                if (!got || *got != b) {
                    throw InternalConsistency("quadratic root " + triple_text(x, y, z) +
                                              " is not a solution for b=" + b.get_str());
                }
                found.emplace(x, y, z, b);
            }
        }
    }
    return {found.begin(), found.end()};
}

JumpForest jump_forest(const BigInt& b, const BigInt& max_z) {
    JumpForest forest;
    std::deque<VietaSolution> queue;
    for (auto& root : enumerate_reduced(b)) {
        if (root.z() > max_z) continue;
        forest.roots.insert(root);
        forest.adjacency.emplace(root, std::set<VietaSolution>{});
        queue.push_back(std::move(root));
    }
    while (!queue.empty()) {
        const VietaSolution node = std::move(queue.front());
        queue.pop_front();
        for (std::size_t pos = 0; pos < 3; ++pos) {
            VietaSolution next = vieta_jump(node, pos);
            if (next == node || next.z() > max_z) continue;
            forest.adjacency[node].insert(next);
            auto [it, fresh] = forest.adjacency.try_emplace(next);
            it->second.insert(node);
            if (fresh) queue.push_back(std::move(next));
        }
    }
    return forest;
}

std::vector<FamilyState> family(const VietaSolution& seed, std::size_t j_max) {
    if (!is_vieta_reduced(seed)) throw OutOfRange("family seed " + seed.key() + " is not reduced");
    std::vector<FamilyState> out;
    out.reserve(j_max + 1);
    out.push_back({0, seed});
    const BigInt& x = seed.x();
    const BigInt& b = seed.b();
    BigInt y = seed.y();
    BigInt z = seed.z();
    for (std::size_t j = 1; j <= j_max; ++j) {
        const BigInt y_next = z;
        const BigInt z_next = b * x * y_next - 2 * (x + y_next) - y;
        if (!(z_next > z)) {
            throw InternalConsistency("family z-values stopped increasing at j=" + std::to_string(j));
        }
        y = y_next;
        z = z_next;
        out.push_back({j, VietaSolution(x, y, z, b)});
    }
    return out;
}

std::optional<BigInt> tuple_ratio(const std::vector<BigInt>& entries) {
    if (entries.size() < 2) throw OutOfRange("tuples need n >= 2 entries");
    BigInt sum = 0;
    BigInt prod = 1;
    for (const auto& v : entries) {
        if (v < 1) throw OutOfRange("tuple entries must be positive");
        sum += v;
        prod *= v;
    }
    const BigInt sq = sum * sum;
    if (!mpz_divisible_p(sq.get_mpz_t(), prod.get_mpz_t())) return std::nullopt;
    return BigInt(sq / prod);
}

NTuple reduce_tuple(const NTuple& t) {
    NTuple cur = t;
    std::sort(cur.entries.begin(), cur.entries.end());
    for (;;) {
        BigInt head_sum = 0;
        BigInt head_prod = 1;
        for (std::size_t i = 0; i + 1 < cur.entries.size(); ++i) {
            head_sum += cur.entries[i];
            head_prod *= cur.entries[i];
        }
        BigInt& last = cur.entries.back();
        if (last <= head_sum) return cur;
        const BigInt conj = cur.b * head_prod - 2 * head_sum - last;
        if (conj < 1 || conj >= last || conj * last != head_sum * head_sum) {
            throw TheoremViolation("n-variable reduction failed at conjugate " + conj.get_str());
        }
        last = conj;
        std::sort(cur.entries.begin(), cur.entries.end());
    }
}

namespace {

using i128 = __int128;

struct TupleSearch {
    std::size_t n;
    std::int64_t bound;
    GeneralBoundReport* report;
    std::vector<std::int64_t> cur;

    void run(std::size_t depth, std::int64_t lo, i128 sum, i128 prod) {
        if (depth == n) {
            ++report->tuples_examined;
            const i128 sq = sum * sum;
            if (sq % prod != 0) return;
            record(static_cast<std::int64_t>(sq / prod));
            return;
        }
        for (std::int64_t v = lo; v <= bound; ++v) {
            cur[depth] = v;
            run(depth + 1, v, sum + v, prod * v);
        }
    }

    void record(std::int64_t b) {
        NTuple t;
        for (auto v : cur) t.entries.emplace_back(static_cast<long>(v));
        t.b = static_cast<long>(b);
        const BigInt limit = BigInt(static_cast<unsigned long>(n * n));
        if (t.b > limit) {
            throw TheoremViolation("tuple with b=" + t.b.get_str() + " > n^2 found");
        }
        const NTuple reduced = reduce_tuple(t);
        BigInt head = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) head += reduced.entries[i];
        if (reduced.entries.back() > head || tuple_ratio(reduced.entries) != reduced.b) {
            throw TheoremViolation("reduction did not reach a reduced tuple with the same b");
        }
        report->max_b = std::max(report->max_b, t.b);
        report->b_values.insert(t.b);
        report->solutions.push_back(std::move(t));
    }
};

}  // namespace

GeneralBoundReport verify_general_bound(std::size_t n, std::int64_t search_bound) {
    if (n < 2) throw OutOfRange("n must be >= 2");
    if (search_bound < 1) throw OutOfRange("search bound must be >= 1");
    // Sums and products must stay inside 128 bits: bound^n < 2^120 and (n bound)² < 2^120.
    const BigInt cap = BigInt(1) << 120;
    BigInt power = 1;
    for (std::size_t i = 0; i < n; ++i) power *= search_bound;
    const BigInt sum_max = BigInt(static_cast<unsigned long>(n)) * search_bound;
    if (power >= cap || sum_max * sum_max >= cap) {
        throw OutOfRange("search space too large for exhaustive enumeration");
    }
    GeneralBoundReport report;
    report.n = n;
    report.search_bound = search_bound;
    report.max_b = 0;
    TupleSearch search{n, search_bound, &report, std::vector<std::int64_t>(n)};
    search.run(0, 1, 0, 1);
    return report;
}

}  // namespace pipkit
