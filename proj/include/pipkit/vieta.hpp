#pragma once

// Positive integer solutions of (x + y + z)² = b x y z and the Vieta jumps
// between them, plus the n-variable version (Σ x_i)² = b Π x_i.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pipkit/exact.hpp"

namespace pipkit {

// A solution with entries stored in increasing order.
class VietaSolution {
public:
    // Sorts the entries and checks (x+y+z)² = b x y z. Throws otherwise.
    VietaSolution(BigInt x, BigInt y, BigInt z, BigInt b);
    // Derives b; throws if xyz does not divide (x+y+z)².
    static VietaSolution from_triple(BigInt x, BigInt y, BigInt z);

    const BigInt& x() const { return e_[0]; }
    const BigInt& y() const { return e_[1]; }
    const BigInt& z() const { return e_[2]; }
    const BigInt& b() const { return b_; }
    const BigInt& operator[](std::size_t i) const { return e_.at(i); }

    // "x,y,z"
    std::string key() const;

    friend bool operator==(const VietaSolution& l, const VietaSolution& r) {
        return l.b_ == r.b_ && l.e_ == r.e_;
    }
    friend bool operator<(const VietaSolution& l, const VietaSolution& r) {
        if (l.b_ != r.b_) return l.b_ < r.b_;
        return l.e_ < r.e_;
    }

private:
    std::vector<BigInt> e_;
    BigInt b_;
};

// b = (x+y+z)²/(xyz) when that is an integer. Throws OutOfRange on nonpositive input.
std::optional<BigInt> is_solution(const BigInt& x, const BigInt& y, const BigInt& z);

// x <= y <= z <= x + y.
bool is_vieta_reduced(const VietaSolution& s);

// Replaces the entry in sorted slot `position` (0, 1, 2) by its conjugate root
// b p q - 2(p + q) - e, where p, q are the other two entries.
VietaSolution vieta_jump(const VietaSolution& s, std::size_t position);

// Jumps the largest entry down until the solution is reduced.
VietaSolution vieta_reduce(const VietaSolution& s);

// All reduced solutions for 1 <= b <= 9, solving a quadratic in y for every
// (x, w = z - y) with 1 <= x <= 16/b and 0 <= w <= x.
std::vector<VietaSolution> enumerate_reduced(const BigInt& b);

// Number of (x, w) pairs enumerate_reduced examines for this b.
std::size_t reduced_search_choices(const BigInt& b);

// Sorted solutions with z <= max_z; edges are single jumps (self-jumps dropped).
struct JumpForest {
    std::set<VietaSolution> roots;
    std::map<VietaSolution, std::set<VietaSolution>> adjacency;
};

JumpForest jump_forest(const BigInt& b, const BigInt& max_z);

// s_j = (x, y_j, z_j) with y_{j+1} = z_j and z_{j+1} = b x y_{j+1} - 2(x + y_{j+1}) - y_j.
struct FamilyState {
    std::size_t j;
    VietaSolution solution;
};

std::vector<FamilyState> family(const VietaSolution& seed, std::size_t j_max);

// Sorted positive n-tuple with (Σ x_i)² = b Π x_i.
struct NTuple {
    std::vector<BigInt> entries;
    BigInt b;
};

// b for an n-tuple when Π x_i divides (Σ x_i)².
std::optional<BigInt> tuple_ratio(const std::vector<BigInt>& entries);

// Repeatedly replaces the largest entry by b Π_{i<n} x_i - 2 Σ_{i<n} x_i - x_n
// until x_n <= Σ_{i<n} x_i.
NTuple reduce_tuple(const NTuple& t);

struct GeneralBoundReport {
    std::size_t n;
    std::int64_t search_bound;
    std::vector<NTuple> solutions;  // lexicographic order
    BigInt max_b;
    std::set<BigInt> b_values;
    std::uint64_t tuples_examined = 0;
};

// Exhaustive search over sorted n-tuples with entries <= search_bound. Every
// hit must have b <= n² and reduce to a tuple with x_n <= Σ_{i<n} x_i;
// otherwise TheoremViolation is thrown.
GeneralBoundReport verify_general_bound(std::size_t n, std::int64_t search_bound);

}  // namespace pipkit
