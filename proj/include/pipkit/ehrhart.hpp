#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pipkit/exact.hpp"
#include "pipkit/polygon.hpp"

namespace pipkit {

// Degree-2 quasipolynomial: for t ≡ r (mod period), value = c0 + c1 t + c2 t².
class QuasiPolynomial {
public:
    using Coefficients = std::array<Rational, 3>;  // c0, c1, c2

    QuasiPolynomial(BigInt period, std::vector<Coefficients> per_residue);

    const BigInt& period() const { return period_; }
    const std::vector<Coefficients>& residues() const { return residues_; }
    const Coefficients& coefficients(std::size_t r) const { return residues_.at(r); }

    // Valid for every integer t, including t <= 0.
    Rational evaluate(const BigInt& t) const;

    bool is_polynomial() const;

private:
    BigInt period_;
    std::vector<Coefficients> residues_;
};

// Interpolates ehr_P on each residue class modulo den(P) from exact counts at
// t = r, r + D, r + 2D (r = 0 uses D, 2D, 3D) and validates every class at one
// further sample. A failed validation throws InternalConsistency.
QuasiPolynomial reconstruct_quasipolynomial(const RationalPolygon& p);

struct PipCertificate {
    bool is_pip = false;
    QuasiPolynomial ehrhart;
    // Direct counts at t = 1. When is_pip they also equal b = 2 c1 and
    // i = c2 - c1 + 1 read off the polynomial.
    BigInt interior;
    BigInt boundary;
    // Two residues with different coefficient triples; set only for non-PIPs.
    std::optional<std::pair<std::size_t, std::size_t>> witness_residues;
};

PipCertificate is_pseudointegral(const RationalPolygon& p);

// Checks count_interior(P, t) == ehr_P(-t) for t = 1..t_max (t_max >= den(P)).
bool check_reciprocity(const RationalPolygon& p, const BigInt& t_max);
bool check_reciprocity(const RationalPolygon& p, const QuasiPolynomial& ehr, const BigInt& t_max);

}  // namespace pipkit
