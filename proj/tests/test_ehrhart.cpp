#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pipkit/constructions.hpp"
#include "pipkit/counting.hpp"
#include "pipkit/ehrhart.hpp"
#include "pipkit/errors.hpp"
#include "pipkit/generators.hpp"

using namespace pipkit;
using oracle::pt;
using oracle::q;

namespace {

using Coeffs = QuasiPolynomial::Coefficients;

RationalPolygon unit_square() { return RationalPolygon::hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}); }
RationalPolygon t111() { return RationalPolygon::hull({pt(-3, 2), pt(0, -1), pt(3, -1)}); }
RationalPolygon diamond4() {
    return RationalPolygon::hull({pt(1, 0), Vec2{Rational(0), q(2, 3)}, pt(-1, 0), Vec2{Rational(0), q(-2, 3)}});
}
RationalPolygon octagon() {
    const Rational h = q(1, 2), t = q(1, 3);
    return RationalPolygon::hull({{h, 0}, {t, t}, {0, h}, {-t, t}, {-h, 0}, {-t, -t}, {0, -h}, {t, -t}});
}

}  // namespace

TEST_CASE("reconstruct_quasipolynomial") {
    const auto sq = reconstruct_quasipolynomial(unit_square());
    CHECK(sq.period() == 1);
    CHECK(sq.coefficients(0) == Coeffs{1, 2, 1});

    const auto t1 = reconstruct_quasipolynomial(fibonacci_triangle(1));
    CHECK(t1.period() == 2);
    CHECK(t1.is_polynomial());
    for (const auto& c : t1.residues()) CHECK(c == Coeffs{1, q(9, 2), q(9, 2)});

    const auto d = reconstruct_quasipolynomial(diamond4());
    CHECK_FALSE(d.is_polynomial());
    std::set<std::array<std::string, 3>> distinct;
    for (const auto& c : d.residues()) distinct.insert({c[0].to_string(), c[1].to_string(), c[2].to_string()});
    CHECK(distinct.size() >= 2);
}

TEST_CASE("quasipolynomial evaluation reproduces counts") {
    gen::Rng rng(41);
    for (int k = 0; k < 60; ++k) {
        const auto p = gen::rational_polygon(rng);
        const auto ehr = reconstruct_quasipolynomial(p);
        for (const auto& c : ehr.residues()) CHECK(c[2] == p.area());
        // Generated denominators divide 12, so this spans a full period.
        for (long t = 1; t <= 12; ++t) {
            CHECK(ehr.evaluate(t) == Rational(oracle::grid_count(p, t).total));
        }
    }
}

TEST_CASE("QuasiPolynomial validates its shape") {
    CHECK_THROWS_AS(QuasiPolynomial(2, {Coeffs{1, 1, 1}}), Error);
    CHECK_THROWS_AS(QuasiPolynomial(0, {}), Error);
    const QuasiPolynomial qp(2, {Coeffs{0, 0, 1}, Coeffs{1, 0, 0}});
    CHECK(qp.evaluate(4) == 16);
    CHECK(qp.evaluate(-3) == 1);
    CHECK(qp.evaluate(-4) == 16);
}

TEST_CASE("is_pseudointegral") {
    const auto c = is_pseudointegral(t_xyz(VietaSolution(3, 6, 9, 2)));
    CHECK(c.is_pip);
    CHECK(c.interior == 1);
    CHECK(c.boundary == 2);
    CHECK_FALSE(c.witness_residues.has_value());

    const auto o = is_pseudointegral(octagon());
    CHECK_FALSE(o.is_pip);
    REQUIRE(o.witness_residues.has_value());
    CHECK(o.ehrhart.coefficients(o.witness_residues->first) != o.ehrhart.coefficients(o.witness_residues->second));

    gen::Rng rng(42);
    for (int k = 0; k < 100; ++k) {
        const auto p = gen::integral_polygon(rng, 8, 5);
        const auto cert = is_pseudointegral(p);
        CHECK(cert.is_pip);
        CHECK(cert.ehrhart.period() == 1);
        // ehr(t) = A t² + (b/2) t + 1
        CHECK(cert.ehrhart.coefficients(0) == Coeffs{1, Rational(cert.boundary) / Rational(2), p.area()});
    }
}

TEST_CASE("certified PIPs have reticular edges and the Pick-form polynomial") {
    std::vector<RationalPolygon> pips = {fibonacci_triangle(2), example_pip_b1(3), example_pip_b2(2),
                                         construct_pip(4, 2, 12), construct_pip(10, 1, 7), t111()};
    for (const auto& p : pips) {
        const auto cert = is_pseudointegral(p);
        REQUIRE(cert.is_pip);
        for (const auto& e : p.edges()) CHECK(e.offset.is_integer());
        const auto& c = cert.ehrhart.coefficients(0);
        CHECK(c[2] == Rational(cert.interior) + Rational(cert.boundary) / Rational(2) - Rational(1));
        CHECK(c[1] == Rational(cert.boundary) / Rational(2));
        CHECK(c[0] == 1);
    }
}

TEST_CASE("reciprocity") {
    CHECK(check_reciprocity(unit_square(), 5));
    CHECK(check_reciprocity(t111(), 6));
    CHECK(check_reciprocity(construct_pip(4, 2, 12), 12));
    CHECK(check_reciprocity(diamond4(), 9));
    CHECK_THROWS_AS(check_reciprocity(construct_pip(4, 2, 12), 3), OutOfRange);

    // A tampered quasipolynomial must be caught.
    auto ehr = reconstruct_quasipolynomial(t111());
    auto residues = ehr.residues();
    residues[0][0] = 2;
    CHECK_FALSE(check_reciprocity(t111(), QuasiPolynomial(1, residues), 3));

    gen::Rng rng(43);
    for (int k = 0; k < 100; ++k) {
        const auto p = gen::rational_polygon(rng);
        CHECK(check_reciprocity(p, BigInt(2 * p.denominator())));
    }
}

TEST_CASE("PIP verdict is invariant under unimodular maps") {
    gen::Rng rng(44);
    const std::vector<RationalPolygon> base = {octagon(), diamond4(), fibonacci_triangle(1), construct_pip(3, 2, 9)};
    for (int k = 0; k < 100; ++k) {
        const auto& p = base[k % base.size()];
        const auto img = apply_map(p, gen::unimodular_map(rng));
        CHECK(is_pseudointegral(img).is_pip == is_pseudointegral(p).is_pip);
    }
}
