#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pipkit/errors.hpp"
#include "pipkit/exact.hpp"

using namespace pipkit;
using oracle::pt;
using oracle::q;

TEST_CASE("rat_floor and rat_ceil") {
    CHECK(rat_floor(q(7, 2)) == 3);
    CHECK(rat_floor(q(-7, 2)) == -4);
    CHECK(rat_floor(q(-3, 1)) == -3);
    CHECK(rat_ceil(q(7, 2)) == 4);
    CHECK(rat_ceil(q(-7, 2)) == -3);
    CHECK(rat_ceil(q(0, 1)) == 0);
}

TEST_CASE("floor and ceil bracket the value") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 997);
    for (int k = 0; k < 2000; ++k) {
        const Rational a(BigInt(num(rng)), BigInt(den(rng)));
        const Rational f(rat_floor(a));
        CHECK(f <= a);
        CHECK(a < f + Rational(1));
        CHECK(rat_ceil(a) == -rat_floor(-a));
    }
}

TEST_CASE("rationals are canonical") {
    CHECK(q(4, -6).num() == -2);
    CHECK(q(4, -6).den() == 3);
    CHECK(q(4, -6) == q(-2, 3));
    CHECK(q(6, 3).is_integer());
    CHECK(q(6, 3).to_string() == "2");
    CHECK(q(-1, 3).to_string() == "-1/3");
    CHECK(q(0, 5).to_string() == "0");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("3/6") == q(1, 2));
    CHECK(Rational::parse(" -12 ") == Rational(-12));
    CHECK(Rational::parse("+5/-10") == q(-1, 2));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x/2"), ParseError);
}

TEST_CASE("det2") {
    CHECK(det2(pt(1, 0), pt(0, 1)) == 1);
    CHECK(det2(pt(-1, -1), pt(0, -1)) == 1);
    CHECK(det2(pt(2, 3), pt(2, 3)) == 0);
}

TEST_CASE("det2 is alternating and bilinear") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> d(-50, 50), den(1, 12);
    auto r = [&] { return Rational(BigInt(d(rng)), BigInt(den(rng))); };
    for (int k = 0; k < 300; ++k) {
        const Vec2 u{r(), r()}, v{r(), r()}, w{r(), r()};
        const Rational s = r();
        CHECK(det2(u, v) == -det2(v, u));
        CHECK(det2(u, u) == 0);
        CHECK(det2(u + w, v) == det2(u, v) + det2(w, v));
        CHECK(det2(s * u, v) == s * det2(u, v));
    }
}

TEST_CASE("primitive") {
    CHECK(primitive(pt(4, 6)) == pt(2, 3));
    CHECK(primitive(pt(0, -5)) == pt(0, -1));
    CHECK(primitive(pt(2, 3)) == pt(2, 3));
    CHECK_THROWS_AS(primitive(pt(0, 0)), Error);
    CHECK_THROWS_AS(primitive(Vec2{q(1, 2), Rational(1)}), Error);
    CHECK(primitive_direction(Vec2{q(-1, 6), q(1, 3)}) == pt(-1, 2));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-40, 40), k(1, 30);
    for (int n = 0; n < 300; ++n) {
        const Vec2 v = pt(d(rng), d(rng));
        if (v.is_zero()) continue;
        CHECK(primitive(Rational(k(rng)) * v) == primitive(v));
    }
}

TEST_CASE("integer helpers") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(gcd(-12, 18) == 6);
    CHECK(lcm(4, 6) == 12);
    CHECK(exact_sqrt(BigInt(144)) == BigInt(12));
    CHECK_FALSE(exact_sqrt(BigInt(143)).has_value());
    CHECK_FALSE(exact_sqrt(BigInt(-4)).has_value());
    CHECK(to_int64(BigInt("9223372036854775807")).has_value());
    CHECK_FALSE(to_int64(BigInt("9223372036854775808")).has_value());
}

TEST_CASE("no overflow on large values") {
    const BigInt f = oracle::fib(300);
    const Rational r(f * f, f + 1);
    CHECK(rat_floor(r) == f - 1);
    CHECK(exact_sqrt(BigInt(f * f)) == f);
}

TEST_CASE("unimodular matrices and affine maps") {
    CHECK_THROWS_AS(IntMat2::unimodular(2, 0, 0, 1), NotUnimodular);
    const auto m = IntMat2::unimodular(1, -9, 0, 1);
    CHECK(m.det() == 1);
    CHECK(m.apply(pt(1, 1)) == pt(-8, 1));
    CHECK((m * IntMat2::unimodular(1, 9, 0, 1)) == IntMat2::identity());
    CHECK_THROWS_AS(AffineMap(IntMat2{2, 0, 0, 1}, pt(0, 0)), NotUnimodular);
    CHECK_THROWS_AS(AffineMap(IntMat2::identity(), Vec2{q(1, 2), Rational(0)}), Error);
    const AffineMap a(IntMat2::unimodular(0, 1, 1, 0), pt(1, 2));
    CHECK(a.apply(pt(3, 4)) == pt(5, 5));
}
