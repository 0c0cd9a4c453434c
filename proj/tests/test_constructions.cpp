#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "pipkit/constructions.hpp"
#include "pipkit/counting.hpp"
#include "pipkit/ehrhart.hpp"
#include "pipkit/errors.hpp"

using namespace pipkit;
using oracle::pt;
using oracle::q;

namespace {

void check_profile(const RationalPolygon& p, long i, long b) {
    const auto cert = is_pseudointegral(p);
    CHECK(cert.is_pip);
    CHECK(cert.interior == i);
    CHECK(cert.boundary == b);
}

// Closed-form vertices of T_xyz.
RationalPolygon t_xyz_closed_form(const BigInt& x, const BigInt& y, const BigInt& z) {
    const BigInt s = x + y + z;
    return RationalPolygon::hull({Vec2{-Rational(s, x * z), Rational(BigInt(x + y), z)}, pt(0, -1),
                                  Vec2{Rational(s, x * y), Rational(-1)}});
}

}  // namespace

TEST_CASE("reflexive catalog") {
    const auto cat = reflexive_catalog();
    REQUIRE(cat.size() == 16);
    std::map<long, int> by_b;
    bool has_big_triangle = false;
    for (const auto& p : cat) {
        CHECK(p.is_integral());
        const auto r = count_report(p, 1);
        CHECK(r.interior == 1);
        CHECK(count_interior(p, 1) == 1);
        CHECK(contains_origin_in_interior(p));
        const auto d = dual(p);
        CHECK(d.is_integral());
        CHECK(r.boundary <= 9);
        // b(P) + b(P*) = 12 for reflexive polygons.
        CHECK(r.boundary + count_boundary(d, 1) == 12);
        ++by_b[r.boundary.get_si()];
        if (p == RationalPolygon::hull({pt(-1, -1), pt(2, -1), pt(-1, 2)})) has_big_triangle = true;
    }
    CHECK(has_big_triangle);
    CHECK(by_b == std::map<long, int>{{3, 1}, {4, 3}, {5, 2}, {6, 4}, {7, 2}, {8, 3}, {9, 1}});
}

TEST_CASE("example_pip_b1") {
    CHECK(example_pip_b1(2) == RationalPolygon::hull({pt(2, 0), Vec2{q(-4, 5), q(3, 5)}, Vec2{q(-1, 5), q(-3, 5)}}));
    check_profile(example_pip_b1(2), 2, 1);
    check_profile(example_pip_b1(1), 1, 1);
    check_profile(example_pip_b1(5), 5, 1);
    CHECK_THROWS_AS(example_pip_b1(0), OutOfRange);
}

TEST_CASE("example_pip_b2") {
    CHECK(example_pip_b2(2) == RationalPolygon::hull({pt(2, 0), Vec2{Rational(-1), q(2, 3)}, Vec2{Rational(-1), q(-2, 3)}}));
    check_profile(example_pip_b2(2), 2, 2);
    check_profile(example_pip_b2(1), 1, 2);
    check_profile(example_pip_b2(4), 4, 2);
    CHECK_THROWS_AS(example_pip_b2(-3), OutOfRange);
}

TEST_CASE("t_xyz") {
    const auto t = t_xyz(VietaSolution(1, 1, 1, 9));
    CHECK(t == RationalPolygon::hull({pt(-3, 2), pt(0, -1), pt(3, -1)}));
    check_profile(t, 1, 9);
    const auto t369 = t_xyz(VietaSolution(3, 6, 9, 2));
    CHECK(t369 == RationalPolygon::hull({Vec2{q(-2, 3), Rational(1)}, pt(0, -1), pt(1, -1)}));
    check_profile(t369, 1, 2);
    CHECK_THROWS_AS(t_xyz(VietaSolution(4, 5, 81, 5)), NotConstructible);
    try {
        t_xyz(VietaSolution(4, 5, 81, 5));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("NotConstructible") == 0);
    }
}

TEST_CASE("t_xyz matches the closed-form vertices and the triangle invariant") {
    for (long b = 1; b <= 9; ++b) {
        for (const auto& seed : enumerate_reduced(b)) {
            for (const auto& st : family(seed, 5)) {
                const auto& s = st.solution;
                const auto t = t_xyz(s);
                CHECK(t == t_xyz_closed_form(s.x(), s.y(), s.z()));
                CHECK(triangle_invariant(t) == std::array<BigInt, 3>{s.x(), s.y(), s.z()});
                CHECK(s.b() <= 9);
                CHECK(s.b() != 7);
                for (const auto& e : t.edges()) CHECK(e.offset == 1);
            }
        }
    }
}

TEST_CASE("fibonacci") {
    for (unsigned long j = 1; j <= 40; ++j) CHECK(fibonacci(j) == oracle::fib(j));
    CHECK_THROWS_AS(fibonacci(0), OutOfRange);
}

TEST_CASE("fibonacci_triangle") {
    const auto t1 = fibonacci_triangle(1);
    CHECK(t1 == RationalPolygon::hull({Vec2{q(-3, 2), q(1, 2)}, pt(0, -1), pt(6, -1)}));
    CHECK(t1.denominator() == 2);
    check_profile(t1, 1, 9);
    check_profile(fibonacci_triangle(2), 1, 9);
    BigInt prev = 0;
    std::set<std::array<BigInt, 3>> invariants;
    for (std::size_t j = 1; j <= 6; ++j) {
        const auto t = fibonacci_triangle(j);
        const BigInt a = oracle::fib(2 * j - 1), c = oracle::fib(2 * j + 1);
        CHECK(t == t_xyz(VietaSolution(1, a * a, c * c, 9)));
        CHECK(t.denominator() > prev);
        prev = t.denominator();
        invariants.insert(triangle_invariant(t));
    }
    CHECK(invariants.size() == 6);
    CHECK_THROWS_AS(fibonacci_triangle(0), OutOfRange);
}

TEST_CASE("scott_grid_polygon") {
    check_profile(scott_grid_polygon(1, 9), 1, 9);
    check_profile(scott_grid_polygon(2, 10), 2, 10);
    check_profile(scott_grid_polygon(3, 3), 3, 3);
    for (long i = 1; i <= 7; ++i) {
        for (long b = 1; b <= 2 * i + 8; ++b) {
            const bool ok = (i == 1) ? (b >= 3 && b <= 9) : (b >= 3 && b <= 2 * i + 6);
            CHECK(scott_admissible(i, b) == ok);
            if (!ok) {
                CHECK_THROWS_AS(scott_grid_polygon(i, b), OutOfRange);
                continue;
            }
            const auto p = scott_grid_polygon(i, b);
            CHECK(p.is_integral());
            check_profile(p, i, b);
        }
    }
    CHECK_FALSE(scott_admissible(0, 4));
}

TEST_CASE("construct_pip") {
    const auto p3 = construct_pip(3, 3, 14);
    check_profile(p3, 3, 14);
    CHECK(p3.denominator() == 3);
    const auto p4 = construct_pip(4, 2, 12);
    check_profile(p4, 2, 12);
    CHECK(p4.denominator() == 4);
    const auto p10 = construct_pip(10, 2, 14);
    check_profile(p10, 2, 14);
    CHECK(p10.denominator() == 10);
    // The extremal case absorbs (i, 0) into an edge.
    CHECK(std::find(p10.vertices().begin(), p10.vertices().end(), pt(2, 0)) == p10.vertices().end());

    CHECK(construct_pip_range(3) == "2 <= b <= 3i + 5");
    CHECK_THROWS_AS(construct_pip(5, 1, 3), OutOfRange);
    CHECK_THROWS_AS(construct_pip(3, 0, 3), OutOfRange);
    CHECK_THROWS_AS(construct_pip(4, 1, 1), OutOfRange);
    try {
        construct_pip(10, 2, 15);
        FAIL("expected OutOfRange");
    } catch (const OutOfRange& e) {
        CHECK(std::string(e.what()).find("b <= 5i + 4") != std::string::npos);
    }
}

TEST_CASE("denominator constructions over a grid") {
    for (int d : {3, 4, 10}) {
        for (long i = 1; i <= 4; ++i) {
            const long upper = d == 3 ? 3 * i + 5 : d == 4 ? 4 * i + 4 : 5 * i + 4;
            for (long b = 2; b <= upper; ++b) {
                const auto p = construct_pip(d, i, b);
                CHECK(p.denominator() == d);
                check_profile(p, i, b);
            }
            CHECK_THROWS_AS(construct_pip(d, i, upper + 1), OutOfRange);
        }
    }
}
