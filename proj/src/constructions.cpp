#include "pipkit/constructions.hpp"

#include "pipkit/errors.hpp"

namespace pipkit {

namespace {

Vec2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

Rational frac(const BigInt& num, const BigInt& den) { return Rational(num, den); }

void require_positive_index(const BigInt& i, const char* what) {
    if (i < 1) throw OutOfRange(std::string(what) + " needs i >= 1, got " + i.get_str());
}

// Intersection of <u, a> = h and <w, a> = k.
Vec2 meet(const Vec2& u, const Rational& h, const Vec2& w, const Rational& k) {
    const Rational d = det2(u, w);
    if (d.sign() == 0) throw Error("parallel normals do not meet");
    return {(h * w.y - k * u.y) / d, (u.x * k - w.x * h) / d};
}

}  // namespace

std::vector<RationalPolygon> reflexive_catalog() {
    using Pts = std::initializer_list<Vec2>;
    const std::initializer_list<Pts> lists = {
        Pts{pt(-1, -1), pt(2, -1), pt(-1, 2)},
        Pts{pt(-1, -1), pt(2, -1), pt(0, 1), pt(-1, 0)},
        Pts{pt(-2, -1), pt(1, -1), pt(0, 1)},  // figure anchor sits one step left of the interior point
        Pts{pt(-1, -1), pt(1, -1), pt(1, 0), pt(0, 1)},
        Pts{pt(-1, 0), pt(0, -1), pt(1, 0), pt(0, 1)},
        Pts{pt(-1, 0), pt(0, -1), pt(1, -1), pt(1, 0), pt(0, 1), pt(-1, 1)},
        Pts{pt(-1, 0), pt(0, -1), pt(1, -1), pt(1, 0), pt(0, 1)},
        Pts{pt(-1, -1), pt(0, -1), pt(1, 0), pt(1, 1), pt(-1, 1)},
        Pts{pt(-1, -1), pt(1, -1), pt(1, 1), pt(0, 1)},
        Pts{pt(-1, -1), pt(1, -1), pt(1, 0), pt(0, 1), pt(-1, 0)},
        Pts{pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)},
        Pts{pt(-1, -1), pt(1, 0), pt(0, 1)},
        Pts{pt(-1, 1), pt(1, 1), pt(0, -1)},
        Pts{pt(-1, 0), pt(0, -1), pt(1, -1), pt(0, 1)},
        Pts{pt(-1, -1), pt(2, -1), pt(0, 1), pt(-1, 1)},
        Pts{pt(-2, 1), pt(2, 1), pt(0, -1)},
    };
    std::vector<RationalPolygon> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.push_back(RationalPolygon::hull(l));
    return out;
}

RationalPolygon example_pip_b1(const BigInt& i) {
    require_positive_index(i, "example_pip_b1");
    const BigInt d = 2 * i + 1;
    return RationalPolygon::hull({
        Vec2{Rational(i), Rational(0)},
        Vec2{frac(BigInt(-2 * i), d), frac(BigInt(2 * i - 1), d)},
        Vec2{frac(BigInt(-1), d), frac(BigInt(-(2 * i - 1)), d)},
    });
}

RationalPolygon example_pip_b2(const BigInt& i) {
    require_positive_index(i, "example_pip_b2");
    const BigInt d = i + 1;
    return RationalPolygon::hull({
        Vec2{Rational(i), Rational(0)},
        Vec2{Rational(-1), frac(i, d)},
        Vec2{Rational(-1), frac(BigInt(-i), d)},
    });
}

RationalPolygon t_xyz(const VietaSolution& s) {
    const BigInt& x = s.x();
    const BigInt& y = s.y();
    const BigInt& z = s.z();
    if (!mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()) ||
        !mpz_divisible_p(z.get_mpz_t(), x.get_mpz_t())) {
        throw NotConstructible("(" + s.key() + ") needs x | y and x | z");
    }
    const Vec2 u1{Rational(y), frac(BigInt(y + z), x)};
    const Vec2 u2{Rational(BigInt(-x)), Rational(-1)};
    const Vec2 u3{Rational(0), Rational(-1)};
    const Rational one(1);
    return RationalPolygon::hull({meet(u1, one, u2, one), meet(u2, one, u3, one),
                                  meet(u3, one, u1, one)});
}

BigInt fibonacci(std::size_t j) {
    if (j == 0) throw OutOfRange("Fibonacci numbers are indexed from 1");
    BigInt a = 1, b = 1;  // F_1, F_2
    for (std::size_t k = 1; k < j; ++k) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

RationalPolygon fibonacci_triangle(std::size_t j) {
    if (j < 1) throw OutOfRange("fibonacci_triangle needs j >= 1");
    const BigInt lo = fibonacci(2 * j - 1);
    const BigInt hi = fibonacci(2 * j + 1);
    const Rational ratio = frac(BigInt(3 * lo), hi);
    return RationalPolygon::hull({
        Vec2{-ratio, ratio - Rational(1)},
        Vec2{Rational(0), Rational(-1)},
        Vec2{frac(BigInt(3 * hi), lo), Rational(-1)},
    });
}

bool scott_admissible(const BigInt& i, const BigInt& b) {
    if (i < 1 || b < 3) return false;
    if (i == 1) return b <= 9;
    return b <= 2 * i + 6;
}

RationalPolygon scott_grid_polygon(const BigInt& i, const BigInt& b) {
    if (!scott_admissible(i, b)) {
        throw OutOfRange("no integral polygon has i=" + i.get_str() + ", b=" + b.get_str() +
                         " (need i = 1 and 3 <= b <= 9, or i >= 2 and 3 <= b <= 2i + 6)");
    }
    const Rational ri(i);
    if (b == 3) {
        return RationalPolygon::hull({pt(-1, 0), pt(0, 1), Vec2{Rational(BigInt(-2 * i)), Rational(2)}});
    }
    if (i == 1 && b == 9) return RationalPolygon::hull({pt(-1, -1), pt(2, -1), pt(-1, 2)});
    const Rational right = ri + Rational(1);
    if (b == 2 * i + 6) {
        return RationalPolygon::hull({pt(0, -1), Vec2{right, Rational(-1)}, Vec2{right, Rational(1)},
                                      pt(0, 1)});
    }
    return RationalPolygon::hull({pt(0, -1), Vec2{right, Rational(0)},
                                  Vec2{Rational(BigInt(b - 4)), Rational(1)}, pt(0, 1)});
}

std::string construct_pip_range(int d) {
    switch (d) {
        case 3: return "2 <= b <= 3i + 5";
        case 4: return "2 <= b <= 4i + 4";
        case 10: return "2 <= b <= 5i + 4";
        default: throw OutOfRange("denominator must be 3, 4 or 10, got " + std::to_string(d));
    }
}

RationalPolygon construct_pip(int d, const BigInt& i, const BigInt& b) {
    const std::string range = construct_pip_range(d);
    if (i < 1) throw OutOfRange("violated i >= 1 (i=" + i.get_str() + ")");
    const BigInt upper = d == 3 ? BigInt(3 * i + 5) : d == 4 ? BigInt(4 * i + 4) : BigInt(5 * i + 4);
    if (b < 2 || b > upper) {
        throw OutOfRange("violated " + range + " (d=" + std::to_string(d) + ", i=" + i.get_str() +
                         ", b=" + b.get_str() + ")");
    }
    const Rational ri(i);
    const Rational rb(b);
    switch (d) {
        case 3:
            return RationalPolygon::hull({
                Vec2{ri, Rational(0)},
                Vec2{Rational(0), frac(1, 3)},
                pt(-2, -1),
                Vec2{rb - Rational(4), Rational(-1)},
                Vec2{ri + frac(2, 3) * (rb - Rational(5)), frac(-2, 3)},
            });
        case 4:
            return RationalPolygon::hull({
                Vec2{ri, Rational(0)},
                Vec2{Rational(0), frac(1, 4)},
                Vec2{Rational(-1), frac(-1, 2)},
                pt(-1, -1),
                Vec2{rb - Rational(3), Rational(-1)},
                Vec2{ri + frac(3, 4) * (rb - Rational(4)), frac(-3, 4)},
            });
        default:
            return RationalPolygon::hull({
                Vec2{ri, Rational(0)},
                Vec2{Rational(0), frac(1, 5)},
                Vec2{frac(-3, 2), Rational(-1)},
                Vec2{rb - Rational(3), Rational(-1)},
                Vec2{ri + frac(4, 5) * (rb - Rational(4)), frac(-4, 5)},
            });
    }
}

}  // namespace pipkit
