#pragma once

// Exact integer and rational arithmetic plus the 2x2 integer linear algebra
// used by the rest of the library. Integers are GMP mpz values; rationals are
// kept in lowest terms with a positive denominator at all times.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pipkit {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    // Parses "p", "-p" or "p/q" with q != 0.
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "p/q" in lowest terms, or "p" when q == 1.
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

// Floor / ceiling division of integers, exact for negative operands. den != 0.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

BigInt rat_floor(const Rational& q);
BigInt rat_ceil(const Rational& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);

// Exact integer square root when n is a perfect square, nullopt otherwise.
std::optional<BigInt> exact_sqrt(const BigInt& n);

// Narrowing with range check; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const BigInt& v);

std::string to_string(const BigInt& v);

struct Vec2 {
    Rational x;
    Rational y;

    bool is_integral() const { return x.is_integer() && y.is_integer(); }
    bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) = default;
    // Lexicographic: x first, then y.
    friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

Rational dot(const Vec2& u, const Vec2& v);

// Determinant of the matrix with columns u and v.
Rational det2(const Vec2& u, const Vec2& v);

// Counterclockwise rotation by a quarter turn.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

// Divides an integer vector by the gcd of its components. Throws on zero or
// non-integral input.
Vec2 primitive(const Vec2& v);

// Smallest positive integer multiple of v that is a primitive integer vector
// in the same direction. Works for any nonzero rational v.
Vec2 primitive_direction(const Vec2& v);

struct IntMat2 {
    BigInt a, b;  // first row
    BigInt c, d;  // second row

    BigInt det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const;
    // Throws NotUnimodular unless |det| == 1.
    static IntMat2 unimodular(BigInt a, BigInt b, BigInt c, BigInt d);
    static IntMat2 identity() { return {1, 0, 0, 1}; }
    friend IntMat2 operator*(const IntMat2& m, const IntMat2& n);
    friend bool operator==(const IntMat2& m, const IntMat2& n) = default;
};

// x -> linear * x + translate. Construction checks that the linear part is
// unimodular and the translation integral, so the map is a lattice automorphism.
class AffineMap {
public:
    AffineMap(IntMat2 linear, Vec2 translate);
    static AffineMap identity() { return {IntMat2::identity(), Vec2{0, 0}}; }

    const IntMat2& linear() const { return linear_; }
    const Vec2& translate() const { return translate_; }
    Vec2 apply(const Vec2& v) const { return linear_.apply(v) + translate_; }

private:
    IntMat2 linear_;
    Vec2 translate_;
};

}  // namespace pipkit
