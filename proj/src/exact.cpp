#include "pipkit/exact.hpp"

#include <cctype>
#include <sstream>

#include "pipkit/errors.hpp"

namespace pipkit {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("not an integer: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParseError("not an integer: '" + std::string(whole) + "'");
        }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw Error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("floor_div by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("ceil_div by zero");
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt rat_floor(const Rational& q) { return floor_div(q.num(), q.den()); }
BigInt rat_ceil(const Rational& q) { return ceil_div(q.num(), q.den()); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
    static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_get_si must cover int64");
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x << ',' << v.y << ')';
}

Rational dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

Rational det2(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Vec2 primitive(const Vec2& v) {
    if (!v.is_integral()) throw Error("primitive: vector has non-integer components");
    if (v.is_zero()) throw Error("primitive: zero vector");
    const BigInt g = gcd(v.x.num(), v.y.num());
    return {Rational(BigInt(v.x.num() / g)), Rational(BigInt(v.y.num() / g))};
}

Vec2 primitive_direction(const Vec2& v) {
    if (v.is_zero()) throw Error("primitive_direction: zero vector");
    const BigInt scale = lcm(v.x.den(), v.y.den());
    return primitive(Vec2{v.x * Rational(scale), v.y * Rational(scale)});
}

Vec2 IntMat2::apply(const Vec2& v) const {
    return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
}

IntMat2 IntMat2::unimodular(BigInt a, BigInt b, BigInt c, BigInt d) {
    IntMat2 m{std::move(a), std::move(b), std::move(c), std::move(d)};
    if (abs(m.det()) != 1) {
        throw NotUnimodular("determinant " + m.det().get_str() + " is not +-1");
    }
    return m;
}

IntMat2 operator*(const IntMat2& m, const IntMat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

AffineMap::AffineMap(IntMat2 linear, Vec2 translate)
    : linear_(std::move(linear)), translate_(std::move(translate)) {
    if (abs(linear_.det()) != 1) {
        throw NotUnimodular("affine map linear part has determinant " + linear_.det().get_str());
    }
    if (!translate_.is_integral()) {
        std::ostringstream os;
        os << "affine map translation " << translate_ << " is not a lattice vector";
        throw NotUnimodular(os.str());
    }
}

}  // namespace pipkit
