#include "pipkit/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "pipkit/errors.hpp"

namespace pipkit {

namespace {

// Twice the signed area of (a, b, c); positive for a left turn.
Rational orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    return det2(b - a, c - a);
}

Vec2 outer_normal(const Vec2& start, const Vec2& end) {
    const Vec2 d = end - start;
    // Counterclockwise traversal keeps the interior on the left.
    return primitive_direction(Vec2{d.y, -d.x});
}

}  // namespace

RationalPolygon::RationalPolygon(std::vector<Vec2> canonical_vertices)
    : vertices_(std::move(canonical_vertices)) {
    Rational twice_area;
    denominator_ = 1;
    const std::size_t n = vertices_.size();
    for (std::size_t k = 0; k < n; ++k) {
        twice_area += det2(vertices_[k], vertices_[(k + 1) % n]);
        denominator_ = lcm(denominator_, lcm(vertices_[k].x.den(), vertices_[k].y.den()));
    }
    area_ = twice_area / Rational(2);
}

RationalPolygon RationalPolygon::hull(std::span<const Vec2> points) {
    std::vector<Vec2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        throw DegenerateHull("need at least three distinct points, got " +
                             std::to_string(pts.size()));
    }

    std::vector<Vec2> chain;
    chain.reserve(2 * pts.size());
    auto push = [&chain](const Vec2& p, std::size_t floor_size) {
        while (chain.size() >= floor_size + 2 &&
               orientation(chain[chain.size() - 2], chain.back(), p).sign() <= 0) {
            chain.pop_back();
        }
        chain.push_back(p);
    };
    for (const auto& p : pts) push(p, 0);
    const std::size_t lower_size = chain.size();
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) push(*it, lower_size - 1);
    chain.pop_back();  // the first point again

    if (chain.size() < 3) throw DegenerateHull("points are collinear");
    return RationalPolygon(std::move(chain));
}

std::vector<Edge> RationalPolygon::edges() const {
    std::vector<Edge> out;
    const std::size_t n = vertices_.size();
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2& a = vertices_[k];
        const Vec2& b = vertices_[(k + 1) % n];
        Vec2 u = outer_normal(a, b);
        Rational h = dot(u, a);
        out.push_back(Edge{a, b, std::move(u), std::move(h)});
    }
    return out;
}

RationalPolygon RationalPolygon::dilate(const BigInt& t) const {
    if (t <= 0) throw OutOfRange("dilation factor must be >= 1");
    std::vector<Vec2> scaled;
    scaled.reserve(vertices_.size());
    const Rational s(t);
    for (const auto& v : vertices_) scaled.push_back(s * v);
    return RationalPolygon(std::move(scaled));
}

std::ostream& operator<<(std::ostream& os, const RationalPolygon& p) {
    os << "conv{";
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p.vertices()[k];
    return os << '}';
}

Rational lattice_distance(const Edge& e, const Vec2& p) {
    const Rational d = dot(e.normal, p) - e.offset;
    return d.sign() < 0 ? -d : d;
}

bool contains_origin_in_interior(const RationalPolygon& p) {
    const auto es = p.edges();
    return std::all_of(es.begin(), es.end(), [](const Edge& e) { return e.offset.sign() > 0; });
}

RationalPolygon dual(const RationalPolygon& p) {
    if (!contains_origin_in_interior(p)) {
        std::ostringstream os;
        os << "dual: origin is not interior to " << p;
        throw Error(os.str());
    }
    std::vector<Vec2> pts;
    for (const auto& e : p.edges()) pts.push_back(Rational(1) / e.offset * e.normal);
    return RationalPolygon::hull(pts);
}

RationalPolygon apply_map(const RationalPolygon& p, const AffineMap& m) {
    std::vector<Vec2> pts;
    pts.reserve(p.size());
    for (const auto& v : p.vertices()) pts.push_back(m.apply(v));
    return RationalPolygon::hull(pts);
}

namespace {

struct Neighbourhood {
    const Vec2& prev;
    const Vec2& cur;
    const Vec2& next;
    const Rational& h_prev;
    const Rational& h_cur;
    const Rational& h_next;
};

Neighbourhood neighbourhood(std::span<const Vec2> normals, std::span<const Rational> offsets,
                            std::size_t i) {
    const std::size_t n = normals.size();
    if (n < 3 || offsets.size() != n) {
        throw Error("edge formula needs >= 3 normals and one offset per normal");
    }
    if (i >= n) throw OutOfRange("edge index out of range");
    const std::size_t ip = (i + n - 1) % n;
    const std::size_t in = (i + 1) % n;
    return {normals[ip], normals[i], normals[in], offsets[ip], offsets[i], offsets[in]};
}

Rational edge_coefficient(const Neighbourhood& nb) {
    const Rational d_prev_cur = det2(nb.prev, nb.cur);
    const Rational d_cur_next = det2(nb.cur, nb.next);
    if (d_prev_cur.sign() <= 0 || d_cur_next.sign() <= 0) {
        throw NotConvexOrder("consecutive normal determinant is not positive");
    }
    const Rational d_prev_next = det2(nb.prev, nb.next);
    return (nb.h_prev * d_cur_next - nb.h_cur * d_prev_next + nb.h_next * d_prev_cur) /
           (d_prev_cur * d_cur_next);
}

}  // namespace

Vec2 edge_vector_formula(std::span<const Vec2> normals, std::span<const Rational> offsets,
                         std::size_t i) {
    const auto nb = neighbourhood(normals, offsets, i);
    return edge_coefficient(nb) * perp(nb.cur);
}

Rational edge_lattice_length_formula(std::span<const Vec2> normals,
                                     std::span<const Rational> offsets, std::size_t i) {
    return edge_coefficient(neighbourhood(normals, offsets, i));
}

Rational triangle_edge_lattice_length(std::span<const Vec2> normals,
                                      std::span<const Rational> offsets, std::size_t i) {
    if (normals.size() != 3 || offsets.size() != 3) {
        throw Error("triangle edge formula needs exactly three normals and offsets");
    }
    if (i >= 3) throw OutOfRange("edge index out of range");
    const Vec2& u = normals[i];
    const Vec2& v = normals[(i + 1) % 3];
    const Vec2& w = normals[(i + 2) % 3];
    const Rational x = det2(v, w);
    const Rational y = det2(w, u);
    const Rational z = det2(u, v);
    if (x.sign() <= 0 || y.sign() <= 0 || z.sign() <= 0) {
        throw NotConvexOrder("triangle normals are not in counterclockwise order");
    }
    const Rational weighted = offsets[i] * x + offsets[(i + 1) % 3] * y + offsets[(i + 2) % 3] * z;
    return weighted / (x * y * z) * x;
}

std::array<BigInt, 3> triangle_invariant(const RationalPolygon& t) {
    if (t.size() != 3) throw Error("triangle_invariant: polygon has " + std::to_string(t.size()) +
                                   " vertices, expected 3");
    const auto es = t.edges();
    const Vec2& u = es[0].normal;
    const Vec2& v = es[1].normal;
    const Vec2& w = es[2].normal;
    std::array<BigInt, 3> out{det2(v, w).num(), det2(w, u).num(), det2(u, v).num()};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pipkit
