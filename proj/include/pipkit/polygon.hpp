#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pipkit/exact.hpp"

namespace pipkit {

// One edge of a convex polygon, with its primitive outer normal u and the
// offset h such that the edge lies on <u, a> = h and the polygon in <u, a> <= h.
struct Edge {
    Vec2 start;
    Vec2 end;
    Vec2 normal;
    Rational offset;
};

// Convex polygon with rational vertices, stored counterclockwise starting at
// the lexicographically least vertex. No three consecutive vertices are
// collinear, so structural equality is geometric equality.
class RationalPolygon {
public:
    // Convex hull of the points. Throws DegenerateHull when the points do not
    // span the plane.
    static RationalPolygon hull(std::span<const Vec2> points);
    static RationalPolygon hull(std::initializer_list<Vec2> points) {
        return hull(std::span<const Vec2>(points.begin(), points.size()));
    }

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Rational& area() const { return area_; }
    // Least k >= 1 with kP integral.
    const BigInt& denominator() const { return denominator_; }
    bool is_integral() const { return denominator_ == 1; }

    std::vector<Edge> edges() const;

    // Every vertex multiplied by t.
    RationalPolygon dilate(const BigInt& t) const;

    friend bool operator==(const RationalPolygon& a, const RationalPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    explicit RationalPolygon(std::vector<Vec2> canonical_vertices);

    std::vector<Vec2> vertices_;
    Rational area_;
    BigInt denominator_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolygon& p);

// Free-function surface mirroring the member accessors.
inline RationalPolygon hull(std::span<const Vec2> points) { return RationalPolygon::hull(points); }
inline std::vector<Edge> edges(const RationalPolygon& p) { return p.edges(); }
inline const Rational& area(const RationalPolygon& p) { return p.area(); }
inline const BigInt& denominator(const RationalPolygon& p) { return p.denominator(); }

// |<u, p> - offset| for the edge's primitive normal u.
Rational lattice_distance(const Edge& e, const Vec2& p);

bool contains_origin_in_interior(const RationalPolygon& p);

// Polar dual conv{u_F / ldist(F)}. Throws unless the origin is interior.
RationalPolygon dual(const RationalPolygon& p);

// Image under a lattice automorphism, re-canonicalized.
RationalPolygon apply_map(const RationalPolygon& p, const AffineMap& m);

// Edge vector of edge i computed from the normals and offsets alone:
//
//   v_{i,i+1} - v_{i-1,i} = (h_{i-1} d_{i,i+1} - h_i d_{i-1,i+1} + h_{i+1} d_{i-1,i})
//                           / (d_{i-1,i} d_{i,i+1}) * perp(u_i)
//
// where d_{jk} = det(u_j, u_k). Normals must be in counterclockwise order; the
// result is end - start of the i-th edge. Throws NotConvexOrder when a
// consecutive determinant is not positive.
Vec2 edge_vector_formula(std::span<const Vec2> normals, std::span<const Rational> offsets,
                         std::size_t i);

// Lattice length of edge i from the same data; normals must be primitive.
Rational edge_lattice_length_formula(std::span<const Vec2> normals,
                                     std::span<const Rational> offsets, std::size_t i);

// Triangle specialization (a x + b y + c z) / (x y z) * x with u the normal of
// edge i, v and w the next two counterclockwise, a, b, c their offsets, and
// x = det(v, w), y = det(w, u), z = det(u, v).
Rational triangle_edge_lattice_length(std::span<const Vec2> normals,
                                      std::span<const Rational> offsets, std::size_t i);

// Pairwise determinants of the primitive outer normals of a triangle, sorted
// increasingly. Invariant under GL2(Z) and translations.
std::array<BigInt, 3> triangle_invariant(const RationalPolygon& t);

}  // namespace pipkit
