#include "pipkit/generators.hpp"

#include <array>
#include <vector>

#include "pipkit/errors.hpp"

namespace pipkit::gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational small_rational(Rng& rng, std::int64_t reach) {
    static constexpr std::array<long, 5> dens = {1, 2, 3, 4, 6};
    const long q = dens[uniform(rng, 0, dens.size() - 1)];
    const long p = uniform(rng, -reach * q, reach * q);
    return Rational(BigInt(p), BigInt(q));
}

namespace {

template <class Draw>
RationalPolygon sample(Rng& rng, std::size_t lo, std::size_t hi, Draw draw) {
    for (;;) {
        const auto n = static_cast<std::size_t>(uniform(rng, lo, hi));
        std::vector<Vec2> pts;
        for (std::size_t k = 0; k < n; ++k) pts.push_back(draw());
        try {
            return RationalPolygon::hull(pts);
        } catch (const DegenerateHull&) {
        }
    }
}

}  // namespace

RationalPolygon rational_polygon(Rng& rng, std::size_t max_points, std::int64_t reach) {
    return sample(rng, 3, max_points, [&] {
        return Vec2{small_rational(rng, reach), small_rational(rng, reach)};
    });
}

RationalPolygon rational_triangle(Rng& rng, std::int64_t reach) {
    for (;;) {
        auto p = rational_polygon(rng, 3, reach);
        if (p.size() == 3) return p;
    }
}

RationalPolygon integral_polygon(Rng& rng, std::size_t max_points, std::int64_t reach) {
    return sample(rng, 3, max_points, [&] {
        return Vec2{Rational(uniform(rng, -reach, reach)), Rational(uniform(rng, -reach, reach))};
    });
}

IntMat2 unimodular_matrix(Rng& rng, int steps) {
    IntMat2 m = IntMat2::identity();
    for (int s = 0; s < steps; ++s) {
        const long k = uniform(rng, -2, 2);
        IntMat2 e = IntMat2::identity();
        switch (uniform(rng, 0, 3)) {
            case 0: e = IntMat2::unimodular(1, k, 0, 1); break;
            case 1: e = IntMat2::unimodular(1, 0, k, 1); break;
            case 2: e = IntMat2::unimodular(0, 1, 1, 0); break;
            default: e = IntMat2::unimodular(-1, 0, 0, 1); break;
        }
        m = e * m;
    }
    return m;
}

AffineMap unimodular_map(Rng& rng, std::int64_t reach) {
    return AffineMap(unimodular_matrix(rng),
                     Vec2{Rational(uniform(rng, -reach, reach)), Rational(uniform(rng, -reach, reach))});
}

}  // namespace pipkit::gen
