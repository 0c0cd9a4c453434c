#include "pipkit/suites.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "pipkit/constructions.hpp"
#include "pipkit/counting.hpp"
#include "pipkit/ehrhart.hpp"
#include "pipkit/errors.hpp"
#include "pipkit/generators.hpp"
#include "pipkit/vieta.hpp"

namespace pipkit {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

void add(SuiteReport& r, std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
}

using Quad = std::array<long, 4>;  // x, y, z, b

const std::set<Quad>& expected_reduced() {
    static const std::set<Quad> table = {
        {5, 20, 25, 1}, {6, 12, 18, 1}, {8, 8, 16, 1}, {9, 9, 9, 1}, {3, 6, 9, 2},
        {4, 4, 8, 2},   {2, 4, 6, 3},   {3, 3, 3, 3},  {2, 2, 4, 4}, {1, 4, 5, 5},
        {1, 2, 3, 6},   {1, 1, 2, 8},   {1, 1, 1, 9},
    };
    return table;
}

Quad quad(const VietaSolution& s) {
    return {s.x().get_si(), s.y().get_si(), s.z().get_si(), s.b().get_si()};
}

std::string quad_text(const Quad& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) +
           "; b=" + std::to_string(q[3]) + ")";
}

// Profile check shared by the constructions: PIP with the advertised (i, b).
bool certifies(const RationalPolygon& p, const BigInt& i, const BigInt& b, std::string& detail) {
    const auto cert = is_pseudointegral(p);
    detail = "is_pip=" + std::string(cert.is_pip ? "true" : "false") + " i=" + cert.interior.get_str() +
             " b=" + cert.boundary.get_str();
    return cert.is_pip && cert.interior == i && cert.boundary == b;
}

// Lattice length of a segment from its endpoints.
Rational direct_lattice_length(const Edge& e) {
    const Vec2 d = e.end - e.start;
    const Vec2 prim = primitive_direction(d);
    return prim.x.sign() != 0 ? d.x / prim.x : d.y / prim.y;
}

std::pair<std::vector<Vec2>, std::vector<Rational>> normals_offsets(const RationalPolygon& p) {
    std::vector<Vec2> normals;
    std::vector<Rational> offsets;
    for (const auto& e : p.edges()) {
        normals.push_back(e.normal);
        offsets.push_back(e.offset);
    }
    return {normals, offsets};
}

}  // namespace

SuiteReport suite_reduced_table() {
    SuiteReport r{"reduced-table", {}};
    std::set<Quad> found;
    std::size_t choices = 0;
    for (long b = 1; b <= 9; ++b) {
        for (const auto& s : enumerate_reduced(b)) found.insert(quad(s));
        choices += reduced_search_choices(b);
    }
    std::string missing, extra;
    for (const auto& q : expected_reduced()) {
        if (!found.count(q)) missing += quad_text(q);
    }
    for (const auto& q : found) {
        if (!expected_reduced().count(q)) extra += quad_text(q);
    }
    add(r, "enumerate_reduced matches the 13-row table", missing.empty() && extra.empty(),
        std::to_string(found.size()) + "/13 matched" + (missing.empty() ? "" : ", missing " + missing) +
            (extra.empty() ? "" : ", extra " + extra));
    add(r, "no reduced solution for b = 7", enumerate_reduced(7).empty());
    add(r, "quadratic search examines 251 (x, w) choices outside b = 7",
        choices - reduced_search_choices(7) == 251,
        std::to_string(choices - reduced_search_choices(7)) + " choices");

    // Brute force: x <= 16, x <= y <= 1100, y <= z <= x + y.
    std::set<Quad> brute;
    for (long x = 1; x <= 16; ++x) {
        for (long y = x; y <= 1100; ++y) {
            for (long z = y; z <= x + y; ++z) {
                const long s = x + y + z;
                const long prod = x * y * z;
                if ((s * s) % prod != 0) continue;
                const long b = s * s / prod;
                if (b <= 9) brute.insert({x, y, z, b});
            }
        }
    }
    add(r, "brute force over x <= 16, y <= 1100, z <= x + y agrees", brute == found,
        std::to_string(brute.size()) + " brute-force solutions");
    return r;
}

SuiteReport suite_b_sweep(std::int64_t bound) {
    if (bound < 1 || bound > 2000000) throw OutOfRange("sweep bound must be in 1..2000000");
    SuiteReport r{"b-sweep", {}};
    std::map<std::int64_t, std::uint64_t> seen;
    std::uint64_t hits = 0;
    for (std::int64_t x = 1; x <= bound; ++x) {
        for (std::int64_t y = x; y <= bound; ++y) {
            const std::int64_t xy = x * y;
            for (std::int64_t z = y; z <= bound; ++z) {
                const std::int64_t s = x + y + z;
                const std::int64_t sq = s * s;
                const std::int64_t prod = xy * z;
                if (prod > sq || sq % prod != 0) continue;
                ++seen[sq / prod];
                ++hits;
            }
        }
    }
    const std::set<std::int64_t> allowed = {1, 2, 3, 4, 5, 6, 8, 9};
    std::string bad, values;
    for (const auto& [b, count] : seen) {
        values += (values.empty() ? "" : ",") + std::to_string(b);
        if (!allowed.count(b)) bad += " " + std::to_string(b);
    }
    add(r, "every b lies in {1..6, 8, 9}", bad.empty(),
        std::to_string(hits) + " solutions with entries <= " + std::to_string(bound) + ", b in {" +
            values + "}" + (bad.empty() ? "" : ", offending b:" + bad));
    std::string unwitnessed;
    for (auto b : allowed) {
        if (!seen.count(b)) unwitnessed += " " + std::to_string(b);
    }
    add(r, "every b in {1..6, 8, 9} is witnessed", unwitnessed.empty(),
        unwitnessed.empty() ? "all 8 values witnessed" : "missing:" + unwitnessed);
    return r;
}

SuiteReport suite_general_bound(const std::vector<std::pair<std::size_t, std::int64_t>>& cases) {
    SuiteReport r{"general-bound", {}};
    for (const auto& [n, bound] : cases) {
        const std::string name =
            "n=" + std::to_string(n) + ", entries <= " + std::to_string(bound) + ": max b = n^2";
        try {
            const auto rep = verify_general_bound(n, bound);
            const BigInt sq = BigInt(static_cast<unsigned long>(n * n));
            std::string values;
            for (const auto& b : rep.b_values) values += (values.empty() ? "" : ",") + b.get_str();
            add(r, name, rep.max_b == sq,
                "max b = " + rep.max_b.get_str() + ", " + std::to_string(rep.solutions.size()) +
                    " solutions among " + std::to_string(rep.tuples_examined) + " tuples, b in {" +
                    values + "}");
        } catch (const Error& e) {
            add(r, name, false, e.what());
        }
    }
    return r;
}

SuiteReport suite_xyz_triangles(std::ostream* log, std::size_t depth, std::int64_t max_columns) {
    SuiteReport r{"xyz-triangles", {}};
    std::size_t certified = 0, skipped = 0, not_divisible = 0;
    for (long b = 1; b <= 9; ++b) {
        for (const auto& seed : enumerate_reduced(b)) {
            for (const auto& st : family(seed, depth)) {
                const auto& s = st.solution;
                const std::string tag = "seed (" + seed.key() + ") j=" + std::to_string(st.j) +
                                        " -> (" + s.key() + ")";
                if (!mpz_divisible_p(s.y().get_mpz_t(), s.x().get_mpz_t()) ||
                    !mpz_divisible_p(s.z().get_mpz_t(), s.x().get_mpz_t())) {
                    ++not_divisible;
                    continue;
                }
                const auto p = t_xyz(s);
                const BigInt width = dilated_width(p, BigInt(4 * p.denominator()));
                if (width > max_columns) {
                    ++skipped;
                    if (log) {
                        *log << "skip " << tag << ": den " << p.denominator() << ", "
                             << width << " columns at t = 4 den\n";
                    }
                    continue;
                }
                std::string detail;
                bool ok = certifies(p, 1, s.b(), detail);
                auto [normals, offsets] = normals_offsets(p);
                const auto es = p.edges();
                for (std::size_t k = 0; k < es.size(); ++k) {
                    if (triangle_edge_lattice_length(normals, offsets, k) != direct_lattice_length(es[k])) {
                        ok = false;
                        detail += ", edge " + std::to_string(k) + " lattice length mismatch";
                    }
                }
                if (s.b() > 9 || s.b() == 7) ok = false;
                add(r, tag, ok, "den " + p.denominator().get_str() + ", " + detail);
                ++certified;
                if (log) *log << (ok ? "ok   " : "FAIL ") << tag << " den " << p.denominator() << '\n';
            }
        }
    }
    add(r, "at least one T_xyz per reduced seed certified", certified >= 13,
        std::to_string(certified) + " certified, " + std::to_string(skipped) + " skipped for width, " +
            std::to_string(not_divisible) + " without x | y, x | z");
    return r;
}

SuiteReport suite_fibonacci(std::size_t j_max) {
    SuiteReport r{"fibonacci", {}};
    // Independent generator: F_{k+1} = F_k + F_{k-1} on a vector.
    std::vector<BigInt> fib = {0, 1};
    while (fib.size() < 2 * j_max + 3) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);

    const auto fam = family(VietaSolution(1, 1, 1, 9), j_max);
    std::string zs;
    bool z_ok = true;
    for (const auto& st : fam) {
        const BigInt f = fib[2 * st.j + 1];
        zs += (zs.empty() ? "" : ",") + st.solution.z().get_str();
        if (st.solution.z() != f * f || st.solution.x() != 1) z_ok = false;
        if (st.j >= 1 && st.solution.y() != fib[2 * st.j - 1] * fib[2 * st.j - 1]) z_ok = false;
    }
    add(r, "b = 9 family z-values are F_{2j+1}^2", z_ok, "z = " + zs);

    BigInt prev_den = 0;
    bool den_ok = true;
    std::string dens;
    std::set<std::array<BigInt, 3>> invariants;
    bool inv_ok = true;
    for (std::size_t j = 1; j <= j_max; ++j) {
        const auto p = fibonacci_triangle(j);
        std::string detail;
        const bool ok = certifies(p, 1, 9, detail);
        const bool same = p == t_xyz(fam[j].solution);
        add(r, "fibonacci_triangle(" + std::to_string(j) + ") certifies (1, 9)", ok && same,
            detail + ", den " + p.denominator().get_str() + (same ? "" : ", differs from T_xyz"));
        dens += (dens.empty() ? "" : ",") + p.denominator().get_str();
        if (p.denominator() <= prev_den) den_ok = false;
        prev_den = p.denominator();
        const auto inv = triangle_invariant(p);
        const BigInt a = fib[2 * j - 1], c = fib[2 * j + 1];
        if (inv != std::array<BigInt, 3>{1, a * a, c * c}) inv_ok = false;
        invariants.insert(inv);
    }
    add(r, "denominators strictly increase", den_ok, "den = " + dens);
    add(r, "triangle invariants are (1, F_{2j-1}^2, F_{2j+1}^2) and pairwise distinct",
        inv_ok && invariants.size() == j_max);
    return r;
}

SuiteReport suite_denominators(std::int64_t i_max) {
    SuiteReport r{"denominators", {}};
    for (int d : {3, 4, 10}) {
        std::size_t total = 0, good = 0;
        std::string first_failure;
        for (long i = 1; i <= i_max; ++i) {
            const long upper = d == 3 ? 3 * i + 5 : d == 4 ? 4 * i + 4 : 5 * i + 4;
            for (long b = 2; b <= upper; ++b) {
                ++total;
                const auto p = construct_pip(d, i, b);
                std::string detail;
                if (certifies(p, i, b, detail) && p.denominator() == d) {
                    ++good;
                } else if (first_failure.empty()) {
                    first_failure = ", first failure i=" + std::to_string(i) + " b=" +
                                    std::to_string(b) + ": " + detail + " den " +
                                    p.denominator().get_str();
                }
            }
        }
        add(r, "d=" + std::to_string(d) + ", i=1.." + std::to_string(i_max) + ", " + construct_pip_range(d),
            good == total, std::to_string(good) + "/" + std::to_string(total) + " certified" + first_failure);
    }
    return r;
}

SuiteReport suite_counterexamples() {
    SuiteReport r{"counterexamples", {}};
    const Vec2 origin{0, 0};
    {
        const auto p = RationalPolygon::hull({{1, 0}, {0, Rational(2, 3)}, {-1, 0}, {0, Rational(-2, 3)}});
        const auto cert = is_pseudointegral(p);
        bool far_edge = false;
        for (const auto& e : p.edges()) far_edge = far_edge || lattice_distance(e, origin) == 2;
        add(r, "4-gon |2x| + |3y| <= 2: non-PIP, i = 1, an edge at lattice distance 2",
            !cert.is_pip && cert.interior == 1 && far_edge,
            "is_pip=" + std::string(cert.is_pip ? "true" : "false") + " i=" + cert.interior.get_str() +
                " b=" + cert.boundary.get_str());
    }
    {
        const Rational h(1, 2), t(1, 3);
        const auto p = RationalPolygon::hull({{h, 0}, {t, t}, {0, h}, {-t, t}, {-h, 0}, {-t, -t},
                                              {0, -h}, {t, -t}});
        const auto cert = is_pseudointegral(p);
        bool unit = p.size() == 8;
        for (const auto& e : p.edges()) unit = unit && lattice_distance(e, origin) == 1;
        const bool dual_integral = dual(p).is_integral();
        add(r, "8-gon: non-PIP, b = 0, i = 1, integral dual, every edge at distance 1",
            !cert.is_pip && cert.interior == 1 && cert.boundary == 0 && dual_integral && unit,
            "is_pip=" + std::string(cert.is_pip ? "true" : "false") + " i=" + cert.interior.get_str() +
                " b=" + cert.boundary.get_str() + " dual integral=" + (dual_integral ? "true" : "false"));
    }
    return r;
}

SuiteReport suite_reflexive() {
    SuiteReport r{"reflexive", {}};
    const auto cat = reflexive_catalog();
    add(r, "catalog has 16 entries", cat.size() == 16);
    for (std::size_t k = 0; k < cat.size(); ++k) {
        const auto& p = cat[k];
        const auto rep = count_report(p, 1);
        const bool integral = p.is_integral();
        const bool dual_ok = contains_origin_in_interior(p) && dual(p).is_integral();
        const bool pick = p.area() == Rational(rep.interior) + Rational(rep.boundary) / Rational(2) - Rational(1);
        const bool ok = integral && dual_ok && pick && rep.interior == 1 && rep.boundary >= 3 &&
                        rep.boundary <= 9;
        add(r, "entry " + std::to_string(k), ok,
            std::to_string(p.size()) + "-gon, i=" + rep.interior.get_str() + " b=" + rep.boundary.get_str() +
                " area=" + p.area().to_string());
    }
    return r;
}

SuiteReport suite_properties(std::size_t instances, std::uint64_t seed) {
    SuiteReport r{"properties", {}};
    gen::Rng rng(seed);

    auto random_construction = [&](gen::Rng& g) -> RationalPolygon {
        switch (gen::uniform(g, 0, 4)) {
            case 0: {
                static constexpr std::array<int, 3> ds = {3, 4, 10};
                const int d = ds[gen::uniform(g, 0, 2)];
                const long i = gen::uniform(g, 1, 4);
                const long upper = d == 3 ? 3 * i + 5 : d == 4 ? 4 * i + 4 : 5 * i + 4;
                return construct_pip(d, i, gen::uniform(g, 2, upper));
            }
            case 1: return example_pip_b1(gen::uniform(g, 1, 6));
            case 2: return example_pip_b2(gen::uniform(g, 1, 6));
            case 3: return reflexive_catalog()[gen::uniform(g, 0, 15)];
            default: return gen::integral_polygon(g);
        }
    };

    {
        std::size_t fails = 0;
        for (std::size_t k = 0; k < instances; ++k) {
            const auto p = gen::rational_polygon(rng);
            if (!check_reciprocity(p, BigInt(2 * p.denominator()))) ++fails;
        }
        add(r, "reciprocity: interior(tP) = ehr(-t) for t <= 2 den(P)", fails == 0,
            std::to_string(instances - fails) + "/" + std::to_string(instances) + " polygons");
    }
    {
        std::size_t fails = 0;
        for (std::size_t k = 0; k < instances; ++k) {
            const auto p = (k % 2 == 0) ? gen::rational_polygon(rng) : random_construction(rng);
            const auto m = gen::unimodular_map(rng);
            const auto q = apply_map(p, m);
            bool ok = is_pseudointegral(p).is_pip == is_pseudointegral(q).is_pip;
            for (long t = 1; t <= 3 && ok; ++t) {
                const auto a = count_report(p, t), b = count_report(q, t);
                ok = a.total == b.total && a.boundary == b.boundary && a.interior == b.interior;
            }
            if (!ok) ++fails;
        }
        add(r, "unimodular maps preserve counts and PIP verdicts", fails == 0,
            std::to_string(instances - fails) + "/" + std::to_string(instances) + " polygons");
    }
    {
        std::size_t fails = 0;
        for (std::size_t k = 0; k < instances; ++k) {
            const auto t = gen::rational_triangle(rng);
            const auto m = gen::unimodular_map(rng);
            const Vec2 shift{gen::small_rational(rng), gen::small_rational(rng)};
            std::vector<Vec2> moved;
            const auto mapped = apply_map(t, m);
            for (const auto& v : mapped.vertices()) moved.push_back(v + shift);
            if (triangle_invariant(t) != triangle_invariant(RationalPolygon::hull(moved))) ++fails;
        }
        add(r, "triangle_invariant is invariant under GL2(Z) and translations", fails == 0,
            std::to_string(instances - fails) + "/" + std::to_string(instances) + " triangles");
    }
    {
        std::size_t fails = 0, edges_checked = 0;
        for (std::size_t k = 0; k < instances; ++k) {
            const auto p = (k % 2 == 0) ? gen::rational_polygon(rng) : gen::rational_triangle(rng);
            auto [normals, offsets] = normals_offsets(p);
            const auto es = p.edges();
            bool ok = true;
            for (std::size_t e = 0; e < es.size(); ++e) {
                ++edges_checked;
                ok = ok && edge_vector_formula(normals, offsets, e) == es[e].end - es[e].start;
                ok = ok && edge_lattice_length_formula(normals, offsets, e) == direct_lattice_length(es[e]);
                if (p.size() == 3) {
                    ok = ok && triangle_edge_lattice_length(normals, offsets, e) ==
                                   direct_lattice_length(es[e]);
                }
            }
            if (!ok) ++fails;
        }
        add(r, "edge vector and lattice length formulas match the geometry", fails == 0,
            std::to_string(instances - fails) + "/" + std::to_string(instances) + " polygons, " +
                std::to_string(edges_checked) + " edges");
    }
    {
        std::size_t pips = 0, fails = 0, tried = 0;
        while (pips < instances) {
            ++tried;
            const auto p = (tried % 3 == 0) ? gen::rational_polygon(rng) : random_construction(rng);
            if (!is_pseudointegral(p).is_pip) continue;
            ++pips;
            for (const auto& e : p.edges()) {
                if (!e.offset.is_integer()) {
                    ++fails;
                    break;
                }
            }
        }
        add(r, "every edge of a certified PIP is reticular", fails == 0,
            std::to_string(pips - fails) + "/" + std::to_string(pips) + " PIPs from " +
                std::to_string(tried) + " candidates");
    }
    {
        static constexpr std::array<long, 8> bs = {1, 2, 3, 4, 5, 6, 8, 9};
        std::map<long, std::vector<VietaSolution>> nodes;
        std::map<long, std::set<VietaSolution>> tables;
        for (long b : bs) {
            const auto forest = jump_forest(b, BigInt(1000000));
            for (const auto& [node, nbrs] : forest.adjacency) nodes[b].push_back(node);
            const auto red = enumerate_reduced(b);
            tables[b] = {red.begin(), red.end()};
        }
        std::size_t fails = 0;
        for (std::size_t k = 0; k < instances; ++k) {
            const long b = bs[gen::uniform(rng, 0, bs.size() - 1)];
            const auto& pool = nodes[b];
            const auto& s = pool[gen::uniform(rng, 0, pool.size() - 1)];
            bool ok = tables[b].count(vieta_reduce(s)) == 1;
            for (std::size_t pos = 0; pos < 3 && ok; ++pos) {
                const auto jumped = vieta_jump(s, pos);
                const BigInt conj = s.b() * s[(pos + 1) % 3] * s[(pos + 2) % 3] - 2 * (s[(pos + 1) % 3] + s[(pos + 2) % 3]) - s[pos];
                bool back = false;
                for (std::size_t q = 0; q < 3; ++q) {
                    if (jumped[q] == conj && vieta_jump(jumped, q) == s) back = true;
                }
                ok = back;
            }
            if (!ok) ++fails;
        }
        add(r, "jumps are involutions and reduction lands on the table", fails == 0,
            std::to_string(instances - fails) + "/" + std::to_string(instances) + " forest nodes");
    }
    return r;
}

SuiteReport suite_low_boundary(std::int64_t i_max) {
    SuiteReport r{"low-boundary", {}};
    for (long i = 1; i <= i_max; ++i) {
        std::string d1, d2;
        const bool ok1 = certifies(example_pip_b1(i), i, 1, d1);
        const bool ok2 = certifies(example_pip_b2(i), i, 2, d2);
        add(r, "i=" + std::to_string(i) + ": b=1 and b=2 examples certify", ok1 && ok2, d1 + "; " + d2);
        add(r, "i=" + std::to_string(i) + ": no integral polygon with b in {1, 2}",
            !scott_admissible(i, 1) && !scott_admissible(i, 2));
    }
    return r;
}

std::vector<std::string> suite_names() {
    return {"reduced-table", "b-sweep",   "general-bound", "xyz-triangles", "fibonacci",
            "denominators",  "counterexamples", "reflexive", "properties",   "low-boundary"};
}

std::optional<std::string> canonical_suite(std::string_view name) {
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"thm-5.6", "reduced-table"}, {"lemma-1.2", "b-sweep"},       {"appendix", "general-bound"},
        {"thm-a.1", "general-bound"}, {"thm-6.4", "xyz-triangles"},   {"example-1.3", "fibonacci"},
        {"lemma-7.3", "denominators"}, {"section-3", "counterexamples"}, {"figure-1", "reflexive"},
        {"example-2.8", "low-boundary"},
    };
    for (const auto& s : suite_names()) {
        if (s == name) return s;
    }
    if (auto it = aliases.find(name); it != aliases.end()) return it->second;
    return std::nullopt;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& o) {
    const auto canon = canonical_suite(name);
    if (!canon) throw OutOfRange("unknown suite '" + std::string(name) + "'");
    const std::string& s = *canon;
    if (s == "reduced-table") return suite_reduced_table();
    if (s == "b-sweep") return suite_b_sweep(o.bound.value_or(300));
    if (s == "general-bound") {
        if (o.n) {
            if (*o.n < 2) throw OutOfRange("--n must be >= 2");
            return suite_general_bound({{static_cast<std::size_t>(*o.n), o.bound.value_or(40)}});
        }
        if (o.bound) throw OutOfRange("--bound for general-bound needs --n");
        return suite_general_bound({{2, 50}, {3, 200}, {4, 40}});
    }
    if (s == "xyz-triangles") return suite_xyz_triangles(o.log);
    if (s == "fibonacci") return suite_fibonacci(static_cast<std::size_t>(o.n.value_or(5)));
    if (s == "denominators") return suite_denominators(o.n.value_or(6));
    if (s == "counterexamples") return suite_counterexamples();
    if (s == "reflexive") return suite_reflexive();
    if (s == "properties") return suite_properties(static_cast<std::size_t>(o.n.value_or(100)), o.seed);
    return suite_low_boundary(o.n.value_or(5));
}

}  // namespace pipkit
