#include "pipkit/json_io.hpp"

#include "pipkit/errors.hpp"

namespace pipkit {

Json to_json(const BigInt& v) {
    if (auto small = to_int64(v)) return *small;
    return v.get_str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0) {
            throw ParseError("not an integer: " + j.get<std::string>());
        }
        return v;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("coordinate must be a \"p/q\" string or an integer, got " + j.dump());
}

Json rational_text(const Rational& q) { return q.to_string(); }

}  // namespace

Json to_json(const RationalPolygon& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back({rational_text(v.x), rational_text(v.y)});
    return {{"vertices", std::move(verts)}};
}

RationalPolygon polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw ParseError("polygon JSON needs a \"vertices\" array");
    }
    std::vector<Vec2> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) throw ParseError("vertex must be a pair: " + v.dump());
        pts.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
    }
    return RationalPolygon::hull(pts);
}

RationalPolygon parse_polygon(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return polygon_from_json(j);
}

Json to_json(const PipCertificate& c, const RationalPolygon& p) {
    Json coeffs = Json::object();
    const auto& residues = c.ehrhart.residues();
    for (std::size_t r = 0; r < residues.size(); ++r) {
        coeffs[std::to_string(r)] = {rational_text(residues[r][0]), rational_text(residues[r][1]),
                                     rational_text(residues[r][2])};
    }
    Json out = {
        {"is_pip", c.is_pip},
        {"period", to_json(c.ehrhart.period())},
        {"coeffs", std::move(coeffs)},
        {"i", to_json(c.interior)},
        {"b", to_json(c.boundary)},
        {"area", rational_text(p.area())},
        {"denominator", to_json(p.denominator())},
    };
    if (c.witness_residues) {
        out["witness_residues"] = {c.witness_residues->first, c.witness_residues->second};
    }
    return out;
}

Json to_json(const CountReport& r) {
    return {{"t", to_json(r.t)},
            {"total", to_json(r.total)},
            {"boundary", to_json(r.boundary)},
            {"interior", to_json(r.interior)}};
}

Json to_json(const VietaSolution& s) {
    return Json::array({to_json(s.x()), to_json(s.y()), to_json(s.z()), to_json(s.b())});
}

Json to_json(const std::vector<VietaSolution>& list) {
    Json out = Json::array();
    for (const auto& s : list) out.push_back(to_json(s));
    return out;
}

Json to_json(const JumpForest& f) {
    Json roots = Json::array();
    for (const auto& r : f.roots) roots.push_back(r.key());
    Json adj = Json::object();
    for (const auto& [node, nbrs] : f.adjacency) {
        Json list = Json::array();
        for (const auto& n : nbrs) list.push_back(n.key());
        adj[node.key()] = std::move(list);
    }
    return {{"roots", std::move(roots)}, {"adjacency", std::move(adj)}};
}

Json to_json(const std::vector<FamilyState>& fam) {
    Json out = Json::array();
    for (const auto& st : fam) {
        out.push_back({{"j", st.j}, {"solution", to_json(st.solution)}});
    }
    return out;
}

}  // namespace pipkit
