#include "pipkit/svg.hpp"

#include <algorithm>
#include <sstream>

#include "pipkit/errors.hpp"

namespace pipkit {

namespace {

// Rounds q to three decimals and prints it without floating point.
std::string decimal(const Rational& q) {
    const BigInt scaled = floor_div(BigInt(q.num() * 2000 + q.den()), BigInt(2 * q.den()));
    const bool neg = scaled < 0;
    const BigInt mag = abs(scaled);
    const BigInt whole = mag / 1000;
    const unsigned long frac = BigInt(mag % 1000).get_ui();
    std::string out = (neg ? "-" : "") + whole.get_str();
    if (frac != 0) {
        std::string digits = std::to_string(frac);
        digits.insert(0, 3 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

enum class Where { Outside, Boundary, Interior };

Where locate(const std::vector<Edge>& edges, const Vec2& a) {
    bool on_edge = false;
    for (const auto& e : edges) {
        const Rational v = dot(e.normal, a);
        if (v > e.offset) return Where::Outside;
        if (v == e.offset) on_edge = true;
    }
    return on_edge ? Where::Boundary : Where::Interior;
}

}  // namespace

std::string render_svg(const RationalPolygon& p, const SvgStyle& style) {
    const auto& verts = p.vertices();
    Rational xmin = verts[0].x, xmax = verts[0].x, ymin = verts[0].y, ymax = verts[0].y;
    for (const auto& v : verts) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    const BigInt gx0 = rat_floor(xmin) - style.margin;
    const BigInt gx1 = rat_ceil(xmax) + style.margin;
    const BigInt gy0 = rat_floor(ymin) - style.margin;
    const BigInt gy1 = rat_ceil(ymax) + style.margin;
    if ((gx1 - gx0 + 1) * (gy1 - gy0 + 1) > 250000) {
        throw OutOfRange("polygon too large to draw as a lattice figure");
    }
    const Rational unit(style.unit);

    // SVG y grows downwards.
    auto px = [&](const Rational& x) { return decimal((x - Rational(gx0)) * unit); };
    auto py = [&](const Rational& y) { return decimal((Rational(gy1) - y) * unit); };

    const BigInt width = (gx1 - gx0) * style.unit;
    const BigInt height = (gy1 - gy0) * style.unit;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <polygon points=\"";
    for (std::size_t k = 0; k < verts.size(); ++k) {
        os << (k ? " " : "") << px(verts[k].x) << ',' << py(verts[k].y);
    }
    os << "\" fill=\"#c8d8f0\" stroke=\"#1f3b73\" stroke-width=\"2\"/>\n";

    const auto edges = p.edges();
    os << "  <g>\n";
    for (BigInt y = gy1; y >= gy0; --y) {
        for (BigInt x = gx0; x <= gx1; ++x) {
            const Vec2 a{Rational(x), Rational(y)};
            const char* fill = "#999999";
            const char* r = "2";
            switch (locate(edges, a)) {
                case Where::Outside: break;
                case Where::Boundary: fill = "#d62728"; r = "5"; break;
                case Where::Interior: fill = "#000000"; r = "4"; break;
            }
            os << "    <circle cx=\"" << px(a.x) << "\" cy=\"" << py(a.y) << "\" r=\"" << r
               << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

}  // namespace pipkit
