#include "vispoly/wkt.hpp"

#include <cctype>
#include <sstream>

namespace vispoly {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        std::size_t k = 0;
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (k < line.size() && line[k] == '#') continue;
        out += line;
        out += '\n';
    }
    return out;
}

Scalar parse_coord(Cursor& c) {
    c.skip_ws();
    const std::size_t start = c.i;
    while (c.i < c.s.size()) {
        const char ch = c.s[c.i];
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' ||
            ch == '.' || ch == '/')
            ++c.i;
        else
            break;
    }
    if (c.i == start) throw WktError(WktErrorKind::Syntax, "expected a coordinate");
    const std::string tok = c.s.substr(start, c.i - start);
    auto v = parse_scalar(tok);
    if (!v) throw WktError(WktErrorKind::Syntax, "bad coordinate '" + tok + "'");
    return *v;
}

std::vector<Point> parse_ring(Cursor& c) {
    if (!c.eat('(')) throw WktError(WktErrorKind::Syntax, "expected '(' to open a ring");
    std::vector<Point> ring;
    while (true) {
        Scalar x = parse_coord(c);
        Scalar y = parse_coord(c);
        ring.emplace_back(std::move(x), std::move(y));
        if (c.eat(',')) continue;
        if (c.eat(')')) break;
        throw WktError(WktErrorKind::Syntax, "expected ',' or ')' in ring");
    }
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3) throw WktError(WktErrorKind::TooFewVertices, "ring has fewer than 3 vertices");
    return ring;
}

}  // namespace

PolygonWithHoles parse_wkt(const std::string& text, std::vector<std::string>* warnings) {
    const std::string body = strip_comments(text);
    Cursor c{body};
    c.skip_ws();
    static const std::string kw = "POLYGON";
    if (body.compare(c.i, kw.size(), kw) != 0)
        throw WktError(WktErrorKind::Syntax, "expected POLYGON");
    c.i += kw.size();
    if (!c.eat('(')) throw WktError(WktErrorKind::Syntax, "expected '(' after POLYGON");

    PolygonWithHoles p;
    p.outer.vertices = parse_ring(c);
    while (c.eat(',')) {
        SimplePolygon hole;
        hole.vertices = parse_ring(c);
        p.holes.push_back(std::move(hole));
    }
    if (!c.eat(')')) throw WktError(WktErrorKind::Syntax, "expected ')' to close POLYGON");
    if (!c.done()) throw WktError(WktErrorKind::Syntax, "trailing characters after POLYGON");

    const int flipped = normalize_orientation(p);
    if (flipped > 0 && warnings)
        warnings->push_back(std::to_string(flipped) + " ring(s) had wrong orientation; flipped");

    const ValidationReport rep = validate(p);
    if (!rep.valid) {
        std::string msg = "invalid polygon:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw WktError(WktErrorKind::Validation, msg);
    }
    return p;
}

std::string emit_wkt_ring(const std::vector<Point>& ring) {
    std::string out = "(";
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (i) out += ", ";
        out += format_scalar(ring[i].x);
        out += ' ';
        out += format_scalar(ring[i].y);
    }
    out += ')';
    return out;
}

std::string emit_wkt(const PolygonWithHoles& p) {
    std::string out = "POLYGON(";
    out += emit_wkt_ring(p.outer.vertices);
    for (const auto& h : p.holes) {
        out += ", ";
        out += emit_wkt_ring(h.vertices);
    }
    out += ')';
    return out;
}

}  // namespace vispoly
