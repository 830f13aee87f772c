#include "vispoly/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vispoly {

namespace {

int ray_line_side(const Point& q, const Point& dir, const Point& e) {
    const Scalar c = dir.x * (e.y - q.y) - dir.y * (e.x - q.x);
    return sign(c);
}

Scalar ray_param(const Point& q, const Point& dir, const Point& e) {
    // Parameter of the projection of e onto the ray line; exact only for
    // points on the line, which is the only way it is used.
    const Scalar len2 = dir.x * dir.x + dir.y * dir.y;
    return ((e.x - q.x) * dir.x + (e.y - q.y) * dir.y) / len2;
}

}  // namespace

FirstHit first_hit(const PolygonWithHoles& p, const Point& q, const Point& dir) {
    if (sign(dir.x) == 0 && sign(dir.y) == 0)
        throw std::invalid_argument("first_hit: zero direction");
    if (point_in_polygon(p, q) == PointLocation::Exterior)
        throw std::invalid_argument("first_hit: exterior query point");

    const auto edges = boundary_edges(p);

    // Contact parameters of the ray with the boundary, with the smallest
    // touching edge id per parameter.
    std::map<Scalar, int> contacts;
    auto add_contact = [&](const Scalar& t, int edge_id) {
        if (sign(t) < 0) return;
        auto [it, inserted] = contacts.emplace(t, edge_id);
        if (!inserted) it->second = std::min(it->second, edge_id);
    };

    for (const auto& e : edges) {
        const int sa = ray_line_side(q, dir, e.a);
        const int sb = ray_line_side(q, dir, e.b);
        if (sa == 0 && sb == 0) {
            add_contact(ray_param(q, dir, e.a), e.id);
            add_contact(ray_param(q, dir, e.b), e.id);
        } else if (sa == 0) {
            add_contact(ray_param(q, dir, e.a), e.id);
        } else if (sb == 0) {
            add_contact(ray_param(q, dir, e.b), e.id);
        } else if (sa != sb) {
            const Scalar denom = dir.x * (e.b.y - e.a.y) - dir.y * (e.b.x - e.a.x);
            const Scalar t =
                ((e.a.x - q.x) * (e.b.y - e.a.y) - (e.a.y - q.y) * (e.b.x - e.a.x)) / denom;
            add_contact(t, e.id);
        }
    }
    contacts.emplace(Scalar(0), -1);

    Scalar prev;
    int prev_edge = -1;
    bool have_prev = false;
    for (const auto& [t, edge_id] : contacts) {
        if (have_prev) {
            const Scalar mid = (prev + t) / 2;
            const Point pm{q.x + mid * dir.x, q.y + mid * dir.y};
            if (point_in_polygon(p, pm) == PointLocation::Exterior) {
                if (prev_edge < 0)
                    throw std::invalid_argument("first_hit: ray leaves the polygon at q");
                return {Point{q.x + prev * dir.x, q.y + prev * dir.y}, prev_edge};
            }
        }
        prev = t;
        prev_edge = edge_id < 0 ? prev_edge : edge_id;
        if (edge_id < 0 && !have_prev) prev_edge = -1;
        have_prev = true;
    }
    // Past the last contact the ray must leave the polygon.
    {
        const Scalar mid = prev + 1;
        const Point pm{q.x + mid * dir.x, q.y + mid * dir.y};
        if (point_in_polygon(p, pm) != PointLocation::Exterior)
            throw std::logic_error("first_hit: unbounded visibility");
    }
    if (prev_edge < 0) throw std::logic_error("first_hit: no blocking edge found");
    return {Point{q.x + prev * dir.x, q.y + prev * dir.y}, prev_edge};
}

namespace {

struct GapInfo {
    int edge_id = -1;          // constant hit edge across the gap
    bool blocked_at_q = false; // gap looks out of the polygon from boundary q
};

}  // namespace

VisibilityPolygon visibility_bruteforce(const PolygonWithHoles& p, const Point& q,
                                        AntennaMode mode) {
    if (point_in_polygon(p, q) == PointLocation::Exterior)
        throw std::invalid_argument("visibility_bruteforce: exterior query point");

    const auto edges = boundary_edges(p);

    // One critical direction per vertex direction, deduplicated exactly.
    std::vector<Point> dirs;
    for (const auto& e : edges) {
        const Point v = e.a;  // every vertex appears as some edge source
        if (v == q) continue;
        dirs.push_back(v - q);
    }
    const Point origin(0, 0);
    std::sort(dirs.begin(), dirs.end(),
              [&](const Point& a, const Point& b) { return angular_less(origin, a, b); });
    std::vector<Point> crit;
    for (const auto& d : dirs) {
        if (!crit.empty() && orientation(origin, crit.back(), d) == Orientation::Collinear &&
            dot_sign(origin, crit.back(), d) > 0)
            continue;
        crit.push_back(d);
    }
    const std::size_t m = crit.size();
    if (m < 2) throw std::logic_error("visibility_bruteforce: degenerate direction set");

    // First hits at the criticals and at one interior sample per gap.
    std::vector<FirstHit> crit_hit(m);
    std::vector<GapInfo> gap(m);
    for (std::size_t k = 0; k < m; ++k) crit_hit[k] = first_hit(p, q, crit[k]);
    for (std::size_t k = 0; k < m; ++k) {
        const Point& d1 = crit[k];
        const Point& d2 = crit[(k + 1) % m];
        Point sample;
        const Orientation o = orientation(origin, d1, d2);
        if (o == Orientation::LeftTurn)
            sample = d1 + d2;
        else if (o == Orientation::RightTurn)
            sample = Point(-(d1.x + d2.x), -(d1.y + d2.y));
        else
            sample = Point(-d1.y, d1.x);  // opposite directions: perpendicular
        const FirstHit h = first_hit(p, q, sample);
        gap[k].edge_id = h.edge_id;
        gap[k].blocked_at_q = h.point == q;
    }

    auto gap_point_at = [&](std::size_t g, const Point& d) -> Point {
        if (gap[g].blocked_at_q) return q;
        const BoundaryEdge& e = edges[gap[g].edge_id];
        return ray_segment_point(q, d, e.a, e.b);
    };

    VisibilityPolygon out;
    out.source_query = q;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t gprev = (k + m - 1) % m;
        const Point before = gap_point_at(gprev, crit[k]);
        const Point after = gap_point_at(k, crit[k]);
        const Point& c = crit_hit[k].point;
        if (compare_distance(q, c, before) < 0 || compare_distance(q, c, after) < 0)
            throw std::logic_error("visibility_bruteforce: blocking point closer than gap edge");
        out.vertices.push_back(before);
        if (compare_distance(q, c, before) > 0 && compare_distance(q, c, after) > 0) {
            out.vertices.push_back(c);
            out.has_antennae = true;
        }
        out.vertices.push_back(after);
    }
    return canonicalize(out, mode);
}

}  // namespace vispoly
