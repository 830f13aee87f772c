#include "vispoly/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vispoly {

Scalar signed_area_twice(const std::vector<Point>& ring) {
    Scalar s = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

std::vector<BoundaryEdge> boundary_edges(const PolygonWithHoles& p) {
    std::vector<BoundaryEdge> edges;
    edges.reserve(p.total_vertices());
    int id = 0;
    auto add_ring = [&](const std::vector<Point>& ring, int ring_idx) {
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i)
            edges.push_back({ring[i], ring[(i + 1) % n], ring_idx, static_cast<int>(i), id++});
    };
    add_ring(p.outer.vertices, 0);
    for (std::size_t h = 0; h < p.holes.size(); ++h)
        add_ring(p.holes[h].vertices, static_cast<int>(h) + 1);
    return edges;
}

namespace {

// Any contact between closed segments (proper cross, touch, overlap).
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_cross_properly(a, b, c, d)) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
           on_segment(b, c, d);
}

// Self-intersection scan for one ring: x-interval sweep over edges, exact
// tests only on pairs whose x-ranges overlap.
void check_ring_simple(const std::vector<Point>& ring, int ring_idx, ValidationReport& rep) {
    const std::size_t n = ring.size();
    if (n < 3) return;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        const Point& c = ring[(i + 2) % n];
        if (a == b) {
            rep.valid = false;
            rep.violations.push_back("ring " + std::to_string(ring_idx) +
                                     ": repeated consecutive vertex at index " +
                                     std::to_string(i));
        }
        if (orientation(a, b, c) == Orientation::Collinear && b != a && b != c &&
            dot_sign(b, a, c) > 0) {
            rep.valid = false;
            rep.violations.push_back("ring " + std::to_string(ring_idx) +
                                     ": boundary folds back at vertex " +
                                     std::to_string((i + 1) % n));
        }
    }

    struct Ev {
        Scalar xmin, xmax;
        std::size_t edge;
    };
    std::vector<Ev> evs;
    evs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        evs.push_back({std::min(a.x, b.x), std::max(a.x, b.x), i});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& l, const Ev& r) { return l.xmin < r.xmin; });
    std::multimap<Scalar, std::size_t> active;  // xmax -> position in evs
    for (std::size_t k = 0; k < evs.size(); ++k) {
        while (!active.empty() && active.begin()->first < evs[k].xmin)
            active.erase(active.begin());
        for (const auto& [xmax, j] : active) {
            const std::size_t e1 = evs[k].edge, e2 = evs[j].edge;
            const std::size_t lo = std::min(e1, e2), hi = std::max(e1, e2);
            if (hi == lo + 1 || (lo == 0 && hi == n - 1)) continue;  // adjacent
            const Point& a = ring[e1];
            const Point& b = ring[(e1 + 1) % n];
            const Point& c = ring[e2];
            const Point& d = ring[(e2 + 1) % n];
            if (segments_touch(a, b, c, d)) {
                rep.valid = false;
                rep.violations.push_back("ring " + std::to_string(ring_idx) + ": edges " +
                                         std::to_string(lo) + " and " + std::to_string(hi) +
                                         " intersect");
            }
        }
        active.emplace(evs[k].xmax, k);
    }
}

bool rings_touch(const std::vector<Point>& r1, const std::vector<Point>& r2) {
    const std::size_t n1 = r1.size(), n2 = r2.size();
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            if (segments_touch(r1[i], r1[(i + 1) % n1], r2[j], r2[(j + 1) % n2])) return true;
    return false;
}

}  // namespace

ValidationReport validate(const PolygonWithHoles& p) {
    ValidationReport rep;
    auto ring_of = [&](int idx) -> const std::vector<Point>& {
        return idx == 0 ? p.outer.vertices : p.holes[idx - 1].vertices;
    };
    const int rings = 1 + static_cast<int>(p.holes.size());
    for (int r = 0; r < rings; ++r) {
        if (ring_of(r).size() < 3) {
            rep.valid = false;
            rep.violations.push_back("ring " + std::to_string(r) + ": fewer than 3 vertices");
            continue;
        }
        check_ring_simple(ring_of(r), r, rep);
        const int area_sign = sign(signed_area_twice(ring_of(r)));
        if (area_sign == 0) {
            rep.valid = false;
            rep.violations.push_back("ring " + std::to_string(r) + ": zero area");
        } else if (r == 0 && area_sign < 0) {
            rep.valid = false;
            rep.violations.push_back("ring 0: outer boundary is clockwise");
        } else if (r > 0 && area_sign > 0) {
            rep.valid = false;
            rep.violations.push_back("ring " + std::to_string(r) +
                                     ": hole is counterclockwise");
        }
    }
    if (!rep.valid) return rep;

    for (std::size_t h = 0; h < p.holes.size(); ++h) {
        const auto& hole = p.holes[h].vertices;
        bool inside = true;
        for (std::size_t i = 0; i < hole.size(); ++i) {
            if (point_in_ring(p.outer.vertices, hole[i]) != PointLocation::Interior) {
                inside = false;
                break;
            }
        }
        if (!inside || rings_touch(hole, p.outer.vertices)) {
            rep.valid = false;
            rep.violations.push_back("hole " + std::to_string(h) +
                                     " is not strictly inside the outer boundary");
        }
        for (std::size_t g = h + 1; g < p.holes.size(); ++g) {
            const auto& other = p.holes[g].vertices;
            if (rings_touch(hole, other) ||
                point_in_ring(other, hole[0]) == PointLocation::Interior ||
                point_in_ring(hole, other[0]) == PointLocation::Interior) {
                rep.valid = false;
                rep.violations.push_back("holes " + std::to_string(h) + " and " +
                                         std::to_string(g) + " overlap");
            }
        }
    }
    return rep;
}

int normalize_orientation(PolygonWithHoles& p) {
    int flipped = 0;
    if (sign(signed_area_twice(p.outer.vertices)) < 0) {
        std::reverse(p.outer.vertices.begin() + 1, p.outer.vertices.end());
        ++flipped;
    }
    for (auto& h : p.holes) {
        if (sign(signed_area_twice(h.vertices)) > 0) {
            std::reverse(h.vertices.begin() + 1, h.vertices.end());
            ++flipped;
        }
    }
    return flipped;
}

PointLocation point_in_ring(const std::vector<Point>& ring, const Point& x) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(x, ring[i], ring[(i + 1) % n])) return PointLocation::OnBoundary;
    // Crossing parity of the horizontal ray towards +x.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        const int ya = cmp(a.y, x.y);
        const int yb = cmp(b.y, x.y);
        if (ya <= 0 && yb > 0) {
            if (orientation(a, b, x) == Orientation::RightTurn) inside = !inside;
        } else if (yb <= 0 && ya > 0) {
            if (orientation(a, b, x) == Orientation::LeftTurn) inside = !inside;
        }
    }
    return inside ? PointLocation::Interior : PointLocation::Exterior;
}

PointLocation point_in_polygon(const PolygonWithHoles& p, const Point& x) {
    const PointLocation outer = point_in_ring(p.outer.vertices, x);
    if (outer != PointLocation::Interior) return outer;
    for (const auto& h : p.holes) {
        const PointLocation in_hole = point_in_ring(h.vertices, x);
        if (in_hole == PointLocation::OnBoundary) return PointLocation::OnBoundary;
        if (in_hole == PointLocation::Interior) return PointLocation::Exterior;
    }
    return PointLocation::Interior;
}

bool is_visible(const PolygonWithHoles& p, const Point& q, const Point& t) {
    if (point_in_polygon(p, q) == PointLocation::Exterior)
        throw std::invalid_argument("is_visible: q is exterior");
    if (point_in_polygon(p, t) == PointLocation::Exterior)
        throw std::invalid_argument("is_visible: t is exterior");
    if (q == t) return true;

    const Point d = t - q;
    const Scalar len2 = d.x * d.x + d.y * d.y;
    std::set<Scalar> params{Scalar(0), Scalar(1)};
    auto param_of = [&](const Point& c) { return ((c.x - q.x) * d.x + (c.y - q.y) * d.y) / len2; };

    for (const auto& e : boundary_edges(p)) {
        if (segments_cross_properly(q, t, e.a, e.b)) return false;
        if (on_segment(e.a, q, t)) params.insert(param_of(e.a));
        if (on_segment(e.b, q, t)) params.insert(param_of(e.b));
        if (on_segment(q, e.a, e.b)) params.insert(Scalar(0));
        if (on_segment(t, e.a, e.b)) params.insert(Scalar(1));
    }

    Scalar prev;
    bool first = true;
    for (const Scalar& s : params) {
        if (!first) {
            const Scalar mid = (prev + s) / 2;
            const Point pm{q.x + mid * d.x, q.y + mid * d.y};
            if (point_in_polygon(p, pm) == PointLocation::Exterior) return false;
        }
        prev = s;
        first = false;
    }
    return true;
}

namespace {

void remove_consecutive_duplicates(std::vector<Point>& v) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (const auto& p : v)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    v = std::move(out);
}

// Strips vertices the boundary passes straight through; reversal points
// (spike tips) stay.
bool remove_pass_through(std::vector<Point>& v) {
    const std::size_t n = v.size();
    if (n < 3) return false;
    std::vector<Point> out;
    out.reserve(n);
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = v[(i + n - 1) % n];
        const Point& cur = v[i];
        const Point& next = v[(i + 1) % n];
        if (orientation(prev, cur, next) == Orientation::Collinear &&
            dot_sign(cur, prev, next) < 0) {
            changed = true;
            continue;
        }
        out.push_back(cur);
    }
    v = std::move(out);
    return changed;
}

bool remove_spikes(std::vector<Point>& v) {
    bool changed = false;
    bool again = true;
    while (again) {
        again = false;
        const std::size_t n = v.size();
        if (n < 3) break;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n;
            const std::size_t next = (i + 1) % n;
            if (v[prev] == v[next]) {
                // Drop the tip and one copy of the base point.
                std::vector<Point> out;
                out.reserve(n - 2);
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i && k != next) out.push_back(v[k]);
                v = std::move(out);
                remove_consecutive_duplicates(v);
                changed = again = true;
                break;
            }
        }
    }
    return changed;
}

std::size_t best_rotation(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const int c = cmp(v[i].x, v[best].x);
        if (c < 0 || (c == 0 && v[i].y < v[best].y)) best = i;
    }
    // Several occurrences of the minimum vertex: pick the rotation that is
    // smallest as a full sequence.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] == v[best]) candidates.push_back(i);
    if (candidates.size() == 1) return best;
    auto rot_less = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < n; ++k) {
            const Point& pa = v[(a + k) % n];
            const Point& pb = v[(b + k) % n];
            if (pa == pb) continue;
            return lex_less(pa, pb);
        }
        return false;
    };
    std::size_t win = candidates[0];
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (rot_less(candidates[i], win)) win = candidates[i];
    return win;
}

bool has_reversal(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (v[(i + n - 1) % n] == v[(i + 1) % n]) return true;
    return false;
}

}  // namespace

VisibilityPolygon canonicalize(const VisibilityPolygon& v, AntennaMode mode) {
    if (v.vertices.empty()) throw std::invalid_argument("canonicalize: empty polygon");
    std::vector<Point> seq = v.vertices;
    remove_consecutive_duplicates(seq);

    bool changed = true;
    while (changed) {
        changed = remove_pass_through(seq);
        if (mode == AntennaMode::ExcludeAntennae) changed = remove_spikes(seq) || changed;
    }

    if (seq.size() >= 3 && sign(signed_area_twice(seq)) < 0)
        std::reverse(seq.begin(), seq.end());

    if (!seq.empty()) {
        const std::size_t r = best_rotation(seq);
        std::rotate(seq.begin(), seq.begin() + r, seq.end());
    }

    VisibilityPolygon out;
    out.vertices = std::move(seq);
    out.has_antennae = mode == AntennaMode::IncludeAntennae && has_reversal(out.vertices);
    out.source_query = v.source_query;
    return out;
}

}  // namespace vispoly
