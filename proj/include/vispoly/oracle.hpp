#pragma once

#include "vispoly/polygon.hpp"

namespace vispoly {

struct FirstHit {
    Point point;
    int edge_id;
};

// Closest blocking contact of the ray from q in direction dir with the
// polygon boundary, found by exact intersection of all n edges plus
// midpoint classification between contacts. Grazing vertex contacts do not
// block. Throws std::invalid_argument for exterior q or zero dir and
// std::logic_error if the ray escapes (impossible for a valid instance).
FirstHit first_hit(const PolygonWithHoles& p, const Point& q, const Point& dir);

// Ground-truth visibility polygon: shoots first_hit at every critical
// direction (one per vertex) and at one strictly interior sample direction
// per angular gap, asserts the hit edge is constant across each gap, and
// assembles V(q) with window segments and antenna spikes at the criticals.
// Slow by design; never used by the algorithms it checks.
VisibilityPolygon visibility_bruteforce(const PolygonWithHoles& p, const Point& q,
                                        AntennaMode mode);

}  // namespace vispoly
