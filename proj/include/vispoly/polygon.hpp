#pragma once

#include "vispoly/predicates.hpp"

#include <string>
#include <vector>

namespace vispoly {

struct SimplePolygon {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    const Point& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
};

// Twice the signed area (positive for counterclockwise rings).
Scalar signed_area_twice(const std::vector<Point>& ring);

struct PolygonWithHoles {
    SimplePolygon outer;                // stored counterclockwise
    std::vector<SimplePolygon> holes;   // stored clockwise

    std::size_t total_vertices() const {
        std::size_t n = outer.size();
        for (const auto& h : holes) n += h.size();
        return n;
    }
    std::size_t hole_count() const { return holes.size(); }
};

enum class AntennaMode { IncludeAntennae, ExcludeAntennae };

struct VisibilityPolygon {
    std::vector<Point> vertices;
    bool has_antennae = false;
    Point source_query;
};

enum class PointLocation { Interior, OnBoundary, Exterior };

struct BoundaryEdge {
    Point a;
    Point b;
    int ring;   // 0 = outer, 1.. = holes
    int index;  // edge position within its ring
    int id;     // global id
};

std::vector<BoundaryEdge> boundary_edges(const PolygonWithHoles& p);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks every PolygonWithHoles invariant and reports all violations with
// ring/edge indices. Never throws.
ValidationReport validate(const PolygonWithHoles& p);

// Flips rings whose stored orientation is wrong (outer to CCW, holes to CW).
// Returns the number of rings flipped.
int normalize_orientation(PolygonWithHoles& p);

PointLocation point_in_polygon(const PolygonWithHoles& p, const Point& x);

// Containment test against a bare vertex ring (orientation-insensitive).
PointLocation point_in_ring(const std::vector<Point>& ring, const Point& x);

// Definitional visibility: true iff the whole segment qt lies in the closed
// polygon. Contact points with the boundary are collected exactly and every
// open subsegment between them is classified at its rational midpoint.
// Throws std::invalid_argument when q or t is exterior.
bool is_visible(const PolygonWithHoles& p, const Point& q, const Point& t);

// Canonical form: consecutive duplicates removed, pass-through collinear
// vertices removed (spike tips kept), spikes deleted entirely under
// ExcludeAntennae, orientation forced CCW, and the start rotated to the
// lexicographically smallest rotation. Outputs of different algorithms for
// the same query canonicalize to identical sequences.
VisibilityPolygon canonicalize(const VisibilityPolygon& v, AntennaMode mode);

}  // namespace vispoly
