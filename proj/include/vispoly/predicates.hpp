#pragma once

#include "vispoly/rational.hpp"

#include <stdexcept>
#include <utility>

namespace vispoly {

struct Point {
    Scalar x;
    Scalar y;

    Point() = default;
    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

// Lexicographic x-then-y order, used for canonical rotations.
inline bool lex_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return a.y < b.y;
}

struct Segment {
    Point a;
    Point b;
};

enum class Orientation { RightTurn = -1, Collinear = 0, LeftTurn = 1 };

// Sign of the exact cross product (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

inline Orientation opposite(Orientation o) {
    return static_cast<Orientation>(-static_cast<int>(o));
}

// Sign of dot(a - q, b - q); 0 when perpendicular or degenerate.
int dot_sign(const Point& q, const Point& a, const Point& b);

// True iff a strictly precedes b in the counterclockwise cyclic order of
// directions around q, starting at the reference direction ref (a vector,
// not a point). Collinear same-side ties break closer-to-q first.
// Requires a != q and b != q and ref != 0.
bool angular_less_from(const Point& q, const Point& ref, const Point& a, const Point& b);

// Same with the reference fixed at the positive x direction.
bool angular_less(const Point& q, const Point& a, const Point& b);

enum class RayOrder { Closer = -1, Equal = 0, Farther = 1 };

// Orders the intersections of s1 and s2 with the ray from q in direction
// dir, by distance from q, without constructing the intersection points:
// segment sides against each other and against the ray decide the order
// with a handful of orientation tests. Throws std::invalid_argument if a
// segment does not meet the ray. Closer means s1 hits first.
RayOrder compare_along_ray(const Point& q, const Point& dir, const Segment& s1, const Segment& s2);

// Exact squared-distance comparison |a-q|^2 vs |b-q|^2.
int compare_distance(const Point& q, const Point& a, const Point& b);

// True iff p lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

// True iff the closed segments properly cross (intersection point interior
// to both).
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

// Intersection of the lines through (a,b) and (c,d). Requires the lines to
// be non-parallel.
Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

// Point on segment [a,b] hit by the ray from q through direction point d
// (d is a direction vector relative to q). Requires the supporting line of
// [a,b] to cross the ray's line.
Point ray_segment_point(const Point& q, const Point& dir, const Point& a, const Point& b);

// Sign of the incircle determinant for CCW triangle (a,b,c) and query d:
// positive iff d lies strictly inside the circumcircle.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace vispoly
