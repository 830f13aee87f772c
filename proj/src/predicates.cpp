#include "vispoly/predicates.hpp"

namespace vispoly {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

inline int sign_i128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// All small-int fast paths compute the same exact value as the rational
// path; coordinates above 2^28 fall through to GMP.
inline bool small6(const Point& p, const Point& q, const Point& r, i64 v[6]) {
    auto px = as_small_int(p.x), py = as_small_int(p.y);
    auto qx = as_small_int(q.x), qy = as_small_int(q.y);
    auto rx = as_small_int(r.x), ry = as_small_int(r.y);
    if (!(px && py && qx && qy && rx && ry)) return false;
    v[0] = *px; v[1] = *py; v[2] = *qx; v[3] = *qy; v[4] = *rx; v[5] = *ry;
    return true;
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    i64 v[6];
    if (small6(p, q, r, v)) {
        const i128 cross = i128(v[2] - v[0]) * i128(v[5] - v[1]) -
                           i128(v[3] - v[1]) * i128(v[4] - v[0]);
        return static_cast<Orientation>(sign_i128(cross));
    }
    const Scalar cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return static_cast<Orientation>(sign(cross));
}

int dot_sign(const Point& q, const Point& a, const Point& b) {
    i64 v[6];
    if (small6(q, a, b, v)) {
        const i128 d = i128(v[2] - v[0]) * i128(v[4] - v[0]) +
                       i128(v[3] - v[1]) * i128(v[5] - v[1]);
        return sign_i128(d);
    }
    const Scalar d = (a.x - q.x) * (b.x - q.x) + (a.y - q.y) * (b.y - q.y);
    return sign(d);
}

int compare_distance(const Point& q, const Point& a, const Point& b) {
    i64 v[6];
    if (small6(q, a, b, v)) {
        const i128 da = i128(v[2] - v[0]) * i128(v[2] - v[0]) +
                        i128(v[3] - v[1]) * i128(v[3] - v[1]);
        const i128 db = i128(v[4] - v[0]) * i128(v[4] - v[0]) +
                        i128(v[5] - v[1]) * i128(v[5] - v[1]);
        return da < db ? -1 : (da > db ? 1 : 0);
    }
    const Scalar da = (a.x - q.x) * (a.x - q.x) + (a.y - q.y) * (a.y - q.y);
    const Scalar db = (b.x - q.x) * (b.x - q.x) + (b.y - q.y) * (b.y - q.y);
    return cmp(da, db);
}

namespace {

// Side of e relative to the ray line through q with direction dir:
// +1 left, -1 right, 0 on the line.
int ray_side(const Point& q, const Point& dir, const Point& e) {
    auto dx = as_small_int(dir.x), dy = as_small_int(dir.y);
    auto qx = as_small_int(q.x), qy = as_small_int(q.y);
    auto ex = as_small_int(e.x), ey = as_small_int(e.y);
    if (dx && dy && qx && qy && ex && ey) {
        const i128 c = i128(*dx) * i128(*ey - *qy) - i128(*dy) * i128(*ex - *qx);
        return sign_i128(c);
    }
    const Scalar c = dir.x * (e.y - q.y) - dir.y * (e.x - q.x);
    return sign(c);
}

// Sign of dot(e - q, dir): is e ahead of q along dir.
int ray_ahead(const Point& q, const Point& dir, const Point& e) {
    auto dx = as_small_int(dir.x), dy = as_small_int(dir.y);
    auto qx = as_small_int(q.x), qy = as_small_int(q.y);
    auto ex = as_small_int(e.x), ey = as_small_int(e.y);
    if (dx && dy && qx && qy && ex && ey) {
        const i128 d = i128(*ex - *qx) * i128(*dx) + i128(*ey - *qy) * i128(*dy);
        return sign_i128(d);
    }
    const Scalar d = (e.x - q.x) * dir.x + (e.y - q.y) * dir.y;
    return sign(d);
}

}  // namespace

bool angular_less_from(const Point& q, const Point& ref, const Point& a, const Point& b) {
    if (a == q || b == q) throw std::invalid_argument("angular_less: point equals center");
    // Half 0 covers directions in [ref, ref+pi), half 1 the rest.
    auto half = [&](const Point& e) {
        const int c = ray_side(q, ref, e);
        if (c != 0) return c > 0 ? 0 : 1;
        return ray_ahead(q, ref, e) > 0 ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Orientation o = orientation(q, a, b);
    if (o != Orientation::Collinear) return o == Orientation::LeftTurn;
    return compare_distance(q, a, b) < 0;  // same direction: closer first
}

bool angular_less(const Point& q, const Point& a, const Point& b) {
    return angular_less_from(q, Point(1, 0), a, b);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    return dot_sign(p, a, b) <= 0;
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = static_cast<int>(orientation(a, b, c));
    const int o2 = static_cast<int>(orientation(a, b, d));
    const int o3 = static_cast<int>(orientation(c, d, a));
    const int o4 = static_cast<int>(orientation(c, d, b));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Scalar denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    if (sign(denom) == 0) throw std::invalid_argument("line_intersection: parallel lines");
    const Scalar t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom;
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Point ray_segment_point(const Point& q, const Point& dir, const Point& a, const Point& b) {
    const Scalar denom = (b.x - a.x) * dir.y - (b.y - a.y) * dir.x;
    if (sign(denom) == 0) throw std::invalid_argument("ray_segment_point: parallel");
    const Scalar u = ((q.x - a.x) * dir.y - (q.y - a.y) * dir.x) / denom;
    return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    i64 v[6];
    auto dx = as_small_int(d.x), dy = as_small_int(d.y);
    if (dx && dy && small6(a, b, c, v)) {
        const i128 ax = v[0] - *dx, ay = v[1] - *dy;
        const i128 bx = v[2] - *dx, by = v[3] - *dy;
        const i128 cx = v[4] - *dx, cy = v[5] - *dy;
        const i128 a2 = ax * ax + ay * ay;
        const i128 b2 = bx * bx + by * by;
        const i128 c2 = cx * cx + cy * cy;
        const i128 det = ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) +
                         a2 * (bx * cy - by * cx);
        return sign_i128(det);
    }
    const Scalar ax = a.x - d.x, ay = a.y - d.y;
    const Scalar bx = b.x - d.x, by = b.y - d.y;
    const Scalar cx = c.x - d.x, cy = c.y - d.y;
    const Scalar a2 = ax * ax + ay * ay;
    const Scalar b2 = bx * bx + by * by;
    const Scalar c2 = cx * cx + cy * cy;
    const Scalar det =
        ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
    return sign(det);
}

namespace {

struct RayHit {
    bool at_point = false;  // hit location known exactly (endpoint, q, or collinear end)
    Point point;            // valid when at_point
};

// Classifies how segment s meets the ray (q, dir). Throws if it does not.
RayHit classify_ray_hit(const Point& q, const Point& dir, const Segment& s) {
    const int sa = ray_side(q, dir, s.a);
    const int sb = ray_side(q, dir, s.b);
    if (sa == 0 && sb == 0) {
        // Segment collinear with the ray line.
        const int aa = ray_ahead(q, dir, s.a);
        const int ab = ray_ahead(q, dir, s.b);
        if (aa < 0 && ab < 0) throw std::invalid_argument("segment misses ray");
        if (aa < 0 || ab < 0) return {true, q};  // straddles q
        // Both ahead (or touching q): nearest endpoint.
        return {true, compare_distance(q, s.a, s.b) <= 0 ? s.a : s.b};
    }
    if (sa == 0) {
        if (ray_ahead(q, dir, s.a) < 0) throw std::invalid_argument("segment misses ray");
        return {true, s.a};
    }
    if (sb == 0) {
        if (ray_ahead(q, dir, s.b) < 0) throw std::invalid_argument("segment misses ray");
        return {true, s.b};
    }
    if (sa * sb > 0) throw std::invalid_argument("segment misses ray");
    // Proper straddle of the ray line: the crossing parameter's sign is
    // sign of [f(a)*dot(b) - f(b)*dot(a)] / (f(a) - f(b)).
    int t_sign;
    i64 v[6];
    auto dx = as_small_int(dir.x), dy = as_small_int(dir.y);
    if (dx && dy && small6(q, s.a, s.b, v)) {
        const i128 fa = i128(*dx) * (v[3] - v[1]) - i128(*dy) * (v[2] - v[0]);
        const i128 fb = i128(*dx) * (v[5] - v[1]) - i128(*dy) * (v[4] - v[0]);
        const i128 da = i128(v[2] - v[0]) * *dx + i128(v[3] - v[1]) * *dy;
        const i128 db = i128(v[4] - v[0]) * *dx + i128(v[5] - v[1]) * *dy;
        // fa, fb, da, db stay below 2^60 here, so the products fit in 128 bits.
        t_sign = sign_i128(fa * db - fb * da) * sign_i128(fa - fb);
    } else {
        const Scalar fa = dir.x * (s.a.y - q.y) - dir.y * (s.a.x - q.x);
        const Scalar fb = dir.x * (s.b.y - q.y) - dir.y * (s.b.x - q.x);
        const Scalar da = (s.a.x - q.x) * dir.x + (s.a.y - q.y) * dir.y;
        const Scalar db = (s.b.x - q.x) * dir.x + (s.b.y - q.y) * dir.y;
        const Scalar num = fa * db - fb * da;
        t_sign = sign(num) * sign(fa - fb);
    }
    if (t_sign < 0) throw std::invalid_argument("segment misses ray");
    if (t_sign == 0) return {true, q};
    return {false, Point()};
}

// Distance order of two exactly-known points on the ray.
RayOrder order_points(const Point& q, const Point& dir, const Point& p1, const Point& p2) {
    if (p1 == p2) return RayOrder::Equal;
    const Scalar d1 = (p1.x - q.x) * dir.x + (p1.y - q.y) * dir.y;
    const Scalar d2 = (p2.x - q.x) * dir.x + (p2.y - q.y) * dir.y;
    return cmp(d1, d2) < 0 ? RayOrder::Closer : RayOrder::Farther;
}

// Order of known point p against the interior crossing of s with the ray.
RayOrder order_point_vs_interior(const Point& q, const Point& dir, const Point& p,
                                 const Segment& s) {
    const Orientation g = orientation(s.a, s.b, p);
    if (g == Orientation::Collinear) return RayOrder::Equal;  // p is s's crossing
    const Orientation gq = orientation(s.a, s.b, q);
    // q on line(s) with an interior hit would have classified as a hit at q.
    return g == gq ? RayOrder::Closer : RayOrder::Farther;
}

}  // namespace

RayOrder compare_along_ray(const Point& q, const Point& dir, const Segment& s1,
                           const Segment& s2) {
    if (sign(dir.x) == 0 && sign(dir.y) == 0)
        throw std::invalid_argument("compare_along_ray: zero direction");
    const RayHit h1 = classify_ray_hit(q, dir, s1);
    const RayHit h2 = classify_ray_hit(q, dir, s2);

    if (h1.at_point && h2.at_point) return order_points(q, dir, h1.point, h2.point);
    if (h1.at_point) return order_point_vs_interior(q, dir, h1.point, s2);
    if (h2.at_point) {
        switch (order_point_vs_interior(q, dir, h2.point, s1)) {
            case RayOrder::Closer: return RayOrder::Farther;
            case RayOrder::Farther: return RayOrder::Closer;
            default: return RayOrder::Equal;
        }
    }

    // Both hits interior to their segments: the five orientation test
    // scheme. First try the side of s2's crossing relative to line(s1).
    const int A = static_cast<int>(orientation(s1.a, s1.b, s2.a));
    const int B = static_cast<int>(orientation(s1.a, s1.b, s2.b));
    const int Q = static_cast<int>(orientation(s1.a, s1.b, q));
    if (A == 0 && B == 0) return RayOrder::Equal;  // same supporting line
    if (A == 0 || B == 0 || A == B) {
        const int side2 = A == 0 ? B : A;
        return side2 == Q ? RayOrder::Farther : RayOrder::Closer;
    }
    // s2 straddles line(s1); fall back to s1 against line(s2).
    const int A2 = static_cast<int>(orientation(s2.a, s2.b, s1.a));
    const int B2 = static_cast<int>(orientation(s2.a, s2.b, s1.b));
    const int Q2 = static_cast<int>(orientation(s2.a, s2.b, q));
    if (A2 != 0 && B2 != 0 && A2 != B2)
        throw std::invalid_argument("compare_along_ray: segments cross properly");
    const int side1 = A2 == 0 ? B2 : A2;
    return side1 == Q2 ? RayOrder::Closer : RayOrder::Farther;
}

}  // namespace vispoly
