#pragma once
// Exact planar primitives over rational coordinates: orientation tests,
// segment intersection, point-in-polygon, and rotation numbers of closed
// polylines. Everything is integer-sign arithmetic on cpp_rational, so
// geometric predicates never see rounding.

#include "error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace vartop {

using Rat = boost::multiprecision::cpp_rational;

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

using Polyline = std::vector<Point>;

inline int sgn(const Rat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

// sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear
inline int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, p - b) <= 0;
}

// proper or improper intersection of closed segments [a1,a2] and [b1,b2]
inline bool segments_meet(const Point& a1, const Point& a2, const Point& b1,
                          const Point& b2) {
    int o1 = orient(a1, a2, b1), o2 = orient(a1, a2, b2);
    int o3 = orient(b1, b2, a1), o4 = orient(b1, b2, a2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(b1, a1, a2)) return true;
    if (o2 == 0 && on_segment(b2, a1, a2)) return true;
    if (o3 == 0 && on_segment(a1, b1, b2)) return true;
    if (o4 == 0 && on_segment(a2, b1, b2)) return true;
    return false;
}

// meeting at one shared endpoint of both segments does not count
inline bool segments_cross_except_endpoint(const Point& a1, const Point& a2,
                                           const Point& b1, const Point& b2) {
    if (!segments_meet(a1, a2, b1, b2)) return false;
    if ((a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1)) return true;
    for (auto* p : {&a1, &a2})
        for (auto* q : {&b1, &b2})
            if (*p == *q) {
                // one shared endpoint: a crossing only if the contact extends
                // past it, which forces another endpoint onto the far segment
                const Point& ao = p == &a1 ? a2 : a1;
                const Point& bo = q == &b1 ? b2 : b1;
                return on_segment(ao, b1, b2) || on_segment(bo, a1, a2);
            }
    return true;
}

// strict point-in-polygon by ray crossing; boundary points are not inside
inline bool point_in_polygon(const Point& p, const std::vector<Point>& poly) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        if (on_segment(p, poly[j], poly[i])) return false;
        const Point &a = poly[j], &b = poly[i];
        if ((a.y > p.y) != (b.y > p.y)) {
            // x coordinate where edge ab meets the horizontal through p
            Rat xm = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xm > p.x) in = !in;
        }
    }
    return in;
}

inline bool point_on_polygon(const Point& p, const std::vector<Point>& poly) {
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        if (on_segment(p, poly[j], poly[i])) return true;
    return false;
}

// twice the signed area; positive for counterclockwise vertex order
inline Rat signed_area2(const std::vector<Point>& poly) {
    Rat s = 0;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        s += cross(poly[j], poly[i]);
    return s;
}

// strictly convex with the given turn sense: +1 counterclockwise, -1 clockwise
inline bool convex_oriented(const std::vector<Point>& poly, int sense) {
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i)
        if (orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) != sense)
            return false;
    return true;
}

// Rotation number of a closed polyline: the winding of its direction vector
// around the origin. Consecutive directions differ by less than a half turn
// (an exact reversal is rejected), so the winding is counted by signed
// crossings of the positive x axis by the chord between directions.
inline int rotation_number(const Polyline& loop) {
    std::vector<Point> dirs;
    size_t n = loop.size();
    if (n >= 2 && loop.front() == loop.back()) --n; // tolerate a closed repeat
    for (size_t i = 0; i < n; ++i) {
        Point d = loop[(i + 1) % n] - loop[i];
        if (d == Point{0, 0}) continue; // duplicate corner, no direction
        if (!dirs.empty() && cross(dirs.back(), d) == 0 && dot(dirs.back(), d) > 0)
            continue; // collinear refinement point
        dirs.push_back(d);
    }
    if (dirs.size() >= 2 && cross(dirs.front(), dirs.back()) == 0 &&
        dot(dirs.front(), dirs.back()) > 0)
        dirs.pop_back(); // same cleanup across the wrap
    if (dirs.size() < 2) throw Error("DegenerateSegment", "closed curve has no turning");

    auto below = [](const Point& w) { return w.y < 0 || (w.y == 0 && w.x < 0); };
    int winding = 0;
    for (size_t i = 0; i < dirs.size(); ++i) {
        const Point& u = dirs[i];
        const Point& v = dirs[(i + 1) % dirs.size()];
        Rat c = cross(u, v);
        if (c == 0) {
            if (dot(u, v) < 0) throw Error("DegenerateSegment", "exact reversal");
            continue;
        }
        if (below(u) == below(v)) continue;
        // the chord from u to v meets the x axis; it crosses the positive
        // ray exactly when the intercept cross(u,v)/(v.y-u.y) is positive
        int intercept = sgn(c) * sgn(v.y - u.y);
        if (intercept > 0) winding += below(u) ? 1 : -1;
    }
    return winding;
}

inline void append_point(Polyline& out, const Point& p) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
}

inline void append_polyline(Polyline& out, const Polyline& pts) {
    for (auto& p : pts) append_point(out, p);
}

inline Polyline reversed(Polyline pts) {
    std::reverse(pts.begin(), pts.end());
    return pts;
}

inline std::string str(const Point& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

} // namespace vartop
