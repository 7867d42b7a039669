#pragma once
// A genus-zero surface drawn in the plane: a convex outer polygon, convex
// holes, and cut arcs joining boundary components so that the complement T
// of the cuts is simply connected (the cut graph must be a tree). The main
// service is the walk around the boundary of T: one closed polyline that
// traverses the outer polygon, detours along each cut into its hole, and
// induces the ordering of points sitting on the boundary.

#include "error.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

namespace vartop {

// position along a polygon perimeter: point = P[edge] + t * (P[edge+1] - P[edge])
struct PerimPos {
    int edge = 0;
    Rat t = 0;

    bool operator<(const PerimPos& o) const {
        return edge != o.edge ? edge < o.edge : t < o.t;
    }
    bool operator==(const PerimPos& o) const { return edge == o.edge && t == o.t; }
};

inline std::optional<PerimPos> locate_on_polygon(const std::vector<Point>& poly,
                                                 const Point& p) {
    int n = (int)poly.size();
    for (int e = 0; e < n; ++e) {
        const Point &a = poly[e], &b = poly[(e + 1) % n];
        if (!on_segment(p, a, b)) continue;
        if (p == b) return PerimPos{(e + 1) % n, 0};
        Point d = b - a;
        Rat t = dot(p - a, d) / dot(d, d);
        return PerimPos{e, t};
    }
    return std::nullopt;
}

class SurfaceWithCuts {
public:
    std::vector<Point> outer;              // counterclockwise convex
    std::vector<std::vector<Point>> holes; // clockwise convex, strictly inside
    std::vector<Polyline> cuts;            // each joins two distinct components
    Point basepoint;                       // on a boundary, where the walk starts

    SurfaceWithCuts(std::vector<Point> outer_, std::vector<std::vector<Point>> holes_,
                    std::vector<Polyline> cuts_, Point basepoint_)
        : outer(std::move(outer_)), holes(std::move(holes_)), cuts(std::move(cuts_)),
          basepoint(std::move(basepoint_)) {
        validate();
    }

    int components() const { return 1 + (int)holes.size(); }

    // component polygons share an orientation convention: walking the stored
    // vertex order keeps the surface on the left
    const std::vector<Point>& polygon(int comp) const {
        return comp == 0 ? outer : holes[comp - 1];
    }

    // which boundary component a point lies on, or -1
    int component_of(const Point& p) const {
        for (int c = 0; c < components(); ++c)
            if (point_on_polygon(p, polygon(c))) return c;
        return -1;
    }

    bool on_any_cut(const Point& p) const {
        for (auto& cut : cuts)
            for (size_t i = 0; i + 1 < cut.size(); ++i)
                if (on_segment(p, cut[i], cut[i + 1])) return true;
        return false;
    }

    // strictly inside the surface: inside the outer polygon, outside every
    // hole (hole boundaries count as surface)
    bool interior_point(const Point& p) const {
        if (!point_in_polygon(p, outer)) return false;
        for (auto& h : holes)
            if (point_in_polygon(p, h)) return false;
        return true;
    }

    struct Walk {
        Polyline loop;             // closed, loop[0] = basepoint, no repeat at end
        std::vector<int> order;    // marker ids in the order the walk meets them
        std::vector<size_t> where; // marker id -> index into loop
    };

    // walk the boundary of T once around, recording where each marker point
    // (a prospective network vertex) is met
    Walk boundary_walk(const std::vector<Point>& markers) const {
        for (auto& m : markers) {
            if (on_any_cut(m)) throw Error("VertexOnCut", str(m));
            if (m == basepoint) throw Error("VertexOnCut", "marker at the basepoint");
            if (component_of(m) < 0)
                throw Error("BadSurface", "marker off the boundary: " + str(m));
        }

        // stops on each component: cut attachments and markers
        struct Stop {
            PerimPos pos;
            int marker = -1; // else a cut attachment
            int cut = -1;
        };
        std::vector<std::vector<Stop>> stops(components());
        std::vector<std::array<int, 2>> cut_comp(cuts.size());
        std::vector<std::array<PerimPos, 2>> cut_pos(cuts.size());
        for (size_t k = 0; k < cuts.size(); ++k) {
            for (int side = 0; side < 2; ++side) {
                const Point& p = side == 0 ? cuts[k].front() : cuts[k].back();
                int c = component_of(p);
                auto pos = locate_on_polygon(polygon(c), p);
                cut_comp[k][side] = c;
                cut_pos[k][side] = *pos;
                stops[c].push_back({*pos, -1, (int)k});
            }
        }
        for (size_t i = 0; i < markers.size(); ++i) {
            int c = component_of(markers[i]);
            stops[c].push_back({*locate_on_polygon(polygon(c), markers[i]), (int)i, -1});
        }
        for (auto& sv : stops)
            std::sort(sv.begin(), sv.end(),
                      [](const Stop& a, const Stop& b) { return a.pos < b.pos; });

        int home = component_of(basepoint);
        if (home < 0) throw Error("BadSurface", "basepoint off the boundary");

        Walk w;
        w.where.assign(markers.size(), 0);
        std::vector<bool> visited(components(), false);
        walk_component(home, *locate_on_polygon(polygon(home), basepoint), stops,
                       cut_comp, cut_pos, visited, w);
        if (w.loop.size() > 1 && w.loop.back() == w.loop.front()) w.loop.pop_back();
        return w;
    }

private:
    template <class Stops, class CutComp, class CutPos>
    void walk_component(int comp, PerimPos start, const Stops& stops,
                        const CutComp& cut_comp, const CutPos& cut_pos,
                        std::vector<bool>& visited, Walk& w) const {
        visited[comp] = true;
        const auto& poly = polygon(comp);
        int n = (int)poly.size();
        auto point_at = [&](const PerimPos& pp) {
            const Point &a = poly[pp.edge], &b = poly[(pp.edge + 1) % n];
            return Point{a.x + pp.t * (b.x - a.x), a.y + pp.t * (b.y - a.y)};
        };
        auto emit = [&](const Point& p) {
            if (!w.loop.empty() && w.loop.back() == p) return;
            w.loop.push_back(p);
        };
        // corners passed when walking forward from one position to another;
        // equal positions mean either "no move" or a full lap
        auto emit_corners = [&](const PerimPos& from, const PerimPos& to, bool lap) {
            if (from.edge == to.edge && from.t <= to.t && !(lap && from == to)) return;
            int e = from.edge;
            while (true) {
                e = (e + 1) % n;
                emit(poly[e]);
                if (e == to.edge) break;
            }
        };

        emit(point_at(start));

        // order stops by distance along the walk from the start position
        const auto& sv = stops[comp];
        std::vector<int> idx(sv.size());
        std::iota(idx.begin(), idx.end(), 0);
        auto rel = [&](const PerimPos& p) {
            // rank cyclically: positions at or before start get pushed a lap
            return std::make_pair(start < p ? 0 : 1, p);
        };
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return rel(sv[a].pos) < rel(sv[b].pos);
        });

        PerimPos at = start;
        for (int i : idx) {
            const auto& s = sv[i];
            if (s.pos == start) continue; // the attachment we arrived through
            emit_corners(at, s.pos, false);
            Point sp = point_at(s.pos);
            emit(sp);
            at = s.pos;
            if (s.marker >= 0) {
                w.order.push_back(s.marker);
                w.where[s.marker] = w.loop.size() - 1;
            } else {
                int k = s.cut;
                int side = cut_comp[k][0] == comp && cut_pos[k][0] == s.pos ? 0 : 1;
                int far = cut_comp[k][1 - side];
                if (visited[far]) continue; // defensive; a tree never hits this
                const Polyline& arc = side == 0 ? cuts[k] : reversed(cuts[k]);
                append_walk(arc, w);
                walk_component(far, cut_pos[k][1 - side], stops, cut_comp, cut_pos,
                               visited, w);
                append_walk(reversed(arc), w);
            }
        }
        emit_corners(at, start, at == start);
        Point sp = point_at(start);
        if (w.loop.back() != sp) w.loop.push_back(sp);
    }

    static int other_end(const std::array<int, 2>& ends, int comp) {
        return ends[0] == comp ? ends[1] : ends[0];
    }

    static void append_walk(const Polyline& pts, Walk& w) {
        for (auto& p : pts) {
            if (!w.loop.empty() && w.loop.back() == p) continue;
            w.loop.push_back(p);
        }
    }

    void validate() const {
        if (!convex_oriented(outer, 1))
            throw Error("BadSurface", "outer boundary must be convex counterclockwise");
        for (auto& h : holes) {
            if (!convex_oriented(h, -1))
                throw Error("BadSurface", "holes must be convex clockwise");
            for (auto& p : h)
                if (!point_in_polygon(p, outer))
                    throw Error("BadSurface", "hole not strictly inside the surface");
        }
        for (size_t i = 0; i < holes.size(); ++i)
            for (size_t j = i + 1; j < holes.size(); ++j)
                if (polygons_touch(holes[i], holes[j]))
                    throw Error("BadSurface", "holes overlap");

        // cut endpoints sit on two distinct components; interiors stay clear
        // of all boundaries and of each other
        std::vector<std::array<int, 2>> ends;
        for (auto& cut : cuts) {
            if (cut.size() < 2) throw Error("BadSurface", "cut with fewer than 2 points");
            int a = component_of(cut.front());
            int b = component_of(cut.back());
            if (a < 0 || b < 0 || a == b)
                throw Error("BadSurface", "cut must join two distinct components");
            for (size_t i = 1; i + 1 < cut.size(); ++i)
                if (component_of(cut[i]) >= 0)
                    throw Error("BadSurface", "cut interior touches a boundary");
            ends.push_back({a, b});
        }
        for (size_t i = 0; i < cuts.size(); ++i)
            for (size_t j = i + 1; j < cuts.size(); ++j)
                if (polylines_touch(cuts[i], cuts[j]))
                    throw Error("BadSurface", "cuts intersect");

        // Lemma-style sanity: the cut graph on components must be a tree,
        // otherwise T is disconnected or not simply connected
        int b = components();
        if ((int)cuts.size() != b - 1)
            throw Error("CutGraphNotTree", "need exactly components-1 cuts");
        std::vector<int> root(b);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (auto& e : ends) {
            int ra = find(e[0]), rb = find(e[1]);
            if (ra == rb) throw Error("CutGraphNotTree", "cuts form a cycle");
            root[ra] = rb;
        }

        if (component_of(basepoint) < 0)
            throw Error("BadSurface", "basepoint must lie on a boundary");
        if (on_any_cut(basepoint))
            throw Error("BadSurface", "basepoint on a cut");
    }

    static bool polygons_touch(const std::vector<Point>& A, const std::vector<Point>& B) {
        for (auto& p : A)
            if (point_in_polygon(p, B) || point_on_polygon(p, B)) return true;
        for (auto& p : B)
            if (point_in_polygon(p, A) || point_on_polygon(p, A)) return true;
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j)
                if (segments_meet(A[i], A[(i + 1) % A.size()], B[j],
                                  B[(j + 1) % B.size()]))
                    return true;
        return false;
    }

    static bool polylines_touch(const Polyline& A, const Polyline& B) {
        for (size_t i = 0; i + 1 < A.size(); ++i)
            for (size_t j = 0; j + 1 < B.size(); ++j)
                if (segments_meet(A[i], A[i + 1], B[j], B[j + 1])) return true;
        return false;
    }
};

} // namespace vartop
