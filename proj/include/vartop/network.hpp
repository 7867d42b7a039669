#pragma once
// Directed networks embedded on a SurfaceWithCuts, and their boundary
// measurement. Boundary vertices are sources, sinks, or isolated; interior
// vertices are white (in 1, out 2) or black (in 2, out 1). Each edge carries
// a positive rational weight or a symbolic tag. The measurement matrix has
// one row per source and one column per boundary vertex, columns ordered by
// the walk around the cut-open surface. The entry for a path P from source i
// to sink j is wt(P) times (-1)^(s_ij + r_P + 1), where s_ij counts sources
// strictly between the two labels and r_P is the rotation number of the
// closed curve made of P followed by the boundary walk from j back to i.

#include "error.hpp"
#include "geometry.hpp"
#include "surface.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace vartop {

enum class VertexRole { Source, Sink, Isolated, White, Black };

inline bool boundary_role(VertexRole r) {
    return r == VertexRole::Source || r == VertexRole::Sink ||
           r == VertexRole::Isolated;
}

inline std::string role_name(VertexRole r) {
    switch (r) {
    case VertexRole::Source: return "source";
    case VertexRole::Sink: return "sink";
    case VertexRole::Isolated: return "isolated";
    case VertexRole::White: return "white";
    default: return "black";
    }
}

inline VertexRole role_from_name(const std::string& s) {
    if (s == "source") return VertexRole::Source;
    if (s == "sink") return VertexRole::Sink;
    if (s == "isolated") return VertexRole::Isolated;
    if (s == "white") return VertexRole::White;
    if (s == "black") return VertexRole::Black;
    throw Error("BadNetwork", "unknown vertex role: " + s);
}

struct NetVertex {
    Point pos;
    VertexRole role = VertexRole::Isolated;
};

struct NetEdge {
    int from = -1;
    int to = -1;
    Polyline polyline;        // starts at from's position, ends at to's
    Rat weight = 0;           // used in numeric mode; must be positive there
    std::string symbol;       // nonempty marks a symbolic weight tag
};

struct EmbeddedNetwork {
    std::vector<NetVertex> vertices;
    std::vector<NetEdge> edges;

    std::vector<std::vector<int>> out_adj() const {
        std::vector<std::vector<int>> a(vertices.size());
        for (size_t e = 0; e < edges.size(); ++e)
            a[edges[e].from].push_back((int)e);
        return a;
    }
    std::vector<std::vector<int>> in_adj() const {
        std::vector<std::vector<int>> a(vertices.size());
        for (size_t e = 0; e < edges.size(); ++e)
            a[edges[e].to].push_back((int)e);
        return a;
    }

    std::vector<int> source_indices() const {
        std::vector<int> s;
        for (size_t v = 0; v < vertices.size(); ++v)
            if (vertices[v].role == VertexRole::Source) s.push_back((int)v);
        return s;
    }

    bool acyclic() const {
        std::vector<int> indeg(vertices.size(), 0);
        for (const auto& e : edges) ++indeg[e.to];
        std::vector<int> queue;
        for (size_t v = 0; v < vertices.size(); ++v)
            if (indeg[v] == 0) queue.push_back((int)v);
        auto out = out_adj();
        size_t taken = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++taken;
            for (int e : out[v])
                if (--indeg[edges[e].to] == 0) queue.push_back(edges[e].to);
        }
        return taken == vertices.size();
    }
};

namespace detail {

// Intersection point of two segments already known to meet in one point.
inline Point meet_point(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
    if (a == c || a == d) return a;
    if (b == c || b == d) return b;
    if (on_segment(c, a, b)) return c;
    if (on_segment(d, a, b)) return d;
    if (on_segment(a, c, d)) return a;
    if (on_segment(b, c, d)) return b;
    Rat denom = cross(b - a, d - c);
    Rat t = cross(c - a, d - c) / denom;
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

inline bool collinear_overlap(const Point& a, const Point& b, const Point& c,
                              const Point& d) {
    if (sgn(orient(a, b, c)) != 0 || sgn(orient(a, b, d)) != 0) return false;
    // shared subsegment of positive length: some endpoint lies strictly
    // inside the other segment, or the segments coincide
    auto strict_inside = [](const Point& p, const Point& u, const Point& v) {
        return p != u && p != v && on_segment(p, u, v);
    };
    if (strict_inside(c, a, b) || strict_inside(d, a, b) ||
        strict_inside(a, c, d) || strict_inside(b, c, d))
        return true;
    return (a == c && b == d) || (a == d && b == c);
}

// Does the open segment between clip parameters enter the open interior of a
// convex polygon? Touching the boundary does not count.
inline bool segment_enters_convex(const std::vector<Point>& poly, int sense,
                                  const Point& a, const Point& b) {
    // clip [a,b] against the closed polygon: interior side of each edge
    Rat lo = 0, hi = 1;
    int n = (int)poly.size();
    for (int i = 0; i < n; ++i) {
        const Point &p = poly[i], &q = poly[(i + 1) % n];
        // signed distance-like values; interior is orient * sense >= 0
        Rat fa = orient(p, q, a) * sense;
        Rat fb = orient(p, q, b) * sense;
        if (fa < 0 && fb < 0) return false;
        if (fa < 0) lo = std::max(lo, Rat(fa / (fa - fb)));
        if (fb < 0) hi = std::min(hi, Rat(fa / (fa - fb)));
        if (lo > hi) return false;
    }
    if (lo >= hi) {
        // a single touch point; never interior for a convex clip
        return false;
    }
    Rat t = (lo + hi) / 2;
    Point m{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    return point_in_polygon(m, poly);
}

} // namespace detail

// Structural and geometric checks for a network drawn on a surface. Edges may
// cross cuts (the walk is a bookkeeping device, not a wall for the network),
// but vertices must stay off the cuts.
inline void validate_network(const SurfaceWithCuts& S, const EmbeddedNetwork& N) {
    std::vector<int> in(N.vertices.size(), 0), out(N.vertices.size(), 0);
    for (size_t ei = 0; ei < N.edges.size(); ++ei) {
        const NetEdge& e = N.edges[ei];
        if (e.from < 0 || e.to < 0 || e.from >= (int)N.vertices.size() ||
            e.to >= (int)N.vertices.size())
            throw Error("BadNetwork", "edge endpoint index out of range");
        if (e.from == e.to)
            throw Error("BadNetwork", "edge loops at one vertex");
        if (e.polyline.size() < 2 ||
            !(e.polyline.front() == N.vertices[e.from].pos) ||
            !(e.polyline.back() == N.vertices[e.to].pos))
            throw Error("BadNetwork",
                        "edge polyline does not join its endpoints");
        for (size_t i = 0; i + 1 < e.polyline.size(); ++i) {
            if (e.polyline[i] == e.polyline[i + 1])
                throw Error("BadNetwork", "repeated point in edge polyline");
            if (i + 2 < e.polyline.size()) {
                Point u = e.polyline[i + 1] - e.polyline[i];
                Point v = e.polyline[i + 2] - e.polyline[i + 1];
                if (sgn(cross(u, v)) == 0 && sgn(dot(u, v)) < 0)
                    throw Error("BadNetwork", "edge polyline doubles back");
            }
        }
        ++out[e.from];
        ++in[e.to];
    }

    for (size_t v = 0; v < N.vertices.size(); ++v)
        for (size_t u = v + 1; u < N.vertices.size(); ++u)
            if (N.vertices[v].pos == N.vertices[u].pos)
                throw Error("BadNetwork", "two vertices share a position");

    for (size_t v = 0; v < N.vertices.size(); ++v) {
        const NetVertex& w = N.vertices[v];
        bool ok = true;
        switch (w.role) {
        // a source may be edgeless: it still measures 1 in its own column
        case VertexRole::Source: ok = in[v] == 0; break;
        case VertexRole::Sink: ok = in[v] == 1 && out[v] == 0; break;
        case VertexRole::Isolated: ok = in[v] == 0 && out[v] == 0; break;
        case VertexRole::White: ok = in[v] == 1 && out[v] == 2; break;
        case VertexRole::Black: ok = in[v] == 2 && out[v] == 1; break;
        }
        if (!ok)
            throw Error("BadNetwork", "vertex " + std::to_string(v) +
                                          " has degrees unfit for a " +
                                          role_name(w.role) + " vertex");
        if (boundary_role(w.role)) {
            if (S.component_of(w.pos) < 0)
                throw Error("BadNetwork", "boundary vertex " +
                                              std::to_string(v) +
                                              " off the boundary");
        } else {
            if (!S.interior_point(w.pos))
                throw Error("BadNetwork", "interior vertex " +
                                              std::to_string(v) +
                                              " not strictly inside");
        }
        if (S.on_any_cut(w.pos))
            throw Error("BadNetwork",
                        "vertex " + std::to_string(v) + " sits on a cut");
    }

    // edges stay inside the outer polygon and out of hole interiors
    for (const NetEdge& e : N.edges)
        for (size_t i = 0; i + 1 < e.polyline.size(); ++i) {
            const Point &a = e.polyline[i], &b = e.polyline[i + 1];
            if (!point_in_polygon(a, S.outer) && !point_on_polygon(a, S.outer))
                throw Error("BadNetwork", "edge leaves the surface");
            if (!point_in_polygon(b, S.outer) && !point_on_polygon(b, S.outer))
                throw Error("BadNetwork", "edge leaves the surface");
            for (const auto& hole : S.holes)
                if (detail::segment_enters_convex(hole, -1, a, b))
                    throw Error("BadNetwork", "edge passes through a hole");
        }

    // pairwise contact only at shared network vertices; within one edge,
    // non-adjacent pieces never touch
    auto common_vertex_point = [&](const NetEdge& e, const NetEdge& f,
                                   const Point& p) {
        auto hits = [&](const NetEdge& g) {
            return N.vertices[g.from].pos == p || N.vertices[g.to].pos == p;
        };
        return hits(e) && hits(f);
    };
    for (size_t ei = 0; ei < N.edges.size(); ++ei) {
        const auto& P = N.edges[ei].polyline;
        for (size_t i = 0; i + 1 < P.size(); ++i)
            for (size_t j = i + 2; j + 1 < P.size(); ++j) {
                // consecutive-but-one segments legitimately share nothing;
                // the shared joint only links i and i+1
                if (segments_meet(P[i], P[i + 1], P[j], P[j + 1]))
                    throw Error("BadNetwork", "edge polyline self-intersects");
            }
        for (size_t fj = ei + 1; fj < N.edges.size(); ++fj) {
            const auto& Q = N.edges[fj].polyline;
            for (size_t i = 0; i + 1 < P.size(); ++i)
                for (size_t j = 0; j + 1 < Q.size(); ++j) {
                    if (!segments_meet(P[i], P[i + 1], Q[j], Q[j + 1]))
                        continue;
                    if (detail::collinear_overlap(P[i], P[i + 1], Q[j],
                                                  Q[j + 1]))
                        throw Error("BadNetwork", "edges overlap");
                    Point p = detail::meet_point(P[i], P[i + 1], Q[j], Q[j + 1]);
                    if (!common_vertex_point(N.edges[ei], N.edges[fj], p))
                        throw Error("BadNetwork", "edges cross");
                }
        }
    }
}

// Walk order of the boundary vertices: position c in the result is the vertex
// labeled c+1. Also hands back the walk itself for curve assembly.
struct BoundaryOrder {
    std::vector<int> order;        // vertex indices, walk order
    std::vector<int> label;        // per vertex: 1-based label, 0 if interior
    SurfaceWithCuts::Walk walk;
    std::vector<size_t> where;     // per vertex: loop index (boundary only)
};

inline BoundaryOrder boundary_order(const SurfaceWithCuts& S,
                                    const EmbeddedNetwork& N) {
    std::vector<Point> markers;
    std::vector<int> owner;
    for (size_t v = 0; v < N.vertices.size(); ++v)
        if (boundary_role(N.vertices[v].role)) {
            markers.push_back(N.vertices[v].pos);
            owner.push_back((int)v);
        }
    BoundaryOrder bo;
    bo.walk = S.boundary_walk(markers);
    bo.label.assign(N.vertices.size(), 0);
    bo.where.assign(N.vertices.size(), 0);
    for (size_t c = 0; c < bo.walk.order.size(); ++c) {
        int v = owner[bo.walk.order[c]];
        bo.order.push_back(v);
        bo.label[v] = (int)c + 1;
        bo.where[v] = bo.walk.where[bo.walk.order[c]];
    }
    return bo;
}

enum class MeasureMode { Numeric, Symbolic };

// A symbolic entry is a sum of integer multiples of squarefree-or-not
// monomials in the edge tags; the monomial is kept as a sorted multiset.
using Monomial = std::vector<std::string>;
using SymbolicSum = std::map<Monomial, long long>;

template <class Entry>
struct MeasurementMatrix {
    std::vector<int> row_vertex;   // source vertex per row, walk order
    std::vector<int> col_vertex;   // boundary vertex per column, walk order
    std::vector<std::vector<Entry>> entry;
};

using NumericMatrix = MeasurementMatrix<Rat>;
using SymbolicMatrix = MeasurementMatrix<SymbolicSum>;

namespace detail {

// Splice an exact U-turn: replace ... a -> J -> b ... (directions exactly
// opposite at J) with a short bulge on the left of the outgoing direction,
// which is the side the surface lies on along the boundary walk.
inline bool soften_reversals(Polyline& loop) {
    bool changed = false;
    for (size_t j = 0; j < loop.size(); ++j) {
        size_t i = (j + loop.size() - 1) % loop.size();
        size_t k = (j + 1) % loop.size();
        Point u = loop[j] - loop[i];
        Point w = loop[k] - loop[j];
        if (sgn(cross(u, w)) == 0 && sgn(dot(u, w)) < 0) {
            Point mid{(loop[j].x + loop[k].x) / 2, (loop[j].y + loop[k].y) / 2};
            Point bulge{mid.x - w.y / 8, mid.y + w.x / 8};
            loop.insert(loop.begin() + (long)j + 1, bulge);
            changed = true;
            ++j;
        }
    }
    return changed;
}

inline int loop_rotation(Polyline loop) {
    for (int pass = 0; pass < 4; ++pass)
        if (!soften_reversals(loop)) break;
    return rotation_number(loop);
}

} // namespace detail

// Closed curve for a source-to-sink path: the path itself, then the boundary
// walk from the sink back around to the source.
inline Polyline path_loop(const BoundaryOrder& bo, const Polyline& path,
                          int src, int dst) {
    Polyline loop = path;
    const Polyline& L = bo.walk.loop;
    size_t a = bo.where[dst], b = bo.where[src];
    for (size_t i = a; i != b; i = (i + 1) % L.size()) append_point(loop, L[i]);
    append_point(loop, L[b]);
    while (loop.size() > 1 && loop.back() == loop.front()) loop.pop_back();
    return loop;
}

inline void add_term(Rat& slot, int sign, const Rat& value) {
    slot += sign * value;
}

inline void add_term(SymbolicSum& slot, int sign, const Monomial& mono) {
    long long& c = slot[mono];
    c += sign;
    if (c == 0) slot.erase(mono);
}

template <class Entry, class FromPath>
MeasurementMatrix<Entry> measure_with(const SurfaceWithCuts& S,
                                      const EmbeddedNetwork& N,
                                      FromPath path_value, Entry one) {
    if (!N.acyclic())
        throw Error("CyclicNetwork",
                    "measurement needs an acyclic network; reduce first");
    BoundaryOrder bo = boundary_order(S, N);

    MeasurementMatrix<Entry> M;
    M.col_vertex = bo.order;
    for (int v : bo.order)
        if (N.vertices[v].role == VertexRole::Source) M.row_vertex.push_back(v);
    M.entry.assign(M.row_vertex.size(),
                   std::vector<Entry>(M.col_vertex.size(), Entry{}));

    std::vector<int> col_of(N.vertices.size(), -1);
    for (size_t c = 0; c < M.col_vertex.size(); ++c)
        col_of[M.col_vertex[c]] = (int)c;

    auto out = N.out_adj();

    for (size_t r = 0; r < M.row_vertex.size(); ++r) {
        int src = M.row_vertex[r];
        M.entry[r][col_of[src]] = one; // the empty path

        // walk every directed path out of src; the network is acyclic
        std::vector<int> stack;
        Polyline curve{N.vertices[src].pos};
        auto descend = [&](auto&& self, int v) -> void {
            if (N.vertices[v].role == VertexRole::Sink) {
                int dst = v;
                Polyline loop = path_loop(bo, curve, src, dst);
                int rot = detail::loop_rotation(loop);
                int li = bo.label[src], lj = bo.label[dst];
                int lo = std::min(li, lj), hi = std::max(li, lj);
                int between = 0;
                for (int w : M.row_vertex) {
                    int l = bo.label[w];
                    if (lo < l && l < hi) ++between;
                }
                int sign = (between + rot + 1) % 2 == 0 ? 1 : -1;
                add_term(M.entry[r][col_of[dst]], sign, path_value(stack));
                return;
            }
            for (int e : out[v]) {
                stack.push_back(e);
                size_t keep = curve.size();
                for (const Point& p : N.edges[e].polyline) append_point(curve, p);
                self(self, N.edges[e].to);
                curve.resize(keep);
                stack.pop_back();
            }
        };
        descend(descend, src);
    }
    return M;
}

inline NumericMatrix measure_numeric(const SurfaceWithCuts& S,
                                     const EmbeddedNetwork& N) {
    for (const NetEdge& e : N.edges)
        if (!e.symbol.empty() || !(e.weight > 0))
            throw Error("NonPositiveWeight",
                        "numeric measurement needs positive rational weights");
    auto value = [&](const std::vector<int>& path) {
        Rat w = 1;
        for (int e : path) w *= N.edges[e].weight;
        return w;
    };
    return measure_with<Rat>(S, N, value, Rat(1));
}

inline SymbolicMatrix measure_symbolic(const SurfaceWithCuts& S,
                                       const EmbeddedNetwork& N) {
    auto value = [&](const std::vector<int>& path) {
        Monomial m;
        for (int e : path)
            m.push_back(N.edges[e].symbol.empty()
                            ? "e" + std::to_string(e)
                            : N.edges[e].symbol);
        std::sort(m.begin(), m.end());
        return m;
    };
    return measure_with<SymbolicSum>(S, N, value, SymbolicSum{{{}, 1}});
}

// Signs of a one-row numeric measurement, one entry per boundary label.
inline std::vector<int> sign_vector(const NumericMatrix& M, size_t row = 0) {
    std::vector<int> s;
    for (const Rat& x : M.entry[row]) s.push_back(sgn(x));
    return s;
}

// Partial sums of the walk series of a possibly cyclic network, with a bound
// on everything left out. When every out-weight sum is below one, the walks
// of length above the cap carry total weight at most q^(cap+1)/(1-q), which
// bounds each entry's missing part. Entries whose partial sum beats the tail
// have certified signs, so this serves as an independent check on results
// obtained through reduction.
struct TruncatedMeasure {
    NumericMatrix matrix;
    Rat tail = 0;       // valid bound only when usable
    bool exact = false; // no walk hit the cap: the series is a finite sum
    bool usable = false;
};

inline TruncatedMeasure measure_truncated(const SurfaceWithCuts& S,
                                          const EmbeddedNetwork& N,
                                          int max_steps) {
    for (const NetEdge& e : N.edges)
        if (!e.symbol.empty() || !(e.weight > 0))
            throw Error("NonPositiveWeight",
                        "walk series needs positive rational weights");
    BoundaryOrder bo = boundary_order(S, N);

    TruncatedMeasure T;
    NumericMatrix& M = T.matrix;
    M.col_vertex = bo.order;
    for (int v : bo.order)
        if (N.vertices[v].role == VertexRole::Source) M.row_vertex.push_back(v);
    M.entry.assign(M.row_vertex.size(),
                   std::vector<Rat>(M.col_vertex.size(), Rat(0)));

    std::vector<int> col_of(N.vertices.size(), -1);
    for (size_t c = 0; c < M.col_vertex.size(); ++c)
        col_of[M.col_vertex[c]] = (int)c;
    auto out = N.out_adj();

    Rat q = 0;
    for (size_t v = 0; v < N.vertices.size(); ++v) {
        Rat s = 0;
        for (int e : out[v]) s += N.edges[e].weight;
        q = std::max(q, s);
    }

    T.exact = true;
    for (size_t r = 0; r < M.row_vertex.size(); ++r) {
        int src = M.row_vertex[r];
        M.entry[r][col_of[src]] = 1;
        Polyline curve{N.vertices[src].pos};
        Rat wt = 1;
        auto descend = [&](auto&& self, int v, int steps) -> void {
            if (N.vertices[v].role == VertexRole::Sink) {
                Polyline loop = path_loop(bo, curve, src, v);
                int rot = detail::loop_rotation(loop);
                int li = bo.label[src], lj = bo.label[v];
                int lo = std::min(li, lj), hi = std::max(li, lj);
                int between = 0;
                for (int w : M.row_vertex)
                    if (lo < bo.label[w] && bo.label[w] < hi) ++between;
                int sign = (between + rot + 1) % 2 == 0 ? 1 : -1;
                M.entry[r][col_of[v]] += sign * wt;
                return;
            }
            if (!out[v].empty() && steps == max_steps) {
                T.exact = false;
                return;
            }
            for (int e : out[v]) {
                size_t keep = curve.size();
                wt *= N.edges[e].weight;
                for (const Point& p : N.edges[e].polyline) append_point(curve, p);
                self(self, N.edges[e].to, steps + 1);
                curve.resize(keep);
                wt /= N.edges[e].weight;
            }
        };
        descend(descend, src, 0);
    }
    if (T.exact) {
        T.usable = true;
    } else if (q < 1) {
        Rat qn = 1;
        for (int i = 0; i <= max_steps; ++i) qn *= q;
        T.tail = qn / (1 - q);
        T.usable = true;
    }
    return T;
}

// Sign of each entry when the truncation leaves no doubt; 2 marks entries the
// tail bound cannot settle.
inline std::vector<int> certified_signs(const TruncatedMeasure& T,
                                        size_t row = 0) {
    std::vector<int> s;
    for (const Rat& x : T.matrix.entry[row]) {
        if (T.exact) s.push_back(sgn(x));
        else if (T.usable && (x > T.tail || -x > T.tail)) s.push_back(sgn(x));
        else if (T.usable && sgn(x) == 0 && sgn(T.tail) == 0) s.push_back(0);
        else s.push_back(2);
    }
    return s;
}

} // namespace vartop
