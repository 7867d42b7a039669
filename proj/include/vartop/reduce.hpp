#pragma once
// Moves that eliminate interior vertices of a one-source network, preserving
// the sign vector of the measurement. Each move consumes an edge that runs
// from the source k to an interior vertex u and deletes u:
//
//   white split    u white, outputs f and g: replace by direct edges to the
//                  far ends, weights x_e*x_f and x_e*x_g
//   black merge    u black with both inputs parallel from k, output g:
//                  one direct edge, weight (x_e + x_f)*x_g
//   black reroute  u black, second input f from some other vertex v: the
//                  through traffic keeps flowing (weight x_e*x_g) while f is
//                  diverted to a fresh sink k' placed right beside k on the
//                  boundary walk, weight x_f/x_e
//
// The first two moves keep every path's weight and curve literally unchanged
// (new polylines are concatenations of old ones), so the measurement is
// preserved entry by entry. The reroute preserves the sign of every entry;
// when e is the source's only outgoing edge, so that all traffic funnels
// through u, the old entries are exactly the new ones divided by 1 + c_{k'}
// (c_{k'} = the fresh sink's entry), which is how loops get unwound into a
// geometric series. Replaced polylines may retrace one another, so a reduced
// network is a valid measurement input but not necessarily a crossing-free
// drawing.

#include "network.hpp"

#include <functional>

namespace vartop {

// What a reroute did to each boundary column, recorded when it fired so the
// measurement of the original network can be recovered afterwards. A column
// whose walks all ran through the consumed edge picks up the 1/(1 + c_{k'})
// factor and lands in divide; one whose walks never met the edge is
// untouched; a column fed both ways (or any through column when the diverted
// input could also be reached around the edge) has no scalar relation and
// lands in poison, where only the sign remains trustworthy.
struct ReroutePeel {
    int sink = -1;            // vertex id of k'
    std::vector<int> divide;  // boundary vertex ids, funneled columns
    std::vector<int> poison;  // boundary vertex ids, mixed columns
};

struct Reduction {
    EmbeddedNetwork net;
    std::vector<int> reroute_sinks;  // vertex ids of the k', creation order
    std::vector<ReroutePeel> peels;  // same order
    int moves = 0;
};

namespace detail {

// candidate edges: from the source into a surviving interior vertex
inline std::vector<int> reducible_edges(const EmbeddedNetwork& N, int src) {
    std::vector<int> c;
    for (size_t e = 0; e < N.edges.size(); ++e)
        if (N.edges[e].from == src &&
            !boundary_role(N.vertices[N.edges[e].to].role))
            c.push_back((int)e);
    return c;
}

inline int count_interior(const EmbeddedNetwork& N) {
    // vertices that still carry edges; deleted ones are left stranded
    std::vector<bool> used(N.vertices.size(), false);
    for (const auto& e : N.edges) used[e.from] = used[e.to] = true;
    int k = 0;
    for (size_t v = 0; v < N.vertices.size(); ++v)
        if (used[v] && !boundary_role(N.vertices[v].role)) ++k;
    return k;
}

} // namespace detail

// One move at the chosen edge (which must run source -> interior vertex).
// Returns the id of the new sink for a reroute, -1 otherwise.
inline int apply_move(const SurfaceWithCuts& S, EmbeddedNetwork& N, int ei) {
    const NetEdge e = N.edges[ei];
    int k = e.from, u = e.to;

    auto erase_edges = [&](std::vector<int> ids) {
        std::sort(ids.begin(), ids.end());
        for (size_t i = ids.size(); i-- > 0;)
            N.edges.erase(N.edges.begin() + ids[i]);
    };
    auto joined = [&](const Polyline& a, const Polyline& b) {
        Polyline p = a;
        append_polyline(p, b);
        return p;
    };

    if (N.vertices[u].role == VertexRole::White) {
        std::vector<int> outs;
        for (size_t j = 0; j < N.edges.size(); ++j)
            if ((int)j != ei && N.edges[j].from == u) outs.push_back((int)j);
        if (outs.size() != 2)
            throw Error("NoApplicableMove", "white vertex without two outputs");
        NetEdge f = N.edges[outs[0]], g = N.edges[outs[1]];
        erase_edges({ei, outs[0], outs[1]});
        N.edges.push_back(
            {k, f.to, joined(e.polyline, f.polyline), e.weight * f.weight, ""});
        N.edges.push_back(
            {k, g.to, joined(e.polyline, g.polyline), e.weight * g.weight, ""});
        return -1;
    }

    if (N.vertices[u].role != VertexRole::Black)
        throw Error("NoApplicableMove", "move target is not interior");

    int fi = -1, gi = -1;
    for (size_t j = 0; j < N.edges.size(); ++j) {
        if ((int)j == ei) continue;
        if (N.edges[j].to == u) fi = (int)j;
        if (N.edges[j].from == u) gi = (int)j;
    }
    if (fi < 0 || gi < 0)
        throw Error("NoApplicableMove", "black vertex missing input or output");
    NetEdge f = N.edges[fi], g = N.edges[gi];

    if (f.from == k) {
        // parallel inputs from the source
        erase_edges({ei, fi, gi});
        N.edges.push_back({k, g.to, joined(e.polyline, g.polyline),
                           (e.weight + f.weight) * g.weight, ""});
        return -1;
    }

    // Reroute: spawn k' next to k on the boundary walk, on the side the
    // return legs come from, so the k' column's own return is a short hop.
    // The diverted edge travels back along e and docks at k' from inside
    // the surface (via a lift point just off the boundary); landing along
    // the boundary itself would make the docking leg retrace the return
    // leg, and the softened curve can then lose the loop's winding, which
    // is what keeps the k' entries nonnegative.
    BoundaryOrder bo = boundary_order(S, N);
    const Polyline& L = bo.walk.loop;
    size_t at = bo.where[k];
    Point prev = L[(at + L.size() - 1) % L.size()];
    Point kpos = N.vertices[k].pos;
    Point kp{(kpos.x + prev.x) / 2, (kpos.y + prev.y) / 2};
    Point d{kpos.x - prev.x, kpos.y - prev.y};
    Point lift{kpos.x - d.y / 8, kpos.y + d.x / 8};  // interior is on the left
    int kpid = (int)N.vertices.size();
    N.vertices.push_back({kp, VertexRole::Sink});

    Polyline back = joined(f.polyline, reversed(e.polyline));
    back.pop_back();  // land near k, not on it
    append_point(back, lift);
    back.push_back(kp);
    erase_edges({ei, fi, gi});
    N.edges.push_back(
        {k, g.to, joined(e.polyline, g.polyline), e.weight * g.weight, ""});
    N.edges.push_back({f.from, kpid, back, f.weight / e.weight, ""});
    return kpid;
}

inline int the_one_source(const EmbeddedNetwork& N) {
    auto s = N.source_indices();
    if (s.size() != 1)
        throw Error("NotOneSource",
                    "reduction needs exactly one source, found " +
                        std::to_string(s.size()));
    return s[0];
}

// edges apply_move accepts right now, for callers stepping move by move
inline std::vector<int> applicable_moves(const EmbeddedNetwork& N) {
    return detail::reducible_edges(N, the_one_source(N));
}

namespace detail {

// 0 = white split, 1 = black merge, 2 = reroute
inline int move_kind(const EmbeddedNetwork& N, int src, int ei) {
    int u = N.edges[ei].to;
    if (N.vertices[u].role == VertexRole::White) return 0;
    for (size_t j = 0; j < N.edges.size(); ++j)
        if ((int)j != ei && N.edges[j].to == u && N.edges[j].from == src)
            return 1;
    return 2;
}

inline std::vector<bool> reachable(const EmbeddedNetwork& N, int from,
                                   int skip_edge) {
    std::vector<bool> seen(N.vertices.size(), false);
    std::vector<int> todo{from};
    seen[from] = true;
    auto out = N.out_adj();
    while (!todo.empty()) {
        int v = todo.back();
        todo.pop_back();
        for (int e : out[v]) {
            if (e == skip_edge || seen[N.edges[e].to]) continue;
            seen[N.edges[e].to] = true;
            todo.push_back(N.edges[e].to);
        }
    }
    return seen;
}

// Classify the boundary columns before a reroute consumes edge ei, per the
// ReroutePeel comment. v is the tail of the diverted input.
inline ReroutePeel plan_peel(const EmbeddedNetwork& N, int src, int ei,
                             int v) {
    const NetEdge& e = N.edges[ei];
    auto around = reachable(N, src, ei);          // k -> j avoiding e
    auto through = reachable(N, e.to, ei);        // u -> j, e spent already
    bool tail_leak = around[v];                   // f fed around e too
    ReroutePeel p;
    for (size_t j = 0; j < N.vertices.size(); ++j) {
        if (!boundary_role(N.vertices[j].role) || (int)j == src) continue;
        if (!through[j]) continue;
        if (tail_leak || around[j]) p.poison.push_back((int)j);
        else p.divide.push_back((int)j);
    }
    return p;
}

} // namespace detail

// Run moves until no interior vertex is left. The picker chooses among the
// applicable edges; randomized tests pass their own. The default takes the
// first split or merge on offer and reroutes only when it must, since the
// exactness-preserving moves cost nothing and a reroute scales entries.
inline Reduction reduce_to_boundary(
    const SurfaceWithCuts& S, const EmbeddedNetwork& N,
    const std::function<int(const std::vector<int>&)>& pick = {}) {
    int src = the_one_source(N);
    for (const NetEdge& e : N.edges)
        if (!e.symbol.empty() || !(e.weight > 0))
            throw Error("NonPositiveWeight",
                        "reduction combines weights arithmetically and needs "
                        "positive rationals");
    Reduction R;
    R.net = N;
    while (detail::count_interior(R.net) > 0) {
        auto cand = detail::reducible_edges(R.net, src);
        if (cand.empty())
            throw Error("NoApplicableMove",
                        "interior vertices not reachable from the source");
        int at = 0;
        if (pick) {
            at = pick(cand);
        } else {
            for (size_t i = 1; i < cand.size(); ++i)
                if (detail::move_kind(R.net, src, cand[i]) <
                    detail::move_kind(R.net, src, cand[at]))
                    at = (int)i;
        }
        int ei = cand[at];
        ReroutePeel peel;
        bool is_reroute = detail::move_kind(R.net, src, ei) == 2;
        if (is_reroute) {
            int u = R.net.edges[ei].to, v = -1;
            for (size_t j = 0; j < R.net.edges.size(); ++j)
                if ((int)j != ei && R.net.edges[j].to == u)
                    v = R.net.edges[j].from;
            peel = detail::plan_peel(R.net, src, ei, v);
        }
        int kp = apply_move(S, R.net, ei);
        if (kp >= 0) {
            R.reroute_sinks.push_back(kp);
            peel.sink = kp;
            R.peels.push_back(std::move(peel));
        }
        ++R.moves;
    }
    return R;
}

// Measurement of a one-source network that may contain directed cycles:
// reduce, measure, drop the reroute columns, and peel the 1 + c_{k'} factors
// off backwards per the recorded plans. Columns come back labeled by the
// original network's boundary vertices. The sign of every entry matches the
// original measurement; an entry's value is the original one exactly when
// its column was never poisoned (value_exact), which covers any chain of
// loops hanging off the source.
struct ReducedMeasurement {
    NumericMatrix matrix;
    std::vector<bool> value_exact;  // aligned with matrix columns
};

inline ReducedMeasurement measure_via_reduction(const SurfaceWithCuts& S,
                                                const EmbeddedNetwork& N,
                                                Reduction* trace = nullptr) {
    Reduction R = reduce_to_boundary(S, N);
    NumericMatrix M = measure_numeric(S, R.net);
    std::vector<bool> exact(M.col_vertex.size(), true);
    auto col_of = [&](int vid) {
        size_t c = 0;
        while (c < M.col_vertex.size() && M.col_vertex[c] != vid) ++c;
        return c;
    };
    for (size_t t = R.peels.size(); t-- > 0;) {
        const ReroutePeel& p = R.peels[t];
        size_t col = col_of(p.sink);
        Rat scale = 1 + M.entry[0][col];
        bool scale_exact = exact[col];
        M.col_vertex.erase(M.col_vertex.begin() + (long)col);
        M.entry[0].erase(M.entry[0].begin() + (long)col);
        exact.erase(exact.begin() + (long)col);
        // Funneled k' columns are nonnegative, so the scale is positive
        // whenever there is something to divide. (A leaky reroute can have
        // a negative k' entry, but then everything it touched is poisoned
        // and the scale goes unused.)
        if (!p.divide.empty() && !(scale > 0))
            throw Error("NoApplicableMove",
                        "reroute column should be nonnegative and was not");
        for (int vid : p.divide) {
            size_t c = col_of(vid);
            M.entry[0][c] /= scale;
            exact[c] = exact[c] && scale_exact;
        }
        for (int vid : p.poison) exact[col_of(vid)] = false;
    }
    if (trace) *trace = std::move(R);
    return {std::move(M), std::move(exact)};
}

} // namespace vartop
