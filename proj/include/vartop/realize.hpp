#pragma once
// Building a surface and one-source network whose measurement row carries a
// prescribed sign vector. The first nonzero entry hosts the source, positive
// entries sit on the outer boundary, and each run of negatives (with any
// zeros caught inside it) gets a hole of its own, reached through a vertical
// cut. Feasible exactly when var(v) <= 2(b-1): one hole per negative run.

#include "reduce.hpp"

namespace vartop {

// "+0-+" -> {1, 0, -1, 1}
inline std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> v;
    for (char c : s) {
        if (c == '+') v.push_back(1);
        else if (c == '-') v.push_back(-1);
        else if (c == '0') v.push_back(0);
        else
            throw Error("BadSignVector",
                        std::string("unexpected character '") + c +
                            "' in sign vector");
    }
    return v;
}

inline std::string signs_to_string(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += x > 0 ? '+' : x < 0 ? '-' : '0';
    return s;
}

// sign changes across the zero-deleted sequence
inline int variation(const std::vector<int>& v) {
    int var = 0, last = 0;
    for (int x : v) {
        if (x == 0) continue;
        if (last != 0 && x != last) ++var;
        last = x;
    }
    return var;
}

// copy with the first nonzero entry made positive
inline std::vector<int> normalize_signs(std::vector<int> v) {
    for (int x : v)
        if (x != 0) {
            if (x < 0)
                for (int& y : v) y = -y;
            break;
        }
    return v;
}

struct Realization {
    SurfaceWithCuts surface;
    EmbeddedNetwork net;
    std::vector<int> signs;  // the normalized target
};

// Lay out the construction on a rectangle of height 5: entry i of v gets
// slot x = i+1 on the bottom edge, negative runs move onto small holes
// occupying [2,3] vertically, and every edge starts out as
//
//     fan ascent, low run (y < 1), climb (left of every cut and hole),
//     high run (3 < y < 4, over the holes)
//
// with heights growing as the square of the sink's rank in target-x order;
// the quadratic growth is what keeps the fan ascents below the low runs of
// later edges. A bottom sink then just takes a vertical descent. A hole
// member sits on its hole's right edge, and its edge drops down the west
// side of the hole, runs east underneath it, climbs back up east of it, and
// docks heading west. The run underneath crosses the hole's own cut, and
// that single crossing is the point: the walk from the member back to the
// source ascends that cut once, so the path loop picks up one self-crossing
// and its rotation number changes parity, turning the entry negative. Edges
// to bottom sinks cross no cuts (a cut strictly between source and target is
// met twice by the return walk, once down and once up, which cancels).
// All weights are 1.
inline Realization realize(const std::vector<int>& signs, int b) {
    if (b < 1) throw Error("BadSignVector", "need at least one boundary component");
    std::vector<int> v = normalize_signs(signs);
    int n = (int)v.size();
    int src = -1;
    for (int i = 0; i < n && src < 0; ++i)
        if (v[i] != 0) src = i;
    if (src < 0)
        throw Error("BadSignVector", "all-zero vectors have no measurement");

    int var = variation(v);
    int bound = std::min(2 * (b - 1), n - 1);
    if (var > bound)
        throw Error("VariationTooHigh",
                    "var = " + std::to_string(var) + " exceeds " +
                        std::to_string(bound));

    // negative runs as spans [first, last] of positions in v; zeros strictly
    // inside a span ride along on its hole
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n; ++i) {
        if (v[i] >= 0) continue;
        int j = i;
        for (int k = i + 1; k < n; ++k)
            if (v[k] < 0) j = k;
            else if (v[k] > 0) break;
        blocks.push_back({i, j});
        i = j;
    }
    int spares = (b - 1) - (int)blocks.size();  // the var check makes this >= 0

    Rat W = n + 2 + 2 * spares;
    std::vector<Polyline> holes;
    std::vector<Polyline> cuts;
    std::vector<int> hole_of(n, -1);  // position -> block index
    for (size_t d = 0; d < blocks.size(); ++d) {
        Rat a = blocks[d].first + 1;          // slot of the first member
        Rat l = a - Rat(3, 4), r = a - Rat(1, 4), xc = a - Rat(1, 2);
        holes.push_back({{l, 2}, {l, 3}, {r, 3}, {r, 2}});
        cuts.push_back({{xc, 0}, {xc, 2}});
        for (int i = blocks[d].first; i <= blocks[d].second; ++i)
            hole_of[i] = (int)d;
    }
    for (int j = 0; j < spares; ++j) {
        Rat l = n + Rat(3, 2) + 2 * j, r = n + 2 + 2 * j;
        Rat xc = n + Rat(7, 4) + 2 * j;
        holes.push_back({{l, 2}, {l, 3}, {r, 3}, {r, 2}});
        cuts.push_back({{xc, 0}, {xc, 2}});
    }
    SurfaceWithCuts S({{0, 0}, {W, 0}, {W, 5}, {0, 5}}, holes, cuts,
                      Point{Rat(1, 2), 0});

    EmbeddedNetwork N;
    for (int i = 0; i < n; ++i) {
        Point at{i + 1, 0};
        if (hole_of[i] >= 0) {
            const auto& blk = blocks[hole_of[i]];
            Rat r = blk.first + 1 - Rat(1, 4);
            int members = blk.second - blk.first + 1;
            int rank = i - blk.first + 1;
            // right edge is walked top to bottom, so descending heights keep
            // the members in position order
            at = {r, 3 - Rat(rank, members + 1)};
        }
        VertexRole role = i == src       ? VertexRole::Source
                          : v[i] == 0    ? VertexRole::Isolated
                                         : VertexRole::Sink;
        N.vertices.push_back({at, role});
    }

    std::vector<int> sinks;
    for (int i = 0; i < n; ++i)
        if (v[i] != 0 && i != src) sinks.push_back(i);
    std::sort(sinks.begin(), sinks.end(), [&](int a, int c) {
        // members of one hole share an x; position order keeps their
        // heights increasing, which the pocket nesting below relies on
        if (N.vertices[a].pos.x != N.vertices[c].pos.x)
            return N.vertices[a].pos.x < N.vertices[c].pos.x;
        return a < c;
    });

    Point sp = N.vertices[src].pos;
    Rat mu(1, 4 * n);
    for (size_t k1 = 1; k1 <= sinks.size(); ++k1) {
        Rat k = (int)k1;
        int t = sinks[k1 - 1];
        Point tp = N.vertices[t].pos;
        Rat h = k * k / Rat(n * n);       // low ladder, under y = 1
        Rat H = 3 + h;                    // high ladder, over the holes
        Rat xi = sp.x + Rat(1, 4) - k / Rat(16 * n * n);
        Polyline p{sp, {sp.x + k * mu, h}, {xi, h}, {xi, H}};
        if (hole_of[t] < 0) {
            p.push_back({tp.x, H});
        } else {
            const auto& blk = blocks[hole_of[t]];
            Rat a = blk.first + 1;
            int m1 = blk.second - blk.first + 2;  // members + 1
            int el = t - blk.first + 1;
            // concentric pockets under the hole: the deeper ones start
            // higher, descend further west (still east of every climb
            // column), run east lower down, and climb back up closer in
            Rat xl = a - Rat(3, 4) - Rat(m1 - el, 16 * n * n * m1);
            Rat xr = a - Rat(el, 4 * m1);
            Rat yc = Rat(1, 2) + Rat(el, 2 * m1);
            p.push_back({xl, H});
            p.push_back({xl, yc});
            p.push_back({xr, yc});   // passes under the hole, across its cut
            p.push_back({xr, tp.y});
        }
        p.push_back(tp);
        N.edges.push_back({src, t, p, 1, ""});
    }
    return {std::move(S), std::move(N), std::move(v)};
}

} // namespace vartop
