#pragma once
// Seeded generators for one-source test networks. random_net draws an
// interior-free network on a star-cut surface (random sign targets, random
// positive weights, a few silenced sinks). plant_junctions then grows
// interior structure on such a net by splicing in the configurations the
// reduction moves eliminate, weighted so the measurement stays exactly what
// it was before planting.

#include "realize.hpp"

#include <random>

namespace vartop {

using Rng = std::mt19937_64;

inline Rat random_weight(Rng& g) {
    std::uniform_int_distribution<int> d(1, 9);
    return Rat(d(g), d(g));
}

// A leading + and at most b-1 negative runs behind it. Runs that touch or
// overlap just merge into a wider one, so the realize bound always holds.
inline std::vector<int> random_sign_vector(int n, int b, Rng& g) {
    std::vector<int> v(n);
    std::uniform_int_distribution<int> coin(0, 5), runs(0, b - 1);
    v[0] = 1;
    for (int i = 1; i < n; ++i) v[i] = coin(g) < 2 ? 0 : 1;
    if (n > 1) {
        std::uniform_int_distribution<int> at(1, n - 1), len(1, 2);
        for (int r = runs(g); r-- > 0;) {
            int s = at(g);
            for (int i = s; i < std::min(n, s + len(g)); ++i) v[i] = -1;
        }
    }
    return v;
}

// Interior-free one-source network on b boundary components. signs reports
// what the measurement row should read; silenced sinks read 0.
inline Realization random_net(int n, int b, Rng& g) {
    Realization R = realize(random_sign_vector(n, b, g), b);
    for (NetEdge& e : R.net.edges) e.weight = random_weight(g);
    std::uniform_int_distribution<int> coin(0, 5);
    for (size_t i = R.net.edges.size(); i-- > 0;) {
        if (coin(g) != 0) continue;
        int t = R.net.edges[i].to;
        R.net.edges.erase(R.net.edges.begin() + (long)i);
        R.net.vertices[t].role = VertexRole::Isolated;
        R.signs[t] = 0;
    }
    return R;
}

// Splice interior vertices into a fan-layout net (anything realize or
// random_net produced). Three shapes, one per move:
//
//   fork    white u on one fan point, forwarding to two sinks; one split
//           restores the pair of direct edges verbatim
//   pair    two parallel edges into a black u; one merge restores the edge
//   branch  source -> white w -> black u plus a direct source -> u; forces
//           a reroute when the black edge is taken first
//
// Fork and branch bridge two direct edges with a chord between consecutive
// fan points; the chord stays above the fan parabola and below every later
// ladder, so nothing crosses. Weights are chosen to keep the measurement of
// every column exactly as it was.
inline void plant_junctions(EmbeddedNetwork& N, int count, Rng& g) {
    int src = the_one_source(N);
    Point sp = N.vertices[src].pos;
    int n = 0;
    for (const NetVertex& w : N.vertices) n += boundary_role(w.role) ? 1 : 0;

    std::vector<int> pool;  // surviving direct edges, by fan x
    for (int i = 0; i < (int)N.edges.size(); ++i)
        if (N.edges[i].from == src) pool.push_back(i);
    std::sort(pool.begin(), pool.end(), [&](int a, int c) {
        return N.edges[a].polyline[1].x < N.edges[c].polyline[1].x;
    });

    auto tail = [](const Polyline& p) { return Polyline(p.begin() + 1, p.end()); };
    auto chord = [](const Polyline& a, const Polyline& b) {
        Polyline q{a[1]};
        q.insert(q.end(), b.begin() + 1, b.end());
        return q;
    };

    // fan slots occupied by planted stubs; a chord may not pass over one
    std::vector<Rat> stubx;
    auto clear_between = [&](const Rat& lo, const Rat& hi) {
        for (const Rat& s : stubx)
            if (lo < s && s < hi) return false;
        return true;
    };

    std::uniform_int_distribution<int> kind(0, 2);
    while (count > 0 && !pool.empty()) {
        --count;
        int k = kind(g);
        if (k != 1 && pool.size() < 2) k = 1;
        if (k == 1) {
            std::uniform_int_distribution<int> at(0, (int)pool.size() - 1);
            int pi = at(g);
            NetEdge e = N.edges[pool[pi]];
            Point F = e.polyline[1];
            // dip halfway into the wedge below the fan segment
            Point mid{(sp.x + F.x) / 2, F.y / 2 - (F.x - sp.x) / (2 * n)};
            int u = (int)N.vertices.size();
            N.vertices.push_back({F, VertexRole::Black});
            Rat w1 = random_weight(g), w2 = random_weight(g);
            N.edges[pool[pi]] = {src, u, {sp, F}, w1, ""};
            N.edges.push_back({src, u, {sp, mid, F}, w2, ""});
            N.edges.push_back({u, e.to, tail(e.polyline), e.weight / (w1 + w2), ""});
            stubx.push_back(F.x);
            pool.erase(pool.begin() + pi);
            continue;
        }
        std::uniform_int_distribution<int> at(0, (int)pool.size() - 2);
        int pi = at(g);
        NetEdge e1 = N.edges[pool[pi]], e2 = N.edges[pool[pi + 1]];
        Point F1 = e1.polyline[1], F2 = e2.polyline[1];
        if (!clear_between(F1.x, F2.x)) continue;  // chord would hit a stub
        if (k == 0) {
            int u = (int)N.vertices.size();
            N.vertices.push_back({F1, VertexRole::White});
            Rat x = random_weight(g);
            N.edges[pool[pi]] = {src, u, {sp, F1}, x, ""};
            N.edges[pool[pi + 1]] = {u, e1.to, tail(e1.polyline), e1.weight / x, ""};
            N.edges.push_back({u, e2.to, chord(e1.polyline, e2.polyline), e2.weight / x, ""});
        } else {
            int w = (int)N.vertices.size();
            N.vertices.push_back({F1, VertexRole::White});
            int u = (int)N.vertices.size();
            N.vertices.push_back({F2, VertexRole::Black});
            Rat a = random_weight(g), f = random_weight(g), e = random_weight(g);
            N.edges[pool[pi]] = {src, w, {sp, F1}, a, ""};
            N.edges[pool[pi + 1]] = {src, u, {sp, F2}, e, ""};
            N.edges.push_back({w, e1.to, tail(e1.polyline), e1.weight / a, ""});
            N.edges.push_back({w, u, {F1, F2}, f, ""});
            N.edges.push_back({u, e2.to, tail(e2.polyline), e2.weight / (a * f + e), ""});
        }
        stubx.push_back(F1.x);
        stubx.push_back(F2.x);
        pool.erase(pool.begin() + pi, pool.begin() + pi + 2);
    }
}

} // namespace vartop
