#pragma once
// Matchings on the closure poset that drive the collapse down to the
// smallest coordinate block. Cells whose first nonzero sits at `lead` are
// paired by toggling the entry just past their maximal alternating run:
// a zero there is filled with a copy of its neighbor, a nonzero copy is
// erased. Reversing the paired cover edges leaves the Hasse digraph acyclic,
// which is what makes the pairing a valid collapse step.

#include "var_poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace vartop {

// length of the maximal strictly alternating nonzero run starting at lead
inline int alt_run(const SignVector& w, int lead) {
    if (w.entry(lead) == 0) throw Error("ZeroAtPivot");
    int len = 1;
    while (lead + len < w.n() && w.entry(lead + len) == -w.entry(lead + len - 1)) ++len;
    return len;
}

// partner cell: toggle the entry right after the alternating run between
// zero and a copy of the run's last sign
inline SignVector morse_partner(const SignVector& w, int lead) {
    int pos = lead + alt_run(w, lead);
    if (pos >= w.n()) throw Error("BadRange", "alternating run exhausts the vector");
    std::vector<int> raw(w.n());
    for (int j = 0; j < w.n(); ++j) raw[j] = w.entry(j);
    raw[pos] = raw[pos] == 0 ? raw[pos - 1] : 0;
    return SignVector::normalize(raw);
}

struct MorseMatching {
    std::vector<std::pair<int, int>> pairs; // (lower, higher) poset ids
    std::vector<int> domain;                // ids the matching is meant to cover
    std::vector<int> unmatched;             // domain ids without a partner
};

// ids of the cells whose first nonzero coordinate is exactly `lead`
inline std::vector<int> stage_domain(const VarPoset& V, int lead) {
    std::vector<int> out;
    for (int i = 0; i < (int)V.cells.size(); ++i) {
        const SignVector& c = V.cells[i];
        bool hit = c.entry(lead) != 0;
        for (int k = 0; hit && k < lead; ++k) hit = c.entry(k) == 0;
        if (hit) out.push_back(i);
    }
    return out;
}

// the pairing on { x : first nonzero at lead }; needs m < n - lead - 1 so
// the alternating run can't swallow the whole suffix
inline MorseMatching lemma_matching(const VarPoset& V, int lead = 0) {
    if (lead < 0 || V.m >= V.n - lead - 1)
        throw Error("BadRange", "matching needs m < n - lead - 1");
    MorseMatching M;
    M.domain = stage_domain(V, lead);
    Bits hit(V.poset.size());
    for (int i : M.domain) {
        const SignVector& w = V.cells[i];
        SignVector p = morse_partner(w, lead);
        int pi = V.index_of(p);
        if (pi < 0) throw Error("NotAnElement", p.str());
        if (w.weight() < p.weight()) {
            M.pairs.push_back({i, pi});
            hit.set(i);
            hit.set(pi);
        }
    }
    for (int i : M.domain)
        if (!hit.test(i)) M.unmatched.push_back(i);
    return M;
}

struct AcyclicReport {
    bool pass = true;
    std::vector<int> cycle; // ids along a directed cycle, when found
};

// Hasse digraph with cover edges pointing down, matched edges reversed to
// point up; the matching is acyclic when this digraph has no directed cycle
inline AcyclicReport verify_acyclic(const FinitePoset& P,
                                    const std::vector<std::pair<int, int>>& pairs,
                                    const std::vector<int>& domain) {
    Bits dom(P.size());
    for (int x : domain) dom.set(x);
    std::vector<int> mate(P.size(), -1);
    for (auto [lo, hi] : pairs) {
        if (!dom.test(lo) || !dom.test(hi)) throw Error("NotAMatching", "pair leaves domain");
        bool cover = false;
        for (int u : P.up(lo)) cover = cover || u == hi;
        if (!cover) throw Error("NotAMatching", "pair is not a cover edge");
        if (mate[lo] >= 0 || mate[hi] >= 0) throw Error("NotAMatching", "element paired twice");
        mate[lo] = hi;
        mate[hi] = lo;
    }
    std::vector<std::vector<int>> adj(P.size());
    for (auto [lo, hi] : P.covers()) {
        if (!dom.test(lo) || !dom.test(hi)) continue;
        if (mate[lo] == hi) adj[lo].push_back(hi);
        else adj[hi].push_back(lo);
    }
    // iterative three-color DFS; a back edge closes a cycle along the stack
    std::vector<char> color(P.size(), 0);
    std::vector<int> stack, where(P.size(), -1);
    AcyclicReport rep;
    std::function<bool(int)> dfs = [&](int u) {
        color[u] = 1;
        where[u] = (int)stack.size();
        stack.push_back(u);
        for (int v : adj[u]) {
            if (color[v] == 1) {
                rep.pass = false;
                rep.cycle.assign(stack.begin() + where[v], stack.end());
                return true;
            }
            if (color[v] == 0 && dfs(v)) return true;
        }
        stack.pop_back();
        color[u] = 2;
        return false;
    };
    for (int x : domain)
        if (color[x] == 0 && dfs(x)) break;
    return rep;
}

struct MorseFunction {
    std::vector<long long> value; // per poset id
    Bits critical;
};

// cells outside Q keep their dimension as value; Q cells get positions in a
// linear extension that runs against the matched edges, shifted above n so
// the sweep at level n peels Q off in one motion
inline MorseFunction build_morse_function(const VarPoset& V) {
    int n = V.n, N = V.poset.size();
    MorseFunction F;
    F.value.assign(N, 0);
    F.critical = Bits(N);
    if (V.m == n - 1) {
        for (int i = 0; i < N; ++i) {
            F.value[i] = V.cells[i].weight() - 1;
            F.critical.set(i);
        }
        return F;
    }
    MorseMatching M = lemma_matching(V, 0);
    Bits inQ(N);
    for (int x : M.domain) inQ.set(x);
    std::vector<int> mate(N, -1);
    for (auto [lo, hi] : M.pairs) {
        mate[lo] = hi;
        mate[hi] = lo;
    }
    // want g(lo) < g(hi) on plain covers and g(hi) < g(lo) on matched ones
    std::vector<std::vector<int>> adj(N);
    std::vector<int> indeg(N, 0);
    for (auto [lo, hi] : V.poset.covers()) {
        if (!inQ.test(lo) || !inQ.test(hi)) continue;
        int a = lo, b = hi;
        if (mate[lo] == hi) std::swap(a, b);
        adj[a].push_back(b);
        ++indeg[b];
    }
    auto later = [&](int a, int b) { return V.cells[a].str() > V.cells[b].str(); };
    std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
    for (int x : M.domain)
        if (indeg[x] == 0) ready.push(x);
    long long g = 0, placed = 0;
    for (; !ready.empty(); ++g) {
        int u = ready.top();
        ready.pop();
        ++placed;
        F.value[u] = g + n + 1; // C = n + 1 puts all of Q above the sweep line
        for (int v : adj[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (placed != (long long)M.domain.size())
        throw Error("CyclicCovers", "matched digraph has a cycle");
    for (int i = 0; i < N; ++i)
        if (!inQ.test(i)) {
            F.value[i] = V.cells[i].weight() - 1;
            F.critical.set(i);
        }
    return F;
}

// both discrete-Morse counts at every cell: faces valued >= the cell, and
// cofaces valued <= it; a Morse function keeps each count at most one
inline bool check_morse_inequalities(const VarPoset& V, const MorseFunction& F) {
    for (int i = 0; i < V.poset.size(); ++i) {
        int down = 0, up = 0;
        for (int d : V.poset.down(i)) down += F.value[d] >= F.value[i];
        for (int u : V.poset.up(i)) up += F.value[u] <= F.value[i];
        if (down > 1 || up > 1) return false;
        if ((down + up == 0) != F.critical.test(i)) return false;
    }
    return true;
}

struct CollapseStage {
    int stage = 0; // n, n-1, ..., m+2; the pivot coordinate is n - stage
    MorseMatching matching;
};

struct Collapse {
    int n = 0, m = 0;
    std::vector<CollapseStage> stages;
    std::vector<int> survivors; // poset ids never matched, in id order
};

// peel coordinates from the front until only the last m+1 remain
inline Collapse collapse_sequence(const VarPoset& V) {
    Collapse C;
    C.n = V.n;
    C.m = V.m;
    Bits matched(V.poset.size());
    for (int lead = 0; lead <= V.n - V.m - 2; ++lead) {
        CollapseStage st;
        st.stage = V.n - lead;
        st.matching = lemma_matching(V, lead);
        for (auto [lo, hi] : st.matching.pairs) {
            matched.set(lo);
            matched.set(hi);
        }
        C.stages.push_back(std::move(st));
    }
    for (int i = 0; i < V.poset.size(); ++i)
        if (!matched.test(i)) C.survivors.push_back(i);
    return C;
}

} // namespace vartop
