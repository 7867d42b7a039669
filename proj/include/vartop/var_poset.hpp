#pragma once
// The closure poset of bounded-variation cells: all normalized sign vectors
// of length n with var <= m, ordered by zeroing entries (up to sign). Its
// order complex is the barycentric-subdivision model everything else in the
// project works on.

#include "complex.hpp"
#include "poset.hpp"
#include "sign_vector.hpp"

#include <map>
#include <vector>

namespace vartop {

struct VarPoset {
    int n = 0, m = 0;
    std::vector<SignVector> cells; // weight-graded order, aligned with poset ids
    FinitePoset poset;

    int index_of(const SignVector& v) const {
        auto it = std::lower_bound(cells.begin(), cells.end(), v);
        if (it == cells.end() || !(*it == v)) return -1;
        return (int)(it - cells.begin());
    }
};

inline VarPoset build_var_poset(int n, int m) {
    if (n < 1 || m < 0 || m > n - 1)
        throw Error("BadRange", "need n >= 1 and 0 <= m <= n-1");
    VarPoset V;
    V.n = n;
    V.m = m;
    V.cells = SignVector::enumerate(n, m);
    std::map<std::uint64_t, int> idx;
    for (int i = 0; i < (int)V.cells.size(); ++i) idx[V.cells[i].key()] = i;
    std::vector<std::string> labels;
    labels.reserve(V.cells.size());
    for (auto& c : V.cells) labels.push_back(c.str());
    std::vector<std::pair<int, int>> covers;
    for (int b = 0; b < (int)V.cells.size(); ++b) {
        if (V.cells[b].weight() < 2) continue;
        std::uint32_t s = V.cells[b].support();
        while (s) {
            int i = std::countr_zero(s);
            s &= s - 1;
            covers.push_back({idx.at(V.cells[b].zeroed(i).key()), b});
        }
    }
    V.poset = FinitePoset(std::move(labels), std::move(covers));
    return V;
}

inline std::vector<long long> weight_profile(const VarPoset& V) {
    std::vector<long long> prof(V.n + 1, 0);
    for (auto& c : V.cells) ++prof[c.weight()];
    return prof;
}

// closed-form cell count per weight: C(n,w) * sum_{v <= min(m, w-1)} C(w-1, v)
inline std::vector<long long> formula_profile(int n, int m) {
    auto binom = [](int a, int b) -> long long {
        if (b < 0 || b > a) return 0;
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::vector<long long> prof(n + 1, 0);
    for (int w = 1; w <= n; ++w) {
        long long s = 0;
        for (int v = 0; v <= std::min(m, w - 1); ++v) s += binom(w - 1, v);
        prof[w] = binom(n, w) * s;
    }
    return prof;
}

// Euler characteristic straight from the cell structure
inline long long euler_from_cells(const VarPoset& V) {
    long long chi = 0;
    for (auto& c : V.cells) chi += (c.weight() - 1) % 2 ? -1 : 1;
    return chi;
}

// ... and from the chain counts of the order complex (no materialization)
inline long long euler_from_chains(const VarPoset& V) {
    auto f = V.poset.chain_counts();
    long long chi = 0;
    for (int s = 1; s < (int)f.size(); ++s) chi += (s % 2 ? 1 : -1) * f[s];
    return chi;
}

inline SimplicialComplex build_order_complex(const VarPoset& V) {
    return order_complex(V.poset);
}

// bounded companion posets used by interval and coatom-order machinery
inline FinitePoset adjoin_bounds(const FinitePoset& P, bool bottom, bool top,
                                 const std::string& bot_label = "0^",
                                 const std::string& top_label = "1^") {
    std::vector<std::string> labels;
    int shift = bottom ? 1 : 0;
    if (bottom) labels.push_back(bot_label);
    for (int i = 0; i < P.size(); ++i) labels.push_back(P.label(i));
    if (top) labels.push_back(top_label);
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : P.covers()) covers.push_back({a + shift, b + shift});
    if (bottom)
        for (int x : P.minimal()) covers.push_back({0, x + shift});
    if (top) {
        int t = (int)labels.size() - 1;
        for (int x : P.maximal()) covers.push_back({x + shift, t});
    }
    return FinitePoset(std::move(labels), std::move(covers));
}

} // namespace vartop
