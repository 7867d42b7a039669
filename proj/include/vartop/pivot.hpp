#pragma once
// Cut-set machinery for the coatom orderings of the upsets
// Q_i = { y : sgn(e_i) <= y } + top. A full-weight sign vector with a fixed
// sign at position i is encoded by the set of positions where adjacent
// entries flip sign, recording the position *farther* from i. Ordering those
// sets by "farther from i first, ties broken above-i first, then graded
// lexicographic" yields the coatom order whose recursive-coatom property the
// tests verify exhaustively.
//
// Positions are 0-based throughout; the CLI converts from the 1-based flags.

#include "rco.hpp"
#include "sign_vector.hpp"
#include "var_poset.hpp"

#include <cstdlib>
#include <vector>

namespace vartop {

// cut set of a full-weight vector: flips recorded at the entry farther from i
inline std::vector<int> phi_cuts(int i, const SignVector& w) {
    if (w.weight() != w.n()) throw Error("NotFullWeight");
    if (w.entry(i) == 0) throw Error("ZeroAtPivot");
    std::vector<int> cuts;
    for (int j = 0; j < i; ++j)
        if (w.entry(j) != w.entry(j + 1)) cuts.push_back(j);
    for (int j = i + 1; j < w.n(); ++j)
        if (w.entry(j) != w.entry(j - 1)) cuts.push_back(j);
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

// rebuild the vector from its cut set, signs pinned to + at the pivot
inline SignVector phi_inverse(int n, int i, const std::vector<int>& cuts) {
    std::vector<char> cut(n, 0);
    for (int c : cuts) {
        if (c == i || c < 0 || c >= n) throw Error("ContainsPivot");
        cut[c] = 1;
    }
    std::vector<int> raw(n, 0);
    raw[i] = 1;
    for (int j = i + 1; j < n; ++j) raw[j] = cut[j] ? -raw[j - 1] : raw[j - 1];
    for (int j = i - 1; j >= 0; --j) raw[j] = cut[j] ? -raw[j + 1] : raw[j + 1];
    return SignVector::normalize(raw);
}

// position order: p before q when p sits farther from i, with the tie
// between i+d and i-d going to i+d
inline bool pos_less_i(int i, int p, int q) {
    int a = p - i, b = q - i;
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a > 0 && b < 0;
}

// graded lexicographic extension to cut sets
inline bool cuts_less_i(int i, std::vector<int> A, std::vector<int> B) {
    for (int x : A)
        if (x == i) throw Error("ContainsPivot");
    for (int x : B)
        if (x == i) throw Error("ContainsPivot");
    if (A.size() != B.size()) return A.size() < B.size();
    auto cmp = [i](int p, int q) { return pos_less_i(i, p, q); };
    std::sort(A.begin(), A.end(), cmp);
    std::sort(B.begin(), B.end(), cmp);
    for (size_t k = 0; k < A.size(); ++k)
        if (A[k] != B[k]) return cmp(A[k], B[k]);
    return false;
}

// all full-weight vectors with var <= m, sorted by their cut sets; these are
// the coatoms of Q_i, in the order the recursive-coatom check consumes
inline std::vector<SignVector> coatom_order(int n, int m, int i) {
    std::vector<SignVector> full;
    for (auto& w : SignVector::enumerate(n, n - 1))
        if (w.weight() == n && w.var() <= m) full.push_back(w);
    std::sort(full.begin(), full.end(), [&](const SignVector& a, const SignVector& b) {
        return cuts_less_i(i, phi_cuts(i, a), phi_cuts(i, b));
    });
    return full;
}

// the zero entries of x, filled outward from i by copying the neighbor on
// the i side; among coatoms above x this one has the smallest cut set
inline SignVector greedy_fill(int i, const SignVector& x) {
    if (x.entry(i) == 0) throw Error("ZeroAtPivot");
    std::vector<int> raw(x.n());
    for (int j = 0; j < x.n(); ++j) raw[j] = x.entry(j);
    for (int j = i + 1; j < x.n(); ++j)
        if (raw[j] == 0) raw[j] = raw[j - 1];
    for (int j = i - 1; j >= 0; --j)
        if (raw[j] == 0) raw[j] = raw[j + 1];
    return SignVector::normalize(raw);
}

struct UpsetPoset {
    FinitePoset poset;          // upset elements plus an adjoined top
    std::vector<int> cell_of;   // poset id -> index into V.cells (-1 for top)
    int bot = -1, top = -1;
    std::vector<int> coatoms;   // poset ids in pivot order
};

// bounded poset on { y : x <= y } + top, coatoms ordered by the pivot rules.
// `pivot` must be a nonzero position of x; any such position works and the
// caller picks deterministically.
inline UpsetPoset build_upset(const VarPoset& V, const SignVector& x, int pivot) {
    if (x.entry(pivot) == 0) throw Error("ZeroAtPivot");
    int xi = V.index_of(x);
    if (xi < 0) throw Error("NotAnElement", x.str());
    UpsetPoset U;
    auto sub = V.poset.induced(V.poset.upset(xi));
    FinitePoset with_top = adjoin_bounds(sub.poset, false, true);
    U.poset = std::move(with_top);
    U.cell_of.assign(U.poset.size(), -1);
    for (int k = 0; k < (int)sub.orig.size(); ++k) U.cell_of[k] = sub.orig[k];
    U.top = U.poset.size() - 1;
    for (int k = 0; k < (int)sub.orig.size(); ++k)
        if (sub.orig[k] == xi) U.bot = k;
    // coatoms: full-weight cells above x, sorted by cut sets at the pivot
    std::vector<std::pair<SignVector, int>> cs;
    for (int d : U.poset.down(U.top)) cs.push_back({V.cells[U.cell_of[d]], d});
    std::sort(cs.begin(), cs.end(), [&](auto& a, auto& b) {
        return cuts_less_i(pivot, phi_cuts(pivot, a.first), phi_cuts(pivot, b.first));
    });
    for (auto& [w, d] : cs) U.coatoms.push_back(d);
    return U;
}

// recursive-coatom verdict for Q_i = upset of sgn(e_i)
inline RcoResult verify_upset_rco(int n, int m, int i) {
    VarPoset V = build_var_poset(n, m);
    std::vector<int> raw(n, 0);
    raw[i] = 1;
    UpsetPoset Q = build_upset(V, SignVector::normalize(raw), i);
    return verify_recursive_coatom_ordering(Q.poset, Q.bot, Q.top, Q.coatoms);
}

} // namespace vartop
