#pragma once
// Betti numbers of simplicial complexes by sparse column reduction of the
// boundary matrices, plus the Reisner-criterion Cohen-Macaulay check that
// walks every link. beta_d = f_d - rank d_d - rank d_{d+1}; the reduced
// variant augments with the empty face, which just bumps rank d_0 to one.

#include "complex.hpp"
#include "field.hpp"
#include "var_poset.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vartop {

struct BettiVector {
    bool reduced = false;
    std::vector<long long> values; // index d holds beta_d, d = 0..dim
};

namespace detail {

template <class F>
using SparseCols = std::vector<std::vector<std::pair<int, typename F::elem_t>>>;

// columns sorted by row; rank by cancelling lowest entries against earlier
// pivot columns, the usual reduction that never needs row swaps
template <class F>
long long column_rank(const F& f, SparseCols<F> cols) {
    std::unordered_map<int, int> owner; // lowest row -> column holding it
    long long rank = 0;
    for (int c = 0; c < (int)cols.size(); ++c) {
        auto& col = cols[c];
        while (!col.empty()) {
            auto it = owner.find(col.back().first);
            if (it == owner.end()) {
                owner.emplace(col.back().first, c);
                ++rank;
                break;
            }
            const auto& pivot = cols[it->second];
            auto factor = f.div(col.back().second, pivot.back().second);
            std::vector<std::pair<int, typename F::elem_t>> merged;
            merged.reserve(col.size() + pivot.size());
            size_t i = 0, j = 0;
            while (i < col.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
                    merged.push_back(col[i++]);
                } else if (i == col.size() || pivot[j].first < col[i].first) {
                    auto v = f.neg(f.mul(factor, pivot[j].second));
                    if (!f.is_zero(v)) merged.push_back({pivot[j].first, std::move(v)});
                    ++j;
                } else {
                    auto v = f.sub(col[i].second, f.mul(factor, pivot[j].second));
                    if (!f.is_zero(v)) merged.push_back({col[i].first, std::move(v)});
                    ++i;
                    ++j;
                }
            }
            col = std::move(merged);
        }
    }
    return rank;
}

// boundary of each upper face: alternating signs over its vertices in
// ascending order, rows indexed into the sorted lower-face list
template <class F>
SparseCols<F> boundary_columns(const F& f, const std::vector<Bits>& lower,
                               const std::vector<Bits>& upper) {
    SparseCols<F> cols;
    cols.reserve(upper.size());
    for (auto& u : upper) {
        std::vector<std::pair<int, typename F::elem_t>> col;
        auto vs = u.to_vector();
        for (size_t j = 0; j < vs.size(); ++j) {
            Bits sub = u;
            sub.reset(vs[j]);
            sub.trim();
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            col.push_back({(int)(it - lower.begin()),
                           j % 2 ? f.neg(f.one()) : f.one()});
        }
        std::sort(col.begin(), col.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        cols.push_back(std::move(col));
    }
    return cols;
}

template <class F>
BettiVector betti_over(const F& f, const SimplicialComplex& K, bool reduced) {
    if (K.empty()) throw Error("EmptyComplex");
    auto faces = K.faces_by_dim();
    int D = K.dim();
    std::vector<long long> rank(D + 2, 0);
    for (int d = 1; d <= D; ++d)
        rank[d] = column_rank(f, boundary_columns(f, faces[d - 1], faces[d]));
    if (reduced) rank[0] = 1;
    BettiVector B;
    B.reduced = reduced;
    for (int d = 0; d <= D; ++d)
        B.values.push_back((long long)faces[d].size() - rank[d] - rank[d + 1]);
    return B;
}

// product of consecutive boundary maps, entry by entry; used as a law check
template <class F>
bool boundaries_square_to_zero(const F& f, const SimplicialComplex& K) {
    auto faces = K.faces_by_dim();
    for (int d = 2; d <= K.dim(); ++d) {
        auto lo = boundary_columns(f, faces[d - 2], faces[d - 1]);
        auto hi = boundary_columns(f, faces[d - 1], faces[d]);
        for (auto& col : hi) {
            std::unordered_map<int, typename F::elem_t> acc;
            for (auto& [mid, v] : col)
                for (auto& [row, w] : lo[mid]) {
                    auto it = acc.find(row);
                    if (it == acc.end()) acc.emplace(row, f.mul(v, w));
                    else it->second = f.add(it->second, f.mul(v, w));
                }
            for (auto& [row, v] : acc)
                if (!f.is_zero(v)) return false;
        }
    }
    return true;
}

} // namespace detail

inline BettiVector betti(const SimplicialComplex& K, const FieldSpec& spec,
                         bool reduced = false) {
    if (spec.rational) return detail::betti_over(Rationals{}, K, reduced);
    return detail::betti_over(PrimeField(spec.p), K, reduced);
}

inline bool boundaries_square_to_zero(const SimplicialComplex& K, const FieldSpec& spec) {
    if (spec.rational) return detail::boundaries_square_to_zero(Rationals{}, K);
    return detail::boundaries_square_to_zero(PrimeField(spec.p), K);
}

// expected unreduced Betti numbers of the variation-bounded space over any
// field of odd or zero characteristic: one class in degree 0, plus one in
// degree m when m is odd
inline std::vector<long long> projective_betti(int n, int m) {
    std::vector<long long> b(n, 0);
    b[0] = 1;
    if (m % 2 == 1) b[m] += 1;
    return b;
}

inline bool verify_projective_betti(int n, int m, const FieldSpec& spec) {
    if (!spec.rational && spec.p == 2)
        throw Error("CharTwo", "the homology pattern needs char != 2");
    auto K = build_order_complex(build_var_poset(n, m));
    return betti(K, spec).values == projective_betti(n, m);
}

struct CmReport {
    bool is_cm = true;
    std::optional<Bits> witness; // first face whose link has low homology
    int failing_degree = -1;
};

namespace detail {

template <class F>
bool link_clean(const F& f, const SimplicialComplex& K, const Bits& face, int& bad) {
    SimplicialComplex lk = face.any() ? K.link(face) : K;
    int d = lk.dim();
    if (d <= 0) return true; // nothing below the top reduced degree
    if (d == 1) {
        bad = 0;
        return lk.connected();
    }
    auto B = betti_over(f, lk, true);
    for (int i = 0; i < d; ++i)
        if (B.values[i] != 0) {
            bad = i;
            return false;
        }
    return true;
}

template <class F>
CmReport reisner_cm_over(const F& f, const SimplicialComplex& K) {
    CmReport rep;
    int bad = -1;
    if (!link_clean(f, K, Bits(K.nverts()), bad)) {
        rep.is_cm = false;
        rep.witness = Bits(K.nverts());
        rep.failing_degree = bad;
        return rep;
    }
    for (auto& level : K.faces_by_dim())
        for (auto& face : level)
            if (!link_clean(f, K, face, bad)) {
                rep.is_cm = false;
                rep.witness = face;
                rep.failing_degree = bad;
                return rep;
            }
    return rep;
}

} // namespace detail

inline CmReport reisner_cm(const SimplicialComplex& K, const FieldSpec& spec) {
    if (spec.rational) return detail::reisner_cm_over(Rationals{}, K);
    return detail::reisner_cm_over(PrimeField(spec.p), K);
}

struct CmRow {
    int n = 0, m = 0;
    std::string field;
    bool is_cm = false;
    bool expected = false; // m even or m = n-1
};

inline std::vector<CmRow> cm_table(int nmax, const std::vector<FieldSpec>& fields) {
    for (auto& f : fields)
        if (!f.rational && f.p == 2)
            throw Error("CharTwo", "the table asserts a char != 2 statement");
    std::vector<CmRow> rows;
    for (int n = 1; n <= nmax; ++n)
        for (int m = 0; m < n; ++m) {
            auto K = build_order_complex(build_var_poset(n, m));
            for (auto& f : fields) {
                CmRow r;
                r.n = n;
                r.m = m;
                r.field = f.name();
                r.is_cm = reisner_cm(K, f).is_cm;
                r.expected = m % 2 == 0 || m == n - 1;
                rows.push_back(std::move(r));
            }
        }
    return rows;
}

} // namespace vartop
