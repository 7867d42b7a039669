#pragma once
// Recursive coatom orderings on bounded posets.
//
// An ordering c_1..c_t of the coatoms of [bot, top] qualifies when
//  (1) each [bot, c_j] has a recursive coatom ordering in which the coatoms
//      shared with an earlier [bot, c_i] come first, and
//  (2) for i < j and x below both c_i and c_j there is k < j and a coatom d
//      of [bot, c_j] with x <= d <= c_k.
// Intervals that are Boolean lattices short-circuit the recursion: there any
// coatom ordering works, so only the shared-first constraint matters and it
// can always be met. The detector below checks Booleanness structurally
// instead of trusting the caller.
//
// From a verified ordering we also extract the induced facet order of the
// order complex of the open interval (chains sorted lexicographically by the
// coatom orderings, deepest interval first). That order is a shelling; the
// callers re-validate it with check_shelling rather than taking it on faith.

#include "poset.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace vartop {

inline bool is_boolean_interval(const FinitePoset& P, int bot, int top) {
    Bits elems = P.upset(bot) & P.downset(top);
    int count = elems.count();
    std::vector<int> atoms;
    for (int a : P.up(bot))
        if (P.le(a, top)) atoms.push_back(a);
    int r = (int)atoms.size();
    if (r > 20 || count != (1 << r)) return false;
    // atom support must be a poset isomorphism onto subsets of [r]
    std::vector<int> ids = elems.to_vector();
    std::vector<std::uint32_t> supp(ids.size(), 0);
    std::vector<bool> seen(1u << r, false);
    for (size_t k = 0; k < ids.size(); ++k) {
        for (int ai = 0; ai < r; ++ai)
            if (P.le(atoms[ai], ids[k])) supp[k] |= 1u << ai;
        if (seen[supp[k]]) return false;
        seen[supp[k]] = true;
    }
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = 0; b < ids.size(); ++b) {
            bool order = P.le(ids[a], ids[b]);
            bool subset = (supp[a] & ~supp[b]) == 0;
            if (order != subset) return false;
        }
    return true;
}

// supplies the coatom ordering to use for a sub-interval [bot, c]; `first`
// lists the coatoms that must come first (already computed by the checker).
// The default appends the remaining coatoms in index order, which is a valid
// recursive coatom ordering whenever the interval is Boolean.
using CoatomOracle =
    std::function<std::vector<int>(const FinitePoset&, int bot, int c,
                                   const std::vector<int>& first,
                                   const std::vector<int>& rest)>;

inline std::vector<int> shared_first_oracle(const FinitePoset&, int, int,
                                            const std::vector<int>& first,
                                            const std::vector<int>& rest) {
    std::vector<int> out = first;
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

struct RcoResult {
    bool pass = true;
    int at_j = -1, witness_x = -1; // failing step and element, poset indices
    std::string reason;
};

namespace detail {

inline std::vector<int> interval_coatoms(const FinitePoset& P, int bot, int top) {
    std::vector<int> cs;
    for (int d : P.down(top))
        if (P.le(bot, d)) cs.push_back(d);
    return cs;
}

inline int interval_length(const FinitePoset& P, int bot, int top) {
    // longest chain from bot to top, by DP over the interval
    Bits elems = P.upset(bot) & P.downset(top);
    std::vector<int> ids = elems.to_vector();
    std::vector<int> h(P.size(), -1);
    h[bot] = 0;
    for (int x : P.topo()) {
        if (!elems.test(x) || h[x] < 0) continue;
        for (int y : P.up(x))
            if (elems.test(y)) h[y] = std::max(h[y], h[x] + 1);
    }
    return h[top];
}

inline RcoResult verify_rco_rec(const FinitePoset& P, int bot, int top,
                                const std::vector<int>& order,
                                const CoatomOracle& oracle) {
    if (interval_length(P, bot, top) <= 1) return {};
    auto coatoms = interval_coatoms(P, bot, top);
    {
        std::vector<int> a = coatoms, b = order;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {false, -1, -1, "order is not a permutation of the coatoms"};
    }
    Bits botup = P.upset(bot);
    Bits early; // union of [bot, c_i] for i < j
    for (size_t j = 0; j < order.size(); ++j) {
        int cj = order[j];
        Bits below_cj = P.downset(cj) & botup;
        std::vector<int> first, rest;
        Bits covered;
        for (int d : interval_coatoms(P, bot, cj)) {
            if (early.test(d)) {
                first.push_back(d);
                covered |= P.downset(d) & botup;
            } else rest.push_back(d);
        }
        if (j > 0) {
            // (2): everything under c_j that was already under an earlier
            // coatom must be under a shared coatom of [bot, c_j]
            Bits need = below_cj & early;
            need = need.minus(covered);
            if (need.any()) {
                RcoResult res;
                res.pass = false;
                res.at_j = cj;
                res.witness_x = need.to_vector().front();
                res.reason = "element below earlier coatoms missed by shared coatoms";
                return res;
            }
        }
        // (1): recurse unless the interval is Boolean
        if (!is_boolean_interval(P, bot, cj)) {
            auto sub = oracle(P, bot, cj, first, rest);
            auto res = verify_rco_rec(P, bot, cj, sub, oracle);
            if (!res.pass) return res;
            // shared-first acceptance: the oracle order must open with
            // exactly the shared coatoms, in some order
            Bits fs;
            for (int d : first) fs.set(d);
            for (size_t k = 0; k < first.size(); ++k)
                if (!fs.test(sub[k]))
                    return {false, cj, sub[k], "shared coatoms are not first in sub-order"};
        }
        early |= below_cj;
    }
    return {};
}

} // namespace detail

inline RcoResult verify_recursive_coatom_ordering(
    const FinitePoset& P, int bot, int top, const std::vector<int>& order,
    const CoatomOracle& oracle = shared_first_oracle) {
    if (!P.le(bot, top)) throw Error("NotBounded");
    return detail::verify_rco_rec(P, bot, top, order, oracle);
}

// facet order of the order complex of the open interval (bot, top), induced
// by the coatom orderings. Chains come out as vertex sets over P's indices.
inline void rco_chain_order_rec(const FinitePoset& P, int bot, int top,
                                const std::vector<int>& order,
                                const CoatomOracle& oracle, Bits suffix,
                                std::vector<Bits>& out) {
    if (detail::interval_length(P, bot, top) <= 1) {
        out.push_back(suffix);
        return;
    }
    Bits early;
    std::vector<std::pair<int, std::pair<std::vector<int>, std::vector<int>>>> plan;
    for (int cj : order) {
        std::vector<int> first, rest;
        for (int d : detail::interval_coatoms(P, bot, cj)) {
            if (early.test(d)) first.push_back(d);
            else rest.push_back(d);
        }
        plan.push_back({cj, {first, rest}});
        early |= P.downset(cj) & P.upset(bot);
    }
    for (auto& [cj, fr] : plan) {
        Bits with = suffix;
        with.set(cj);
        auto sub = oracle(P, bot, cj, fr.first, fr.second);
        rco_chain_order_rec(P, bot, cj, sub, oracle, with, out);
    }
}

inline std::vector<Bits> rco_shelling_order(const FinitePoset& P, int bot, int top,
                                            const std::vector<int>& order,
                                            const CoatomOracle& oracle = shared_first_oracle) {
    std::vector<Bits> out;
    rco_chain_order_rec(P, bot, top, order, oracle, Bits(P.size()), out);
    return out;
}

} // namespace vartop
