#pragma once
// Backtracking search for shelling orders, with memoized dead states.
// Feasibility of a placement depends only on the *set* of facets placed so
// far (the union complex), so failed sets are cached and each set expands at
// most once. EXHAUSTED is only reported when the search space was fully
// swept within budget; TIMEOUT claims nothing.

#include "complex.hpp"

#include <optional>
#include <unordered_set>
#include <vector>

namespace vartop {

enum class SearchOutcome { WITNESS, EXHAUSTED, TIMEOUT };

struct ShellingSearchResult {
    SearchOutcome outcome = SearchOutcome::EXHAUSTED;
    std::vector<int> order;   // valid only for WITNESS
    long long expanded = 0;
};

namespace detail {

struct ShellingDFS {
    const std::vector<Bits>& facets;
    int fsz;
    long long budget, expanded = 0;
    std::vector<std::vector<Bits>> inter;  // pairwise intersections
    std::vector<std::vector<char>> is_ridge;
    std::unordered_set<Bits, BitsHash> dead;
    std::vector<int> stack;
    bool timed_out = false;

    ShellingDFS(const std::vector<Bits>& fs, long long b) : facets(fs), budget(b) {
        int t = (int)fs.size();
        fsz = t ? fs[0].count() : 0;
        inter.assign(t, std::vector<Bits>(t));
        is_ridge.assign(t, std::vector<char>(t, 0));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (i != j) {
                    inter[i][j] = fs[i] & fs[j];
                    is_ridge[i][j] = inter[i][j].count() == fsz - 1;
                }
    }

    bool feasible(int c, const std::vector<int>& placed) const {
        // every nonempty intersection with a placed facet must lie inside a
        // codim-1 intersection with some placed facet
        bool any = false;
        for (int i : placed) {
            if (!inter[c][i].any()) continue;
            any = true;
            if (is_ridge[c][i]) continue;
            bool covered = false;
            for (int j : placed)
                if (is_ridge[c][j] && inter[c][i].subset_of(inter[c][j])) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return any;
    }

    bool dfs(Bits& placed_set) {
        if ((int)stack.size() == (int)facets.size()) return true;
        if (dead.contains(placed_set)) return false;
        if (++expanded > budget) {
            timed_out = true;
            return false;
        }
        for (int c = 0; c < (int)facets.size(); ++c) {
            if (placed_set.test(c)) continue;
            if (!stack.empty() && !feasible(c, stack)) continue;
            stack.push_back(c);
            placed_set.set(c);
            if (dfs(placed_set)) return true;
            if (timed_out) return false;
            placed_set.reset(c);
            stack.pop_back();
        }
        dead.insert(placed_set);
        return false;
    }
};

} // namespace detail

inline ShellingSearchResult search_shelling(const SimplicialComplex& K,
                                            long long budget = 10'000'000) {
    if (!K.pure()) throw Error("NotPure");
    ShellingSearchResult res;
    if (K.facets().size() <= 1 || K.dim() == 0) {
        // single facet or a 0-dimensional complex: any order works
        res.outcome = SearchOutcome::WITNESS;
        for (int i = 0; i < (int)K.facets().size(); ++i) res.order.push_back(i);
        return res;
    }
    detail::ShellingDFS dfs(K.facets(), budget);
    Bits placed((int)K.facets().size());
    bool found = dfs.dfs(placed);
    res.expanded = dfs.expanded;
    if (found) {
        res.outcome = SearchOutcome::WITNESS;
        res.order = dfs.stack;
    } else {
        res.outcome = dfs.timed_out ? SearchOutcome::TIMEOUT : SearchOutcome::EXHAUSTED;
    }
    return res;
}

enum class BallOrSphere { SPHERE, BALL, UNKNOWN };

// ridge census: true when every ridge lies in exactly two facets
inline bool is_closed_pseudomanifold(const SimplicialComplex& K) {
    std::unordered_map<Bits, int, BitsHash> ridge_count;
    for (auto& f : K.facets()) {
        auto vs = f.to_vector();
        for (int drop : vs) {
            Bits r = f;
            r.reset(drop);
            r.trim();
            ++ridge_count[r];
        }
    }
    for (auto& [r, c] : ridge_count)
        if (c != 2) return false;
    return true;
}

// a shellable pseudomanifold is a PL ball or PL sphere; with a shelling
// witness in hand the two are told apart by whether the boundary is empty
inline BallOrSphere classify_ball_or_sphere(const SimplicialComplex& K,
                                            long long budget = 10'000'000,
                                            std::vector<int>* witness = nullptr) {
    if (!check_pseudomanifold(K, false).pass(false)) throw Error("NotPseudomanifold");
    auto res = search_shelling(K, budget);
    if (res.outcome != SearchOutcome::WITNESS) return BallOrSphere::UNKNOWN;
    if (witness) *witness = res.order;
    return is_closed_pseudomanifold(K) ? BallOrSphere::SPHERE : BallOrSphere::BALL;
}

} // namespace vartop
