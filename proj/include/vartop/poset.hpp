#pragma once
// Finite posets given by their Hasse diagram. Construction validates that
// the cover list really is one: the cover digraph must be acyclic and
// transitively reduced. Comparability queries go through precomputed
// reachability bitsets, so le() is O(1) after an O(N * covers / 64) setup.

#include "bits.hpp"
#include "error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vartop {

class FinitePoset {
public:
    FinitePoset() = default;

    FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers)
        : labels_(std::move(labels)), covers_(std::move(covers)) {
        int n = (int)labels_.size();
        up_.assign(n, {});
        down_.assign(n, {});
        for (auto& [lo, hi] : covers_) {
            if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
                throw Error("BadCover", "cover endpoints out of range");
            up_[lo].push_back(hi);
            down_[hi].push_back(lo);
        }
        for (int i = 0; i < n; ++i) {
            std::sort(up_[i].begin(), up_[i].end());
            std::sort(down_[i].begin(), down_[i].end());
        }
        topo_ = toposort();
        // reach_up[i] = { j : i <= j }, filled against topological order
        reach_up_.assign(n, Bits(n ? n : 1));
        for (int k = n - 1; k >= 0; --k) {
            int x = topo_[k];
            reach_up_[x].set(x);
            for (int y : up_[x]) reach_up_[x] |= reach_up_[y];
        }
        reach_dn_.assign(n, Bits(n ? n : 1));
        for (int k = 0; k < n; ++k) {
            int x = topo_[k];
            reach_dn_[x].set(x);
            for (int y : down_[x]) reach_dn_[x] |= reach_dn_[y];
        }
        // transitive reduction: no cover may be implied by a longer path
        for (auto& [lo, hi] : covers_)
            for (int mid : up_[lo])
                if (mid != hi && le(mid, hi))
                    throw Error("NotReduced",
                                "cover " + labels_[lo] + " < " + labels_[hi] +
                                    " is implied via " + labels_[mid]);
    }

    int size() const { return (int)labels_.size(); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& up(int i) const { return up_[i]; }
    const std::vector<int>& down(int i) const { return down_[i]; }
    const std::vector<int>& topo() const { return topo_; }

    bool le(int a, int b) const { return reach_up_[a].test(b); }
    bool lt(int a, int b) const { return a != b && le(a, b); }
    const Bits& upset(int a) const { return reach_up_[a]; }   // includes a
    const Bits& downset(int a) const { return reach_dn_[a]; } // includes a

    int find(const std::string& lbl) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == lbl) return i;
        return -1;
    }

    std::vector<int> minimal() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (down_[i].empty()) out.push_back(i);
        return out;
    }
    std::vector<int> maximal() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (up_[i].empty()) out.push_back(i);
        return out;
    }

    // longest chain size minus one
    int length() const {
        std::vector<int> h(size(), 0);
        int best = 0;
        for (int k = 0; k < size(); ++k) {
            int x = topo_[k];
            for (int y : down_[x]) h[x] = std::max(h[x], h[y] + 1);
            best = std::max(best, h[x]);
        }
        return best;
    }

    struct Sub; // induced subposet plus the index map back to the parent

    // closed interval [x, y]; covers of the interval are exactly the parent
    // covers between its elements (any witness to non-reduction would itself
    // lie in the interval)
    Sub interval(int x, int y) const;
    Sub open_interval(int x, int y) const;
    // induced subposet on an *order-convex* element set (intervals, upsets,
    // downsets); convexity is what keeps the restricted covers covers
    Sub induced(const Bits& keep) const;

    // number of chains with exactly s elements, s = 1..length+1, computed by
    // dynamic programming; avoids materializing the chains themselves
    std::vector<long long> chain_counts() const {
        int n = size(), L = length() + 1;
        std::vector<long long> f(L + 1, 0);
        // ways[x] for current s: chains of size s ending at x
        std::vector<long long> ways(n, 1), next(n);
        f[1] = n;
        for (int s = 2; s <= L; ++s) {
            std::fill(next.begin(), next.end(), 0);
            for (int k = 0; k < n; ++k) {
                int x = topo_[k];
                long long acc = 0;
                reach_dn_[x].for_each([&](int y) {
                    if (y != x) acc += ways[y];
                });
                next[x] = acc;
                f[s] += acc;
            }
            ways.swap(next);
        }
        return f; // f[0] unused
    }

    // all maximal chains (saturated, min to max), as element-index lists
    std::vector<std::vector<int>> maximal_chains() const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        for (int s : minimal()) dfs_chains(s, cur, out);
        return out;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> topo_;
    std::vector<Bits> reach_up_, reach_dn_;

    std::vector<int> toposort() const {
        int n = size();
        std::vector<int> indeg(n, 0), order;
        for (auto& [lo, hi] : covers_) ++indeg[hi];
        std::vector<int> queue;
        for (int i = 0; i < n; ++i)
            if (!indeg[i]) queue.push_back(i);
        for (size_t q = 0; q < queue.size(); ++q) {
            int x = queue[q];
            order.push_back(x);
            for (int y : up_[x])
                if (--indeg[y] == 0) queue.push_back(y);
        }
        if ((int)order.size() != n) throw Error("CyclicCovers", "cover digraph has a cycle");
        return order;
    }

    void dfs_chains(int x, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) const {
        cur.push_back(x);
        if (up_[x].empty()) out.push_back(cur);
        else
            for (int y : up_[x]) dfs_chains(y, cur, out);
        cur.pop_back();
    }
};

struct FinitePoset::Sub {
    FinitePoset poset;
    std::vector<int> orig; // sub index -> parent index
};

inline FinitePoset::Sub FinitePoset::induced(const Bits& keep) const {
    Sub s;
    std::vector<int> idx(size(), -1);
    keep.for_each([&](int i) {
        idx[i] = (int)s.orig.size();
        s.orig.push_back(i);
    });
    std::vector<std::string> lbl;
    lbl.reserve(s.orig.size());
    for (int i : s.orig) lbl.push_back(labels_[i]);
    std::vector<std::pair<int, int>> cov;
    for (auto& [lo, hi] : covers_)
        if (idx[lo] >= 0 && idx[hi] >= 0) cov.push_back({idx[lo], idx[hi]});
    s.poset = FinitePoset(std::move(lbl), std::move(cov));
    return s;
}

inline FinitePoset::Sub FinitePoset::interval(int x, int y) const {
    if (!le(x, y)) throw Error("NotComparable", labels_[x] + " !<= " + labels_[y]);
    return induced(reach_up_[x] & reach_dn_[y]);
}

inline FinitePoset::Sub FinitePoset::open_interval(int x, int y) const {
    if (!le(x, y)) throw Error("NotComparable");
    Bits keep = reach_up_[x] & reach_dn_[y];
    keep.reset(x);
    keep.reset(y);
    return induced(keep);
}

// ordinal sum: everything in lo below everything in hi
inline FinitePoset join_posets(const FinitePoset& lo, const FinitePoset& hi) {
    std::vector<std::string> labels;
    for (int i = 0; i < lo.size(); ++i) labels.push_back(lo.label(i));
    for (int i = 0; i < hi.size(); ++i) {
        if (lo.find(hi.label(i)) >= 0)
            throw Error("LabelCollision", hi.label(i));
        labels.push_back(hi.label(i));
    }
    std::vector<std::pair<int, int>> covers = lo.covers();
    for (auto [a, b] : hi.covers()) covers.push_back({a + lo.size(), b + lo.size()});
    for (int a : lo.maximal())
        for (int b : hi.minimal()) covers.push_back({a, b + lo.size()});
    return FinitePoset(std::move(labels), std::move(covers));
}

} // namespace vartop
