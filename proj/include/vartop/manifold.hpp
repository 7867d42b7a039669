#pragma once
// Ball/sphere classification of every face link of the order complex.
//
// The link of a chain x_1 < ... < x_t factors as the join of the order
// complexes of the open intervals (bottom, x_1), (x_1, x_2), ..., (x_t, top).
// Each factor gets an explicit facet order out of its recursive coatom
// ordering (closed intervals are Boolean; the top factor uses the pivot
// order), the join takes the lexicographic product order, and the result is
// validated by check_shelling before anything is claimed. If that ever
// failed, the budgeted backtracking search is the fallback; classification
// is by the ridge census of the shelled pseudomanifold.

#include "pivot.hpp"
#include "shelling_search.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace vartop {

struct ManifoldCertificate {
    int n = 0, m = 0;
    bool pass = false;
    long long spheres = 0, balls = 0, unknown = 0, faces_checked = 0;
    bool global_pseudo = false; // normal pseudomanifold conditions on the space
    bool closed = false;        // every ridge in exactly two facets
    std::string detail;
};

class LinkClassifier {
public:
    LinkClassifier(const VarPoset& V, long long budget = 10'000'000)
        : V_(V), K_(build_order_complex(V)), budget_(budget) {}

    const SimplicialComplex& complex() const { return K_; }

    // facet order for the order complex of the open interval (lo, hi),
    // lo = -1 meaning the adjoined bottom, hi = -1 the adjoined top
    const std::vector<Bits>& interval_order(int lo, int hi) {
        auto key = std::make_pair(lo, hi);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<Bits> out;
        if (lo >= 0 && hi >= 0) {
            auto sub = V_.poset.open_interval(lo, hi);
            out = lift(bw_bounded(adjoin_bounds(sub.poset, true, true)), sub.orig);
        } else if (lo < 0) {
            auto sub = V_.poset.induced(V_.poset.downset(hi));
            FinitePoset B = adjoin_bounds(sub.poset, true, false);
            // bounded poset [bottom, hi]; chains come out without endpoints
            int bot = 0, top = 0;
            for (int k = 0; k < B.size(); ++k)
                if (B.label(k) == V_.poset.label(hi)) top = k;
            std::vector<int> coatoms = detail::interval_coatoms(B, bot, top);
            std::vector<Bits> chains = rco_shelling_order(B, bot, top, coatoms);
            out = lift_shifted(chains, sub.orig, 1);
        } else {
            const SignVector& x = V_.cells[lo];
            int pivot = 0;
            while (x.entry(pivot) == 0) ++pivot;
            UpsetPoset U = build_upset(V_, x, pivot);
            std::vector<Bits> chains =
                rco_shelling_order(U.poset, U.bot, U.top, U.coatoms);
            std::vector<Bits> mapped;
            for (auto& ch : chains) {
                Bits b(V_.poset.size());
                ch.for_each([&](int id) { b.set(U.cell_of[id]); });
                b.trim();
                mapped.push_back(std::move(b));
            }
            out = std::move(mapped);
        }
        return cache_.emplace(key, std::move(out)).first->second;
    }

    SimplicialComplex link_of(const std::vector<int>& chain) const {
        return K_.link(to_bits(chain));
    }

    // classification of lk(F) for a nonempty chain F (poset ids)
    BallOrSphere classify(const std::vector<int>& chain, const SimplicialComplex& lk) {
        if (lk.dim() <= 0) {
            // a point or a pair of points; counts decide
            if ((int)lk.facets().size() == 1) return BallOrSphere::BALL;
            if ((int)lk.facets().size() == 2) return BallOrSphere::SPHERE;
            throw Error("NotPseudomanifold", "0-dim link with bad facet count");
        }
        std::vector<int> order = joined_order(chain, lk);
        if (!order.empty() && !check_shelling(lk, order)) {
            return is_closed_pseudomanifold(lk) ? BallOrSphere::SPHERE
                                                : BallOrSphere::BALL;
        }
        // fall back to the budgeted search; never guess on failure
        return classify_ball_or_sphere(lk, budget_);
    }

private:
    const VarPoset& V_;
    SimplicialComplex K_;
    long long budget_;
    std::map<std::pair<int, int>, std::vector<Bits>> cache_;

    Bits to_bits(const std::vector<int>& chain) const {
        Bits b(V_.poset.size());
        for (int x : chain) b.set(x);
        b.trim();
        return b;
    }

    static std::vector<int> bounded_ends(const FinitePoset& B, int& bot, int& top) {
        bot = B.minimal().front();
        top = B.maximal().front();
        return detail::interval_coatoms(B, bot, top);
    }

    std::vector<Bits> bw_bounded(const FinitePoset& B) {
        int bot, top;
        std::vector<int> coatoms = bounded_ends(B, bot, top);
        return rco_shelling_order(B, bot, top, coatoms);
    }

    // chains over a bounded sub-poset -> parent ids; `shift` strips adjoined
    // elements that sit in front of the sub ids
    static std::vector<Bits> lift_shifted(const std::vector<Bits>& chains,
                                          const std::vector<int>& orig, int shift) {
        std::vector<Bits> out;
        out.reserve(chains.size());
        for (auto& ch : chains) {
            Bits b;
            ch.for_each([&](int id) { b.set(orig[id - shift]); });
            b.trim();
            out.push_back(std::move(b));
        }
        return out;
    }
    static std::vector<Bits> lift(const std::vector<Bits>& chains,
                                  const std::vector<int>& orig) {
        return lift_shifted(chains, orig, 1);
    }

    // lexicographic product of the factor orders, translated to facet
    // indices of lk; empty result signals a mismatch (caller falls back)
    std::vector<int> joined_order(const std::vector<int>& chain,
                                  const SimplicialComplex& lk) {
        std::vector<const std::vector<Bits>*> factors;
        factors.push_back(&interval_order(-1, chain.front()));
        for (size_t k = 0; k + 1 < chain.size(); ++k)
            factors.push_back(&interval_order(chain[k], chain[k + 1]));
        factors.push_back(&interval_order(chain.back(), -1));
        std::unordered_map<Bits, int, BitsHash> facet_id;
        for (int i = 0; i < (int)lk.facets().size(); ++i)
            facet_id[lk.facets()[i]] = i;
        std::vector<int> order;
        std::vector<size_t> pos(factors.size(), 0);
        // odometer over factor indices, leftmost factor most significant
        while (true) {
            Bits combo;
            for (size_t f = 0; f < factors.size(); ++f) combo |= (*factors[f])[pos[f]];
            combo.trim();
            auto it = facet_id.find(combo);
            if (it == facet_id.end()) return {};
            order.push_back(it->second);
            size_t f = factors.size();
            while (f-- > 0) {
                if (++pos[f] < factors[f]->size()) break;
                pos[f] = 0;
                if (f == 0) {
                    if (order.size() != lk.facets().size()) return {};
                    return order;
                }
            }
        }
    }
};

inline ManifoldCertificate verify_manifold(int n, int m, long long budget = 10'000'000,
                                           bool force = false) {
    if (n > 5 && !force)
        throw Error("BadRange", "n > 5 needs force (all-faces link classification)");
    ManifoldCertificate cert;
    cert.n = n;
    cert.m = m;
    VarPoset V = build_var_poset(n, m);
    LinkClassifier cls(V, budget);
    const SimplicialComplex& K = cls.complex();
    cert.global_pseudo = check_pseudomanifold(K, true).pass(true);
    cert.closed = is_closed_pseudomanifold(K);
    bool dims_ok = true;
    // iterate chains directly off the poset rather than generating bitset
    // faces and recovering their order
    std::vector<std::vector<int>> all_chains;
    std::vector<int> cur;
    std::function<void(int)> emit = [&](int x) {
        cur.push_back(x);
        all_chains.push_back(cur);
        V.poset.upset(x).for_each([&](int y) {
            if (y != x) emit(y);
        });
        cur.pop_back();
    };
    for (int x = 0; x < V.poset.size(); ++x) emit(x);
    for (auto& chain : all_chains) {
        if ((int)chain.size() == n) continue; // facet; nothing to classify
        ++cert.faces_checked;
        SimplicialComplex lk = cls.link_of(chain);
        if (lk.dim() != n - 1 - (int)chain.size()) dims_ok = false;
        switch (cls.classify(chain, lk)) {
        case BallOrSphere::SPHERE: ++cert.spheres; break;
        case BallOrSphere::BALL: ++cert.balls; break;
        case BallOrSphere::UNKNOWN:
            ++cert.unknown;
            if (cert.detail.empty()) {
                cert.detail = "unclassified link of chain";
                for (int c : chain) cert.detail += " " + V.poset.label(c);
            }
            break;
        }
    }
    cert.pass = cert.global_pseudo && dims_ok && cert.unknown == 0;
    if (!dims_ok && cert.detail.empty()) cert.detail = "link dimension mismatch";
    return cert;
}

} // namespace vartop
