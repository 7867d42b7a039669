#pragma once
// Simplicial complexes stored by their facet list (vertex bitsets). Faces
// are derived on demand. Includes order complexes of posets, links,
// pseudomanifold conditions and the shelling-condition checker.

#include "bits.hpp"
#include "error.hpp"
#include "poset.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace vartop {

class SimplicialComplex {
public:
    SimplicialComplex() : nverts_(0) {}

    SimplicialComplex(int nverts, std::vector<Bits> facets) : nverts_(nverts) {
        // canonical form: dedupe, drop dominated faces, sort
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        bool equal_sizes = true;
        for (auto& f : facets) equal_sizes = equal_sizes && f.count() == facets[0].count();
        if (equal_sizes) {
            facets_ = std::move(facets);
            return;
        }
        for (auto& f : facets) {
            bool dominated = false;
            for (auto& g : facets)
                if (!(f == g) && f.subset_of(g)) { dominated = true; break; }
            if (!dominated) facets_.push_back(f);
        }
    }

    int nverts() const { return nverts_; }
    const std::vector<Bits>& facets() const { return facets_; }
    bool empty() const { return facets_.empty(); }

    int dim() const {
        int d = -1;
        for (auto& f : facets_) d = std::max(d, f.count() - 1);
        return d;
    }
    bool pure() const {
        int d = dim();
        for (auto& f : facets_)
            if (f.count() - 1 != d) return false;
        return true;
    }

    bool is_face(const Bits& F) const {
        for (auto& g : facets_)
            if (F.subset_of(g)) return true;
        return false;
    }

    // lk(F): maximal faces are facet \ F over facets containing F
    SimplicialComplex link(const Bits& F) const {
        if (!F.any()) return *this; // lk(empty) is the complex itself
        if (!is_face(F)) throw Error("NotAFace");
        std::vector<Bits> lf;
        for (auto& g : facets_)
            if (F.subset_of(g)) lf.push_back(g.minus(F));
        return SimplicialComplex(nverts_, std::move(lf));
    }

    // all faces grouped by dimension (index d holds the d-faces)
    std::vector<std::vector<Bits>> faces_by_dim() const {
        std::unordered_set<Bits, BitsHash> seen;
        std::vector<std::vector<Bits>> out(std::max(dim() + 1, 0));
        // descend from each facet through all nonempty subsets
        for (auto& f : facets_) {
            std::vector<int> vs = f.to_vector();
            int k = (int)vs.size();
            for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
                Bits face;
                for (int b = 0; b < k; ++b)
                    if (mask >> b & 1) face.set(vs[b]);
                face.trim();
                if (seen.insert(face).second)
                    out[std::popcount(mask) - 1].push_back(face);
            }
        }
        for (auto& level : out) std::sort(level.begin(), level.end());
        return out;
    }

    std::vector<long long> f_vector() const {
        auto fb = faces_by_dim();
        std::vector<long long> f;
        for (auto& level : fb) f.push_back((long long)level.size());
        return f;
    }

    long long euler() const {
        auto f = f_vector();
        long long chi = 0;
        for (size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * f[d];
        return chi;
    }

    // connectivity of the underlying graph, restricted to used vertices
    bool connected() const {
        if (facets_.empty()) return true;
        std::unordered_map<int, int> parent;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto& f : facets_)
            f.for_each([&](int v) { parent.emplace(v, v); });
        for (auto& f : facets_) {
            auto vs = f.to_vector();
            for (size_t i = 1; i < vs.size(); ++i)
                parent[find(vs[i])] = find(vs[0]);
        }
        int root = -1;
        for (auto& [v, _] : parent) {
            if (root < 0) root = find(v);
            else if (find(v) != root) return false;
        }
        return true;
    }

private:
    int nverts_;
    std::vector<Bits> facets_;
};

// vertices of Delta(P) are the elements of P, faces its chains, facets its
// maximal chains
inline SimplicialComplex order_complex(const FinitePoset& P) {
    std::vector<Bits> facets;
    for (auto& ch : P.maximal_chains()) {
        Bits f(P.size());
        for (int x : ch) f.set(x);
        f.trim();
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(P.size(), std::move(facets));
}

// simplicial join; K's vertices keep their ids, L's are shifted up by
// K.nverts(). The empty complex is treated as the join identity.
inline SimplicialComplex join_complexes(const SimplicialComplex& K,
                                        const SimplicialComplex& L) {
    if (K.empty()) {
        std::vector<Bits> shifted;
        for (auto& g : L.facets()) {
            Bits h;
            g.for_each([&](int v) { h.set(v + K.nverts()); });
            h.trim();
            shifted.push_back(std::move(h));
        }
        return SimplicialComplex(K.nverts() + L.nverts(), std::move(shifted));
    }
    if (L.empty()) return SimplicialComplex(K.nverts() + L.nverts(), K.facets());
    std::vector<Bits> facets;
    for (auto& f : K.facets())
        for (auto& g : L.facets()) {
            Bits h = f;
            g.for_each([&](int v) { h.set(v + K.nverts()); });
            h.trim();
            facets.push_back(std::move(h));
        }
    return SimplicialComplex(K.nverts() + L.nverts(), std::move(facets));
}

struct PseudoReport {
    bool pure = false;
    bool ridges_ok = false;     // every ridge in at most two facets
    bool links_connected = true; // only checked when `normal` was requested
    std::string violation;      // human-readable witness on failure
    bool pass(bool normal) const {
        return pure && ridges_ok && (!normal || links_connected);
    }
};

inline PseudoReport check_pseudomanifold(const SimplicialComplex& K, bool normal) {
    PseudoReport rep;
    rep.pure = K.pure();
    if (!rep.pure) {
        rep.violation = "not pure";
        return rep;
    }
    int d = K.dim();
    // ridge incidence counts
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
    rep.ridges_ok = true;
    for (auto& [r, c] : ridge_count)
        if (c > 2) {
            rep.ridges_ok = false;
            rep.violation = "ridge in " + std::to_string(c) + " facets";
            break;
        }
    if (normal && rep.ridges_ok) {
        // links of faces of dimension < d-2 must be connected, empty face
        // included (its link is the whole complex)
        if (!K.connected()) {
            rep.links_connected = false;
            rep.violation = "complex disconnected";
            return rep;
        }
        for (auto& level : K.faces_by_dim()) {
            for (auto& F : level) {
                if (F.count() - 1 >= d - 2) continue;
                if (!K.link(F).connected()) {
                    rep.links_connected = false;
                    rep.violation = "disconnected link";
                    return rep;
                }
            }
        }
    }
    return rep;
}

// shelling condition: each facet must meet the union of its predecessors in
// a pure complex of codimension one. Returns the first failing step, or
// nothing on success. Pure 0-dimensional complexes pass vacuously.
inline std::optional<int> check_shelling(const SimplicialComplex& K,
                                         const std::vector<int>& order) {
    if (!K.pure()) throw Error("NotPure");
    const auto& facets = K.facets();
    if (order.size() != facets.size()) throw Error("NotPermutation");
    {
        std::vector<char> seen(facets.size(), 0);
        for (int i : order) {
            if (i < 0 || i >= (int)facets.size() || seen[i]) throw Error("NotPermutation");
            seen[i] = 1;
        }
    }
    int fsz = K.dim() + 1;
    if (fsz <= 1) return std::nullopt;
    for (size_t j = 1; j < order.size(); ++j) {
        const Bits& fj = facets[order[j]];
        // maximal pairwise intersections with earlier facets must all have
        // exactly fsz-1 vertices
        std::vector<Bits> inters;
        for (size_t i = 0; i < j; ++i) {
            Bits x = fj & facets[order[i]];
            if (x.any()) inters.push_back(std::move(x));
        }
        if (inters.empty()) return (int)j;
        for (auto& x : inters) {
            if (x.count() == fsz - 1) continue;
            bool maximal = true;
            for (auto& y : inters)
                if (!(x == y) && x.subset_of(y)) { maximal = false; break; }
            if (maximal) return (int)j;
        }
    }
    return std::nullopt;
}

} // namespace vartop
