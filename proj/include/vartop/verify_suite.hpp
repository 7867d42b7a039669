#pragma once
// The verification battery behind `verify all` and the acceptance binary.
// Every entry re-derives one of the load-bearing facts of the library from
// scratch and reports pass/fail plus a line of context. A single cap knob
// trims the sweep widths so a quick run and the full battery share code.

#include "homology.hpp"
#include "manifold.hpp"
#include "morse.hpp"
#include "netgen.hpp"
#include "pivot.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace vartop {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyCaps {
    int nmax = 7;                // ceiling on every n sweep
    int reduction_nets = 200;    // seeded networks in the move-soundness sweep
    int realize_samples = 1000;  // random nets per (n, b) in the bound sweep
};

namespace checks {

// Markers for sweep failures: append once, keep checking other cases.
inline void note(std::string& detail, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
}

inline Check poset_shape(const VerifyCaps&) {
    Check c{"closure poset of three coordinates, variation two"};
    auto V = build_var_poset(3, 2);
    bool ok = V.cells.size() == 13 && V.poset.covers().size() == 24 &&
              weight_profile(V) == std::vector<long long>{0, 3, 6, 4};
    auto le = [&](const char* a, const char* b) {
        return V.poset.le(V.index_of(SignVector::parse(a)),
                          V.index_of(SignVector::parse(b)));
    };
    // relations read off the Hasse diagram, including a non-relation
    ok = ok && le("+00", "++0") && !le("+00", "0+-") && le("0+0", "+-0") &&
         le("00+", "0-+") && !le("++0", "+-0");
    FinitePoset B = adjoin_bounds(V.poset, true, false);
    for (int i = 0; ok && i < V.poset.size(); ++i)
        ok = is_boolean_interval(B, 0, i + 1);
    c.pass = ok;
    c.detail = "13 cells, 24 covers, weights 3/6/4, boolean lower intervals";
    if (!ok) c.detail = "shape or relations differ from the hand enumeration";
    return c;
}

inline Check cell_counts(const VerifyCaps& caps) {
    Check c{"cell counts against direct enumeration"};
    c.pass = true;
    long long cells = 0;
    for (int n = 1; n <= std::min(7, caps.nmax); ++n)
        for (int m = 0; m < n; ++m) {
            auto prof = weight_profile(build_var_poset(n, m));
            // every length-n pattern over {-,0,+}, first nonzero positive
            std::vector<long long> brute(n + 1, 0);
            std::vector<int> v(n, 0);
            while (true) {
                int i = n - 1;
                while (i >= 0 && v[i] == 2) v[i--] = 0;
                if (i < 0) break;
                ++v[i];
                std::vector<int> raw(n);
                int first = 0, w = 0, var = 0, last = 0;
                for (int j = 0; j < n; ++j) {
                    raw[j] = v[j] - 1;
                    if (raw[j] != 0 && first == 0) first = raw[j];
                    if (raw[j] != 0) {
                        ++w;
                        if (last != 0 && raw[j] != last) ++var;
                        last = raw[j];
                    }
                }
                if (first == 1 && var <= m) ++brute[w];
            }
            if (prof != brute || prof != formula_profile(n, m)) {
                c.pass = false;
                note(c.detail, "mismatch at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
            }
            for (long long k : prof) cells += k;
        }
    if (c.pass)
        c.detail = std::to_string(cells) + " cells across all (n, m) agree "
                                           "with the formula and brute force";
    return c;
}

inline Check euler_parity(const VerifyCaps& caps) {
    Check c{"euler characteristic decided by variation parity"};
    c.pass = true;
    for (int n = 1; n <= std::min(7, caps.nmax); ++n)
        for (int m = 0; m < n; ++m) {
            auto V = build_var_poset(n, m);
            long long want = m % 2 == 0 ? 1 : 0;
            if (euler_from_cells(V) != want || euler_from_chains(V) != want) {
                c.pass = false;
                note(c.detail, "chi off at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
            }
        }
    if (c.pass) c.detail = "cells and chains both give 1 (m even), 0 (m odd)";
    return c;
}

inline Check betti_numbers(const VerifyCaps& caps) {
    Check c{"betti numbers over Q and F3"};
    c.pass = true;
    for (int n = 1; n <= std::min(5, caps.nmax); ++n)
        for (int m = 0; m < n; ++m)
            for (const char* f : {"Q", "F3"})
                if (!verify_projective_betti(n, m, FieldSpec::parse(f))) {
                    c.pass = false;
                    note(c.detail, std::string("betti off at n=") +
                                       std::to_string(n) + " m=" +
                                       std::to_string(m) + " over " + f);
                }
    if (c.pass) c.detail = "beta_0 = 1 and beta_m = [m odd], nothing else";
    return c;
}

inline Check collapse_survivors(const VerifyCaps& caps) {
    Check c{"collapse matchings are acyclic and leave the tail poset"};
    c.pass = true;
    {
        auto M = lemma_matching(build_var_poset(3, 1), 0);
        if (M.pairs.size() != 4 || !M.unmatched.empty()) {
            c.pass = false;
            note(c.detail, "first-stage matching at (3,1) is not 4 clean pairs");
        }
    }
    for (int n = 2; n <= std::min(7, caps.nmax); ++n)
        for (int m = 0; m + 1 < n; ++m) {
            auto V = build_var_poset(n, m);
            auto C = collapse_sequence(V);
            for (const auto& st : C.stages) {
                auto rep = verify_acyclic(V.poset, st.matching.pairs,
                                          st.matching.domain);
                if (!rep.pass) {
                    c.pass = false;
                    note(c.detail, "cycle at n=" + std::to_string(n) + " m=" +
                                       std::to_string(m) + " stage " +
                                       std::to_string(st.stage));
                }
            }
            long long want = 1;
            for (int i = 0; i <= m; ++i) want *= 3;
            want = (want - 1) / 2;
            bool tail = (long long)C.survivors.size() == want;
            for (int id : C.survivors) {
                const SignVector& w = V.cells[id];
                for (int i = 0; i < n - m - 1; ++i)
                    if (w.entry(i) != 0) tail = false;
            }
            if (!tail) {
                c.pass = false;
                note(c.detail, "survivors at n=" + std::to_string(n) + " m=" +
                                   std::to_string(m) +
                                   " are not the last-coordinates copy");
            }
        }
    if (c.pass)
        c.detail = "every stage acyclic; survivors are the cells on the "
                   "last m+1 coordinates";
    return c;
}

inline Check pivot_shellings(const VerifyCaps& caps) {
    Check c{"pivot orders: cut bijection, recursive coatom orders, links"};
    c.pass = true;
    for (int n = 1; n <= std::min(7, caps.nmax); ++n) {
        std::vector<SignVector> full;
        for (auto& w : SignVector::enumerate(n, n - 1))
            if (w.weight() == n) full.push_back(w);
        for (int i = 0; i < n; ++i) {
            std::set<std::vector<int>> seen;
            for (auto& w : full) {
                auto cuts = phi_cuts(i, w);
                if ((int)cuts.size() != w.var() || phi_inverse(n, i, cuts) != w)
                    c.pass = false;
                seen.insert(cuts);
            }
            if (seen.size() != full.size()) c.pass = false;
        }
        if (!c.pass) {
            note(c.detail, "cut map broke at n=" + std::to_string(n));
            break;
        }
    }
    for (int n = 1; c.pass && n <= std::min(6, caps.nmax); ++n)
        for (int m = 0; m < n; ++m)
            for (int i = 0; i < n; ++i)
                if (!verify_upset_rco(n, m, i).pass) {
                    c.pass = false;
                    note(c.detail, "coatom order fails at n=" +
                                       std::to_string(n) + " m=" +
                                       std::to_string(m) + " i=" +
                                       std::to_string(i));
                }
    long long links = 0;
    for (int n = 2; c.pass && n <= std::min(4, caps.nmax); ++n)
        for (int m = 0; m < n; ++m) {
            auto V = build_var_poset(n, m);
            auto K = build_order_complex(V);
            std::vector<int> ch;
            std::function<void()> sweep = [&]() {
                Bits F(V.poset.size());
                for (int x : ch) F.set(x);
                F.trim();
                ++links;
                if (search_shelling(K.link(F)).outcome !=
                    SearchOutcome::WITNESS) {
                    c.pass = false;
                    note(c.detail, "unshellable link at n=" +
                                       std::to_string(n) + " m=" +
                                       std::to_string(m));
                }
                int last = ch.back();
                for (int j = 0; c.pass && j < V.poset.size(); ++j)
                    if (V.poset.lt(last, j)) {
                        ch.push_back(j);
                        sweep();
                        ch.pop_back();
                    }
            };
            for (int i = 0; c.pass && i < V.poset.size(); ++i) {
                ch = {i};
                sweep();
            }
        }
    if (c.pass && caps.nmax >= 3) {
        // the whole space at (3, 2) must come back provably unshellable
        auto r = search_shelling(build_order_complex(build_var_poset(3, 2)));
        if (r.outcome != SearchOutcome::EXHAUSTED) {
            c.pass = false;
            note(c.detail, "search on the (3,2) space did not exhaust");
        }
    }
    if (c.pass)
        c.detail = "cut map bijective, every upset order recursive, " +
                   std::to_string(links) +
                   " face links shellable, (3,2) space is not";
    return c;
}

inline Check manifold_links(const VerifyCaps& caps) {
    Check c{"face links classify as balls and spheres"};
    c.pass = true;
    for (int n = 1; n <= std::min(5, caps.nmax); ++n)
        for (int m = 0; m < n; ++m) {
            auto cert = verify_manifold(n, m);
            // the ridge census reads "closed" as S^0 in dimension zero, so
            // the single point at n = 1 sits outside that equivalence
            bool closed_ok = n == 1 || cert.closed == (m == n - 1);
            if (!cert.pass || cert.unknown != 0 || !closed_ok) {
                c.pass = false;
                note(c.detail, "link sweep failed at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m) + ": " +
                                   cert.detail);
            }
        }
    if (c.pass)
        c.detail = "no unknown links; closed exactly at full variation";
    return c;
}

inline Check reisner_parity(const VerifyCaps& caps) {
    Check c{"depth criterion over Q, F3 and F5"};
    c.pass = true;
    for (int n = 1; n <= std::min(5, caps.nmax); ++n)
        for (int m = 0; m < n; ++m) {
            auto K = build_order_complex(build_var_poset(n, m));
            for (const char* f : {"Q", "F3", "F5"}) {
                bool want = m % 2 == 0 || m == n - 1;
                if (reisner_cm(K, FieldSpec::parse(f)).is_cm != want) {
                    c.pass = false;
                    note(c.detail, std::string("verdict off at n=") +
                                       std::to_string(n) + " m=" +
                                       std::to_string(m) + " over " + f);
                }
            }
        }
    if (c.pass) c.detail = "Cohen-Macaulay exactly when m is even or maximal";
    return c;
}

// the two-source annulus specimen with one cut and symbolic weights
inline std::pair<SurfaceWithCuts, EmbeddedNetwork> annulus_specimen() {
    Rat h(1, 2), f(7, 5);
    SurfaceWithCuts S(
        {{0, 3}, {-2, 2}, {-3, 0}, {-2, -2}, {0, -3}, {2, -2}, {3, 0}, {2, 2}},
        {{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}}, {{{0, 3}, {0, 1}}},
        Point{-1, Rat(5) / 2});
    EmbeddedNetwork N;
    N.vertices = {
        {{-2, 2}, VertexRole::Source}, {{-2, -2}, VertexRole::Sink},
        {{2, -2}, VertexRole::Source}, {{h, h}, VertexRole::Sink},
        {{-f, f}, VertexRole::White},  {{-f, -f}, VertexRole::Black},
        {{f, -f}, VertexRole::White},  {{f, f}, VertexRole::Black},
    };
    int ends[8][2] = {{0, 4}, {5, 1}, {2, 6}, {7, 3},
                      {4, 7}, {4, 5}, {6, 5}, {6, 7}};
    for (int i = 0; i < 8; ++i)
        N.edges.push_back({ends[i][0], ends[i][1],
                           {N.vertices[ends[i][0]].pos, N.vertices[ends[i][1]].pos},
                           1, "x" + std::to_string(i + 1)});
    return {std::move(S), std::move(N)};
}

inline Check annulus_measurement(const VerifyCaps&) {
    Check c{"annulus specimen measures to the expected matrix"};
    auto [S, N] = annulus_specimen();
    validate_network(S, N);
    auto M = measure_symbolic(S, N);
    SymbolicSum one{{{}, 1}}, zero;
    auto mono = [](std::initializer_list<const char*> xs) {
        Monomial m;
        for (const char* x : xs) m.push_back(x);
        return SymbolicSum{{m, 1}};
    };
    std::vector<std::vector<SymbolicSum>> want = {
        {one, mono({"x1", "x2", "x6"}), zero, mono({"x1", "x4", "x5"})},
        {zero, mono({"x2", "x3", "x7"}), one, mono({"x3", "x4", "x8"})}};
    c.pass = M.row_vertex == std::vector<int>{0, 2} &&
             M.col_vertex == std::vector<int>{0, 1, 2, 3} && M.entry == want;
    if (!c.pass) {
        c.detail = "symbolic matrix came out different";
        return c;
    }
    // numeric runs at random positive weights must equal the substitution
    Rng g(7);
    for (int trial = 0; trial < 20 && c.pass; ++trial) {
        std::map<std::string, Rat> val;
        EmbeddedNetwork Nw = N;
        for (auto& e : Nw.edges) {
            val[e.symbol] = random_weight(g);
            e.weight = val[e.symbol];
            e.symbol.clear();
        }
        auto Mn = measure_numeric(S, Nw);
        for (size_t r = 0; r < want.size(); ++r)
            for (size_t j = 0; j < want[r].size(); ++j) {
                Rat sum = 0;
                for (auto& [m, coef] : want[r][j]) {
                    Rat term = coef;
                    for (auto& x : m) term *= val[x];
                    sum += term;
                }
                if (Mn.entry[r][j] != sum) c.pass = false;
            }
    }
    if (c.pass)
        c.detail = "entries are the path monomials; 20 numeric evaluations agree";
    else
        c.detail = "numeric evaluation disagrees with the symbolic matrix";
    return c;
}

inline Check reduction_soundness(const VerifyCaps& caps) {
    Check c{"reduction moves preserve signs and the reroute identity"};
    c.pass = true;
    long long moves = 0, reroutes = 0;
    for (int seed = 0; seed < caps.reduction_nets && c.pass; ++seed) {
        Rng g((unsigned)seed);
        std::uniform_int_distribution<int> nd(3, std::max(3, std::min(6, caps.nmax))),
            bd(1, 3);
        Realization R = random_net(nd(g), bd(g), g);
        plant_junctions(R.net, 4, g);
        EmbeddedNetwork N = R.net;
        int src = the_one_source(N);
        auto col = [](const NumericMatrix& M, int vid) -> const Rat* {
            for (size_t j = 0; j < M.col_vertex.size(); ++j)
                if (M.col_vertex[j] == vid) return &M.entry[0][j];
            return nullptr;
        };
        while (c.pass) {
            auto cand = applicable_moves(N);
            if (cand.empty()) break;
            NumericMatrix before = measure_numeric(R.surface, N);
            std::uniform_int_distribution<int> pd(0, (int)cand.size() - 1);
            int ei = cand[pd(g)];
            size_t nedges = N.edges.size();
            int kp = apply_move(R.surface, N, ei);
            ++moves;
            NumericMatrix after = measure_numeric(R.surface, N);
            for (size_t j = 0; j < before.col_vertex.size(); ++j) {
                const Rat* a = col(after, before.col_vertex[j]);
                if (!a || sgn(*a) != sgn(before.entry[0][j])) c.pass = false;
            }
            if (!c.pass) {
                note(c.detail, "sign flipped at seed " + std::to_string(seed));
                break;
            }
            if (kp < 0) continue;
            ++reroutes;
            // b = c + (c - around) * c_{k'}, where around drops the new
            // through edge; with everything funneled this is b (1 + c_{k'}) = c
            size_t ti = N.edges.size() - 2;
            if (N.edges.size() != nedges - 1 || N.edges[ti].from != src ||
                N.edges[ti + 1].to != kp) {
                c.pass = false;
                note(c.detail, "unexpected reroute layout at seed " +
                                   std::to_string(seed));
                break;
            }
            EmbeddedNetwork cut = N;
            cut.edges.erase(cut.edges.begin() + (long)ti);
            NumericMatrix around = measure_numeric(R.surface, cut);
            const Rat* ck = col(after, kp);
            for (size_t j = 0; j < before.col_vertex.size(); ++j) {
                int vid = before.col_vertex[j];
                Rat cv = *col(after, vid), av = *col(around, vid);
                if (before.entry[0][j] != cv + (cv - av) * *ck) {
                    c.pass = false;
                    note(c.detail, "reroute identity broke at seed " +
                                       std::to_string(seed));
                }
            }
        }
        if (!c.pass) break;
        NumericMatrix fin = measure_numeric(R.surface, N);
        NumericMatrix first = measure_numeric(R.surface, R.net);
        for (size_t j = 0; j < first.col_vertex.size(); ++j) {
            const Rat* f = col(fin, first.col_vertex[j]);
            if (!f || sgn(*f) != sgn(first.entry[0][j])) {
                c.pass = false;
                note(c.detail, "terminal signs differ at seed " +
                                   std::to_string(seed));
            }
        }
    }
    if (c.pass)
        c.detail = std::to_string(moves) + " moves checked, " +
                   std::to_string(reroutes) + " reroutes with exact identity";
    return c;
}

inline Check realize_bound(const VerifyCaps& caps) {
    Check c{"every admissible sign vector is realized, none beyond the bound"};
    c.pass = true;
    long long realized = 0, rejected = 0;
    for (int n = 1; n <= std::min(5, caps.nmax) && c.pass; ++n)
        for (int b = 1; b <= 3 && c.pass; ++b) {
            int bound = std::min(2 * (b - 1), n - 1);
            for (auto& w : SignVector::enumerate(n, n - 1)) {
                std::vector<int> target(n);
                for (int i = 0; i < n; ++i) target[i] = w.entry(i);
                if (w.var() > bound) {
                    try {
                        realize(target, b);
                        c.pass = false;
                        note(c.detail, "bound ignored for " + w.str());
                    } catch (const Error& e) {
                        if (e.code != "VariationTooHigh") {
                            c.pass = false;
                            note(c.detail, "wrong rejection for " + w.str());
                        }
                        ++rejected;
                    }
                    continue;
                }
                Realization R = realize(target, b);
                auto M = measure_numeric(R.surface, R.net);
                auto sv = sign_vector(M);
                for (size_t j = 0; j < M.col_vertex.size(); ++j)
                    if (sv[j] != target[M.col_vertex[j]]) {
                        c.pass = false;
                        note(c.detail, "realized signs differ for " + w.str());
                    }
                ++realized;
            }
            // random interior-free nets never step over the variation bound
            for (int t = 0; t < caps.realize_samples && c.pass; ++t) {
                Rng g((unsigned)(100000 + 1000 * n + 100 * b + t));
                Realization R = random_net(n, b, g);
                auto sv = sign_vector(measure_numeric(R.surface, R.net));
                int var = 0, last = 0;
                for (int s : sv) {
                    if (s == 0) continue;
                    if (last != 0 && s != last) ++var;
                    last = s;
                }
                if (var > bound) {
                    c.pass = false;
                    note(c.detail, "sampled net exceeds the bound at n=" +
                                       std::to_string(n) + " b=" +
                                       std::to_string(b));
                }
            }
        }
    if (c.pass)
        c.detail = std::to_string(realized) + " vectors realized, " +
                   std::to_string(rejected) + " rejected, samples within bound";
    return c;
}

} // namespace checks

inline std::vector<Check> verify_all(const VerifyCaps& caps = {}) {
    using checker = Check (*)(const VerifyCaps&);
    const std::pair<const char*, checker> order[] = {
        {"poset shape", checks::poset_shape},
        {"cell counts", checks::cell_counts},
        {"euler parity", checks::euler_parity},
        {"betti numbers", checks::betti_numbers},
        {"collapse survivors", checks::collapse_survivors},
        {"pivot shellings", checks::pivot_shellings},
        {"manifold links", checks::manifold_links},
        {"depth criterion", checks::reisner_parity},
        {"annulus measurement", checks::annulus_measurement},
        {"reduction soundness", checks::reduction_soundness},
        {"realize bound", checks::realize_bound},
    };
    std::vector<Check> out;
    for (auto [fallback, f] : order) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = f(caps);
        } catch (const std::exception& e) {
            c.name = fallback;
            c.pass = false;
            c.detail = std::string("threw: ") + e.what();
        }
        c.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace vartop
