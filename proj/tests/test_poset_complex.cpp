#include <catch2/catch_amalgamated.hpp>
#include <vartop/complex.hpp>
#include <vartop/poset.hpp>
#include <vartop/rco.hpp>
#include <vartop/shelling_search.hpp>

#include <algorithm>

using namespace vartop;

namespace {

FinitePoset boolean_lattice(int r) {
    // subsets of {0..r-1}, index = bitmask, covers add one element
    std::vector<std::string> labels;
    for (int mask = 0; mask < (1 << r); ++mask) labels.push_back("s" + std::to_string(mask));
    std::vector<std::pair<int, int>> covers;
    for (int mask = 0; mask < (1 << r); ++mask)
        for (int b = 0; b < r; ++b)
            if (!(mask >> b & 1)) covers.push_back({mask, mask | (1 << b)});
    return FinitePoset(std::move(labels), std::move(covers));
}

Bits face(int n, std::initializer_list<int> vs) {
    Bits f(n);
    for (int v : vs) f.set(v);
    return f;
}

SimplicialComplex complex_of(int n, std::vector<std::vector<int>> facets) {
    std::vector<Bits> fs;
    for (auto& f : facets) {
        Bits b(n);
        for (int v : f) b.set(v);
        fs.push_back(std::move(b));
    }
    return SimplicialComplex(n, std::move(fs));
}

// face lattice of the square: bottom, 4 vertices, 4 edges, no top
FinitePoset square_face_poset() {
    std::vector<std::string> labels = {"o", "v0", "v1", "v2", "v3",
                                       "e01", "e12", "e23", "e30", "I"};
    std::vector<std::pair<int, int>> covers = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4},
        {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}, {4, 8}, {1, 8},
        {5, 9}, {6, 9}, {7, 9}, {8, 9}};
    return FinitePoset(std::move(labels), std::move(covers));
}

} // namespace

TEST_CASE("cover lists are validated at construction", "[poset]") {
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}), Error);
    // a<b<c plus the composite a<c is not transitively reduced
    CHECK_THROWS_AS(FinitePoset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), Error);
    CHECK_THROWS_AS(FinitePoset({"a"}, {{0, 3}}), Error);
    CHECK_NOTHROW(FinitePoset({"a", "b", "c"}, {{0, 1}, {1, 2}}));
}

TEST_CASE("comparability on the rank-three boolean lattice", "[poset]") {
    auto B = boolean_lattice(3);
    REQUIRE(B.size() == 8);
    CHECK(B.le(0b000, 0b101));
    CHECK(B.le(0b001, 0b011));
    CHECK(B.lt(0b001, 0b111));
    CHECK_FALSE(B.lt(0b001, 0b001));
    CHECK_FALSE(B.le(0b001, 0b110));
    CHECK_FALSE(B.le(0b011, 0b101));
    CHECK(B.minimal() == std::vector<int>{0});
    CHECK(B.maximal() == std::vector<int>{7});
    CHECK(B.length() == 3);
    CHECK(B.find("s5") == 5);
    CHECK(B.find("nope") == -1);
    CHECK(B.downset(0b011).to_vector() == std::vector<int>{0, 1, 2, 3});
    CHECK(B.upset(0b110).to_vector() == std::vector<int>{6, 7});
}

TEST_CASE("chain counts and maximal chains", "[poset]") {
    // diamond: o < a,b < t
    FinitePoset D({"o", "a", "b", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto f = D.chain_counts();
    REQUIRE(f.size() == 4);
    CHECK(f[1] == 4);
    CHECK(f[2] == 5); // four covers plus o < t
    CHECK(f[3] == 2);
    auto chains = D.maximal_chains();
    REQUIRE(chains.size() == 2);
    CHECK(chains[0] == std::vector<int>{0, 1, 3});
    CHECK(chains[1] == std::vector<int>{0, 2, 3});

    FinitePoset C({"a", "b", "c"}, {{0, 1}, {1, 2}});
    auto g = C.chain_counts();
    CHECK(g[1] == 3);
    CHECK(g[2] == 3);
    CHECK(g[3] == 1);
    CHECK(C.maximal_chains() == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("intervals carry over exactly the covers between their elements", "[poset]") {
    auto B = boolean_lattice(3);
    auto I = B.interval(0b000, 0b011);
    CHECK(I.poset.size() == 4);
    CHECK(I.poset.covers().size() == 4);
    CHECK(I.orig == std::vector<int>{0, 1, 2, 3});

    auto O = B.open_interval(0b000, 0b111);
    CHECK(O.poset.size() == 6);
    CHECK(O.poset.covers().size() == 6); // each singleton under two doubletons
    CHECK(O.poset.length() == 1);

    CHECK_THROWS_AS(B.interval(0b001, 0b110), Error);

    // upsets and downsets are order convex too
    auto U = B.induced(B.upset(0b001));
    CHECK(U.poset.size() == 4);
    CHECK(U.poset.minimal().size() == 1);
    CHECK(U.poset.label(U.poset.minimal()[0]) == "s1");
}

TEST_CASE("ordinal sums stack one poset above another", "[poset]") {
    FinitePoset C2({"a", "b"}, {{0, 1}});
    FinitePoset D2({"x", "y"}, {{0, 1}});
    auto S = join_posets(C2, D2);
    CHECK(S.size() == 4);
    CHECK(S.length() == 3);
    CHECK(S.maximal_chains().size() == 1);

    FinitePoset A2({"a", "b"}, {});
    FinitePoset X2({"x", "y"}, {});
    auto T = join_posets(A2, X2);
    CHECK(T.maximal_chains().size() == 4);
    CHECK(order_complex(T).f_vector() == std::vector<long long>{4, 4});

    CHECK_THROWS_AS(join_posets(C2, C2), Error);
}

TEST_CASE("order complex of a sum is the join of the order complexes", "[poset]") {
    FinitePoset D({"o", "a", "b", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    FinitePoset V({"p", "q", "r"}, {{0, 1}, {0, 2}});
    auto lhs = order_complex(join_posets(D, V));
    auto rhs = join_complexes(order_complex(D), order_complex(V));
    CHECK(lhs.nverts() == rhs.nverts());
    CHECK(lhs.facets() == rhs.facets());
}

TEST_CASE("boolean interval detection", "[poset]") {
    auto B = boolean_lattice(3);
    CHECK(is_boolean_interval(B, 0, 7));
    CHECK(is_boolean_interval(B, 0, 3));
    CHECK(is_boolean_interval(B, 1, 7));
    CHECK(is_boolean_interval(B, 3, 3));

    // three atoms under one top: five elements can't be a cube
    FinitePoset D3({"o", "a", "b", "c", "t"},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK_FALSE(is_boolean_interval(D3, 0, 4));

    auto sq = square_face_poset();
    CHECK_FALSE(is_boolean_interval(sq, 0, 9));
    CHECK(is_boolean_interval(sq, 0, 5)); // vertex pair under an edge
}

TEST_CASE("every coatom order of a boolean lattice is recursive", "[poset]") {
    auto B = boolean_lattice(3);
    std::vector<int> coatoms = {3, 5, 6};
    std::sort(coatoms.begin(), coatoms.end());
    do {
        auto res = verify_recursive_coatom_ordering(B, 0, 7, coatoms);
        CHECK(res.pass);
        // the induced facet order really shells the order complex
        auto chain_order = rco_shelling_order(B, 0, 7, coatoms);
        auto K = order_complex(B.open_interval(0, 7).poset);
        REQUIRE(chain_order.size() == K.facets().size());
        std::vector<int> perm;
        for (auto& ch : chain_order) {
            Bits local(6);
            ch.for_each([&](int x) { local.set(x - 1); }); // proper part ids
            auto it = std::find(K.facets().begin(), K.facets().end(), local);
            REQUIRE(it != K.facets().end());
            perm.push_back((int)(it - K.facets().begin()));
        }
        CHECK(check_shelling(K, perm) == std::nullopt);
    } while (std::next_permutation(coatoms.begin(), coatoms.end()));
}

TEST_CASE("length-one intervals need no coatom order", "[poset]") {
    FinitePoset C2({"a", "b"}, {{0, 1}});
    auto res = verify_recursive_coatom_ordering(C2, 0, 1, {});
    CHECK(res.pass);
}

TEST_CASE("square face lattice: coatom orders sorted by adjacency", "[poset]") {
    auto sq = square_face_poset();
    int e01 = 5, e12 = 6, e23 = 7, e30 = 8;

    auto good = verify_recursive_coatom_ordering(sq, 0, 9, {e01, e12, e23, e30});
    CHECK(good.pass);

    // e23 shares nothing with e01, so the bottom element has no shared
    // coatom to route through
    auto bad = verify_recursive_coatom_ordering(sq, 0, 9, {e01, e23, e12, e30});
    REQUIRE_FALSE(bad.pass);
    CHECK(bad.at_j == e23);
    CHECK(bad.witness_x == 0);

    // the extracted facet orders agree with the verdicts
    auto K = order_complex(sq.open_interval(0, 9).poset);
    auto to_perm = [&](const std::vector<Bits>& chain_order) {
        std::vector<int> perm;
        for (auto& ch : chain_order) {
            Bits local(8);
            ch.for_each([&](int x) { local.set(x - 1); });
            auto it = std::find(K.facets().begin(), K.facets().end(), local);
            REQUIRE(it != K.facets().end());
            perm.push_back((int)(it - K.facets().begin()));
        }
        return perm;
    };
    CHECK(check_shelling(K, to_perm(rco_shelling_order(sq, 0, 9, {e01, e12, e23, e30}))) ==
          std::nullopt);
    CHECK(check_shelling(K, to_perm(rco_shelling_order(sq, 0, 9, {e01, e23, e12, e30}))) !=
          std::nullopt);
}

TEST_CASE("coatom order must be a permutation of the coatoms", "[poset]") {
    auto B = boolean_lattice(2);
    auto res = verify_recursive_coatom_ordering(B, 0, 3, {1, 1});
    CHECK_FALSE(res.pass);
    auto res2 = verify_recursive_coatom_ordering(B, 0, 3, {1});
    CHECK_FALSE(res2.pass);
    CHECK_THROWS_AS(verify_recursive_coatom_ordering(B, 3, 0, {}), Error);
}

TEST_CASE("shared chains come apart: disjoint two-chains under one top", "[poset]") {
    //      t
    //   x2    y2
    //   x1    y1
    //      o
    FinitePoset P({"o", "x1", "x2", "y1", "y2", "t"},
                  {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 5}, {4, 5}});
    auto res = verify_recursive_coatom_ordering(P, 0, 5, {2, 4});
    REQUIRE_FALSE(res.pass);
    CHECK(res.at_j == 4);
    CHECK(res.witness_x == 0);
}

TEST_CASE("facet lists are canonicalized", "[complex]") {
    auto K = complex_of(4, {{0, 1, 2}, {2, 1, 0}, {0, 1}, {3}});
    REQUIRE(K.facets().size() == 2);
    CHECK(K.dim() == 2);
    CHECK_FALSE(K.pure());
    CHECK(K.is_face(face(4, {0, 2})));
    CHECK(K.is_face(face(4, {3})));
    CHECK_FALSE(K.is_face(face(4, {0, 3})));

    auto P = complex_of(3, {{0, 1, 2}});
    CHECK(P.pure());
    CHECK(P.dim() == 2);
}

TEST_CASE("order complexes of chains and antichains", "[complex]") {
    FinitePoset C({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
    auto K = order_complex(C);
    CHECK(K.facets().size() == 1);
    CHECK(K.dim() == 3);

    FinitePoset A({"a", "b", "c"}, {});
    auto L = order_complex(A);
    CHECK(L.f_vector() == std::vector<long long>{3});
    CHECK(L.euler() == 3);
    CHECK_FALSE(L.connected());
}

TEST_CASE("f-vectors and euler characteristics", "[complex]") {
    auto bd3 = complex_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(bd3.f_vector() == std::vector<long long>{4, 6, 4});
    CHECK(bd3.euler() == 2);

    auto tri = complex_of(3, {{0, 1, 2}});
    CHECK(tri.f_vector() == std::vector<long long>{3, 3, 1});
    CHECK(tri.euler() == 1);

    auto cyc = complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(cyc.f_vector() == std::vector<long long>{4, 4});
    CHECK(cyc.euler() == 0);
    CHECK(cyc.connected());
}

TEST_CASE("links strip the face and keep what surrounds it", "[complex]") {
    auto bd3 = complex_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto lkv = bd3.link(face(4, {0}));
    CHECK(lkv.f_vector() == std::vector<long long>{3, 3});
    CHECK(lkv.euler() == 0);

    auto lke = bd3.link(face(4, {0, 1}));
    CHECK(lke.f_vector() == std::vector<long long>{2});

    CHECK(bd3.link(Bits(4)).facets() == bd3.facets());
    CHECK_THROWS_AS(complex_of(3, {{0, 1}}).link(face(3, {2})), Error);
}

TEST_CASE("joins of complexes", "[complex]") {
    auto pt = complex_of(1, {{0}});
    auto edge = join_complexes(pt, pt);
    CHECK(edge.f_vector() == std::vector<long long>{2, 1});

    auto s0 = complex_of(2, {{0}, {1}});
    auto s1 = join_complexes(s0, s0); // suspension of two points is a circle
    CHECK(s1.f_vector() == std::vector<long long>{4, 4});
    CHECK(s1.euler() == 0);
    CHECK(s1.connected());
    CHECK(is_closed_pseudomanifold(s1));

    // the empty complex is the identity
    SimplicialComplex none;
    CHECK(join_complexes(none, s0).facets() == s0.facets());
    CHECK(join_complexes(s0, none).facets() == s0.facets());
}

TEST_CASE("pseudomanifold checks", "[complex]") {
    auto bd3 = complex_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(check_pseudomanifold(bd3, true).pass(true));

    auto impure = complex_of(4, {{0, 1, 2}, {3}});
    auto rep = check_pseudomanifold(impure, false);
    CHECK_FALSE(rep.pass(false));
    CHECK(rep.violation == "not pure");

    // three triangles around one edge
    auto book = complex_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK_FALSE(check_pseudomanifold(book, false).pass(false));

    // two tetrahedra pinched at a vertex: fine as a pseudomanifold, but the
    // pinch vertex has a disconnected link
    auto pinch = complex_of(7, {{0, 1, 2, 3}, {0, 4, 5, 6}});
    CHECK(check_pseudomanifold(pinch, false).pass(false));
    auto norm = check_pseudomanifold(pinch, true);
    CHECK_FALSE(norm.pass(true));
    CHECK_FALSE(norm.links_connected);
}

TEST_CASE("shelling checker on hand-picked orders", "[complex]") {
    auto bd3 = complex_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(check_shelling(bd3, {0, 1, 2, 3}) == std::nullopt);
    CHECK(check_shelling(bd3, {3, 1, 0, 2}) == std::nullopt);

    auto cyc = complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto at = [&](std::initializer_list<int> vs) {
        auto it = std::find(cyc.facets().begin(), cyc.facets().end(), face(4, vs));
        REQUIRE(it != cyc.facets().end());
        return (int)(it - cyc.facets().begin());
    };
    int e01 = at({0, 1}), e12 = at({1, 2}), e23 = at({2, 3}), e30 = at({3, 0});
    CHECK(check_shelling(cyc, {e01, e12, e23, e30}) == std::nullopt);
    // {2,3} is disjoint from {0,1}
    auto fail = check_shelling(cyc, {e01, e23, e12, e30});
    REQUIRE(fail.has_value());
    CHECK(*fail == 1);

    CHECK_THROWS_AS(check_shelling(complex_of(4, {{0, 1, 2}, {3}}), {0, 1}), Error);
    CHECK_THROWS_AS(check_shelling(cyc, {0, 1, 2}), Error);
    CHECK_THROWS_AS(check_shelling(cyc, {0, 1, 2, 2}), Error);

    // zero-dimensional complexes shell vacuously
    auto pts = complex_of(2, {{0}, {1}});
    CHECK(check_shelling(pts, {1, 0}) == std::nullopt);
}

TEST_CASE("shelling search finds witnesses and owns up otherwise", "[complex]") {
    auto bd3 = complex_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto res = search_shelling(bd3);
    REQUIRE(res.outcome == SearchOutcome::WITNESS);
    CHECK(check_shelling(bd3, res.order) == std::nullopt);
    CHECK(classify_ball_or_sphere(bd3) == BallOrSphere::SPHERE);

    auto disk = complex_of(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK(classify_ball_or_sphere(disk) == BallOrSphere::BALL);
    CHECK(classify_ball_or_sphere(complex_of(3, {{0, 1, 2}})) == BallOrSphere::BALL);

    auto pts = complex_of(2, {{0}, {1}});
    CHECK(classify_ball_or_sphere(pts) == BallOrSphere::SPHERE);
    CHECK(classify_ball_or_sphere(complex_of(1, {{0}})) == BallOrSphere::BALL);

    // five-triangle band with a half twist: a pseudomanifold that is
    // neither ball nor sphere, so no order exists and the search exhausts
    auto band = complex_of(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    CHECK(check_pseudomanifold(band, true).pass(true));
    auto sweep = search_shelling(band);
    CHECK(sweep.outcome == SearchOutcome::EXHAUSTED);
    CHECK(classify_ball_or_sphere(band) == BallOrSphere::UNKNOWN);

    // with no budget the search must admit it timed out
    auto broke = search_shelling(bd3, 0);
    CHECK(broke.outcome == SearchOutcome::TIMEOUT);
    CHECK(classify_ball_or_sphere(bd3, 0) == BallOrSphere::UNKNOWN);

    CHECK_THROWS_AS(classify_ball_or_sphere(complex_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})),
                    Error);
}
