#include <catch2/catch_amalgamated.hpp>
#include <vartop/manifold.hpp>
#include <vartop/var_poset.hpp>

#include <algorithm>

using namespace vartop;

namespace {

int vertex_of(const VarPoset& V, const std::string& s) {
    int id = V.index_of(SignVector::parse(s));
    REQUIRE(id >= 0);
    return id;
}

} // namespace

TEST_CASE("small closure posets by hand", "[varposet]") {
    auto V32 = build_var_poset(3, 2);
    CHECK(V32.cells.size() == 13);
    CHECK(V32.poset.covers().size() == 24);
    CHECK(weight_profile(V32) == std::vector<long long>{0, 3, 6, 4});

    auto V31 = build_var_poset(3, 1);
    CHECK(V31.cells.size() == 12);
    CHECK(V31.index_of(SignVector::parse("+-+")) == -1);
    CHECK(V31.index_of(SignVector::parse("++-")) >= 0);

    auto V10 = build_var_poset(1, 0);
    CHECK(V10.cells.size() == 1);
    CHECK(V10.poset.covers().empty());

    CHECK_THROWS_AS(build_var_poset(0, 0), Error);
    CHECK_THROWS_AS(build_var_poset(3, -1), Error);
    CHECK_THROWS_AS(build_var_poset(3, 3), Error);
}

TEST_CASE("cell counts match the binomial formula", "[varposet]") {
    for (int n = 1; n <= 7; ++n)
        for (int m = 0; m < n; ++m) {
            auto V = build_var_poset(n, m);
            CHECK(weight_profile(V) == formula_profile(n, m));
        }
}

TEST_CASE("order complexes of the smallest posets", "[varposet]") {
    auto K10 = build_order_complex(build_var_poset(1, 0));
    CHECK(K10.f_vector() == std::vector<long long>{1});

    auto K21 = build_order_complex(build_var_poset(2, 1));
    CHECK(K21.f_vector() == std::vector<long long>{4, 4});
    CHECK(K21.connected());
    CHECK(is_closed_pseudomanifold(K21));

    auto K32 = build_order_complex(build_var_poset(3, 2));
    CHECK(K32.f_vector() == std::vector<long long>{13, 36, 24});
    CHECK(K32.euler() == 1);
}

TEST_CASE("euler characteristic depends only on the variation bound", "[varposet]") {
    for (int n = 1; n <= 7; ++n)
        for (int m = 0; m < n; ++m) {
            auto V = build_var_poset(n, m);
            long long chi = m % 2 == 0 ? 1 : 0;
            CHECK(euler_from_cells(V) == chi);
            CHECK(euler_from_chains(V) == chi);
        }
}

TEST_CASE("principal lower intervals are boolean of rank weight", "[varposet]") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m < n; ++m) {
            auto V = build_var_poset(n, m);
            FinitePoset B = adjoin_bounds(V.poset, true, false);
            for (int i = 0; i < V.poset.size(); ++i)
                REQUIRE(is_boolean_interval(B, 0, i + 1));
        }
}

TEST_CASE("link of a coordinate vertex is an octagon", "[varposet]") {
    auto V = build_var_poset(3, 2);
    auto K = build_order_complex(V);
    Bits F(V.poset.size());
    F.set(vertex_of(V, "+00"));
    auto lk = K.link(F);
    CHECK(lk.f_vector() == std::vector<long long>{8, 8});
    CHECK(lk.connected());
    CHECK(is_closed_pseudomanifold(lk));
}

TEST_CASE("the spaces are normal pseudomanifolds, closed only at full variation",
          "[varposet]") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m < n; ++m) {
            auto K = build_order_complex(build_var_poset(n, m));
            CHECK(K.pure());
            CHECK(K.dim() == n - 1);
            CHECK(check_pseudomanifold(K, true).pass(true));
            CHECK(is_closed_pseudomanifold(K) == (m == n - 1));
        }
}

TEST_CASE("variation one in three coordinates is a twisted band", "[varposet]") {
    auto V = build_var_poset(3, 1);
    auto K = build_order_complex(V);
    CHECK(K.pure());
    CHECK(K.facets().size() == 18);
    CHECK(K.euler() == 0);
    CHECK(check_pseudomanifold(K, true).pass(true));
    CHECK_FALSE(is_closed_pseudomanifold(K));
    // half-twisted band: no shelling order exists, and the search proves it
    auto res = search_shelling(K);
    CHECK(res.outcome == SearchOutcome::EXHAUSTED);
    CHECK(classify_ball_or_sphere(K) == BallOrSphere::UNKNOWN);
}

TEST_CASE("links along chains classify as balls and spheres", "[varposet]") {
    auto V = build_var_poset(3, 2);
    LinkClassifier cls(V);

    std::vector<int> v = {vertex_of(V, "+00")};
    CHECK(cls.classify(v, cls.link_of(v)) == BallOrSphere::SPHERE);

    std::vector<int> t = {vertex_of(V, "+++")};
    auto lk = cls.link_of(t);
    CHECK(lk.f_vector() == std::vector<long long>{6, 6});
    CHECK(cls.classify(t, lk) == BallOrSphere::SPHERE);

    std::vector<int> e = {vertex_of(V, "+00"), vertex_of(V, "++0")};
    std::sort(e.begin(), e.end());
    auto lke = cls.link_of(e);
    CHECK(lke.f_vector() == std::vector<long long>{2});
    CHECK(cls.classify(e, lke) == BallOrSphere::SPHERE);
}

TEST_CASE("full link sweeps certify the small spaces", "[varposet]") {
    auto c21 = verify_manifold(2, 1);
    CHECK(c21.pass);
    CHECK(c21.closed);
    CHECK(c21.unknown == 0);

    auto c31 = verify_manifold(3, 1);
    CHECK(c31.pass);
    CHECK_FALSE(c31.closed);
    CHECK(c31.balls > 0); // boundary faces have ball links

    auto c32 = verify_manifold(3, 2);
    CHECK(c32.pass);
    CHECK(c32.closed);
    CHECK(c32.balls == 0);

    for (int m = 1; m <= 3; ++m) {
        auto c = verify_manifold(4, m);
        CHECK(c.pass);
        CHECK(c.closed == (m == 3));
        CHECK(c.unknown == 0);
    }
}
