#include <catch2/catch_amalgamated.hpp>
#include <vartop/json_io.hpp>

using namespace vartop;

namespace {

// rotate every point by the rational rotation (cos, sin) = (3/5, 4/5)
Polyline turned(const Polyline& p) {
    Polyline q;
    for (const Point& a : p)
        q.push_back({Rat(3, 5) * a.x - Rat(4, 5) * a.y,
                     Rat(4, 5) * a.x + Rat(3, 5) * a.y});
    return q;
}

// split every segment at its midpoint
Polyline refined(const Polyline& p) {
    Polyline q{p.front()};
    for (size_t i = 1; i < p.size(); ++i) {
        const Point &a = p[i - 1], &b = p[i];
        q.push_back({(a.x + b.x) / 2, (a.y + b.y) / 2});
        q.push_back(b);
    }
    return q;
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

// unit-square disk with the basepoint on the bottom edge
SurfaceWithCuts disk() {
    return SurfaceWithCuts({{0, 0}, {8, 0}, {8, 8}, {0, 8}}, {}, {},
                           Point{1, 0});
}

std::pair<SurfaceWithCuts, EmbeddedNetwork> annulus() {
    NetFile F = load_net(std::string(FIXTURES_DIR) + "/annulus.json");
    return {std::move(F.surface), std::move(F.net)};
}

} // namespace

TEST_CASE("rotation numbers of closed polylines", "[netgeom]") {
    Polyline tri = {{0, 0}, {4, 0}, {2, 3}, {0, 0}};
    CHECK(rotation_number(tri) == 1);

    Polyline square_cw = {{0, 0}, {0, 4}, {4, 4}, {4, 0}, {0, 0}};
    CHECK(rotation_number(square_cw) == -1);

    // figure eight: one left lobe, one right lobe
    Polyline eight = {{0, 0}, {2, 2}, {0, 4}, {-2, 2}, {0, 0},
                      {2, -2}, {0, -4}, {-2, -2}, {0, 0}};
    CHECK(rotation_number(eight) == 0);

    // the triangle walked twice turns twice
    Polyline twice = {{0, 0}, {4, 0}, {2, 3}, {0, 0}, {4, 0}, {2, 3}, {0, 0}};
    CHECK(rotation_number(twice) == 2);

    Polyline spike = {{0, 0}, {4, 0}, {2, 0}, {2, 3}, {0, 0}};
    CHECK_THROWS_AS(rotation_number(spike), Error);
}

TEST_CASE("rotation survives refinement and rigid rotation", "[netgeom]") {
    std::vector<Polyline> loops = {
        {{0, 0}, {4, 0}, {2, 3}, {0, 0}},
        {{0, 0}, {0, 4}, {4, 4}, {4, 0}, {0, 0}},
        {{0, 0}, {2, 2}, {0, 4}, {-2, 2}, {0, 0},
         {2, -2}, {0, -4}, {-2, -2}, {0, 0}},
        {{0, 0}, {5, 1}, {6, 4}, {3, 6}, {-1, 4}, {0, 0}},
    };
    for (const Polyline& loop : loops) {
        int r = rotation_number(loop);
        Polyline fine = refined(refined(loop));
        CHECK(rotation_number(fine) == r);
        Polyline rot = turned(loop);
        CHECK(rotation_number(rot) == r);
        CHECK(rotation_number(turned(fine)) == r);
    }
}

TEST_CASE("surfaces reject malformed boundaries and cuts", "[netgeom]") {
    Polyline sq = {{0, 0}, {8, 0}, {8, 8}, {0, 8}};
    Polyline hole = {{3, 3}, {3, 5}, {5, 5}, {5, 3}};  // clockwise
    Point bp{1, 0};

    // outer clockwise, i.e. wrong orientation
    CHECK(code_of([&] {
              SurfaceWithCuts({{0, 0}, {0, 8}, {8, 8}, {8, 0}}, {}, {}, bp);
          }) == "BadSurface");
    // hole counterclockwise
    CHECK(code_of([&] {
              SurfaceWithCuts(sq, {{{3, 3}, {5, 3}, {5, 5}, {3, 5}}},
                              {{{4, 0}, {4, 3}}}, bp);
          }) == "BadSurface");
    // hole pokes out of the square
    CHECK(code_of([&] {
              SurfaceWithCuts(sq, {{{6, 6}, {6, 9}, {9, 9}, {9, 6}}},
                              {{{4, 0}, {6, 6}}}, bp);
          }) == "BadSurface");
    // two holes sharing territory
    CHECK(code_of([&] {
              SurfaceWithCuts(sq,
                              {hole, {{4, 4}, {4, 6}, {6, 6}, {6, 4}}},
                              {{{4, 0}, {4, 3}}, {{5, 5}, {5, 8}}}, bp);
          }) == "BadSurface");
    // cut joining the outer boundary to itself
    CHECK(code_of([&] {
              SurfaceWithCuts(sq, {}, {{{4, 0}, {4, 8}}}, bp);
          }) == "BadSurface");
    // cut interior grazing the hole it targets
    CHECK(code_of([&] {
              SurfaceWithCuts(sq, {hole}, {{{4, 0}, {3, 3}, {4, 3}}}, bp);
          }) == "BadSurface");
    // crossing cuts: each one is fine alone, the second crosses the first
    CHECK(code_of([&] {
              SurfaceWithCuts(
                  sq, {hole, {{6, 6}, {6, 7}, {7, 7}, {7, 6}}},
                  {{{4, 0}, {4, 3}}, {{2, 0}, {5, 2}, {6, 6}}}, bp);
          }) == "BadSurface");
    // basepoint floating inside
    CHECK(code_of([&] { SurfaceWithCuts(sq, {}, {}, Point{4, 4}); }) ==
          "BadSurface");
    // basepoint under a cut
    CHECK(code_of([&] {
              SurfaceWithCuts(sq, {hole}, {{{4, 0}, {4, 3}}}, Point{4, 0});
          }) == "BadSurface");

    // hole without a cut: the cut graph misses a component
    CHECK(code_of([&] { SurfaceWithCuts(sq, {hole}, {}, bp); }) ==
          "CutGraphNotTree");
    // two cuts to one hole close a loop
    CHECK(code_of([&] {
              SurfaceWithCuts(sq, {hole},
                              {{{4, 0}, {4, 3}}, {{5, 8}, {5, 5}}}, bp);
          }) == "CutGraphNotTree");

    CHECK_NOTHROW(SurfaceWithCuts(sq, {hole}, {{{4, 0}, {4, 3}}}, bp));
}

TEST_CASE("boundary labels follow the walk from the basepoint", "[netgeom]") {
    SurfaceWithCuts S = disk();
    EmbeddedNetwork N;
    // placed counterclockwise starting past the basepoint
    N.vertices = {{{5, 0}, VertexRole::Source},
                  {{8, 3}, VertexRole::Sink},
                  {{4, 8}, VertexRole::Sink},
                  {{0, 4}, VertexRole::Isolated}};
    N.edges = {{0, 1, {{5, 0}, {6, 2}, {8, 3}}, 1, ""},
               {0, 2, {{5, 0}, {4, 4}, {4, 8}}, 1, ""}};
    validate_network(S, N);
    auto bo = boundary_order(S, N);
    CHECK(bo.order == std::vector<int>{0, 1, 2, 3});

    // same corner, listed in scrambled id order: the walk still sorts them
    std::swap(N.vertices[1], N.vertices[3]);
    for (auto& e : N.edges)
        for (int* end : {&e.from, &e.to}) {
            if (*end == 1) *end = 3;
            else if (*end == 3) *end = 1;
        }
    auto bo2 = boundary_order(S, N);
    CHECK(bo2.order == std::vector<int>{0, 3, 2, 1});
}

TEST_CASE("network validation rejects bad embeddings", "[netgeom]") {
    SurfaceWithCuts S = disk();
    auto with = [&](EmbeddedNetwork N) { return code_of([&] { validate_network(S, N); }); };

    EmbeddedNetwork base;
    base.vertices = {{{5, 0}, VertexRole::Source}, {{8, 3}, VertexRole::Sink}};
    base.edges = {{0, 1, {{5, 0}, {8, 3}}, 1, ""}};
    CHECK(with(base).empty());

    EmbeddedNetwork n1 = base;
    n1.vertices[1].pos = {4, 4};  // sink floated into the interior
    n1.edges[0].polyline = {{5, 0}, {4, 4}};
    CHECK(with(n1) == "BadNetwork");

    EmbeddedNetwork n2 = base;
    n2.edges[0].polyline = {{5, 0}, {9, 5}, {8, 3}};  // leaves the square
    CHECK(with(n2) == "BadNetwork");

    EmbeddedNetwork n3 = base;
    n3.edges.push_back({0, 1, {{5, 0}, {8, 3}}, 1, ""});  // duplicate geometry
    n3.vertices[1].role = VertexRole::Sink;
    CHECK(with(n3) == "BadNetwork");

    // vertex parked on a cut
    SurfaceWithCuts C({{0, 0}, {8, 0}, {8, 8}, {0, 8}},
                      {{{3, 3}, {3, 5}, {5, 5}, {5, 3}}}, {{{4, 0}, {4, 3}}},
                      Point{1, 0});
    EmbeddedNetwork n4;
    n4.vertices = {{{4, 0}, VertexRole::Source}};
    CHECK(code_of([&] { validate_network(C, n4); }) == "BadNetwork");

    // edges may cross cut interiors; only vertices may not sit on them
    EmbeddedNetwork n5;
    n5.vertices = {{{2, 0}, VertexRole::Source}, {{6, 0}, VertexRole::Sink}};
    n5.edges = {{0, 1, {{2, 0}, {4, 2}, {6, 0}}, 1, ""}};
    CHECK(code_of([&] { validate_network(C, n5); }).empty());
}

TEST_CASE("two-source annulus measures to the path monomials", "[netgeom]") {
    auto [S, N] = annulus();
    validate_network(S, N);
    auto bo = boundary_order(S, N);
    CHECK(bo.order == std::vector<int>{0, 1, 2, 3});

    // each source-to-sink curve closes up against the boundary walk
    auto curve = [&](std::vector<int> es) {
        Polyline c{N.vertices[N.edges[es[0]].from].pos};
        for (int e : es) append_polyline(c, N.edges[e].polyline);
        return c;
    };
    struct Probe { std::vector<int> es; int src, dst, rot; };
    for (const auto& pr :
         {Probe{{0, 5, 1}, 0, 1, 1}, Probe{{0, 4, 3}, 0, 3, 0},
          Probe{{2, 6, 1}, 2, 1, 1}, Probe{{2, 7, 3}, 2, 3, 1}}) {
        Polyline loop = path_loop(bo, curve(pr.es), pr.src, pr.dst);
        CHECK(detail::loop_rotation(loop) == pr.rot);
    }

    auto M = measure_symbolic(S, N);
    REQUIRE(M.row_vertex == std::vector<int>{0, 2});
    REQUIRE(M.col_vertex == std::vector<int>{0, 1, 2, 3});
    SymbolicSum one{{{}, 1}};
    CHECK(M.entry[0][0] == one);
    CHECK(M.entry[0][1] == SymbolicSum{{{"x1", "x2", "x6"}, 1}});
    CHECK(M.entry[0][2].empty());
    CHECK(M.entry[0][3] == SymbolicSum{{{"x1", "x4", "x5"}, 1}});
    CHECK(M.entry[1][0].empty());
    CHECK(M.entry[1][1] == SymbolicSum{{{"x2", "x3", "x7"}, 1}});
    CHECK(M.entry[1][2] == one);
    CHECK(M.entry[1][3] == SymbolicSum{{{"x3", "x4", "x8"}, 1}});

    // pin the weights and the numeric run must evaluate the monomials
    Rat w[8] = {2, 3, 5, 7, Rat(1, 2), Rat(3, 2), Rat(5, 3), Rat(11, 4)};
    for (int i = 0; i < 8; ++i) {
        N.edges[i].symbol.clear();
        N.edges[i].weight = w[i];
    }
    auto Mn = measure_numeric(S, N);
    CHECK(Mn.entry[0] == std::vector<Rat>{1, 9, 0, 7});
    CHECK(Mn.entry[1] == std::vector<Rat>{0, 25, 1, Rat(385, 4)});
}

TEST_CASE("network files round-trip exactly", "[netgeom]") {
    auto [S, N] = annulus();
    json j = net_to_json(S, N);
    NetFile F = net_from_json(json::parse(j.dump()));
    CHECK(measure_symbolic(F.surface, F.net).entry ==
          measure_symbolic(S, N).entry);
    for (size_t i = 0; i < N.edges.size(); ++i) {
        CHECK(F.net.edges[i].symbol == N.edges[i].symbol);
        CHECK(F.net.edges[i].polyline == N.edges[i].polyline);
    }

    CHECK(code_of([] { load_net("no_such_file.json"); }) == "BadNetworkFile");
    CHECK(code_of([] { net_from_json(json::parse("{\"edges\": []}")); }) ==
          "BadNetworkFile");
    CHECK(code_of([&] {
              json bad = net_to_json(S, N);
              bad["edges"][0]["from"] = 99;
              net_from_json(bad);
          }) == "BadNetworkFile");
    CHECK(code_of([&] {
              json bad = net_to_json(S, N);
              bad["vertices"][0]["role"] = "purple";
              net_from_json(bad);
          }) == "BadNetworkFile");
}

TEST_CASE("degenerate measurements", "[netgeom]") {
    SurfaceWithCuts S = disk();

    // a source with no edges still owns a unit column
    EmbeddedNetwork lone;
    lone.vertices = {{{5, 0}, VertexRole::Source},
                     {{8, 4}, VertexRole::Isolated}};
    validate_network(S, lone);
    auto M = measure_numeric(S, lone);
    CHECK(M.entry == std::vector<std::vector<Rat>>{{1, 0}});
    CHECK(sign_vector(M) == std::vector<int>{1, 0});

    // a directed cycle cannot be measured by path sums
    EmbeddedNetwork cyc;
    cyc.vertices = {{{2, 0}, VertexRole::Source},
                    {{6, 0}, VertexRole::Sink},
                    {{3, 3}, VertexRole::Black},
                    {{5, 3}, VertexRole::White}};
    cyc.edges = {{0, 2, {{2, 0}, {3, 3}}, Rat(1, 2), ""},
                 {2, 3, {{3, 3}, {5, 3}}, Rat(1, 2), ""},
                 {3, 2, {{5, 3}, {4, 4}, {3, 3}}, Rat(1, 4), ""},
                 {3, 1, {{5, 3}, {6, 0}}, Rat(1, 4), ""}};
    validate_network(S, cyc);
    CHECK(code_of([&] { measure_numeric(S, cyc); }) == "CyclicNetwork");

    // the truncated series brackets the limit and certifies the sign
    auto T = measure_truncated(S, cyc, 60);
    REQUIRE(T.usable);
    CHECK_FALSE(T.exact);
    CHECK(T.tail > 0);
    size_t cs = 0;
    while (T.matrix.col_vertex[cs] != 1) ++cs;
    CHECK(certified_signs(T)[cs] == 1);
    // each wrap of the interior loop scales by -1/8 (the extra turn flips
    // the sign), so the series sums to (1/16) / (1 + 1/8)
    Rat limit = Rat(1, 18);
    Rat diff = T.matrix.entry[0][cs] - limit;
    CHECK(diff <= T.tail);
    CHECK(-diff <= T.tail);

    // weights must be positive for numeric measurement
    EmbeddedNetwork zero;
    zero.vertices = {{{5, 0}, VertexRole::Source}, {{8, 3}, VertexRole::Sink}};
    zero.edges = {{0, 1, {{5, 0}, {8, 3}}, 0, ""}};
    CHECK(code_of([&] { measure_numeric(S, zero); }) == "NonPositiveWeight");
}
