#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rookmaze/bijections.hpp"
#include "rookmaze/codec.hpp"
#include "rookmaze/counting.hpp"
#include "rookmaze/render.hpp"

using namespace rookmaze;
using oracle::wall_through;

namespace {

Maze one_by_one(WallKind k) { return Maze(1, 1, {Wall{k, {{1, 1}}}}); }

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("rook placement invariants") {
    CHECK_NOTHROW(RookPlacement(2, 3, {{1, 3}, {2, 1}}));
    CHECK_THROWS_AS(RookPlacement(2, 2, {{1, 1}, {1, 2}}), DomainError);
    CHECK_THROWS_AS(RookPlacement(2, 2, {{1, 1}, {2, 1}}), DomainError);
    CHECK_THROWS_WITH(RookPlacement(2, 2, {{3, 1}}), "rook out of bounds");
    RookPlacement r(3, 3, {{3, 1}, {1, 2}});
    CHECK(r.rooks().front() == Cell{1, 2});
    CHECK(r.col_of_row(3) == 1);
    CHECK(r.row_of_col(3) == 0);
}

TEST_CASE("colored permutation invariants") {
    CHECK_NOTHROW(ColoredPermutation({2, 1}, {1}));
    CHECK_THROWS_AS(ColoredPermutation({1, 1}, {}), DomainError);
    CHECK_THROWS_AS(ColoredPermutation({1, 2}, {3}), DomainError);
}

TEST_CASE("validate_maze on minimal and broken mazes") {
    CHECK(validate_maze(one_by_one(WallKind::I)).ok());
    CHECK(validate_maze(one_by_one(WallKind::II)).ok());
    // A type-III wall on a square board has the wrong type count.
    CHECK(has(validate_maze(one_by_one(WallKind::III)).violations, "wrong type count"));

    // Blue box (2,2) and red box (1,1) of the identity permutation produce these two walls.
    Maze crossing(2, 2,
                  {wall_through(WallKind::I, {{1, 2}, {2, 2}, {2, 1}}),
                   wall_through(WallKind::II, {{1, 2}, {1, 1}, {2, 1}})});
    auto rep = validate_maze(crossing);
    CHECK_FALSE(rep.ok());
    CHECK(has(rep.violations, "walls intersect"));

    Maze missing(1, 2, {Wall{WallKind::III, {{1, 1}}}});
    CHECK(has(validate_maze(missing).violations, "column run missing"));
    CHECK(has(validate_maze(missing).violations, "row run missing"));

    Maze bad_bend(2, 2, {Wall{WallKind::I, {{1, 1}, {1, 2}, {2, 2}, {2, 1}}}});
    CHECK(has(validate_maze(bad_bend).violations, "illegal bend"));

    Maze bad_end(2, 2, {Wall{WallKind::I, {{1, 2}, {2, 2}}}, Wall{WallKind::II, {{2, 1}}}});
    CHECK(has(validate_maze(bad_end).violations, "wrong endpoint"));

    CHECK_THROWS_AS(Maze(0, 2, {}), DomainError);
    CHECK_THROWS_AS(Maze(2, 2, {Wall{WallKind::I, {{3, 1}}}}), DomainError);
}

TEST_CASE("markers") {
    auto [x1, o1] = markers(one_by_one(WallKind::I));
    CHECK(x1.rooks() == std::vector<Cell>{{1, 1}});
    CHECK(o1.rooks().empty());
    auto [x2, o2] = markers(one_by_one(WallKind::II));
    CHECK(x2.rooks().empty());
    CHECK(o2.rooks() == std::vector<Cell>{{1, 1}});

    Maze fig = oracle::sample_9x10_maze();
    REQUIRE(is_valid(fig));
    auto [xs, os] = markers(fig);
    CHECK(fig.walls().size() == 4);
    CHECK(xs.size() == 8);
    CHECK(os.size() == 7);
    CHECK(xs.rooks() == std::vector<Cell>{{1, 5}, {2, 7}, {3, 2}, {4, 10}, {6, 4}, {7, 8}, {8, 9}, {9, 1}});
    CHECK(os.rooks() == std::vector<Cell>{{1, 2}, {2, 4}, {4, 8}, {5, 9}, {6, 1}, {7, 3}, {8, 6}});
    CHECK(varpi(pi(fig)) == fig);
    CHECK_THROWS_AS(markers(one_by_one(WallKind::III)), DomainError);
}

TEST_CASE("markers form placements and wall-type counts hold on all small mazes") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const Maze& mz : enumerate_mazes(m, n)) {
                REQUIRE(is_valid(mz));
                int n3 = 0, n4 = 0;
                for (const Wall& w : mz.walls()) {
                    n3 += w.kind == WallKind::III;
                    n4 += w.kind == WallKind::IV;
                }
                CHECK(n3 == std::max(n - m, 0));
                CHECK(n4 == std::max(m - n, 0));
                CHECK_NOTHROW(markers(mz));
            }
}

TEST_CASE("brute-force maze search agrees with the peeling construction") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            std::set<std::string> built;
            for (const Maze& mz : enumerate_mazes(m, n)) built.insert(mz.pieces().key());
            CHECK_MESSAGE(oracle::brute_force_mazes(m, n) == built, m << "x" << n);
        }
}

TEST_CASE("central symmetry") {
    CHECK_FALSE(is_centrally_symmetric(one_by_one(WallKind::I)));
    int fixed = 0;
    for (const Maze& mz : enumerate_mazes(2, 2)) fixed += is_centrally_symmetric(mz);
    CHECK(fixed == 3);
    for (auto [m, n] : {std::pair{1, 1}, {1, 3}, {3, 3}, {3, 1}})
        for (const Maze& mz : enumerate_mazes(m, n)) CHECK_FALSE(is_centrally_symmetric(mz));
    for (const Maze& mz : enumerate_mazes(3, 4)) CHECK(iota(iota(mz)) == mz);
}

TEST_CASE("render") {
    CHECK(render(one_by_one(WallKind::I), RenderFormat::Ascii) == "+-+\n|x|\n+-+\n");
    std::string empty2 = render(varpi(RookPlacement(2, 2, {})), RenderFormat::Ascii);
    CHECK(std::count(empty2.begin(), empty2.end(), 'o') == 2);
    std::string svg = render(oracle::sample_9x10_maze(), RenderFormat::Svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t polylines = 0;
    for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    CHECK(polylines == 4);
    CHECK(render(one_by_one(WallKind::I), RenderFormat::Svg) == render(one_by_one(WallKind::I), RenderFormat::Svg));
    CHECK_THROWS_AS(render_format_from_string("png"), DomainError);
}

TEST_CASE("codec") {
    CHECK(encode(one_by_one(WallKind::I)) == R"({"m":1,"n":1,"walls":[{"kind":"I","path":[[1,1]]}]})");
    CHECK(encode(RookPlacement(2, 3, {{2, 1}, {1, 3}})) == R"({"m":2,"n":3,"rooks":[[1,3],[2,1]]})");
    CHECK(encode(ColoredPermutation({2, 1}, {2})) == R"({"n":2,"w":[2,1],"blue":[2]})");

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const Maze& mz : enumerate_mazes(m, n)) {
                std::string t = encode(mz);
                REQUIRE(decode_maze(t) == mz);
                CHECK(encode(decode_maze(t)) == t);
                std::string rt = encode(pi(mz));
                CHECK(encode(decode_rooks(rt)) == rt);
            }
    Maze fig = oracle::sample_9x10_maze();
    CHECK(decode_maze(encode(fig)) == fig);

    // Type-IV walls are written from their left end.
    Maze tall = varpi(RookPlacement(2, 1, {}));
    CHECK(encode(tall).find(R"({"kind":"IV","path":[[1,1]]})") != std::string::npos);

    CHECK_THROWS_WITH(decode_rooks(R"({"m":1,"n":1,"rooks":[[2,1]]})"), "rook out of bounds");
    CHECK_THROWS_WITH(decode_rooks(R"({"m":1,"n":1,"rooks":[[1]]})"), doctest::Contains("rooks[0]"));
    CHECK_THROWS_WITH(decode_maze(R"({"m":1,"n":1,"walls":[{"kind":"V","path":[[1,1]]}]})"),
                      doctest::Contains("walls[0].kind"));
    CHECK_THROWS_WITH(decode_maze("{\"m\":1,"), doctest::Contains("parse error at byte"));
    CHECK_THROWS_AS(decode_cperm(R"({"n":2,"w":[1,1],"blue":[]})"), DomainError);
}
