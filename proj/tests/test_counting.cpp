#include <doctest.h>

#include "oracles.hpp"
#include "rookmaze/counting.hpp"

using namespace rookmaze;

TEST_CASE("rook enumeration") {
    CHECK(enumerate_rooks(1, 1).size() == 2);
    CHECK(enumerate_rooks(2, 2).size() == 7);
    CHECK(enumerate_rooks(2, 3).size() == 13);
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto rooks = enumerate_rooks(m, n);
            CHECK(rooks.size() == count_rooks_closed(m, n));
            CHECK(std::is_sorted(rooks.begin(), rooks.end()));
            CHECK(std::adjacent_find(rooks.begin(), rooks.end()) == rooks.end());
            if (m * n <= 16) CHECK(static_cast<long>(rooks.size()) == oracle::count_rooks_by_subsets(m, n));
        }
    auto r22 = enumerate_rooks(2, 2);
    CHECK(r22.front().rooks().empty());
    CHECK(r22[1].rooks() == std::vector<Cell>{{1, 1}});
}

TEST_CASE("closed-form rook counts") {
    CHECK(count_rooks_closed(0, 4) == 1);
    CHECK(count_rooks_closed(2, 2) == 7);
    CHECK(count_rooks_closed(3, 3) == 34);
    CHECK(count_rooks_closed(2, 3) == 13);
    CHECK_THROWS_AS(count_rooks_closed(40, 40), DomainError);
}

TEST_CASE("resource ceiling") {
    EnumerationLimits tight;
    tight.max_objects = 10;
    CHECK_THROWS_AS(enumerate_rooks(3, 3, tight), ResourceLimit);
    tight.max_objects = 34;
    CHECK(enumerate_rooks(3, 3, tight).size() == 34);
}

TEST_CASE("maze enumeration") {
    CHECK(enumerate_mazes(2, 2).size() == 7);
    CHECK(enumerate_symmetric_mazes(2, 2).size() == 3);
    CHECK(enumerate_symmetric_mazes(3, 3).empty());
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) CHECK(enumerate_mazes(m, n).size() == count_rooks_closed(m, n));
    EnumerationLimits par;
    par.jobs = 3;
    CHECK(enumerate_mazes(3, 4, par) == enumerate_mazes(3, 4));
    CHECK(enumerate_symmetric_mazes(4, 4, par) == enumerate_symmetric_mazes(4, 4));
}

TEST_CASE("symmetric closed forms") {
    CHECK(count_symmetric_closed(SymmetricShape::Square, 1) == 3);
    CHECK(count_symmetric_closed(SymmetricShape::Square, 2) == 17);
    CHECK(count_symmetric_closed(SymmetricShape::Square, 3) == 139);
    CHECK(count_symmetric_closed(SymmetricShape::Tall, 1) == 5);
    CHECK(count_symmetric_closed(SymmetricShape::Tall, 2) == 37);
    for (int n = 1; n <= 2; ++n) {
        CHECK(enumerate_symmetric_mazes(2 * n, 2 * n).size() == count_symmetric_closed(SymmetricShape::Square, n));
        CHECK(enumerate_symmetric_mazes(2 * n + 2, 2 * n).size() == count_symmetric_closed(SymmetricShape::Tall, n));
        CHECK(enumerate_symmetric_mazes(2 * n, 2 * n + 2).size() == count_symmetric_closed(SymmetricShape::Tall, n));
    }
}

TEST_CASE("table1 at small parameters") {
    auto rows = table1(2, 2);
    auto find = [&](const std::string& label) -> const CountReport& {
        for (const auto& r : rows)
            if (r.label == label) return r;
        FAIL("missing row " << label);
        return rows.front();
    };
    CHECK(find("gl(1|2)").enumerated == 3);
    CHECK(find("gl(2|2)").enumerated == 7);
    const auto& osp32 = find("osp(3|2)");
    CHECK(osp32.enumerated == 3);
    REQUIRE(osp32.companions.size() == 1);
    CHECK(osp32.companions[0].second == 3);
    CHECK(find("osp(2|2)").companions[0].second == 3);
    CHECK(find("f(4)").enumerated == 9);
    CHECK_FALSE(find("g(3)").computed);
    for (const auto& r : rows) CHECK_MESSAGE(r.match, r.label);
    std::string md = format_table1(rows, "md");
    CHECK(md.find("| gl(1|2) |") != std::string::npos);
    CHECK(format_table1(rows, "csv").rfind("family,", 0) == 0);
    CHECK_THROWS_AS(format_table1(rows, "xml"), DomainError);
}
