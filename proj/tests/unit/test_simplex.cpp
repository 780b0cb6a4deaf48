#include "arakelov/simplex.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

using namespace arakelov;
using fixtures::q;

TEST_CASE("textbook maximum") {
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
    const LpResult r = solve_lp({{{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {3, 5}});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 36);
    CHECK(r.x == std::vector<Rational>{2, 6});
}

TEST_CASE("negative right-hand sides need phase one") {
    // max -x - y, x + y >= 3/2 (as -x - y <= -3/2), x <= 1
    const LpResult r = solve_lp({{{-1, -1}, {1, 0}}, {q("-3/2"), 1}, {-1, -1}});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == q("-3/2"));
}

TEST_CASE("infeasible and unbounded") {
    CHECK(solve_lp({{{1}}, {-1}, {1}}).status == LpStatus::infeasible);
    CHECK(solve_lp({{{-1}}, {1}, {1}}).status == LpStatus::unbounded);
}

TEST_CASE("degenerate program terminates") {
    // Classic cycling example under the largest-coefficient rule.
    const LpResult r = solve_lp({{{q("1/2"), q("-11/2"), q("-5/2"), 9}, {q("1/2"), q("-3/2"), q("-1/2"), 1}, {1, 0, 0, 0}},
                                 {0, 0, 1},
                                 {10, -57, -9, -24}});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 1);
}

TEST_CASE("solution is feasible and matches vertex enumeration in two variables") {
    // Small box-and-diagonal programs: compare with enumerating pairwise
    // constraint intersections.
    const std::vector<std::vector<Rational>> a{{1, 2}, {3, 1}, {-1, 1}, {1, -4}};
    const std::vector<Rational> b{8, 9, 2, 1};
    for (int cx = -3; cx <= 3; ++cx)
        for (int cy = -3; cy <= 3; ++cy) {
            const LpResult r = solve_lp({a, b, {cx, cy}});
            REQUIRE(r.status == LpStatus::optimal);
            // rows plus x >= 0, y >= 0
            std::vector<std::vector<Rational>> rows = a;
            std::vector<Rational> rhs = b;
            rows.push_back({-1, 0});
            rhs.push_back(0);
            rows.push_back({0, -1});
            rhs.push_back(0);
            Rational best = -1000000;
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = i + 1; j < rows.size(); ++j) {
                    const Rational det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
                    if (det == 0) continue;
                    const Rational x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
                    const Rational y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
                    bool ok = true;
                    for (std::size_t k = 0; k < rows.size(); ++k)
                        if (rows[k][0] * x + rows[k][1] * y > rhs[k]) ok = false;
                    if (ok) best = std::max(best, cx * x + cy * y);
                }
            REQUIRE(r.value == best);
            for (std::size_t k = 0; k < a.size(); ++k) REQUIRE(a[k][0] * r.x[0] + a[k][1] * r.x[1] <= b[k]);
        }
}
