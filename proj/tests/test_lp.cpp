#include <cmath>

#include <doctest.h>

#include "tropdea/lp.hpp"
#include "tropdea/rng.hpp"

using namespace tropdea;

TEST_CASE("simple maximization") {
    LpProblem p;
    p.sense = Sense::Maximize;
    p.c = {1, 1};
    p.add({1, 1}, Rel::Le, 1);
    LpSolution s = solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("greater-equal rows with minimization") {
    LpProblem p;
    p.c = {1};
    p.add({1}, Rel::Ge, 2);
    p.add({1}, Rel::Ge, 5);
    LpSolution s = solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(5.0).epsilon(1e-12));
    // Only the binding row carries a multiplier.
    CHECK(std::abs(s.duals[0]) <= 1e-9);
    CHECK(s.duals[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("unbounded and infeasible detection") {
    LpProblem unb;
    unb.sense = Sense::Maximize;
    unb.c = {1};
    CHECK(solve(unb).status == LpStatus::Unbounded);

    LpProblem inf;
    inf.c = {0};
    inf.add({1}, Rel::Le, -1); // x <= -1 with x >= 0
    CHECK(solve(inf).status == LpStatus::Infeasible);

    LpProblem inf2;
    inf2.c = {1, 1};
    inf2.add({1, 1}, Rel::Le, 1);
    inf2.add({1, 1}, Rel::Ge, 2);
    CHECK(solve(inf2).status == LpStatus::Infeasible);
}

TEST_CASE("equality rows and duals") {
    LpProblem p;
    p.c = {2, 3};
    p.add({1, 1}, Rel::Eq, 4);
    p.add({1, 0}, Rel::Le, 3);
    LpSolution s = solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(9.0).epsilon(1e-9)); // x = (3, 1)
    double dual_obj = s.duals[0] * 4 + s.duals[1] * 3;
    CHECK(dual_obj == doctest::Approx(s.objective).epsilon(1e-9));
}

TEST_CASE("redundant equality rows survive phase one") {
    LpProblem p;
    p.c = {1, 1};
    p.add({1, 1}, Rel::Eq, 2);
    p.add({2, 2}, Rel::Eq, 4); // dependent duplicate
    LpSolution s = solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("wide dynamic range rows stay solvable") {
    // Mimics the exponential-transform scale at |alpha| ~ 50.
    LpProblem p;
    p.c = {1, 0, 0};
    p.add({-1e80, 1e80, 1.0}, Rel::Le, 0);
    p.add({0, 1e80, 1.0}, Rel::Ge, 1e80);
    LpSolution s = solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("random LPs: dual objective equals primal objective") {
    Rng rng(77);
    int optimal_seen = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng.below(4));
        int m = 1 + static_cast<int>(rng.below(4));
        LpProblem p;
        p.sense = rng.below(2) == 0 ? Sense::Minimize : Sense::Maximize;
        p.c.resize(static_cast<size_t>(n));
        for (double& v : p.c) v = static_cast<double>(rng.below(7)) - 3.0;
        for (int r = 0; r < m; ++r) {
            std::vector<double> a(static_cast<size_t>(n));
            for (double& v : a) v = static_cast<double>(rng.below(7)) - 3.0;
            p.add(std::move(a), rng.below(2) == 0 ? Rel::Le : Rel::Ge,
                  static_cast<double>(rng.below(7)) - 3.0);
        }
        LpSolution s = solve(p);
        if (s.status != LpStatus::Optimal) continue;
        ++optimal_seen;
        double dual_obj = 0.0;
        for (int r = 0; r < m; ++r) dual_obj += s.duals[static_cast<size_t>(r)] * p.rows[static_cast<size_t>(r)].rhs;
        CHECK(std::abs(dual_obj - s.objective) <= 1e-7 * std::max(1.0, std::abs(s.objective)));
        // Complementary slackness on every row.
        for (int r = 0; r < m; ++r) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += p.rows[static_cast<size_t>(r)].a[static_cast<size_t>(j)] * s.x[static_cast<size_t>(j)];
            CHECK(std::abs(s.duals[static_cast<size_t>(r)] * (lhs - p.rows[static_cast<size_t>(r)].rhs)) <= 1e-7);
        }
    }
    CHECK(optimal_seen > 30);
}
