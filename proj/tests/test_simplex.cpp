#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gridgame/errors.hpp"
#include "gridgame/milp.hpp"
#include "gridgame/simplex.hpp"
#include "gridgame/solver.hpp"
#include "support/lp_oracle.hpp"
#include "support/random_models.hpp"

using namespace gridgame;

TEST_CASE("min x subject to x >= 3") {
    MilpModel m;
    m.add_var("x", VarKind::Continuous, 0.0, 100.0);
    m.add_obj(0, 1.0);
    m.add_row("r", RowSense::GE, 3.0, {{0, 1.0}});
    auto sol = solve_lp(m);
    CHECK(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(3.0));
    CHECK(sol.values[0] == doctest::Approx(3.0));
}

TEST_CASE("max x via min -x subject to x <= 5, x >= 0") {
    MilpModel m;
    m.add_var("x", VarKind::Continuous, 0.0, 1e30);
    m.add_obj(0, -1.0);
    m.add_row("r", RowSense::LE, 5.0, {{0, 1.0}});
    auto sol = solve_lp(m);
    CHECK(sol.status == SolveStatus::Optimal);
    CHECK(sol.values[0] == doctest::Approx(5.0));
    CHECK(sol.objective == doctest::Approx(-5.0));
}

TEST_CASE("infeasible and unbounded LPs are reported") {
    MilpModel inf;
    inf.add_var("x", VarKind::Continuous, 0.0, 1.0);
    inf.add_row("r", RowSense::GE, 5.0, {{0, 1.0}});
    CHECK(solve_lp(inf).status == SolveStatus::Infeasible);

    MilpModel unb;
    unb.add_var("x", VarKind::Continuous, 0.0,
                std::numeric_limits<double>::infinity());
    unb.add_obj(0, -1.0);
    CHECK(solve_lp(unb).status == SolveStatus::Unbounded);
}

TEST_CASE("bounded-variable handling: optimum at an upper bound without rows") {
    MilpModel m;
    m.add_var("x", VarKind::Continuous, -2.0, 4.0);
    m.add_var("y", VarKind::Continuous, -1.0, 1.0);
    m.add_obj(0, -1.0);
    m.add_obj(1, 2.0);
    auto sol = solve_lp(m);
    CHECK(sol.status == SolveStatus::Optimal);
    CHECK(sol.values[0] == doctest::Approx(4.0));
    CHECK(sol.values[1] == doctest::Approx(-1.0));
}

TEST_CASE("20 seeded random LPs match the enumeration oracle within 1e-6") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CAPTURE(seed);
        MilpModel m = testsupport::random_lp(seed);
        auto mine = solve_lp_detailed(m);
        auto ref = oracle::solve(m);
        REQUIRE(ref.feasible);
        REQUIRE(mine.status == SolveStatus::Optimal);
        CHECK(std::abs(mine.objective - ref.objective) < 1e-6);
        // Weak-duality audit on the final basis.
        CHECK(std::abs(mine.objective - mine.dual_bound) < 1e-6);
        // Replay the solution against the raw model.
        CHECK(m.max_violation(mine.x) <= 1e-7);
    }
}

TEST_CASE("simplex is deterministic: identical runs, identical iteration counts") {
    MilpModel m = testsupport::random_lp(7);
    auto a = solve_lp_detailed(m);
    auto b = solve_lp_detailed(m);
    CHECK(a.iterations == b.iterations);
    CHECK(a.objective == b.objective);
    REQUIRE(a.x.size() == b.x.size());
    for (size_t i = 0; i < a.x.size(); ++i) CHECK(a.x[i] == b.x[i]);
}

TEST_CASE("warm start from the optimal basis re-solves in zero pivots") {
    MilpModel m = testsupport::random_lp(3);
    BoundedSimplex s(m);
    auto first = s.solve();
    REQUIRE(first.status == SolveStatus::Optimal);
    Basis basis = s.basis();
    auto second = s.solve(&basis);
    CHECK(second.status == SolveStatus::Optimal);
    CHECK(second.objective == doctest::Approx(first.objective));
    CHECK(second.iterations == 0);
}
