#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gridgame/errors.hpp"
#include "gridgame/milp.hpp"

using namespace gridgame;

namespace {

MilpModel tiny_model() {
    MilpModel m;
    m.add_var("x", VarKind::Continuous, 0.0, 10.0);
    m.add_var("y", VarKind::Binary, 0.0, 1.0);
    m.add_obj(0, 1.5);
    m.add_obj(1, -2.0);
    m.add_row("cap", RowSense::LE, 7.5, {{0, 1.0}, {1, 3.0}});
    m.add_row("link", RowSense::GE, 1.0, {{0, 0.5}});
    return m;
}

}  // namespace

TEST_CASE("validate accepts a well-formed model") {
    MilpModel m = tiny_model();
    CHECK_NOTHROW(m.validate());
    CHECK(m.num_binaries() == 1);
}

TEST_CASE("validate rejects bad binaries and dangling references") {
    MilpModel m;
    m.add_var("b", VarKind::Binary, 0.0, 2.0);
    CHECK_THROWS_AS(m.validate(), ModelError);

    MilpModel m2;
    m2.add_var("x", VarKind::Continuous, 0.0, 1.0);
    m2.add_row("r", RowSense::LE, 1.0, {{3, 1.0}});
    CHECK_THROWS_AS(m2.validate(), ModelError);
}

TEST_CASE("dump round-trips variables, rows and objective") {
    MilpModel m = tiny_model();
    const std::string text = model_dump(m);
    std::istringstream in(text);
    MilpModel back = read_model_dump(in);
    CHECK(back.num_vars() == m.num_vars());
    CHECK(back.num_rows() == m.num_rows());
    CHECK(back.var(1).kind == VarKind::Binary);
    CHECK(back.row(0).rhs == doctest::Approx(7.5));
    CHECK(model_dump(back) == text);  // byte-stable
}

TEST_CASE("dump golden fixture for the tiny model") {
    const std::string expected =
        "MILPDUMP 1\n"
        "vars 2\n"
        "0 x C 0 10\n"
        "1 y B 0 1\n"
        "rows 2\n"
        "0 cap LE 7.5 2 0 1 1 3\n"
        "1 link GE 1 1 0 0.5\n"
        "obj 2 0 1.5 1 -2\n"
        "end\n";
    CHECK(model_dump(tiny_model()) == expected);
}

TEST_CASE("empty model dumps header only") {
    MilpModel empty;
    CHECK(model_dump(empty) ==
          "MILPDUMP 1\n"
          "vars 0\n"
          "rows 0\n"
          "obj 0\n"
          "end\n");
}

TEST_CASE("malformed dump raises ParseError") {
    std::istringstream in("not a dump");
    CHECK_THROWS_AS(read_model_dump(in), ParseError);
}

TEST_CASE("max_violation measures the worst bound or row breach") {
    MilpModel m = tiny_model();
    CHECK(m.max_violation({2.0, 1.0}) == doctest::Approx(0.0));
    // x=9, y=1: row cap activity 12 vs rhs 7.5
    CHECK(m.max_violation({9.0, 1.0}) == doctest::Approx(4.5));
}
