#include <doctest.h>

#include <cmath>

#include "cyclomon/simplex.hpp"

using namespace cyclomon;
using Status = LinearProgramResult::Status;

TEST_CASE("simplex: basic equality LP") {
    // min -x1 - 2 x2  s.t.  x1 + x2 + x3 = 4, x1 + 3 x2 + x4 = 6, x >= 0.
    // Optimum at x = (3, 1): objective -5.
    const Matrix a = {{1, 1, 1, 0}, {1, 3, 0, 1}};
    const Vector b = {4, 6};
    const Vector c = {-1, -2, 0, 0};
    const auto res = solve_simplex(a, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(std::fabs(res.objective - (-5.0)) < 1e-9);
    CHECK(std::fabs(res.x[0] - 3.0) < 1e-9);
    CHECK(std::fabs(res.x[1] - 1.0) < 1e-9);
}

TEST_CASE("simplex: infeasible system") {
    // x1 = 1 and x1 = 2 cannot both hold.
    const Matrix a = {{1}, {1}};
    const Vector b = {1, 2};
    const Vector c = {0};
    CHECK(solve_simplex(a, b, c).status == Status::Infeasible);
}

TEST_CASE("simplex: unbounded objective") {
    // min -x1  s.t.  x1 - x2 = 0: x1 can grow without bound.
    const Matrix a = {{1, -1}};
    const Vector b = {0};
    const Vector c = {-1, 0};
    CHECK(solve_simplex(a, b, c).status == Status::Unbounded);
}

TEST_CASE("simplex: negative rhs rows are handled") {
    // min x1 + x2  s.t. -x1 - x2 = -2  ->  x1 + x2 = 2, optimum 2.
    const Matrix a = {{-1, -1}};
    const Vector b = {-2};
    const Vector c = {1, 1};
    const auto res = solve_simplex(a, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(std::fabs(res.objective - 2.0) < 1e-9);
}

TEST_CASE("simplex: degenerate LP terminates (Bland)") {
    // Classic degenerate vertex: multiple basic feasible representations of
    // the same point. Bland's rule must not cycle.
    const Matrix a = {{1, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}};
    const Vector b = {1, 1, 0};
    const Vector c = {-1, -1, 0, 0, 0};
    const auto res = solve_simplex(a, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(std::fabs(res.objective - (-1.0)) < 1e-9);
}

TEST_CASE("simplex: simplex-weight LP with equality targets") {
    // Certificate-style LP: weights on two columns reproducing a point.
    const Matrix a = {{0, 1}, {1, 1}};  // rows: value row, simplex row
    const Vector b = {0.5, 1};
    const Vector c = {0, 1};
    const auto res = solve_simplex(a, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(std::fabs(res.x[0] - 0.5) < 1e-9);
    CHECK(std::fabs(res.x[1] - 0.5) < 1e-9);
}

TEST_CASE("simplex: redundant equality rows") {
    const Matrix a = {{1, 1}, {2, 2}};
    const Vector b = {1, 2};
    const Vector c = {1, 0};
    const auto res = solve_simplex(a, b, c);
    REQUIRE(res.status == Status::Optimal);
    CHECK(std::fabs(res.objective - 0.0) < 1e-9);
}
