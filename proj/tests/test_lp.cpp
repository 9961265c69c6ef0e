#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dca/lp.hpp"

using namespace dca;

TEST_CASE("feasibility of a convex combination hitting the midpoint") {
  // lambda_1 (1,0) + lambda_2 (0,1) = (1/2,1/2), lambda in the simplex
  LP lp;
  lp.A = {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  lp.b = {Rat(1), Rat(1, 2), Rat(1, 2)};
  lp.rel = {0, 0, 0};
  lp.c = {Rat(0), Rat(0)};
  LPResult r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 0);
  CHECK(r.x[0] == Rat(1, 2));
  CHECK(r.x[1] == Rat(1, 2));
}

TEST_CASE("infeasible system") {
  // x <= 0 and x >= 1
  LP lp;
  lp.A = {{Rat(1)}, {Rat(1)}};
  lp.b = {Rat(0), Rat(1)};
  lp.rel = {-1, +1};
  lp.c = {Rat(0)};
  CHECK(solve_lp(lp).status == LPStatus::Infeasible);
}

TEST_CASE("hull membership system for (1,1) in a four-point hull") {
  // lambdas over {(1,0),(0,1),(2,1),(1,2)} with barycenter (1,1)
  LP lp;
  lp.A = {{Rat(1), Rat(1), Rat(1), Rat(1)},
          {Rat(1), Rat(0), Rat(2), Rat(1)},
          {Rat(0), Rat(1), Rat(1), Rat(2)}};
  lp.b = {Rat(1), Rat(1), Rat(1)};
  lp.rel = {0, 0, 0};
  lp.c = {Rat(0), Rat(0), Rat(0), Rat(0)};
  LPResult r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::Optimal);
  // certificate really is a convex combination hitting (1,1)
  Rat sum = 0, c1 = 0, c2 = 0;
  Rat xs[4][2] = {{1, 0}, {0, 1}, {2, 1}, {1, 2}};
  for (int i = 0; i < 4; ++i) {
    CHECK(r.x[i] >= 0);
    sum += r.x[i];
    c1 += r.x[i] * xs[i][0];
    c2 += r.x[i] * xs[i][1];
  }
  CHECK(sum == 1);
  CHECK(c1 == 1);
  CHECK(c2 == 1);
}

TEST_CASE("unbounded objective") {
  LP lp;
  lp.A = {{Rat(1)}};
  lp.b = {Rat(0)};
  lp.rel = {+1};
  lp.c = {Rat(-1)};
  CHECK(solve_lp(lp).status == LPStatus::Unbounded);
}

TEST_CASE("free variables") {
  // min x subject to x >= -3, x unrestricted in sign
  LP lp;
  lp.A = {{Rat(1)}};
  lp.b = {Rat(-3)};
  lp.rel = {+1};
  lp.c = {Rat(1)};
  LPResult r = solve_lp_mixed(lp, {true});
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Rat(-3));
  CHECK(r.x[0] == Rat(-3));
}

TEST_CASE("exact rational optimum") {
  // min -x - y subject to 2x + y <= 3, x + 3y <= 4
  LP lp;
  lp.A = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  lp.b = {Rat(3), Rat(4)};
  lp.rel = {-1, -1};
  lp.c = {Rat(-1), Rat(-1)};
  LPResult r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::Optimal);
  // vertex (1, 1) of the two binding constraints
  CHECK(r.x[0] == Rat(1));
  CHECK(r.x[1] == Rat(1));
  CHECK(r.value == Rat(-2));
}
