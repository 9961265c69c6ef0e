#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dca/classify.hpp"
#include "dca/fixtures.hpp"
#include "dca/transform.hpp"

using namespace dca;

TEST_CASE("class name round trips") {
  for (SetClass c : all_set_classes())
    CHECK(parse_set_class(set_class_name(c)) == c);
  for (FnClass c : all_fn_classes())
    CHECK(parse_fn_class(fn_class_name(c)) == c);
  CHECK(!parse_set_class("no-such-class").has_value());
}

TEST_CASE("one-dimensional jump systems") {
  LatticeSet s02 = fx::jumpdim1();  // {0, 2}
  CHECK(check_set(s02, SetClass::CpJump).holds);
  CHECK(check_set(s02, SetClass::JumpSystem).holds);
  CHECK(!check_set(s02, SetClass::MNat).holds);  // the 1-gap breaks M-nat

  LatticeSet s023 = fx::nonsejumpdim1();  // {0, 2, 3}
  CHECK(check_set(s023, SetClass::JumpSystem).holds);
  CHECK(!check_set(s023, SetClass::SeJump).holds);
  CHECK(!check_set(s023, SetClass::CpJump).holds);
}

TEST_CASE("delta-matroid that is not simultaneous-exchange") {
  LatticeSet s = fx::nonsejump();
  CHECK(check_set(s, SetClass::JumpSystem).holds);
  Verdict v = check_set(s, SetClass::SeJump);
  CHECK(!v.holds);
  CHECK(!v.points.empty());  // carries the violating pair
}

TEST_CASE("intersection of m-convex sets loses the exchange property") {
  LatticeSet inter = intersect(fx::msetinter_s1(), fx::msetinter_s2());
  CHECK(check_set(fx::msetinter_s1(), SetClass::M).holds);
  CHECK(check_set(fx::msetinter_s2(), SetClass::M).holds);
  CHECK(!check_set(inter, SetClass::M).holds);
  CHECK(!check_set(inter, SetClass::MNat).holds);
}

TEST_CASE("a singleton is m-convex") {
  CHECK(check_set(LatticeSet::of(2, {{5, -3}}), SetClass::M).holds);
}

TEST_CASE("integral convexity is not preserved by domain scaling") {
  CHECK(check_set(fx::scicsetng422_s(), SetClass::IntegrallyConvex).holds);
  Verdict v = check_set(fx::scicsetng422_t(), SetClass::IntegrallyConvex);
  CHECK(!v.holds);
}

TEST_CASE("parameterized separable pair: m-natural vs jump m-natural") {
  // value a on the diagonal of the unit square, b off it: the jump exchange
  // always holds, the m-natural exchange only when a >= b
  CHECK(check_fn(fx::jmnatmnat(1, 0), FnClass::MNat).holds);
  Verdict v = check_fn(fx::jmnatmnat(0, 1), FnClass::MNat);
  CHECK(!v.holds);
  CHECK(!v.points.empty());
  CHECK(check_fn(fx::jmnatmnat(0, 1), FnClass::JumpMNat).holds);
}

TEST_CASE("quadratic multimodularity coefficient criterion") {
  Verdict good = quadratic_multimodular(fx::mmfnperm1_a());
  CHECK(good.holds);
  Verdict bad = quadratic_multimodular(fx::mmfnperm1_atilde());
  CHECK(!bad.holds);

  // the tabulated form agrees with the coefficient criterion
  LatticeFunction f = quadratic_function(fx::mmfnperm1_a(),
                                         Window::cube(3, -2, 2));
  CHECK(check_fn(f, FnClass::Multimodular).holds);
  LatticeFunction g = quadratic_function(fx::mmfnperm1_atilde(),
                                         Window::cube(3, -2, 2));
  CHECK(!check_fn(g, FnClass::Multimodular).holds);
}

TEST_CASE("half-sum star is not integrally convex") {
  Verdict v = check_fn(fx::la1_f(), FnClass::IntegrallyConvex);
  CHECK(!v.holds);
}

TEST_CASE("the zero function on a box is in every box-compatible class") {
  std::map<Point, Rat> vals;
  Window w = Window::cube(3, 0, 1);
  w.for_each([&](const Point& x) { vals[x] = 0; });
  LatticeFunction z(3, w, std::move(vals));
  for (FnClass c : all_fn_classes()) {
    // m-convex and jump-m domains are constrained (constant component sum /
    // parity); a full box cannot satisfy them, zero values or not
    if (c == FnClass::M || c == FnClass::JumpM) {
      CHECK(!check_fn(z, c).holds);
      continue;
    }
    INFO("class ", fn_class_name(c));
    CHECK(check_fn(z, c).holds);
  }
}

TEST_CASE("six-way l-natural profile") {
  // staircase indicator: all six characterizations agree on true
  LatticeFunction stairs =
      indicator(LatticeSet::of(2, {{0, 0}, {0, 1}, {1, 1}}));
  LnatProfile p = lnat_profile(stairs);
  CHECK(p.agree());
  CHECK(p.midpoint.holds);

  // |x1 + x2 - 3| on [0,3]^2 fails the midpoint inequality at (3,0),(0,3)
  std::map<Point, Rat> vals;
  Window w = Window::cube(2, 0, 3);
  w.for_each([&](const Point& x) { vals[x] = abs(Rat(x[0] + x[1] - 3)); });
  LatticeFunction f(2, w, std::move(vals));
  LnatProfile q = lnat_profile(f);
  CHECK(q.agree());
  CHECK(!q.midpoint.holds);

  // two-point antichain indicator: integrally convex but not submodular
  LatticeFunction anti = indicator(LatticeSet::of(2, {{1, 0}, {0, 1}}));
  LnatProfile r = lnat_profile(anti);
  CHECK(r.agree());
  CHECK(!r.ic_submodular.holds);
}

TEST_CASE("dimension-2 coincidences on fixtures") {
  CHECK(dim2_crosscheck(fx::diag2(-3, 3)).consistent());
  CHECK(dim2_crosscheck(fx::antidiag2(-3, 3)).consistent());
  CHECK(dim2_crosscheck(fx::msetboxsum_s()).consistent());
  CHECK(dim2_crosscheck(fx::mfnsigninv_f()).consistent());
  CHECK(dim2_crosscheck(fx::mfnsigninv_g()).consistent());
}

TEST_CASE("negative verdicts carry re-checkable witnesses") {
  Verdict v = check_fn(fx::la1_f(), FnClass::IntegrallyConvex);
  REQUIRE(!v.holds);
  CHECK(!v.describe().empty());
}
