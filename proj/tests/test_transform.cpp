#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dca/classify.hpp"
#include "dca/fixtures.hpp"
#include "dca/transform.hpp"

using namespace dca;

TEST_CASE("value scaling endpoints") {
  LatticeFunction f = fx::jmnatmnat(1, 0);
  // beta = 0 collapses to the indicator of the effective domain
  LatticeFunction z = value_scale(f, Rat(0));
  CHECK(z == indicator(f.support_set(), f.window));
  // beta = 1 is the identity
  CHECK(value_scale(f, Rat(1)) == f);
  // positive rational scaling preserves m-natural convexity
  CHECK(check_fn(value_scale(f, Rat(3, 2)), FnClass::MNat).holds);
}

TEST_CASE("restriction identities") {
  LatticeFunction f = fx::la1_f();
  CHECK(restrict_box(f, f.window) == f);
  // restriction to a smaller box drops outside points
  LatticeFunction g = restrict_box(f, Window::cube(3, 0, 1));
  for (const auto& [x, v] : g.values) CHECK(Window::cube(3, 0, 1).contains(x));
}

TEST_CASE("coordinate restriction and projection preserve multimodularity") {
  LatticeSet s = fx::mmsetperm_s();
  REQUIRE(check_set(s, SetClass::Multimodular).holds);
  // restriction to the first two coordinates (others fixed to 0)
  LatticeSet r = restrict_to(s, {0, 1});
  CHECK(check_set(r, SetClass::Multimodular).holds);
  // projection onto a consecutive pair of coordinates
  LatticeSet p = project_to(s, {1, 2});
  CHECK(check_set(p, SetClass::Multimodular).holds);
}

TEST_CASE("shift round trip") {
  LatticeSet s = fx::mnatsetscdim3_s();
  Point t = make_point({2, -1, 3});
  LatticeSet back = apply_change(apply_change(s, Shift{t}), Shift{neg(t)});
  CHECK(back == s);

  LatticeFunction f = fx::scicfnng422_f();
  LatticeFunction fb =
      apply_change(apply_change(f, Shift{t}), Shift{neg(t)});
  CHECK(fb == f);
}

TEST_CASE("sign inversion and permutation") {
  LatticeSet d = fx::diag2(-3, 3);
  // flipping the second coordinate carries the diagonal to the antidiagonal
  CHECK(apply_change(d, InvertSigns{{1, -1}}) == fx::antidiag2(-3, 3));
  CHECK(apply_change(d, InvertAll{}) == d);
  CHECK(apply_change(d, Permute{{1, 0}}) == d);
}

TEST_CASE("domain scaling keeps exactly the divisible points") {
  LatticeSet s = fx::scicsetng422_s();
  CHECK(apply_change(s, VarScale{2}) == fx::scicsetng422_t());
}

TEST_CASE("additive and convolution identities") {
  LatticeFunction f = fx::jmnatmnat(1, 0);

  // f + 0 = f
  std::map<Point, Rat> zv;
  f.window.for_each([&](const Point& x) { zv[x] = 0; });
  LatticeFunction zero(f.dim, f.window, std::move(zv));
  CHECK(add(f, zero) == f);

  // f convolved with the indicator of the origin = f
  LatticeFunction delta0 =
      indicator(LatticeSet(f.dim, {Point(f.dim, Int(0))}));
  CHECK(convolve(f, delta0) == f);

  // Minkowski sum with {0} is the identity on sets
  LatticeSet s = fx::msetboxsum_s();
  CHECK(minkowski_sum(s, LatticeSet(2, {Point(2, Int(0))})) == s);
}

TEST_CASE("operations that empty the domain throw") {
  LatticeSet a = LatticeSet::of(1, {{0}});
  LatticeSet b = LatticeSet::of(1, {{5}});
  CHECK_THROWS_AS(intersect(a, b), empty_result);
  CHECK_THROWS_AS(apply_change(b, VarScale{2}), empty_result);
}

TEST_CASE("lifts between classes") {
  // m-natural -> m via the balancing coordinate
  LatticeFunction f = fx::jmnatmnat(1, 0);
  CHECK(check_fn(lift_mnat_to_m(f), FnClass::M).holds);

  // jump m-natural -> jump m via the parity coordinate
  CHECK(check_fn(lift_jump_mnat_to_m(fx::jmnatmnat(0, 1)),
                 FnClass::JumpM).holds);
  CHECK(check_fn(lift_jump_mnat_to_m(fx::jmnatmnat(1, 0)),
                 FnClass::JumpM).holds);

  // multimodular -> l-natural via the bidiagonal change of variables
  LatticeFunction q = quadratic_function(fx::mmfnperm1_a(),
                                         Window::cube(3, -2, 2));
  REQUIRE(check_fn(q, FnClass::Multimodular).holds);
  CHECK(check_fn(mm_to_lnat(q), FnClass::LNat).holds);
  // and back
  CHECK(lnat_to_mm(mm_to_lnat(q)) == q);

  // l-natural -> l: the lift is window-certified l-convex
  LatticeFunction stairs =
      indicator(LatticeSet::of(2, {{0, 0}, {0, 1}, {1, 1}}));
  REQUIRE(check_fn(stairs, FnClass::LNat).holds);
  CHECK(check_fn(lift_lnat_to_l(stairs), FnClass::L).holds);
}
