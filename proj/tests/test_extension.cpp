#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dca/conjugate.hpp"
#include "dca/extension.hpp"
#include "dca/fixtures.hpp"
#include "dca/transform.hpp"

using namespace dca;

namespace {
RatPoint rz(std::initializer_list<Rat> xs) {
  RatPoint r;
  for (const Rat& v : xs) r.push_back(v);
  return r;
}
}  // namespace

TEST_CASE("local extension at an integral point is the function value") {
  LatticeFunction f = fx::la1_f();
  CHECK(local_extension_value(f, rz({Rat(0), Rat(0), Rat(0)})) == ExtVal(0));
  CHECK(local_extension_value(f, rz({Rat(1), Rat(1), Rat(0)})) == ExtVal(1));
  // outside dom: the neighbourhood misses the domain entirely
  CHECK(local_extension_value(f, rz({Rat(5), Rat(5), Rat(5)})).is_inf());
}

TEST_CASE("scaled table function: midpoint extension value 1/2") {
  LatticeFunction g = fx::scicfnng422_g();
  CHECK(local_extension_value(g, rz({Rat(1), Rat(1, 2), Rat(1, 2)})) ==
        ExtVal(Rat(1, 2)));
  // the endpoints of the witness pair both have value 0
  CHECK(g.eval(make_point({0, 0, 0})) == ExtVal(0));
  CHECK(g.eval(make_point({2, 1, 1})) == ExtVal(0));
}

TEST_CASE("conjugate of the four-point indicator: extension value 5/4") {
  LatticeFunction g = conjugate(fx::conjic_f(), Window::cube(4, -2, 2));
  ExtVal v = local_extension_value(
      g, rz({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1)}));
  CHECK(v == ExtVal(Rat(5, 4)));
  // versus the endpoint average (0 + 2) / 2 = 1
  CHECK(g.eval(make_point({0, 0, 0, 0})) == ExtVal(0));
  CHECK(g.eval(make_point({1, 1, 1, 2})) == ExtVal(2));
}

TEST_CASE("hull membership with certificate") {
  LatticeSet t = minkowski_sum(fx::icdim2sumhole_s1(), fx::icdim2sumhole_s2());
  // (1,1) lies in the hull of the sum but not in the sum itself
  HullCertificate cert;
  CHECK(hull_membership(t, rz({Rat(1), Rat(1)}), &cert));
  CHECK(!t.contains(make_point({1, 1})));
  Rat sum = 0;
  RatPoint comb(2, Rat(0));
  for (size_t i = 0; i < cert.support.size(); ++i) {
    CHECK(cert.coefficients[i] > 0);
    CHECK(t.contains(cert.support[i]));
    sum += cert.coefficients[i];
    for (size_t j = 0; j < 2; ++j)
      comb[j] += cert.coefficients[i] * Rat(cert.support[i][j]);
  }
  CHECK(sum == 1);
  CHECK(comb[0] == 1);
  CHECK(comb[1] == 1);

  // a member of the set is trivially in its hull
  CHECK(hull_membership(t, rz({Rat(1), Rat(0)})));
  // and a far-away point is not
  CHECK(!hull_membership(t, rz({Rat(5), Rat(5)})));
}

TEST_CASE("global envelope value") {
  // the real lower convex envelope of the half-sum star is 0 at the origin;
  // the integral biconjugate dips below it to -1 (integrality gap)
  LatticeFunction f = fx::la1_f();
  CHECK(envelope_value(f, rz({Rat(0), Rat(0), Rat(0)})) == ExtVal(0));
}
