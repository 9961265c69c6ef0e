#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dca/function.hpp"
#include "dca/lattice.hpp"

using namespace dca;

namespace {
Point pt(std::initializer_list<long> xs) { return make_point(xs); }
RatPoint rp(std::initializer_list<Rat> xs) {
  RatPoint r;
  for (const Rat& v : xs) r.push_back(v);
  return r;
}
}  // namespace

TEST_CASE("rounded midpoints") {
  CHECK(mid_up(pt({1, 1, 0}), pt({0, 1, 1})) == pt({1, 1, 1}));
  CHECK(mid_down(pt({1, 1, 0}), pt({0, 1, 1})) == pt({0, 1, 0}));
  // midpoint of a point with itself is the point
  CHECK(mid_up(pt({3, -2}), pt({3, -2})) == pt({3, -2}));
  CHECK(mid_down(pt({3, -2}), pt({3, -2})) == pt({3, -2}));
  CHECK(mid_up(pt({0, 0, 1}), pt({2, 1, 0})) == pt({1, 1, 1}));
  CHECK(mid_down(pt({0, 0, 1}), pt({2, 1, 0})) == pt({1, 0, 0}));
}

TEST_CASE("supports, join/meet, distances") {
  Point d = sub(pt({1, 0, 1}), pt({0, 1, 0}));
  CHECK(supp_pos(d) == std::vector<size_t>{0, 2});
  CHECK(supp_neg(d) == std::vector<size_t>{1});

  CHECK(join(pt({1, 0}), pt({0, 1})) == pt({1, 1}));
  CHECK(meet(pt({1, 0}), pt({0, 1})) == pt({0, 0}));

  CHECK(linf_norm(sub(pt({0, 0, 0}), pt({2, 1, 1}))) == 2);
  CHECK(l1_norm(sub(pt({0, 0, 0}), pt({2, 1, 1}))) == 4);
  CHECK(comp_sum(pt({3, -1, 4})) == 6);
  CHECK(inner(pt({1, 2}), pt({3, -1})) == Rat(1));
}

TEST_CASE("integral neighbourhood enumeration") {
  // (1, 1/2, 1/2): integer coordinate pinned, two fractional ones branch.
  auto n = integral_neighborhood(rp({Rat(1), Rat(1, 2), Rat(1, 2)}));
  REQUIRE(n.size() == 4);
  CHECK(n[0] == pt({1, 0, 0}));
  CHECK(n[1] == pt({1, 0, 1}));
  CHECK(n[2] == pt({1, 1, 0}));
  CHECK(n[3] == pt({1, 1, 1}));

  // integral point: the neighbourhood is the point itself
  auto m = integral_neighborhood(rp({Rat(2), Rat(-3)}));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == pt({2, -3}));

  auto q = integral_neighborhood(rp({Rat(1, 2), Rat(1, 2)}));
  CHECK(q.size() == 4);
}

TEST_CASE("bidiagonal change of variables") {
  CHECK(bidiagonal_inverse(pt({0, 1, -1})) == pt({0, 1, 0}));
  CHECK(bidiagonal_inverse(pt({1, 1, -1})) == pt({1, 2, 1}));
  CHECK(bidiagonal_apply(bidiagonal_inverse(pt({3, -1, 4}))) ==
        pt({3, -1, 4}));
  CHECK(bidiagonal_transpose_apply(
            bidiagonal_transpose_inverse(pt({3, -1, 4}))) == pt({3, -1, 4}));
}

TEST_CASE("lattice identities on random points") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::uniform_int_distribution<size_t> dims(1, 6);
  for (int t = 0; t < 1000; ++t) {
    size_t n = dims(rng);
    Point x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      x[i] = coord(rng);
      y[i] = coord(rng);
    }
    // floor-mid + ceil-mid = x + y, componentwise
    CHECK(add(mid_down(x, y), mid_up(x, y)) == add(x, y));
    // join + meet = x + y
    CHECK(add(join(x, y), meet(x, y)) == add(x, y));
    // bidiagonal round trips
    CHECK(bidiagonal_inverse(bidiagonal_apply(x)) == x);
    CHECK(bidiagonal_apply(bidiagonal_inverse(x)) == x);
  }
}

TEST_CASE("neighbourhood size is 2^(fractional coordinates)") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<size_t> dims(1, 5);
  for (int t = 0; t < 200; ++t) {
    size_t n = dims(rng);
    RatPoint z(n);
    size_t frac = 0;
    for (size_t i = 0; i < n; ++i) {
      Rat v(num(rng), den(rng));
      v.canonicalize();
      z[i] = v;
      if (v.get_den() != 1) ++frac;
    }
    auto nb = integral_neighborhood(z);
    CHECK(nb.size() == (size_t{1} << frac));
    // every member rounds z within open unit distance
    for (const Point& w : nb)
      for (size_t i = 0; i < n; ++i)
        CHECK(abs(z[i] - Rat(w[i])) < 1);
  }
}
