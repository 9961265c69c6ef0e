#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dca/fixtures.hpp"
#include "dca/io.hpp"

using namespace dca;

TEST_CASE("indicator and support set") {
  LatticeSet s = LatticeSet::of(2, {{0, 0}, {1, 1}});
  LatticeFunction f = indicator(s);
  CHECK(f.window == Window::cube(2, 0, 1));
  CHECK(f.dom_size() == 2);
  CHECK(f.eval(make_point({0, 0})) == ExtVal(0));
  CHECK(f.eval(make_point({1, 1})) == ExtVal(0));
  CHECK(f.eval(make_point({1, 0})).is_inf());
  CHECK(f.support_set() == s);

  // indicator of the three-dimensional delta-matroid: five zero entries
  LatticeFunction g = indicator(fx::nonsejump());
  CHECK(g.dom_size() == 5);
  for (const auto& [x, v] : g.values) CHECK(v == 0);
  CHECK(g.support_set() == fx::nonsejump());
}

TEST_CASE("set JSON round trip") {
  nlohmann::json j = parse_json_text(
      R"({"kind":"set","dim":1,"points":[[0],[2]]})");
  LatticeSet s = set_from_json(j);
  CHECK(s == fx::jumpdim1());
  CHECK(set_from_json(to_json(s)) == s);
}

TEST_CASE("function JSON round trip is exact") {
  LatticeFunction f = fx::la1_f();
  LatticeFunction g = function_from_json(to_json(f));
  CHECK(g == f);

  // exact rational values survive the string encoding
  nlohmann::json j = parse_json_text(
      R"({"kind":"function","dim":1,"window":{"lo":[0],"hi":[1]},)"
      R"("values":[{"x":[0],"v":"-1/2"},{"x":[1],"v":"3"}]})");
  LatticeFunction h = function_from_json(j);
  CHECK(h.eval(make_point({0})) == ExtVal(Rat(-1, 2)));
  CHECK(h.eval(make_point({1})) == ExtVal(3));
  CHECK(function_from_json(to_json(h)) == h);
}

TEST_CASE("parse errors name the offending field") {
  nlohmann::json j = parse_json_text(R"({"kind":"set","points":[[0]]})");
  CHECK_THROWS_WITH_AS(set_from_json(j),
                       doctest::Contains("dim"), io_error);

  nlohmann::json dup = parse_json_text(
      R"({"kind":"set","dim":1,"points":[[0],[0]]})");
  CHECK_THROWS_AS(set_from_json(dup), io_error);

  // "inf" is not a storable value; absence already means +infinity
  nlohmann::json inf = parse_json_text(
      R"({"kind":"function","dim":1,"window":{"lo":[0],"hi":[0]},)"
      R"("values":[{"x":[0],"v":"inf"}]})");
  CHECK_THROWS_AS(function_from_json(inf), io_error);

  // domain point outside the declared window
  nlohmann::json out = parse_json_text(
      R"({"kind":"function","dim":1,"window":{"lo":[0],"hi":[1]},)"
      R"("values":[{"x":[5],"v":"0"}]})");
  CHECK_THROWS_AS(function_from_json(out), io_error);
}

TEST_CASE("registry payload spot values") {
  LatticeFunction la1 = fx::la1_f();
  CHECK(la1.eval(make_point({1, 1, 0})) == ExtVal(1));
  CHECK(la1.eval(make_point({2, 2, 2})).is_inf());

  LatticeFunction f = fx::scicfnng422_f();
  CHECK(f.eval(make_point({4, 2, 0})) == ExtVal(3));
  CHECK(f.window == Window(make_point({0, 0, 0}), make_point({4, 2, 2})));
}
