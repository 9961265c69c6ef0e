#include "dca/fixtures.hpp"

#include "dca/conjugate.hpp"
#include "dca/extension.hpp"
#include "dca/io.hpp"
#include "dca/transform.hpp"

namespace dca {

namespace fx {

LatticeSet diag2(long lo, long hi) {
  std::set<Point> pts;
  for (long t = lo; t <= hi; ++t) pts.insert(make_point({t, t}));
  return LatticeSet(2, std::move(pts));
}
LatticeSet antidiag2(long lo, long hi) {
  std::set<Point> pts;
  for (long t = lo; t <= hi; ++t) pts.insert(make_point({t, -t}));
  return LatticeSet(2, std::move(pts));
}

LatticeSet jumpdim1() { return LatticeSet::of(1, {{0}, {2}}); }
LatticeSet nonsejumpdim1() { return LatticeSet::of(1, {{0}, {2}, {3}}); }
LatticeSet nonsejump() {
  return LatticeSet::of(
      3, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}
LatticeFunction jmnatmnat(const Rat& a, const Rat& b) {
  std::map<Point, Rat> v;
  v[make_point({0, 0})] = a;
  v[make_point({1, 1})] = a;
  v[make_point({1, 0})] = b;
  v[make_point({0, 1})] = b;
  return LatticeFunction(2, Window::cube(2, 0, 1), std::move(v));
}

LatticeSet mmsetperm_s() {
  return LatticeSet::of(3, {{0, 0, 0}, {0, 1, -1}, {0, 1, 0}, {1, 0, 0}});
}
LatticeSet mmsetperm_t() {
  return LatticeSet::of(3, {{0, 0, 0}, {1, 0, -1}, {1, 0, 0}, {0, 1, 0}});
}
LatticeSet mnatsetscdim3_s() {
  std::set<Point> pts;
  const Point g1 = make_point({1, 0, -1}), g2 = make_point({1, 0, 0}),
              g3 = make_point({0, 1, -1}), g4 = make_point({0, 1, 0});
  for (int c1 = 0; c1 <= 1; ++c1)
    for (int c2 = 0; c2 <= 1; ++c2)
      for (int c3 = 0; c3 <= 1; ++c3)
        for (int c4 = 0; c4 <= 1; ++c4) {
          Point p(3, Int(0));
          if (c1) p = add(p, g1);
          if (c2) p = add(p, g2);
          if (c3) p = add(p, g3);
          if (c4) p = add(p, g4);
          pts.insert(p);
        }
  return LatticeSet(3, std::move(pts));
}
LatticeSet msetscdim3_s() {
  std::set<Point> pts;
  const Point g1 = make_point({1, 0, -1, 0}), g2 = make_point({1, 0, 0, -1}),
              g3 = make_point({0, 1, -1, 0}), g4 = make_point({0, 1, 0, -1});
  for (int c1 = 0; c1 <= 1; ++c1)
    for (int c2 = 0; c2 <= 1; ++c2)
      for (int c3 = 0; c3 <= 1; ++c3)
        for (int c4 = 0; c4 <= 1; ++c4) {
          Point p(4, Int(0));
          if (c1) p = add(p, g1);
          if (c2) p = add(p, g2);
          if (c3) p = add(p, g3);
          if (c4) p = add(p, g4);
          pts.insert(p);
        }
  return LatticeSet(4, std::move(pts));
}
LatticeSet scicsetng422_s() {
  std::set<Point> pts;
  for (long x1 = 0; x1 <= 4; ++x1)
    for (long x2 = 0; x2 <= 2; ++x2) {
      if (x2 <= 1 && 0 <= x1 - x2 && x1 - x2 <= 3)
        pts.insert(make_point({x1, x2, 0}));
      if (x2 <= 2 && x2 <= x1 && x1 <= 4) pts.insert(make_point({x1, x2, 1}));
      if (x2 <= 2 && 1 <= x1 - x2 && x1 - x2 <= 3 && x1 <= 4)
        pts.insert(make_point({x1, x2, 2}));
    }
  return LatticeSet(3, std::move(pts));
}
LatticeSet scicsetng422_t() {
  return LatticeSet::of(3, {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {2, 1, 1}});
}

LatticeSet icsetinter_s1() {
  return LatticeSet::of(3, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}});
}
LatticeSet icsetinter_s2() {
  return LatticeSet::of(3, {{0, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 1}});
}
static LatticeSet mnatsetinter_s0() {
  return LatticeSet::of(
      3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}});
}
LatticeSet mnatsetinter_s1() {
  LatticeSet s = mnatsetinter_s0();
  s.points.insert(make_point({0, 1, 1}));
  return s;
}
LatticeSet mnatsetinter_s2() {
  LatticeSet s = mnatsetinter_s0();
  s.points.insert(make_point({1, 1, 0}));
  return s;
}
static LatticeSet msetinter_s0() {
  return LatticeSet::of(4, {{0, 0, 0, 0},
                            {1, 0, 0, -1},
                            {0, 1, 0, -1},
                            {0, 0, 1, -1},
                            {1, 0, 1, -2}});
}
LatticeSet msetinter_s1() {
  LatticeSet s = msetinter_s0();
  s.points.insert(make_point({0, 1, 1, -2}));
  return s;
}
LatticeSet msetinter_s2() {
  LatticeSet s = msetinter_s0();
  s.points.insert(make_point({1, 1, 0, -2}));
  return s;
}

LatticeSet icdim2sumhole_s1() { return LatticeSet::of(2, {{0, 0}, {1, 1}}); }
LatticeSet icdim2sumhole_s2() { return LatticeSet::of(2, {{1, 0}, {0, 1}}); }
LatticeSet lnatsetmsum_s1() {
  return LatticeSet::of(3, {{0, 0, 0}, {1, 1, 0}});
}
LatticeSet lnatsetmsum_s2() {
  return LatticeSet::of(3, {{0, 0, 0}, {0, 1, 1}});
}
LatticeSet minkow3lnat_s3() {
  return LatticeSet::of(3, {{0, 0, 0}, {1, 0, 1}});
}
LatticeSet lsetsum_s(int which) {
  Point base = which == 1 ? make_point({1, 1, 0, 0}) : make_point({0, 1, 1, 0});
  std::set<Point> pts;
  for (long a = -1; a <= 1; ++a) {
    pts.insert(ones(4, a));
    pts.insert(add(base, ones(4, a)));
  }
  return LatticeSet(4, std::move(pts));
}
LatticeSet mmsetmsum_s1() {
  return LatticeSet::of(3, {{0, 0, 0}, {1, 0, -1}});
}
LatticeSet mmsetmsum_s2() {
  return LatticeSet::of(3, {{0, 0, 0}, {0, 1, 0}});
}
LatticeSet msetboxsum_s() { return LatticeSet::of(2, {{1, 0}, {0, 1}}); }
LatticeSet msetboxsum_b() { return LatticeSet::of(2, {{0, 0}, {1, 0}}); }
LatticeSet dicdim3_s() { return LatticeSet::of(3, {{0, 0, 1}, {1, 1, 0}}); }
LatticeSet dicdim3_b() { return LatticeSet::of(3, {{0, 0, 0}, {1, 0, 0}}); }

static LatticeFunction abs_affine(size_t n, long c1, long c2, long shift,
                                  const Window& w) {
  // |c1*x1 + c2*x2 - shift| tabulated on w (extra coordinates inert)
  std::map<Point, Rat> v;
  w.for_each([&](const Point& x) {
    Int t = c1 * x[0] + c2 * x[1] - shift;
    v[x] = Rat(abs(t));
  });
  return LatticeFunction(n, w, std::move(v));
}

LatticeFunction lfnsigninv_f() {
  return abs_affine(2, 1, -1, 3, Window::cube(2, -4, 4));
}
LatticeFunction lfnsigninv_g() {
  return abs_affine(2, 1, 1, 3, Window::cube(2, -4, 4));
}
LatticeFunction lfnsigninv3_f() {
  return abs_affine(3, 1, -1, 1, Window::cube(3, -2, 2));
}
LatticeFunction lfnsigninv3_g() {
  return abs_affine(3, 1, 1, 1, Window::cube(3, -2, 2));
}
LatticeFunction mfnsigninv_f() {
  return abs_affine(2, 1, 1, 0, Window::cube(2, -2, 2));
}
LatticeFunction mfnsigninv_g() {
  return abs_affine(2, 1, -1, 0, Window::cube(2, -2, 2));
}

std::vector<std::vector<Rat>> mmfnperm1_a() {
  return {{1, 1, 0}, {1, 2, 1}, {0, 1, 1}};
}
std::vector<std::vector<Rat>> mmfnperm1_atilde() {
  return {{2, 1, 1}, {1, 1, 0}, {1, 0, 1}};
}

LatticeFunction scicfnng422_f() {
  // values[z][x2][x1]
  static const long tab[3][3][5] = {
      {{0, 0, 0, 0, 3}, {1, 0, 0, 0, 0}, {3, 1, 1, 1, 3}},
      {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {2, 1, 0, 0, 0}},
      {{3, 0, 0, 0, 3}, {2, 1, 0, 0, 0}, {3, 2, 1, 0, 0}}};
  std::map<Point, Rat> v;
  for (long z = 0; z <= 2; ++z)
    for (long x2 = 0; x2 <= 2; ++x2)
      for (long x1 = 0; x1 <= 4; ++x1)
        v[make_point({x1, x2, z})] = tab[z][x2][x1];
  return LatticeFunction(
      3, Window(make_point({0, 0, 0}), make_point({4, 2, 2})), std::move(v));
}
LatticeFunction scicfnng422_g() {
  LatticeFunction f = scicfnng422_f();
  Window w(make_point({0, 0, 0}), make_point({2, 1, 1}));
  std::map<Point, Rat> v;
  w.for_each([&](const Point& y) {
    Point x = add(y, y);
    v[y] = f.values.at(x);
  });
  return LatticeFunction(3, w, std::move(v));
}

LatticeFunction dicdim3fn_f() {
  LatticeSet s = dicdim3_s();
  Window w(make_point({0, 0, 0}), make_point({1, 1, 1}));
  std::map<Point, Rat> v;
  w.for_each([&](const Point& x) { v[x] = s.contains(x) ? 0 : 1; });
  return LatticeFunction(3, w, std::move(v));
}
LatticeFunction dicdim3fn_conv() {
  LatticeSet sb = minkowski_sum(dicdim3_s(), dicdim3_b());
  Window w(make_point({0, 0, 0}), make_point({2, 1, 1}));
  std::map<Point, Rat> v;
  w.for_each([&](const Point& x) { v[x] = sb.contains(x) ? 0 : 1; });
  return LatticeFunction(3, w, std::move(v));
}

LatticeFunction la1_f() {
  std::map<Point, Rat> v;
  auto put = [&](std::initializer_list<long> xs) {
    Point p = make_point(xs);
    v[p] = Rat(comp_sum(p), 2);
    v[p].canonicalize();
  };
  put({0, 0, 0});
  put({1, 1, 0});
  put({-1, -1, 0});
  put({0, 1, 1});
  put({0, -1, -1});
  put({1, 0, 1});
  put({-1, 0, -1});
  return LatticeFunction(3, Window::cube(3, -1, 1), std::move(v));
}
LatticeFunction conjic_f() {
  return indicator(LatticeSet::of(
      4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}}));
}

}  // namespace fx

namespace {

using Checks = std::vector<FixtureCheck>;

void expect(Checks& c, const std::string& what, bool pass,
            std::string detail = "") {
  c.push_back({what, pass, std::move(detail)});
}
void expect_set(Checks& c, const std::string& name, const LatticeSet& s,
                SetClass cls, bool holds) {
  Verdict v = check_set(s, cls);
  expect(c, name + (holds ? " is " : " is not ") + set_class_name(cls),
         v.holds == holds, v.describe());
}
void expect_set_w(Checks& c, const std::string& name, const LatticeSet& s,
                  SetClass cls, const Window& w, bool holds) {
  Verdict v = check_set(s, cls, w);
  expect(c, name + (holds ? " is " : " is not ") + set_class_name(cls) +
             " (window-certified)",
         v.holds == holds, v.describe());
}
void expect_fn(Checks& c, const std::string& name, const LatticeFunction& f,
               FnClass cls, bool holds) {
  Verdict v = check_fn(f, cls);
  expect(c, name + (holds ? " is " : " is not ") + fn_class_name(cls),
         v.holds == holds, v.describe());
}

std::string rat_str(const ExtVal& v) {
  return v.is_finite() ? rational_to_string(v.finite()) : "inf";
}

nlohmann::json sets_payload(
    std::initializer_list<std::pair<std::string, LatticeSet>> xs) {
  nlohmann::json j;
  for (const auto& [name, s] : xs) j[name] = to_json(s);
  return nlohmann::json{{"sets", j}};
}
nlohmann::json fns_payload(
    std::initializer_list<std::pair<std::string, LatticeFunction>> xs) {
  nlohmann::json j;
  for (const auto& [name, f] : xs) j[name] = to_json(f);
  return nlohmann::json{{"functions", j}};
}

std::vector<Fixture> build_registry() {
  using namespace fx;
  std::vector<Fixture> r;
  auto reg = [&](std::string id, std::string note,
                 std::function<Checks()> run,
                 std::function<nlohmann::json()> payload) {
    r.push_back({std::move(id), std::move(note), std::move(run),
                 std::move(payload)});
  };

  reg("jumpdim1", "{0,2} is a constant-parity jump system but not m-natural",
      [] {
        Checks c;
        LatticeSet s = jumpdim1();
        expect_set(c, "S", s, SetClass::CpJump, true);
        expect_set(c, "S", s, SetClass::JumpSystem, true);
        expect_set(c, "S", s, SetClass::MNat, false);
        // the parity gap: 1 is in the hull but not in the set
        expect(c, "1 lies in conv(S) but not in S",
               hull_membership(s, {Rat(1)}) && !s.contains(make_point({1})));
        return c;
      },
      [] { return sets_payload({{"S", jumpdim1()}}); });

  reg("nonsejumpdim1", "{0,2,3} is a jump system without simultaneous exchange",
      [] {
        Checks c;
        LatticeSet s = nonsejumpdim1();
        expect_set(c, "S", s, SetClass::JumpSystem, true);
        expect_set(c, "S", s, SetClass::SeJump, false);
        return c;
      },
      [] { return sets_payload({{"S", nonsejumpdim1()}}); });

  reg("nonsejump", "a delta-matroid that is not simultaneous-exchange",
      [] {
        Checks c;
        LatticeSet s = nonsejump();
        expect_set(c, "S", s, SetClass::JumpSystem, true);
        expect_set(c, "S", s, SetClass::SeJump, false);
        return c;
      },
      [] { return sets_payload({{"S", nonsejump()}}); });

  reg("jmnatmnat",
      "two-valued function on the unit square: jump exchange always holds, "
      "the m-natural exchange only when a >= b",
      [] {
        Checks c;
        LatticeFunction low = jmnatmnat(0, 1);   // a < b
        LatticeFunction high = jmnatmnat(1, 0);  // a >= b
        expect_fn(c, "f(a=0,b=1)", low, FnClass::MNat, false);
        expect_fn(c, "f(a=0,b=1)", low, FnClass::JumpMNat, true);
        expect_fn(c, "f(a=1,b=0)", high, FnClass::MNat, true);
        expect_fn(c, "f(a=1,b=0)", high, FnClass::JumpMNat, true);
        return c;
      },
      [] {
        return fns_payload({{"f_a0_b1", jmnatmnat(0, 1)},
                            {"f_a1_b0", jmnatmnat(1, 0)}});
      });

  reg("lsetsigninv",
      "the diagonal is l-convex; flipping one coordinate breaks it",
      [] {
        Checks c;
        LatticeSet s = diag2(-3, 3), t = antidiag2(-3, 3);
        expect_set(c, "S", s, SetClass::L, true);
        expect_set(c, "S", s, SetClass::LNat, true);
        expect_set(c, "S", s, SetClass::Dmc, true);
        expect_set(c, "T", t, SetClass::L, false);
        expect_set(c, "T", t, SetClass::LNat, false);
        expect_set(c, "T", t, SetClass::Dmc, false);
        return c;
      },
      [] {
        return sets_payload({{"S", diag2(-3, 3)}, {"T", antidiag2(-3, 3)}});
      });

  reg("msetsigninv",
      "the antidiagonal is m-convex and multimodular; flipping one "
      "coordinate breaks both",
      [] {
        Checks c;
        LatticeSet s = antidiag2(-3, 3), t = diag2(-3, 3);
        expect_set(c, "S", s, SetClass::M, true);
        expect_set(c, "S", s, SetClass::MNat, true);
        expect_set(c, "S", s, SetClass::Multimodular, true);
        expect_set(c, "T", t, SetClass::M, false);
        expect_set(c, "T", t, SetClass::MNat, false);
        expect_set(c, "T", t, SetClass::Multimodular, false);
        return c;
      },
      [] {
        return sets_payload({{"S", antidiag2(-3, 3)}, {"T", diag2(-3, 3)}});
      });

  reg("mmsetperm", "a multimodular set whose transposition is not multimodular",
      [] {
        Checks c;
        expect_set(c, "S", mmsetperm_s(), SetClass::Multimodular, true);
        expect_set(c, "T", mmsetperm_t(), SetClass::Multimodular, false);
        // the prefix-sum images pin the verdicts
        LatticeSet ts = mm_to_lnat(mmsetperm_s());
        expect(c, "prefix-sum image of S is {000,010,011,111}",
               ts == LatticeSet::of(
                         3, {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
        expect_set(c, "prefix image of T", mm_to_lnat(mmsetperm_t()),
                   SetClass::LNat, false);
        return c;
      },
      [] {
        return sets_payload({{"S", mmsetperm_s()}, {"T", mmsetperm_t()}});
      });

  reg("mnatsetscdim3", "2-scaling destroys m-natural convexity (dim 3)",
      [] {
        Checks c;
        LatticeSet s = mnatsetscdim3_s();
        expect_set(c, "S", s, SetClass::MNat, true);
        expect_set(c, "S", s, SetClass::SeJump, true);
        LatticeSet t = apply_change(s, VarScale{2});
        expect(c, "2-scaled set equals {(0,0,0),(1,1,-1)}",
               t == LatticeSet::of(3, {{0, 0, 0}, {1, 1, -1}}));
        expect_set(c, "T", t, SetClass::MNat, false);
        expect_set(c, "T", t, SetClass::SeJump, false);
        return c;
      },
      [] { return sets_payload({{"S", mnatsetscdim3_s()}}); });

  reg("msetscdim3", "2-scaling destroys m-convexity (dim 4)",
      [] {
        Checks c;
        LatticeSet s = msetscdim3_s();
        expect_set(c, "S", s, SetClass::M, true);
        expect_set(c, "S", s, SetClass::CpJump, true);
        LatticeSet t = apply_change(s, VarScale{2});
        expect(c, "2-scaled set equals {(0,0,0,0),(1,1,-1,-1)}",
               t == LatticeSet::of(4, {{0, 0, 0, 0}, {1, 1, -1, -1}}));
        expect_set(c, "T", t, SetClass::M, false);
        expect_set(c, "T", t, SetClass::CpJump, false);
        return c;
      },
      [] { return sets_payload({{"S", msetscdim3_s()}}); });

  reg("scICsetNG422", "2-scaling destroys integral convexity of a set",
      [] {
        Checks c;
        LatticeSet s = scicsetng422_s();
        expect_set(c, "S", s, SetClass::IntegrallyConvex, true);
        LatticeSet t = apply_change(s, VarScale{2});
        expect(c, "2-scaled set equals {000,100,101,211}",
               t == scicsetng422_t());
        expect_set(c, "T", t, SetClass::IntegrallyConvex, false);
        return c;
      },
      [] {
        return sets_payload({{"S", scicsetng422_s()}, {"T", scicsetng422_t()}});
      });

  reg("lsetrestr", "restricting the diagonal to one coordinate loses "
      "l-convexity on any window wider than a point",
      [] {
        Checks c;
        LatticeSet s = diag2(-3, 3);
        expect_set(c, "S", s, SetClass::L, true);
        LatticeSet t = restrict_to(s, {0});
        expect(c, "restriction is {0}", t == LatticeSet::of(1, {{0}}));
        expect_set_w(c, "T", t, SetClass::L, Window::cube(1, -3, 3), false);
        return c;
      },
      [] {
        return sets_payload({{"S", diag2(-3, 3)},
                             {"T", LatticeSet::of(1, {{0}})}});
      });

  reg("msetproj", "projecting the antidiagonal yields all integers: "
      "not m-convex, not constant-parity",
      [] {
        Checks c;
        LatticeSet s = antidiag2(-3, 3);
        expect_set(c, "S", s, SetClass::M, true);
        expect_set(c, "S", s, SetClass::CpJump, true);
        LatticeSet t = project_to(s, {0});
        expect(c, "projection is the full interval [-3,3]",
               (long)t.size() == 7);
        expect_set(c, "T", t, SetClass::M, false);
        expect_set(c, "T", t, SetClass::CpJump, false);
        return c;
      },
      [] { return sets_payload({{"S", antidiag2(-3, 3)}}); });

  reg("mmsetproj", "projection of a multimodular set need not be multimodular",
      [] {
        Checks c;
        LatticeSet s = mmsetperm_s();
        expect_set(c, "S", s, SetClass::Multimodular, true);
        LatticeSet t = project_to(s, {0, 2});
        expect(c, "projection to {1,3} is {(0,0),(0,-1),(1,0)}",
               t == LatticeSet::of(2, {{0, 0}, {0, -1}, {1, 0}}));
        expect_set(c, "T", t, SetClass::Multimodular, false);
        return c;
      },
      [] { return sets_payload({{"S", mmsetperm_s()}}); });

  reg("icsetinter", "intersection of integrally convex sets loses the class",
      [] {
        Checks c;
        LatticeSet s1 = icsetinter_s1(), s2 = icsetinter_s2();
        expect_set(c, "S1", s1, SetClass::IntegrallyConvex, true);
        expect_set(c, "S2", s2, SetClass::IntegrallyConvex, true);
        LatticeSet t = intersect(s1, s2);
        expect(c, "intersection is {(0,0,0),(1,2,1)}",
               t == LatticeSet::of(3, {{0, 0, 0}, {1, 2, 1}}));
        expect_set(c, "S1 cap S2", t, SetClass::IntegrallyConvex, false);
        return c;
      },
      [] {
        return sets_payload({{"S1", icsetinter_s1()}, {"S2", icsetinter_s2()}});
      });

  reg("mnatsetinter", "intersection of m-natural sets loses the class",
      [] {
        Checks c;
        LatticeSet s1 = mnatsetinter_s1(), s2 = mnatsetinter_s2();
        expect_set(c, "S1", s1, SetClass::MNat, true);
        expect_set(c, "S2", s2, SetClass::MNat, true);
        LatticeSet t = intersect(s1, s2);
        Verdict v = check_set(t, SetClass::MNat);
        expect(c, "S1 cap S2 is not m-natural", !v.holds, v.describe());
        return c;
      },
      [] {
        return sets_payload(
            {{"S1", mnatsetinter_s1()}, {"S2", mnatsetinter_s2()}});
      });

  reg("msetinter", "intersection of m-convex sets loses m-convexity and the "
      "jump-system property (constant-sum systems are jump iff m-convex)",
      [] {
        Checks c;
        LatticeSet s1 = msetinter_s1(), s2 = msetinter_s2();
        expect_set(c, "S1", s1, SetClass::M, true);
        expect_set(c, "S2", s2, SetClass::M, true);
        expect_set(c, "S1", s1, SetClass::CpJump, true);
        expect_set(c, "S2", s2, SetClass::CpJump, true);
        LatticeSet t = intersect(s1, s2);
        expect_set(c, "S0", t, SetClass::M, false);
        expect_set(c, "S0", t, SetClass::JumpSystem, false);
        return c;
      },
      [] {
        return sets_payload({{"S1", msetinter_s1()}, {"S2", msetinter_s2()}});
      });

  reg("lnatsetMinter2", "the m-convex intersection is still integrally "
      "convex; the printed midpoint certificate re-checks",
      [] {
        Checks c;
        LatticeSet t = intersect(msetinter_s1(), msetinter_s2());
        expect_set(c, "S0", t, SetClass::IntegrallyConvex, true);
        RatPoint z = midpoint(make_point({0, 0, 0, 0}),
                              make_point({1, 0, 1, -2}));
        std::vector<Point> named = {make_point({1, 0, 0, -1}),
                                    make_point({0, 0, 1, -1})};
        expect(c, "z=(1/2,0,1/2,-1) is the midpoint of the two named points",
               hull_membership(named, z));
        return c;
      },
      [] {
        return sets_payload({{"S1", msetinter_s1()}, {"S2", msetinter_s2()}});
      });

  reg("lsetboxinter", "an l-convex set intersected with a box keeps midpoints "
      "but loses the all-ones invariance",
      [] {
        Checks c;
        LatticeSet s = diag2(-3, 3);
        expect_set(c, "S", s, SetClass::L, true);
        LatticeSet t = intersect_box(s, Window::cube(2, 0, 1));
        expect(c, "intersection is {(0,0),(1,1)}",
               t == LatticeSet::of(2, {{0, 0}, {1, 1}}));
        expect_set_w(c, "T", t, SetClass::L, Window::cube(2, -3, 3), false);
        expect_set(c, "T", t, SetClass::LNat, true);
        return c;
      },
      [] {
        return sets_payload({{"S", diag2(-3, 3)},
                             {"T", LatticeSet::of(2, {{0, 0}, {1, 1}})}});
      });

  reg("icdim2sumhole", "a Minkowski sum with a hole at (1,1)",
      [] {
        Checks c;
        LatticeSet s1 = icdim2sumhole_s1(), s2 = icdim2sumhole_s2();
        expect_set(c, "S1", s1, SetClass::IntegrallyConvex, true);
        expect_set(c, "S2", s2, SetClass::IntegrallyConvex, true);
        LatticeSet t = minkowski_sum(s1, s2);
        expect(c, "sum is {(1,0),(0,1),(2,1),(1,2)}",
               t == LatticeSet::of(2, {{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
        Point hole = make_point({1, 1});
        expect(c, "(1,1) is in the hull of the sum but missing from it",
               hull_membership(t, to_rat_point(hole)) && !t.contains(hole));
        expect_set(c, "S1+S2", t, SetClass::IntegrallyConvex, false);
        expect_set(c, "S1+S2", t, SetClass::Dmc, false);
        return c;
      },
      [] {
        return sets_payload(
            {{"S1", icdim2sumhole_s1()}, {"S2", icdim2sumhole_s2()}});
      });

  reg("lnatsetMsum", "the Minkowski sum of two l-natural sets loses "
      "midpoint closure",
      [] {
        Checks c;
        LatticeSet s1 = lnatsetmsum_s1(), s2 = lnatsetmsum_s2();
        expect_set(c, "S1", s1, SetClass::LNat, true);
        expect_set(c, "S2", s2, SetClass::LNat, true);
        LatticeSet t = minkowski_sum(s1, s2);
        expect(c, "sum is {(0,0,0),(0,1,1),(1,1,0),(1,2,1)}",
               t == LatticeSet::of(
                        3, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}}));
        Point x = make_point({0, 1, 1}), y = make_point({1, 1, 0});
        expect(c, "both rounded midpoints of the witness pair are missing",
               !t.contains(mid_up(x, y)) && !t.contains(mid_down(x, y)));
        expect_set(c, "S1+S2", t, SetClass::LNat, false);
        expect_set(c, "S1+S2", t, SetClass::Dmc, false);
        return c;
      },
      [] {
        return sets_payload({{"S1", lnatsetmsum_s1()}, {"S2", lnatsetmsum_s2()}});
      });

  reg("lsetsum", "Minkowski sum of two l-convex orbit models is not l-convex",
      [] {
        Checks c;
        LatticeSet s1 = lsetsum_s(1), s2 = lsetsum_s(2);
        expect_set_w(c, "S1~", s1, SetClass::L, s1.bbox(), true);
        expect_set_w(c, "S2~", s2, SetClass::L, s2.bbox(), true);
        LatticeSet t = minkowski_sum(s1, s2);
        Point x = make_point({0, 1, 1, 0}), y = make_point({1, 1, 0, 0});
        expect(c, "witness midpoints (1,1,1,0) and (0,1,0,0) are missing",
               !t.contains(mid_up(x, y)) && !t.contains(mid_down(x, y)));
        expect_set_w(c, "S1~+S2~", t, SetClass::L, t.bbox(), false);
        return c;
      },
      [] {
        return sets_payload({{"S1", lsetsum_s(1)}, {"S2", lsetsum_s(2)}});
      });

  reg("mmsetMsum", "the Minkowski sum of multimodular sets is not multimodular",
      [] {
        Checks c;
        LatticeSet s1 = mmsetmsum_s1(), s2 = mmsetmsum_s2();
        expect_set(c, "S1", s1, SetClass::Multimodular, true);
        expect_set(c, "S2", s2, SetClass::Multimodular, true);
        expect_set(c, "S2", s2, SetClass::IntegerBox, true);
        LatticeSet t = minkowski_sum(s1, s2);
        expect(c, "sum is {(0,0,0),(1,0,-1),(0,1,0),(1,1,-1)}",
               t == LatticeSet::of(
                        3, {{0, 0, 0}, {1, 0, -1}, {0, 1, 0}, {1, 1, -1}}));
        expect_set(c, "S1+S2", t, SetClass::Multimodular, false);
        expect(c, "prefix image of the sum is the l-natural counterexample",
               mm_to_lnat(t) ==
                   minkowski_sum(lnatsetmsum_s1(), lnatsetmsum_s2()));
        return c;
      },
      [] {
        return sets_payload({{"S1", mmsetmsum_s1()}, {"S2", mmsetmsum_s2()}});
      });

  reg("lnatsetMsum2", "the failed l-natural sum is still integrally convex; "
      "the printed certificate re-checks",
      [] {
        Checks c;
        LatticeSet t = minkowski_sum(lnatsetmsum_s1(), lnatsetmsum_s2());
        expect_set(c, "S1+S2", t, SetClass::IntegrallyConvex, true);
        RatPoint z = midpoint(make_point({0, 1, 1}), make_point({1, 1, 0}));
        std::vector<Point> named = {make_point({0, 1, 1}),
                                    make_point({1, 1, 0})};
        expect(c, "z=(1/2,1,1/2) is covered by the two named points",
               hull_membership(named, z));
        return c;
      },
      [] {
        return sets_payload({{"S1", lnatsetmsum_s1()}, {"S2", lnatsetmsum_s2()}});
      });

  reg("minkow3lnatset", "the sum of three l-natural sets has a hole at "
      "(1,1,1); the sum of the last two is still integrally convex",
      [] {
        Checks c;
        LatticeSet s1 = lnatsetmsum_s1(), s2 = lnatsetmsum_s2(),
                   s3 = minkow3lnat_s3();
        expect_set(c, "S3", s3, SetClass::LNat, true);
        LatticeSet t23 = minkowski_sum(s2, s3);
        expect_set(c, "S2+S3", t23, SetClass::IntegrallyConvex, true);
        LatticeSet t = minkowski_sum(s1, t23);
        expect(c, "sum has the eight listed points", t.size() == 8);
        Point hole = make_point({1, 1, 1});
        expect(c, "(1,1,1) is in the hull of the sum but missing",
               hull_membership(t, to_rat_point(hole)) && !t.contains(hole));
        expect_set(c, "S1+S2+S3", t, SetClass::IntegrallyConvex, false);
        return c;
      },
      [] {
        return sets_payload({{"S1", lnatsetmsum_s1()},
                             {"S2", lnatsetmsum_s2()},
                             {"S3", minkow3lnat_s3()}});
      });

  reg("msetboxsum", "m-convex set + box: the component sums split",
      [] {
        Checks c;
        LatticeSet s = msetboxsum_s(), b = msetboxsum_b();
        expect_set(c, "S", s, SetClass::M, true);
        expect_set(c, "S", s, SetClass::CpJump, true);
        expect_set(c, "B", b, SetClass::IntegerBox, true);
        LatticeSet t = minkowski_sum(s, b);
        expect(c, "sum is {(1,0),(0,1),(2,0),(1,1)}",
               t == LatticeSet::of(2, {{1, 0}, {0, 1}, {2, 0}, {1, 1}}));
        expect_set(c, "S+B", t, SetClass::M, false);
        expect_set(c, "S+B", t, SetClass::CpJump, false);
        return c;
      },
      [] {
        return sets_payload({{"S", msetboxsum_s()}, {"B", msetboxsum_b()}});
      });

  reg("dicdim3set", "discrete-midpoint-convex set + box loses the class",
      [] {
        Checks c;
        LatticeSet s = dicdim3_s(), b = dicdim3_b();
        expect_set(c, "S", s, SetClass::Dmc, true);
        expect_set(c, "B", b, SetClass::IntegerBox, true);
        LatticeSet t = minkowski_sum(s, b);
        expect(c, "sum is {(0,0,1),(1,1,0),(1,0,1),(2,1,0)}",
               t == LatticeSet::of(
                        3, {{0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {2, 1, 0}}));
        Point x = make_point({0, 0, 1}), y = make_point({2, 1, 0});
        expect(c, "witness midpoints (1,1,1) and (1,0,0) are missing",
               !t.contains(mid_up(x, y)) && !t.contains(mid_down(x, y)));
        expect_set(c, "S+B", t, SetClass::Dmc, false);
        return c;
      },
      [] { return sets_payload({{"S", dicdim3_s()}, {"B", dicdim3_b()}}); });

  reg("lfnsigninv", "|x1-x2-3| is l-convex; |x1+x2-3| is not even globally "
      "discrete midpoint convex",
      [] {
        Checks c;
        LatticeFunction f = lfnsigninv_f(), g = lfnsigninv_g();
        expect_fn(c, "f", f, FnClass::L, true);
        expect_fn(c, "f", f, FnClass::LNat, true);
        expect_fn(c, "f", f, FnClass::GloballyDmc, true);
        expect_fn(c, "g", g, FnClass::L, false);
        expect_fn(c, "g", g, FnClass::LNat, false);
        expect_fn(c, "g", g, FnClass::GloballyDmc, false);
        Point x = make_point({3, 0}), y = make_point({0, 3});
        ExtVal lhs = g.eval(x) + g.eval(y);
        ExtVal rhs = g.eval(mid_up(x, y)) + g.eval(mid_down(x, y));
        expect(c, "witness pair values: 0 + 0 < 1 + 1",
               lhs == ExtVal(Rat(0)) && rhs == ExtVal(Rat(2)));
        return c;
      },
      [] {
        return fns_payload({{"f", lfnsigninv_f()}, {"g", lfnsigninv_g()}});
      });

  reg("lfnsigninv3", "in dim 3 the inverted form loses local discrete "
      "midpoint convexity",
      [] {
        Checks c;
        LatticeFunction f = lfnsigninv3_f(), g = lfnsigninv3_g();
        expect_fn(c, "f", f, FnClass::LocallyDmc, true);
        expect_fn(c, "f", f, FnClass::L, true);
        expect_fn(c, "g", g, FnClass::LocallyDmc, false);
        Point x = make_point({0, 1, 2}), y = make_point({1, 0, 0});
        ExtVal lhs = g.eval(x) + g.eval(y);
        ExtVal rhs = g.eval(mid_up(x, y)) + g.eval(mid_down(x, y));
        expect(c, "witness pair values: 0 + 0 < 1 + 1",
               lhs == ExtVal(Rat(0)) && rhs == ExtVal(Rat(2)));
        return c;
      },
      [] {
        return fns_payload({{"f", lfnsigninv3_f()}, {"g", lfnsigninv3_g()}});
      });

  reg("mfnsigninv", "|x1+x2| is m-natural and multimodular; |x1-x2| is "
      "neither",
      [] {
        Checks c;
        LatticeFunction f = mfnsigninv_f(), g = mfnsigninv_g();
        expect_fn(c, "f", f, FnClass::MNat, true);
        expect_fn(c, "f", f, FnClass::Multimodular, true);
        expect_fn(c, "g", g, FnClass::MNat, false);
        expect_fn(c, "g", g, FnClass::Multimodular, false);
        return c;
      },
      [] {
        return fns_payload({{"f", mfnsigninv_f()}, {"g", mfnsigninv_g()}});
      });

  reg("mmfnperm3", "transposing the multimodular indicator breaks the class",
      [] {
        Checks c;
        LatticeFunction f = indicator(mmsetperm_s());
        expect_fn(c, "delta_S", f, FnClass::Multimodular, true);
        LatticeFunction g = apply_change(f, Permute{{1, 0, 2}});
        expect(c, "permuted indicator supports the transposed set",
               g.support_set() == mmsetperm_t());
        expect_fn(c, "delta_T", g, FnClass::Multimodular, false);
        return c;
      },
      [] {
        return fns_payload({{"f", indicator(mmsetperm_s())},
                            {"g", indicator(mmsetperm_t())}});
      });

  reg("mmfnperm1", "a multimodular quadratic whose transposition fails the "
      "second-difference criterion at (i,j)=(1,3)",
      [] {
        Checks c;
        auto A = mmfnperm1_a();
        auto At = mmfnperm1_atilde();
        Verdict qa = quadratic_multimodular(A);
        Verdict qb = quadratic_multimodular(At);
        expect(c, "A satisfies the quadratic multimodularity criterion",
               qa.holds);
        expect(c, "transposed matrix fails it at (i,j)=(1,3)",
               !qb.holds && qb.indices == std::vector<long>{1, 3},
               qb.describe());
        LatticeFunction f = quadratic_function(A, Window::cube(3, -2, 2));
        expect_fn(c, "x^T A x", f, FnClass::Multimodular, true);
        LatticeFunction g = apply_change(f, Permute{{1, 0, 2}});
        expect_fn(c, "transposed quadratic", g, FnClass::Multimodular, false);
        return c;
      },
      [] {
        return fns_payload(
            {{"f", quadratic_function(mmfnperm1_a(), Window::cube(3, -2, 2))}});
      });

  reg("scICfnNG422indic", "2-scaling the integrally convex indicator loses "
      "the class",
      [] {
        Checks c;
        LatticeFunction f = indicator(scicsetng422_s());
        expect_fn(c, "delta_S", f, FnClass::IntegrallyConvex, true);
        LatticeFunction g = apply_change(f, VarScale{2});
        expect(c, "scaled indicator supports {000,100,101,211}",
               g.support_set() == scicsetng422_t());
        expect_fn(c, "delta_T", g, FnClass::IntegrallyConvex, false);
        return c;
      },
      [] {
        return fns_payload({{"f", indicator(scicsetng422_s())},
                            {"g", indicator(scicsetng422_t())}});
      });

  reg("scICfnNG422", "2-scaling the tabulated integrally convex function "
      "fails the midpoint-extension inequality with values 1/2 vs 0",
      [] {
        Checks c;
        LatticeFunction f = scicfnng422_f();
        expect_fn(c, "f", f, FnClass::IntegrallyConvex, true);
        LatticeFunction g = apply_change(f, VarScale{2});
        expect(c, "g equals the direct tabulation of f(2y)",
               g == scicfnng422_g());
        Point y = make_point({0, 0, 0}), z = make_point({2, 1, 1});
        ExtVal ext = local_extension_value(g, midpoint(y, z));
        ExtVal avg = (g.eval(y) + g.eval(z)) * Rat(1, 2);
        expect(c, "local extension at the midpoint is exactly 1/2",
               ext == ExtVal(Rat(1, 2)), rat_str(ext));
        expect(c, "the average of the endpoint values is exactly 0",
               avg == ExtVal(Rat(0)), rat_str(avg));
        expect_fn(c, "g", g, FnClass::IntegrallyConvex, false);
        return c;
      },
      [] {
        return fns_payload({{"f", scicfnng422_f()}, {"g", scicfnng422_g()}});
      });

  reg("lfnrestr", "restricting the diagonal indicator to one coordinate "
      "loses l-convexity",
      [] {
        Checks c;
        LatticeFunction f = indicator(diag2(-3, 3));
        expect_fn(c, "delta_S", f, FnClass::L, true);
        LatticeFunction g = restrict_to(f, {0});
        expect(c, "restriction is the indicator of {0}",
               g.support_set() == LatticeSet::of(1, {{0}}));
        expect_fn(c, "delta_{0} on [-3,3]", g, FnClass::L, false);
        return c;
      },
      [] { return fns_payload({{"f", indicator(diag2(-3, 3))}}); });

  reg("mfnproj", "projecting the antidiagonal indicator yields the zero "
      "function: not m-convex, not jump m-convex",
      [] {
        Checks c;
        LatticeFunction f = indicator(antidiag2(-3, 3));
        expect_fn(c, "delta_S", f, FnClass::M, true);
        expect_fn(c, "delta_S", f, FnClass::JumpM, true);
        LatticeFunction g = project_to(f, {0});
        expect(c, "projection is identically zero on [-3,3]",
               g.dom_size() == 7 && g.min_value() == 0 && g.max_value() == 0);
        expect_fn(c, "g", g, FnClass::M, false);
        expect_fn(c, "g", g, FnClass::JumpM, false);
        return c;
      },
      [] { return fns_payload({{"f", indicator(antidiag2(-3, 3))}}); });

  reg("mmfnproj3", "projecting the multimodular indicator to {1,3} breaks "
      "the class",
      [] {
        Checks c;
        LatticeFunction f = indicator(mmsetperm_s());
        expect_fn(c, "delta_S", f, FnClass::Multimodular, true);
        LatticeFunction g = project_to(f, {0, 2});
        expect(c, "projection supports {(0,0),(0,-1),(1,0)}",
               g.support_set() ==
                   LatticeSet::of(2, {{0, 0}, {0, -1}, {1, 0}}));
        expect_fn(c, "g", g, FnClass::Multimodular, false);
        return c;
      },
      [] { return fns_payload({{"f", indicator(mmsetperm_s())}}); });

  reg("dicdim3indic", "convolving the discrete-midpoint-convex indicator "
      "with a box indicator loses both dmc classes",
      [] {
        Checks c;
        LatticeFunction f = indicator(dicdim3_s());
        LatticeFunction phi = indicator(dicdim3_b());
        expect_fn(c, "delta_S", f, FnClass::GloballyDmc, true);
        expect_fn(c, "delta_S", f, FnClass::LocallyDmc, true);
        expect_fn(c, "delta_B", phi, FnClass::Separable, true);
        LatticeFunction g = convolve(f, phi);
        expect(c, "convolution is the indicator of S+B",
               g.support_set() == minkowski_sum(dicdim3_s(), dicdim3_b()));
        expect_fn(c, "delta_{S+B}", g, FnClass::GloballyDmc, false);
        expect_fn(c, "delta_{S+B}", g, FnClass::LocallyDmc, false);
        return c;
      },
      [] {
        return fns_payload(
            {{"f", indicator(dicdim3_s())}, {"phi", indicator(dicdim3_b())}});
      });

  reg("dicdim3fn", "the finite-valued variant: convolution with a box "
      "indicator loses both dmc classes",
      [] {
        Checks c;
        LatticeFunction f = dicdim3fn_f();
        LatticeFunction phi = indicator(dicdim3_b());
        expect_fn(c, "f", f, FnClass::GloballyDmc, true);
        expect_fn(c, "f", f, FnClass::LocallyDmc, true);
        LatticeFunction g = convolve(f, phi);
        expect(c, "convolution matches the closed form", g == dicdim3fn_conv());
        expect_fn(c, "f conv phi", g, FnClass::GloballyDmc, false);
        expect_fn(c, "f conv phi", g, FnClass::LocallyDmc, false);
        return c;
      },
      [] {
        return fns_payload({{"f", dicdim3fn_f()}, {"conv", dicdim3fn_conv()}});
      });

  reg("la1", "hole-free 7-point star: conjugate formula, biconjugate gap at "
      "the origin, collapsed subdifferential",
      [] {
        Checks c;
        LatticeFunction f = la1_f();
        expect_fn(c, "f", f, FnClass::IntegrallyConvex, false);
        LatticeFunction conj = conjugate(f, Window::cube(3, -2, 2));
        bool formula = true;
        conj.window.for_each([&](const Point& p) {
          Rat want = 0;
          auto term = [&](size_t i, size_t j) {
            Rat t = Rat(abs(Int(p[i] + p[j] - 1)));
            if (t > want) want = t;
          };
          term(0, 1);
          term(1, 2);
          term(2, 0);
          if (conj.eval(p) != ExtVal(want)) formula = false;
        });
        expect(c, "conjugate on [-2,2]^3 matches "
               "max{0,|p1+p2-1|,|p2+p3-1|,|p3+p1-1|}", formula);
        BiconjugateResult b = biconjugate_at(f, make_point({0, 0, 0}));
        expect(c, "biconjugate at the origin is exactly -1",
               b.value == ExtVal(Rat(-1)), rat_str(b.value));
        expect(c, "f(0) = 0 differs from the biconjugate",
               f.eval(make_point({0, 0, 0})) == ExtVal(Rat(0)));
        SubgradientBox box = subdifferential_box(f, make_point({0, 0, 0}));
        bool collapsed = box.exists;
        for (size_t i = 0; i < 3 && collapsed; ++i)
          collapsed = box.lo[i] == Rat(1, 2) && box.hi[i] == Rat(1, 2);
        expect(c, "subdifferential box collapses to (1/2,1/2,1/2)", collapsed);
        expect(c, "no integer subgradient at the origin",
               !integer_subgradient(f, make_point({0, 0, 0})).has_value());
        return c;
      },
      [] { return fns_payload({{"f", la1_f()}}); });

  reg("conjIC", "the conjugate of an integrally convex indicator need not "
      "be integrally convex (midpoint extension 5/4 vs average 1)",
      [] {
        Checks c;
        LatticeFunction f = conjic_f();
        expect_fn(c, "delta_S", f, FnClass::IntegrallyConvex, true);
        LatticeFunction g = conjugate(f, Window::cube(4, -2, 2));
        bool formula = true;
        g.window.for_each([&](const Point& p) {
          Rat want = p[0] + p[1];
          want = std::max(want, Rat(p[1] + p[2]));
          want = std::max(want, Rat(p[0] + p[2]));
          want = std::max(want, Rat(p[3]));
          if (g.eval(p) != ExtVal(want)) formula = false;
        });
        expect(c, "conjugate matches max{p1+p2, p2+p3, p1+p3, p4} on "
               "[-2,2]^4", formula);
        Point p = make_point({0, 0, 0, 0}), q = make_point({1, 1, 1, 2});
        ExtVal ext = local_extension_value(g, midpoint(p, q));
        ExtVal avg = (g.eval(p) + g.eval(q)) * Rat(1, 2);
        expect(c, "midpoint extension is exactly 5/4",
               ext == ExtVal(Rat(5, 4)), rat_str(ext));
        expect(c, "endpoint average is exactly 1", avg == ExtVal(Rat(1)),
               rat_str(avg));
        expect_fn(c, "conjugate", g, FnClass::IntegrallyConvex, false);
        return c;
      },
      [] { return fns_payload({{"f", conjic_f()}}); });

  reg("minkow3lnatfn", "convolving three l-natural indicators yields the "
      "holed indicator: not integrally convex",
      [] {
        Checks c;
        LatticeFunction f1 = indicator(lnatsetmsum_s1());
        LatticeFunction f2 = indicator(lnatsetmsum_s2());
        LatticeFunction f3 = indicator(minkow3lnat_s3());
        expect_fn(c, "f1", f1, FnClass::LNat, true);
        expect_fn(c, "f2", f2, FnClass::LNat, true);
        expect_fn(c, "f3", f3, FnClass::LNat, true);
        LatticeFunction g = convolve(convolve(f1, f2), f3);
        expect(c, "convolution is the indicator of the triple Minkowski sum",
               g.support_set() ==
                   minkowski_sum(
                       minkowski_sum(lnatsetmsum_s1(), lnatsetmsum_s2()),
                       minkow3lnat_s3()));
        expect_fn(c, "g", g, FnClass::IntegrallyConvex, false);
        return c;
      },
      [] {
        return fns_payload({{"f1", indicator(lnatsetmsum_s1())},
                            {"f2", indicator(lnatsetmsum_s2())},
                            {"f3", indicator(minkow3lnat_s3())}});
      });

  return r;
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> reg = build_registry();
  return reg;
}

const Fixture* find_fixture(const std::string& id) {
  for (const Fixture& f : fixture_registry())
    if (f.id == id) return &f;
  return nullptr;
}

FixtureResult run_fixture(const Fixture& f) {
  FixtureResult r;
  r.id = f.id;
  r.checks = f.run();
  r.pass = true;
  for (const FixtureCheck& c : r.checks)
    if (!c.pass) r.pass = false;
  return r;
}

}  // namespace dca
