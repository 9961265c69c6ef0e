// Acceptance run: one line per criterion, zero tolerance.  Each criterion
// re-derives its frozen values with exact arithmetic; any mismatch fails the
// whole binary.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dca/conjugate.hpp"
#include "dca/extension.hpp"
#include "dca/fixtures.hpp"
#include "dca/generate.hpp"
#include "dca/tables.hpp"
#include "dca/transform.hpp"

using namespace dca;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  std::vector<std::string> problems;
  Clock::time_point start = Clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
  void finish(double budget_s) {
    double s = seconds();
    if (s > budget_s)
      problems.push_back("runtime " + std::to_string(s) + "s over budget " +
                         std::to_string(budget_s) + "s");
    if (problems.empty()) {
      std::cout << "PASS " << label << " (" << s << "s)\n";
    } else {
      ++failures;
      std::cout << "FAIL " << label << " (" << s << "s)";
      for (const std::string& p : problems) std::cout << "\n      " << p;
      std::cout << "\n";
    }
    std::cout.flush();
  }
};

RatPoint rz(std::initializer_list<Rat> xs) {
  RatPoint r;
  for (const Rat& v : xs) r.push_back(v);
  return r;
}

std::uint64_t base_seed() {
  if (const char* e = std::getenv("DCA_SEED")) return std::strtoull(e, nullptr, 10);
  return 42;
}

// ---- criterion 1: half-sum star exactness -------------------------------

void criterion1() {
  Criterion c("1 half-sum star: closed-form conjugate, biconjugate -1, "
              "collapsed subdifferential");
  LatticeFunction f = fx::la1_f();
  LatticeFunction g = conjugate(f, Window::cube(3, -2, 2));
  long mismatches = 0;
  Window::cube(3, -2, 2).for_each([&](const Point& p) {
    Rat want = 0;
    for (auto [i, j] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 0}}) {
      Rat t = Rat(Int(abs(p[i] + p[j] - 1)));
      if (t > want) want = t;
    }
    if (!(g.eval(p) == ExtVal(want))) ++mismatches;
  });
  c.require(mismatches == 0, "conjugate differs from the closed form at " +
                                 std::to_string(mismatches) + " points");
  BiconjugateResult b = biconjugate_at(f, make_point({0, 0, 0}));
  c.require(b.value == ExtVal(-1), "biconjugate at the origin is not -1");
  c.require(!integer_subgradient(f, make_point({0, 0, 0})).has_value(),
            "an integer subgradient exists at the origin");
  SubgradientBox box = subdifferential_box(f, make_point({0, 0, 0}));
  c.require(box.exists, "subdifferential reported empty");
  for (size_t i = 0; i < 3 && box.exists; ++i)
    c.require(box.lo[i] == Rat(1, 2) && box.hi[i] == Rat(1, 2),
              "subdifferential box not collapsed to (1/2,1/2,1/2)");
  c.finish(5.0);
}

// ---- criterion 2: four-point indicator conjugate ------------------------

void criterion2() {
  Criterion c("2 indicator conjugate: closed form, extension value 5/4 vs "
              "average 1, not integrally convex");
  LatticeFunction g = conjugate(fx::conjic_f(), Window::cube(4, -2, 2));
  long mismatches = 0;
  Window::cube(4, -2, 2).for_each([&](const Point& p) {
    Rat want = Rat(Int(p[0] + p[1]));
    for (const Int& alt : {Int(p[1] + p[2]), Int(p[0] + p[2]), p[3]}) {
      Rat t = Rat(alt);
      if (t > want) want = t;
    }
    if (!(g.eval(p) == ExtVal(want))) ++mismatches;
  });
  c.require(mismatches == 0, "conjugate differs from the closed form at " +
                                 std::to_string(mismatches) + " points");
  ExtVal mid = local_extension_value(
      g, rz({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1)}));
  c.require(mid == ExtVal(Rat(5, 4)), "midpoint extension value is not 5/4");
  ExtVal avg = (g.eval(make_point({0, 0, 0, 0})) +
                g.eval(make_point({1, 1, 1, 2}))) * Rat(1, 2);
  c.require(avg == ExtVal(1), "endpoint average is not 1");
  c.require(!check_fn(g, FnClass::IntegrallyConvex).holds,
            "the conjugate classified integrally convex");
  c.finish(10.0);
}

// ---- criterion 3: scaling breaks integral convexity ----------------------

void criterion3() {
  Criterion c("3 table function: integrally convex, 2-scaled copy fails "
              "with extension 1/2 vs average 0");
  LatticeFunction f = fx::scicfnng422_f();
  LatticeFunction g = fx::scicfnng422_g();
  c.require(check_fn(f, FnClass::IntegrallyConvex).holds,
            "the base function is not integrally convex");
  c.require(!check_fn(g, FnClass::IntegrallyConvex).holds,
            "the scaled function passed the check");
  ExtVal mid = local_extension_value(g, rz({Rat(1), Rat(1, 2), Rat(1, 2)}));
  c.require(mid == ExtVal(Rat(1, 2)), "witness extension value is not 1/2");
  ExtVal avg = (g.eval(make_point({0, 0, 0})) +
                g.eval(make_point({2, 1, 1}))) * Rat(1, 2);
  c.require(avg == ExtVal(0), "witness endpoint average is not 0");
  c.finish(5.0);
}

// ---- criterion 4: Minkowski sum holes ------------------------------------

void criterion4() {
  Criterion c("4 Minkowski holes at (1,1) and (1,1,1)");
  LatticeSet two = minkowski_sum(fx::icdim2sumhole_s1(),
                                 fx::icdim2sumhole_s2());
  c.require(hull_membership(two, rz({Rat(1), Rat(1)})),
            "(1,1) not in the hull of the 2-d sum");
  c.require(!two.contains(make_point({1, 1})), "(1,1) present in the 2-d sum");

  LatticeSet three = minkowski_sum(
      minkowski_sum(fx::lnatsetmsum_s1(), fx::lnatsetmsum_s2()),
      fx::minkow3lnat_s3());
  c.require(hull_membership(three, rz({Rat(1), Rat(1), Rat(1)})),
            "(1,1,1) not in the hull of the 3-d sum");
  c.require(!three.contains(make_point({1, 1, 1})),
            "(1,1,1) present in the 3-d sum");
  c.finish(5.0);
}

// ---- criterion 5: full closure-table verification -------------------------

void criterion5() {
  Criterion c("5 closure tables: 200 trials per Y cell, witnessed N cells");
  nlohmann::json r = verify_all(200, base_seed());
  c.require(r["summary"]["pass"].get<bool>(), "verification reported failure");
  c.require(r["summary"]["cells-failed"].get<long>() == 0,
            std::to_string(r["summary"]["cells-failed"].get<long>()) +
                " cells failed");
  for (const auto& cell : r["cells"]) {
    if (cell["expected"].get<std::string>() == "Y" &&
        cell["outcome"].get<std::string>() == "pass")
      c.require(cell["trials"].get<long>() >= 200,
                cell["table"].get<std::string>() + "|" +
                    cell["class"].get<std::string>() + "|" +
                    cell["op"].get<std::string>() + " ran fewer than 200 trials");
    if (cell["expected"].get<std::string>() == "N")
      c.require(!cell["witness"].get<std::string>().empty(),
                "unwitnessed N cell");
  }
  c.finish(300.0);
}

// ---- criterion 6: theorem equivalences as properties ----------------------

void inclusion_chain(Criterion& c, const LatticeSet& s) {
  auto has = [&](SetClass k) { return check_set(s, k).holds; };
  bool lnat = has(SetClass::LNat), dmc = has(SetClass::Dmc),
       ic = has(SetClass::IntegrallyConvex), m = has(SetClass::M),
       mnat = has(SetClass::MNat), mm = has(SetClass::Multimodular);
  c.require(!lnat || dmc, "set inclusion l-natural => d.m.c. violated");
  c.require(!dmc || ic, "set inclusion d.m.c. => integrally convex violated");
  c.require(!m || mnat, "set inclusion m => m-natural violated");
  c.require(!mnat || ic,
            "set inclusion m-natural => integrally convex violated");
  c.require(!mnat || has(SetClass::SeJump),
            "set inclusion m-natural => simultaneous-exchange violated");
  c.require(!m || has(SetClass::CpJump),
            "set inclusion m => constant-parity violated");
  c.require(!mm || ic,
            "set inclusion multimodular => integrally convex violated");
}

void inclusion_chain(Criterion& c, const LatticeFunction& f) {
  auto has = [&](FnClass k) { return check_fn(f, k).holds; };
  bool lnat = has(FnClass::LNat), gd = has(FnClass::GloballyDmc),
       ld = has(FnClass::LocallyDmc), ic = has(FnClass::IntegrallyConvex),
       m = has(FnClass::M), mnat = has(FnClass::MNat),
       mm = has(FnClass::Multimodular), sep = has(FnClass::Separable);
  c.require(!lnat || gd, "fn inclusion l-natural => global d.m.c. violated");
  c.require(!gd || ld, "fn inclusion global => local d.m.c. violated");
  c.require(!gd || ic,
            "fn inclusion global d.m.c. => integrally convex violated");
  c.require(!m || mnat, "fn inclusion m => m-natural violated");
  c.require(!mnat || ic,
            "fn inclusion m-natural => integrally convex violated");
  c.require(!mm || ic,
            "fn inclusion multimodular => integrally convex violated");
  c.require(sep == (lnat && mnat),
            "separable <=> (l-natural and m-natural) violated");
}

void criterion6() {
  Criterion c("6 equivalence properties: six-way profile x500, dim-2 "
              "coincidences x200, supermodularity x200, inclusion chains");
  std::uint64_t seed = base_seed();

  long agreed = 0;
  for (long i = 0; i < 500; ++i) {
    size_t n = 2 + (i % 2);
    LatticeFunction f =
        generate_arbitrary_fn(n, Window::cube(n, -1, 1),
                              mix_seed(seed, 9000 + i));
    if (f.dom_empty()) continue;
    LnatProfile p = lnat_profile(f);
    if (p.agree()) ++agreed;
    else c.require(false, "six-way profile disagreement at draw " +
                              std::to_string(i));
  }
  c.require(agreed >= 490, "too many degenerate six-way draws");

  for (long i = 0; i < 200; ++i) {
    LatticeFunction f = generate_arbitrary_fn(2, Window::cube(2, -1, 1),
                                              mix_seed(seed, 11000 + i));
    if (f.dom_empty()) continue;
    if (!dim2_crosscheck(f).consistent())
      c.require(false, "dim-2 function coincidence failed at draw " +
                           std::to_string(i));
    if (!dim2_crosscheck(f.support_set()).consistent())
      c.require(false, "dim-2 set coincidence failed at draw " +
                           std::to_string(i));
  }

  for (long i = 0; i < 200; ++i) {
    size_t n = 2 + (i % 2);
    LatticeFunction f = generate_fn(FnClass::MNat, n,
                                    mix_seed(seed, 13000 + i));
    if (!check_fn(f, FnClass::Supermodular).holds)
      c.require(false, "m-natural instance not supermodular at draw " +
                           std::to_string(i));
    if (i % 10 == 0) inclusion_chain(c, f);
  }

  // inclusion chains on a generated instance of every class
  for (SetClass k : all_set_classes())
    for (long i = 0; i < 5; ++i)
      inclusion_chain(c, generate_set(k, 2, mix_seed(seed, 15000 + i)));
  for (FnClass k : all_fn_classes())
    for (long i = 0; i < 5; ++i)
      inclusion_chain(c, generate_fn(k, 2, mix_seed(seed, 16000 + i)));

  c.finish(300.0);
}

// ---- criterion 7: biconjugacy on integrally convex functions --------------

void criterion7() {
  Criterion c("7 biconjugate identity on 100 integer-valued integrally "
              "convex functions");
  std::uint64_t seed = base_seed();
  long done = 0;
  for (long i = 0; done < 100; ++i) {
    if (i > 1000) {
      c.require(false, "generator failed to supply 100 instances");
      break;
    }
    size_t n = 2 + (i % 2);
    LatticeFunction f;
    try {
      f = generate_fn(FnClass::IntegrallyConvex, n,
                      mix_seed(seed, 21000 + i));
    } catch (const generation_error&) {
      continue;
    }
    if (!f.integer_valued() || f.dom_empty()) continue;
    for (const Point& x : f.dom_points()) {
      bool equal = biconjugate_at(f, x).value == f.eval(x);
      c.require(equal, "biconjugate differs from f on the domain");
      c.require(integer_subgradient(f, x).has_value() == equal,
                "integer-subgradient cross-check disagrees");
    }
    ++done;
  }
  c.finish(300.0);
}

// ---- criterion 8: conjugacy class mapping ----------------------------------

void criterion8() {
  Criterion c("8 conjugate class mapping: l-natural, m-natural, separable "
              "x100; m with slope check x50");
  std::uint64_t seed = base_seed();
  auto run = [&](FnClass k, long count, std::uint64_t salt,
                 const std::string& what, bool want_slope) {
    long done = 0;
    for (long i = 0; done < count; ++i) {
      if (i > 10 * count + 200) {
        c.require(false, "generator starvation for " + what);
        return;
      }
      size_t n = 2 + (i % 2);
      LatticeFunction f;
      try {
        f = generate_fn(k, n, mix_seed(seed, salt + i));
      } catch (const generation_error&) {
        continue;
      }
      ConjugateClassReport rep =
          conjugate_class_check(f, k, Window::cube(n, -3, 3));
      c.require(rep.applicable && rep.premise.holds,
                what + ": generated instance failed its own premise");
      c.require(rep.image.holds, what + ": conjugate left the image class");
      if (want_slope)
        c.require(rep.slope_checked && rep.slope_ok,
                  what + ": slope does not match the component sum");
      ++done;
    }
  };

  run(FnClass::LNat, 100, 31000, "l-natural -> m-natural", false);
  run(FnClass::MNat, 100, 33000, "m-natural -> l-natural", false);
  run(FnClass::Separable, 100, 35000, "separable -> separable", false);
  run(FnClass::M, 50, 37000, "m -> window-certified l", true);
  c.finish(300.0);
}

// ---- criterion 9: negative controls ----------------------------------------

void criterion9() {
  Criterion c("9 negative controls: corrupted fixture and flipped table cell "
              "fail with witnesses");
  // the two-valued square with its parameters swapped: the m-natural claim
  // must now fail, and the verdict must carry a re-checkable exchange witness
  LatticeFunction bad = fx::jmnatmnat(0, 1);
  Verdict v = check_fn(bad, FnClass::MNat);
  c.require(!v.holds, "corrupted fixture still passed the m-natural check");
  c.require(!v.points.empty(), "no exchange witness attached");
  for (const Point& p : v.points)
    c.require(bad.window.contains(p), "witness point outside the window");
  // re-run: the witness is stable
  Verdict v2 = check_fn(bad, FnClass::MNat);
  c.require(v.points == v2.points && v.reason == v2.reason,
            "witness not reproducible");

  // a Y cell flipped to N must fail for lack of a counterexample ...
  for (const ClosureCell& cell : closure_cells()) {
    if (cell.table == "sets-coordinate" && cell.cls == "integer-box" &&
        cell.op == "translation") {
      ClosureCell flipped = cell;
      flipped.expected = 'N';
      CellOutcome out = verify_cell(flipped, 5, base_seed());
      c.require(out.outcome == "fail", "flipped Y cell did not fail");
      c.require(out.witness.find("no counterexample") != std::string::npos,
                "flipped Y cell failed for the wrong reason");
    }
    // ... and an N cell flipped to Y must be refuted by its counterexample
    if (cell.table == "sets-coordinate" && cell.cls == "integrally-convex" &&
        cell.op == "scaling") {
      ClosureCell flipped = cell;
      flipped.expected = 'Y';
      CellOutcome out = verify_cell(flipped, 5, base_seed());
      c.require(out.outcome == "fail", "flipped N cell did not fail");
      c.require(out.witness.find("refuted") != std::string::npos,
                "flipped N cell failed without naming its counterexample");
    }
  }
  c.finish(30.0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0) {
    std::cout << "all 9 criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
