#pragma once
// Definitional membership checkers for the discrete convexity classes, over
// explicit finite sets and finite-domain functions.  Every negative verdict
// carries a witness (the points violating the defining axiom) that can be
// re-checked independently.
//
// L-convexity (sets and functions) is inherently invariant under translation
// by the all-ones vector, hence never finite; those checks are
// window-certified: they quantify only over points whose required
// neighbours stay inside the declared window.

#include <optional>
#include <string>
#include <vector>

#include "dca/function.hpp"

namespace dca {

enum class SetClass {
  IntegerBox,
  IntegrallyConvex,
  LNat,
  L,
  MNat,
  M,
  Multimodular,
  Dmc,
  JumpSystem,
  SeJump,  // simultaneous-exchange jump system
  CpJump,  // constant-parity jump system
};

enum class FnClass {
  Separable,
  IntegrallyConvex,
  LNat,
  L,
  MNat,
  M,
  Multimodular,
  GloballyDmc,
  LocallyDmc,
  JumpMNat,
  JumpM,
  Submodular,
  Supermodular,
};

// Kebab-case names, used by the CLI and in reports.
std::string set_class_name(SetClass c);
std::string fn_class_name(FnClass c);
std::optional<SetClass> parse_set_class(const std::string& name);
std::optional<FnClass> parse_fn_class(const std::string& name);
const std::vector<SetClass>& all_set_classes();
const std::vector<FnClass>& all_fn_classes();

struct Verdict {
  bool holds = false;
  std::string reason;             // human-readable, empty when holds
  std::vector<Point> points;      // lattice points of the violated axiom
  std::vector<long> indices;      // coordinate indices involved, if any
  std::string describe() const;

  static Verdict yes() { return Verdict{true, "", {}, {}}; }
  static Verdict no(std::string why, std::vector<Point> pts = {},
                    std::vector<long> idx = {}) {
    return Verdict{false, std::move(why), std::move(pts), std::move(idx)};
  }
};

Verdict check_set(const LatticeSet& s, SetClass c);
// Window-certified variant: the L-convex check certifies all-ones-shift
// invariance on the given window rather than the set's bounding box.
Verdict check_set(const LatticeSet& s, SetClass c, const Window& w);
Verdict check_fn(const LatticeFunction& f, FnClass c);

// For window-certified L-convex functions: the arithmetic progression slope,
// f(x + all-ones) = f(x) + slope, when determined by the window.
struct LConvexForm {
  Rat slope;
  bool determined = false;  // false when the window admits no unit shift
};
LConvexForm l_convex_form(const LatticeFunction& f);

// The six equivalent characterizations of L-natural convexity, evaluated
// independently: (a) discrete midpoint inequality for all pairs; (b) domain
// closure + midpoint inequality at distance <= 2; (c) integrally convex and
// submodular; (d) translation submodularity; (e) steepest-descent exchange
// at the argmax set; (f) submodularity of the lift f(x - x0 1) in n+1
// variables.  They must agree for every function.
struct LnatProfile {
  Verdict midpoint, local, ic_submodular, translation, argmax, lifted;
  bool agree() const {
    bool v = midpoint.holds;
    return local.holds == v && ic_submodular.holds == v &&
           translation.holds == v && argmax.holds == v && lifted.holds == v;
  }
};
LnatProfile lnat_profile(const LatticeFunction& f);

// Dimension-2 coincidences: S is L-natural iff its second-coordinate flip is
// M-natural, and S is multimodular iff S is M-natural.  Same for functions.
struct Dim2Cross {
  Verdict lnat, flipped_mnat;   // must agree
  Verdict mnat, multimodular;   // must agree
  bool consistent() const {
    return lnat.holds == flipped_mnat.holds &&
           mnat.holds == multimodular.holds;
  }
};
Dim2Cross dim2_crosscheck(const LatticeSet& s);
Dim2Cross dim2_crosscheck(const LatticeFunction& f);

// Coefficient criterion for multimodularity of the quadratic form x^T A x
// (A symmetric, indices 1..n, with a[i][j] treated as 0 when i = 0 or
// j = n+1):  a(i,j) - a(i,j+1) - a(i+1,j) + a(i+1,j+1) <= 0 for
// 0 <= i < j <= n.
Verdict quadratic_multimodular(const std::vector<std::vector<Rat>>& a);

// The quadratic form itself, tabulated on a window (CLI helper and the
// cross-check target for the coefficient criterion).
LatticeFunction quadratic_function(const std::vector<std::vector<Rat>>& a,
                                   const Window& w);

}  // namespace dca
