#pragma once
// Integral Legendre-Fenchel conjugation and its verification helpers.
//
//   f*(p)  = max_{x in dom f} <p,x> - f(x)        (tabulated on a p-window)
//   f**(x) = sup_{p in Z^n}   <p,x> - f*(p)
//
// The biconjugate at a point is evaluated by enumerating integer p over an
// adaptive box: the initial radius is B0 = 1 + ceil(max f - min f); the box
// doubles while the integer argmax touches the boundary or the value still
// increases, capped at 2^6 B0 (inconclusive_error beyond the cap).  The LP
// lower-envelope value of f at x brackets the search from above and ends it
// early when attained.

#include <optional>

#include "dca/classify.hpp"
#include "dca/extension.hpp"
#include "dca/function.hpp"

namespace dca {

struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default symmetric p-window of radius 2 (max f - min f) + 2.
Window default_conjugate_window(const LatticeFunction& f);

LatticeFunction conjugate(const LatticeFunction& f, const Window& p_window);
inline LatticeFunction conjugate(const LatticeFunction& f) {
  return conjugate(f, default_conjugate_window(f));
}

struct BiconjugateResult {
  ExtVal value;      // f**(x); +inf when x is outside conv(dom f)
  ExtVal envelope;   // LP lower convex envelope of f at x (upper bracket)
  Int radius;        // final search radius used
  Point argmax;      // integer p attaining the value (empty when value=+inf)
};
BiconjugateResult biconjugate_at(const LatticeFunction& f, const Point& x);

// Componentwise bounds of the subdifferential polyhedron
//   { p : <p, y - x> <= f(y) - f(x) for all y in dom f }.
// Directions in which the polyhedron is unbounded are clamped at the cap
// radius 2^6 B0 and flagged.
struct SubgradientBox {
  bool exists = false;  // false when the subdifferential is empty
  RatPoint lo, hi;
  std::vector<bool> clamped_lo, clamped_hi;
};
SubgradientBox subdifferential_box(const LatticeFunction& f, const Point& x);

// An integer subgradient at x, if one exists (searched inside the
// subdifferential box).  Existence is equivalent to f**(x) = f(x) for
// integer-valued f.
std::optional<Point> integer_subgradient(const LatticeFunction& f,
                                         const Point& x);

// Conjugation maps classes: separable -> separable, l-natural <-> m-natural,
// l-convex <-> m-convex, multimodular -> (m-natural after the transpose
// bidiagonal change of variables).  Checks the premise on f, computes the
// conjugate, and checks the image class.
struct ConjugateClassReport {
  bool applicable = false;   // the class has a conjugate column entry
  Verdict premise;           // f really is in the claimed class
  Verdict image;             // the conjugate is in the mapped class
  std::string image_class;   // kebab-case name of the mapped class
  bool slope_checked = false;  // M -> L only: slope equals the component sum
  bool slope_ok = false;
};
// p_window overrides the default conjugate window (the image-class checks
// are all stable under restricting the conjugate to a box: the natural /
// window-certified classes restrict, and the hyperplane / transpose
// identities are pointwise-exact).
ConjugateClassReport conjugate_class_check(
    const LatticeFunction& f, FnClass c,
    const std::optional<Window>& p_window = std::nullopt);

}  // namespace dca
