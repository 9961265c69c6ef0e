#pragma once
// Operations on sets and functions: coordinate changes (translation,
// inversions, permutation, domain scaling), value scaling, restriction,
// projection, sums, intersections, infimal convolution / Minkowski sum, and
// the standard lifts between classes.  Results stay in the explicit finite
// model; an operation that empties the domain throws empty_result.

#include <stdexcept>
#include <variant>
#include <vector>

#include "dca/function.hpp"

namespace dca {

struct empty_result : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- coordinate changes ----
struct Shift {            // x -> x + t
  Point t;
};
struct InvertAll {};      // x -> -x
struct InvertSigns {      // x -> (s_1 x_1, ..., s_n x_n), s_i in {+1,-1}
  std::vector<int> signs;
};
struct Permute {          // y_i = x_perm[i]
  std::vector<size_t> perm;
};
struct VarScale {         // y in result iff alpha*y in input (alpha >= 1)
  long alpha = 1;
};
using CoordinateChange =
    std::variant<Shift, InvertAll, InvertSigns, Permute, VarScale>;

LatticeSet apply_change(const LatticeSet& s, const CoordinateChange& c);
LatticeFunction apply_change(const LatticeFunction& f,
                             const CoordinateChange& c);

// ---- value operations (functions) ----
LatticeFunction value_scale(const LatticeFunction& f, const Rat& beta);

// Restriction to the coordinates U: remaining coordinates fixed to 0.
LatticeSet restrict_to(const LatticeSet& s, const std::vector<size_t>& u);
LatticeFunction restrict_to(const LatticeFunction& f,
                            const std::vector<size_t>& u);

// Restriction of the domain to a box (adds the box indicator).
LatticeFunction restrict_box(const LatticeFunction& f, const Window& box);
LatticeSet intersect_box(const LatticeSet& s, const Window& box);

// Projection onto the coordinates U: minimization over the others.
LatticeSet project_to(const LatticeSet& s, const std::vector<size_t>& u);
LatticeFunction project_to(const LatticeFunction& f,
                           const std::vector<size_t>& u);

LatticeFunction add(const LatticeFunction& f, const LatticeFunction& g);
LatticeSet intersect(const LatticeSet& a, const LatticeSet& b);

// Infimal convolution (f1 # f2)(x) = min { f1(y) + f2(x-y) }; Minkowski sum
// for sets.
LatticeFunction convolve(const LatticeFunction& f, const LatticeFunction& g);
LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b);

// ---- lifts between classes ----
// M-natural -> M: prepend x_0 = -(x_1 + ... + x_n).
LatticeFunction lift_mnat_to_m(const LatticeFunction& f);
LatticeSet lift_mnat_to_m(const LatticeSet& s);
// jump M-natural -> jump M: prepend the parity coordinate
// x_0 = (x_1 + ... + x_n) mod 2.
LatticeFunction lift_jump_mnat_to_m(const LatticeFunction& f);
// L-natural -> L: prepend x_0 and evaluate at x - x_0 1 (x_0 in [0, span]).
LatticeFunction lift_lnat_to_l(const LatticeFunction& f);
// Multimodular <-> L-natural via the unit bidiagonal change of variables.
LatticeFunction mm_to_lnat(const LatticeFunction& f);   // g(p) = f(Dp)
LatticeFunction lnat_to_mm(const LatticeFunction& g);   // f(x) = g(D^-1 x)
LatticeSet mm_to_lnat(const LatticeSet& s);
LatticeSet lnat_to_mm(const LatticeSet& s);

}  // namespace dca
