#pragma once
// Seeded generators of class members, used by the closure-table verifier and
// the property tests.  Every generator constructs a candidate from a closure
// recipe (separable sums, difference-convex sums, laminar sums, lifts,
// Minkowski sums of exchange segments, checker-filtered perturbations) and
// re-validates it with the corresponding classifier before returning;
// a bounded retry budget guards against degenerate draws.
//
// Determinism: the returned instance depends only on (class, n, window,
// seed).  Generators are coverage tools, not uniform samplers; each class
// uses at least one constructive route plus a perturbation route.

#include <cstdint>
#include <stdexcept>

#include "dca/classify.hpp"
#include "dca/function.hpp"

namespace dca {

struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Combine a base seed with salt values into a fresh stream (splitmix64).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t hash_string(const std::string& s);

// An instance of the class inside (or near) the window; always re-validated
// by check_set / check_fn.  Throws generation_error when the retry budget is
// exhausted.  n <= 4; window width <= 6.
LatticeSet generate_set(SetClass c, std::size_t n, const Window& window,
                        std::uint64_t seed);
LatticeFunction generate_fn(FnClass c, std::size_t n, const Window& window,
                            std::uint64_t seed);

inline LatticeSet generate_set(SetClass c, std::size_t n, std::uint64_t seed) {
  return generate_set(c, n, Window::cube(n, -2, 2), seed);
}
inline LatticeFunction generate_fn(FnClass c, std::size_t n,
                                   std::uint64_t seed) {
  return generate_fn(c, n, Window::cube(n, -2, 2), seed);
}

// An arbitrary sparse function on the window (random rational values, random
// +inf holes): raw material for agreement properties, not a class member.
LatticeFunction generate_arbitrary_fn(std::size_t n, const Window& window,
                                      std::uint64_t seed);

}  // namespace dca
