#pragma once
// The counterexample / example registry: small concrete sets and functions
// with frozen expected verdicts, each re-derivable by the classifiers.  The
// registry drives the N cells of the closure tables and the negative
// controls of the acceptance run.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dca/classify.hpp"
#include "dca/function.hpp"

namespace dca {

struct FixtureCheck {
  std::string what;    // e.g. "S is m-natural"
  bool pass = false;
  std::string detail;  // witness / value on failure (or extra info)
};

struct FixtureResult {
  std::string id;
  bool pass = false;
  std::vector<FixtureCheck> checks;
};

struct Fixture {
  std::string id;
  std::string note;                                  // what it demonstrates
  std::function<std::vector<FixtureCheck>()> run;    // expected verdicts
  std::function<nlohmann::json()> payload;           // shippable JSON
};

const std::vector<Fixture>& fixture_registry();
const Fixture* find_fixture(const std::string& id);
FixtureResult run_fixture(const Fixture& f);

// Raw payload builders, shared with the closure-table N cells.
namespace fx {

LatticeSet diag2(long lo, long hi);      // { (t,t)   : lo <= t <= hi }
LatticeSet antidiag2(long lo, long hi);  // { (t,-t)  : lo <= t <= hi }

LatticeSet jumpdim1();          // {0, 2}
LatticeSet nonsejumpdim1();     // {0, 2, 3}
LatticeSet nonsejump();         // delta-matroid on {0,1}^3
LatticeFunction jmnatmnat(const Rat& a, const Rat& b);

LatticeSet mmsetperm_s();       // multimodular 3d set
LatticeSet mmsetperm_t();       // its transposition image
LatticeSet mnatsetscdim3_s();   // m-natural, breaks under 2-scaling
LatticeSet msetscdim3_s();      // m-convex (dim 4), breaks under 2-scaling
LatticeSet scicsetng422_s();    // integrally convex, breaks under 2-scaling
LatticeSet scicsetng422_t();    // the scaled image {000,100,101,211}

LatticeSet icsetinter_s1();
LatticeSet icsetinter_s2();
LatticeSet mnatsetinter_s1();
LatticeSet mnatsetinter_s2();
LatticeSet msetinter_s1();
LatticeSet msetinter_s2();

LatticeSet icdim2sumhole_s1();  // {(0,0),(1,1)}
LatticeSet icdim2sumhole_s2();  // {(1,0),(0,1)}
LatticeSet lnatsetmsum_s1();    // {(0,0,0),(1,1,0)}
LatticeSet lnatsetmsum_s2();    // {(0,0,0),(0,1,1)}
LatticeSet minkow3lnat_s3();    // {(0,0,0),(1,0,1)}
LatticeSet lsetsum_s(int which);   // diagonal-orbit L set models (dim 4)
LatticeSet mmsetmsum_s1();      // {(0,0,0),(1,0,-1)}
LatticeSet mmsetmsum_s2();      // {(0,0,0),(0,1,0)}
LatticeSet msetboxsum_s();      // {(1,0),(0,1)}
LatticeSet msetboxsum_b();      // {(0,0),(1,0)}
LatticeSet dicdim3_s();         // {(0,0,1),(1,1,0)}
LatticeSet dicdim3_b();         // {(0,0,0),(1,0,0)}

LatticeFunction lfnsigninv_f();   // |x1 - x2 - 3| on [-4,4]^2
LatticeFunction lfnsigninv_g();   // |x1 + x2 - 3| on [-4,4]^2
LatticeFunction lfnsigninv3_f();  // |x1 - x2 - 1| on [-2,2]^3
LatticeFunction lfnsigninv3_g();  // |x1 + x2 - 1| on [-2,2]^3
LatticeFunction mfnsigninv_f();   // |x1 + x2| on [-2,2]^2
LatticeFunction mfnsigninv_g();   // |x1 - x2| on [-2,2]^2

std::vector<std::vector<Rat>> mmfnperm1_a();       // quadratic matrix A
std::vector<std::vector<Rat>> mmfnperm1_atilde();  // transposed-variable A

LatticeFunction scicfnng422_f();  // the 45-entry table on [(0,0,0),(4,2,2)]
LatticeFunction scicfnng422_g();  // f(2y) on [(0,0,0),(2,1,1)]

LatticeFunction dicdim3fn_f();    // 0 on S, 1 elsewhere on [(0,0,0),(1,1,1)]
LatticeFunction dicdim3fn_conv(); // 0 on S+B, 1 elsewhere on [(0,0,0),(2,1,1)]

LatticeFunction la1_f();          // (x1+x2+x3)/2 on the 7-point star
LatticeFunction conjic_f();       // indicator of the 4-point set in {0,1}^4

}  // namespace fx

}  // namespace dca
