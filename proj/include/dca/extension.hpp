#pragma once
// Convex-hull membership and local convex extension values, both exact.
//
// local_extension_value(f, z): the value at z of the convex extension of f
// restricted to the integral neighbourhood N(z) -- the LP
//     min sum l_y f(y)  s.t.  sum l_y = 1, sum l_y y = z, l >= 0,
//     y ranging over N(z) intersected with dom f.
// +infinity when infeasible.  envelope_value is the same LP over all of
// dom f (the global lower convex envelope).  hull_membership answers
// z in conv(S) with an explicit convex-combination certificate.

#include <optional>
#include <vector>

#include "dca/function.hpp"
#include "dca/lp.hpp"

namespace dca {

struct HullCertificate {
  std::vector<Point> support;     // points with positive coefficient
  std::vector<Rat> coefficients;  // matching convex coefficients
};

// z in conv(S)?  S given as an explicit list of points.
bool hull_membership(const std::vector<Point>& s, const RatPoint& z,
                     HullCertificate* cert = nullptr);

inline bool hull_membership(const LatticeSet& s, const RatPoint& z,
                            HullCertificate* cert = nullptr) {
  return hull_membership(std::vector<Point>(s.points.begin(), s.points.end()),
                         z, cert);
}

// min sum l_y f(y) over convex combinations of `candidates` hitting z;
// +inf when z is not in the hull of the candidates.
ExtVal restricted_envelope_value(const LatticeFunction& f,
                                 const std::vector<Point>& candidates,
                                 const RatPoint& z,
                                 HullCertificate* cert = nullptr);

// Extension over the integral neighbourhood N(z) of z.
ExtVal local_extension_value(const LatticeFunction& f, const RatPoint& z,
                             HullCertificate* cert = nullptr);

// Extension over all of dom f (lower convex envelope of the whole function).
ExtVal envelope_value(const LatticeFunction& f, const RatPoint& z,
                      HullCertificate* cert = nullptr);

inline RatPoint to_rat_point(const Point& x) {
  RatPoint r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = Rat(x[i]);
  return r;
}

}  // namespace dca
