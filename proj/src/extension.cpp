#include "dca/extension.hpp"

namespace dca {
namespace {

// Builds the convex-combination LP over `pts` targeting z, with objective
// coefficients `cost` (empty = feasibility only).
LPResult combination_lp(const std::vector<Point>& pts,
                        const std::vector<Rat>& cost, const RatPoint& z) {
  size_t n = z.size(), k = pts.size();
  LP lp;
  lp.A.assign(n + 1, std::vector<Rat>(k, Rat(0)));
  lp.b.assign(n + 1, Rat(0));
  lp.rel.assign(n + 1, 0);
  for (size_t j = 0; j < k; ++j) {
    for (size_t i = 0; i < n; ++i) lp.A[i][j] = Rat(pts[j][i]);
    lp.A[n][j] = 1;
  }
  for (size_t i = 0; i < n; ++i) lp.b[i] = z[i];
  lp.b[n] = 1;
  lp.c = cost.empty() ? std::vector<Rat>(k, Rat(0)) : cost;
  return solve_lp(lp);
}

void fill_certificate(const std::vector<Point>& pts, const LPResult& r,
                      HullCertificate* cert) {
  if (!cert) return;
  cert->support.clear();
  cert->coefficients.clear();
  for (size_t j = 0; j < pts.size(); ++j)
    if (sgn(r.x[j]) > 0) {
      cert->support.push_back(pts[j]);
      cert->coefficients.push_back(r.x[j]);
    }
}

}  // namespace

bool hull_membership(const std::vector<Point>& s, const RatPoint& z,
                     HullCertificate* cert) {
  if (s.empty()) return false;
  LPResult r = combination_lp(s, {}, z);
  if (r.status != LPStatus::Optimal) return false;
  fill_certificate(s, r, cert);
  return true;
}

ExtVal restricted_envelope_value(const LatticeFunction& f,
                                 const std::vector<Point>& candidates,
                                 const RatPoint& z, HullCertificate* cert) {
  std::vector<Point> pts;
  std::vector<Rat> cost;
  for (const Point& y : candidates) {
    ExtVal v = f.eval(y);
    if (v.is_finite()) {
      pts.push_back(y);
      cost.push_back(v.finite());
    }
  }
  if (pts.empty()) return ExtVal::infinity();
  LPResult r = combination_lp(pts, cost, z);
  if (r.status != LPStatus::Optimal) return ExtVal::infinity();
  fill_certificate(pts, r, cert);
  return ExtVal(r.value);
}

ExtVal local_extension_value(const LatticeFunction& f, const RatPoint& z,
                             HullCertificate* cert) {
  return restricted_envelope_value(f, integral_neighborhood(z), z, cert);
}

ExtVal envelope_value(const LatticeFunction& f, const RatPoint& z,
                      HullCertificate* cert) {
  return restricted_envelope_value(f, f.dom_points(), z, cert);
}

}  // namespace dca
