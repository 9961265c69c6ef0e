#pragma once
// Integer lattice primitives: points, componentwise lattice operations,
// midpoint roundings, support sets, integral neighbourhoods of fractional
// points, and the unit bidiagonal change of variables used by the
// multimodular <-> L-natural correspondence.

#include <algorithm>
#include <vector>

#include "dca/value.hpp"

namespace dca {

using Point = std::vector<Int>;      // a point of Z^n
using RatPoint = std::vector<Rat>;   // a point of Q^n (midpoints, LP targets)

inline Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Point neg(const Point& a) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline Point unit(size_t n, size_t i, int s = 1) {
  Point r(n, Int(0));
  r[i] = s;
  return r;
}
inline Point ones(size_t n, long v = 1) { return Point(n, Int(v)); }

inline Point join(const Point& a, const Point& b) {  // componentwise max
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
inline Point meet(const Point& a, const Point& b) {  // componentwise min
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}
inline bool leq(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Rounded midpoints of x and y: ceil((x+y)/2) and floor((x+y)/2).
inline Point mid_up(const Point& x, const Point& y) {
  Point r(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    Int s = x[i] + y[i];
    mpz_cdiv_q_ui(r[i].get_mpz_t(), s.get_mpz_t(), 2);
  }
  return r;
}
inline Point mid_down(const Point& x, const Point& y) {
  Point r(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    Int s = x[i] + y[i];
    mpz_fdiv_q_ui(r[i].get_mpz_t(), s.get_mpz_t(), 2);
  }
  return r;
}
inline RatPoint midpoint(const Point& x, const Point& y) {
  RatPoint r(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    r[i] = Rat(x[i] + y[i], 2);
    r[i].canonicalize();
  }
  return r;
}

inline std::vector<size_t> supp_pos(const Point& d) {
  std::vector<size_t> r;
  for (size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) > 0) r.push_back(i);
  return r;
}
inline std::vector<size_t> supp_neg(const Point& d) {
  std::vector<size_t> r;
  for (size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) < 0) r.push_back(i);
  return r;
}

inline Int linf_norm(const Point& d) {
  Int m = 0;
  for (const Int& c : d) m = std::max(m, Int(abs(c)));
  return m;
}
inline Int l1_norm(const Point& d) {
  Int m = 0;
  for (const Int& c : d) m += abs(c);
  return m;
}
inline Int comp_sum(const Point& x) {
  Int s = 0;
  for (const Int& c : x) s += c;
  return s;
}
inline Rat inner(const Point& p, const Point& x) {
  Rat s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += Rat(p[i] * x[i]);
  return s;
}

// The integral neighbourhood N(z) = { w in Z^n : |z_i - w_i| < 1 }: integer
// coordinates are pinned, strictly fractional ones contribute {floor, ceil}.
// Enumerated in lexicographic order (floor before ceil) for determinism.
inline std::vector<Point> integral_neighborhood(const RatPoint& z) {
  size_t n = z.size();
  Point flo(n);
  std::vector<bool> frac(n);
  for (size_t i = 0; i < n; ++i) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), z[i].get_num().get_mpz_t(),
               z[i].get_den().get_mpz_t());
    flo[i] = f;
    frac[i] = z[i].get_den() != 1;
  }
  std::vector<Point> out;
  std::vector<size_t> fidx;
  for (size_t i = 0; i < n; ++i)
    if (frac[i]) fidx.push_back(i);
  size_t k = fidx.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Point w = flo;
    // lexicographic: treat the mask bits little-endian over reversed index
    // order so that the first fractional coordinate varies slowest.
    for (size_t b = 0; b < k; ++b)
      if (mask & (size_t{1} << (k - 1 - b))) w[fidx[b]] += 1;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Unit lower bidiagonal D (1 on the diagonal, -1 on the subdiagonal):
// (Dp)_i = p_i - p_{i-1} with p_0 = 0.  Its inverse takes prefix sums.
inline Point bidiagonal_apply(const Point& p) {
  Point r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] - (i ? p[i - 1] : Int(0));
  return r;
}
inline Point bidiagonal_inverse(const Point& x) {
  Point r(x.size());
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    s += x[i];
    r[i] = s;
  }
  return r;
}
// Transpose action (Dt p)_i = p_i - p_{i+1} with p_{n+1} = 0, used when
// pulling conjugates of multimodular functions back to M-natural form.
inline Point bidiagonal_transpose_apply(const Point& p) {
  Point r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    r[i] = p[i] - (i + 1 < p.size() ? p[i + 1] : Int(0));
  return r;
}
inline Point bidiagonal_transpose_inverse(const Point& x) {  // suffix sums
  Point r(x.size());
  Int s = 0;
  for (size_t i = x.size(); i-- > 0;) {
    s += x[i];
    r[i] = s;
  }
  return r;
}

}  // namespace dca
