#include "dca/transform.hpp"

#include <algorithm>

namespace dca {
namespace {

void check_perm(const std::vector<size_t>& perm, size_t n) {
  if (perm.size() != n) throw model_error("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (size_t p : perm) {
    if (p >= n || seen[p]) throw model_error("not a permutation");
    seen[p] = true;
  }
}
void check_signs(const std::vector<int>& s, size_t n) {
  if (s.size() != n) throw model_error("sign vector size mismatch");
  for (int v : s)
    if (v != 1 && v != -1) throw model_error("signs must be +1 or -1");
}

Point map_point(const Point& x, const CoordinateChange& c) {
  return std::visit(
      [&](const auto& op) -> Point {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Shift>) {
          return add(x, op.t);
        } else if constexpr (std::is_same_v<T, InvertAll>) {
          return neg(x);
        } else if constexpr (std::is_same_v<T, InvertSigns>) {
          Point r(x.size());
          for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * op.signs[i];
          return r;
        } else if constexpr (std::is_same_v<T, Permute>) {
          Point r(x.size());
          for (size_t i = 0; i < x.size(); ++i) r[i] = x[op.perm[i]];
          return r;
        } else {
          throw model_error("scaling has no pointwise forward map");
        }
      },
      c);
}

void validate(const CoordinateChange& c, size_t dim) {
  if (const auto* s = std::get_if<Shift>(&c)) {
    if (s->t.size() != dim) throw model_error("shift vector size mismatch");
  } else if (const auto* sg = std::get_if<InvertSigns>(&c)) {
    check_signs(sg->signs, dim);
  } else if (const auto* p = std::get_if<Permute>(&c)) {
    check_perm(p->perm, dim);
  } else if (const auto* v = std::get_if<VarScale>(&c)) {
    if (v->alpha < 1) throw model_error("scaling factor must be >= 1");
  }
}

// [ceil(lo/a), floor(hi/a)] per coordinate; throws when empty.
Window scale_window(const Window& w, long alpha) {
  Point lo(w.dim()), hi(w.dim());
  Int a(alpha);
  for (size_t i = 0; i < w.dim(); ++i) {
    mpz_cdiv_q(lo[i].get_mpz_t(), w.lo[i].get_mpz_t(), a.get_mpz_t());
    mpz_fdiv_q(hi[i].get_mpz_t(), w.hi[i].get_mpz_t(), a.get_mpz_t());
    if (lo[i] > hi[i]) throw empty_result("scaled window is empty");
  }
  return Window(std::move(lo), std::move(hi));
}

Window map_window(const Window& w, const CoordinateChange& c) {
  if (std::holds_alternative<VarScale>(c))
    return scale_window(w, std::get<VarScale>(c).alpha);
  Point a = map_point(w.lo, c), b = map_point(w.hi, c);
  return Window(meet(a, b), join(a, b));
}

std::vector<size_t> check_subset(const std::vector<size_t>& u, size_t n) {
  if (u.empty()) throw model_error("coordinate subset must be nonempty");
  std::vector<size_t> v = u;
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw model_error("duplicate coordinate in subset");
  if (v.back() >= n) throw model_error("coordinate index out of range");
  return v;
}

}  // namespace

LatticeSet apply_change(const LatticeSet& s, const CoordinateChange& c) {
  validate(c, s.dim);
  std::set<Point> pts;
  if (const auto* v = std::get_if<VarScale>(&c)) {
    Int a(v->alpha);
    for (const Point& x : s.points) {
      Point y(s.dim);
      bool exact = true;
      for (size_t i = 0; i < s.dim && exact; ++i) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x[i].get_mpz_t(),
                    a.get_mpz_t());
        if (sgn(r) != 0) exact = false;
        y[i] = q;
      }
      if (exact) pts.insert(std::move(y));
    }
  } else {
    for (const Point& x : s.points) pts.insert(map_point(x, c));
  }
  if (pts.empty()) throw empty_result("coordinate change empties the set");
  return LatticeSet(s.dim, std::move(pts));
}

LatticeFunction apply_change(const LatticeFunction& f,
                             const CoordinateChange& c) {
  validate(c, f.dim);
  Window w = map_window(f.window, c);
  std::map<Point, Rat> vals;
  if (const auto* v = std::get_if<VarScale>(&c)) {
    Int a(v->alpha);
    for (const auto& [x, val] : f.values) {
      Point y(f.dim);
      bool exact = true;
      for (size_t i = 0; i < f.dim && exact; ++i) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x[i].get_mpz_t(),
                    a.get_mpz_t());
        if (sgn(r) != 0) exact = false;
        y[i] = q;
      }
      if (exact) vals[y] = val;
    }
  } else {
    // The inverse image: g(y) = f(x) with y = map(x); all our pointwise
    // maps are involutions up to relabeling, so mapping domain points
    // forward is exact.
    for (const auto& [x, val] : f.values) vals[map_point(x, c)] = val;
  }
  if (vals.empty())
    throw empty_result("coordinate change empties the domain");
  return LatticeFunction(f.dim, std::move(w), std::move(vals));
}

LatticeFunction value_scale(const LatticeFunction& f, const Rat& beta) {
  // beta = 0 keeps the domain (0 * inf = inf convention): the indicator of
  // dom f, not the all-zero function.
  if (sgn(beta) < 0) throw model_error("value scale must be nonnegative");
  std::map<Point, Rat> vals;
  for (const auto& [x, v] : f.values) vals[x] = v * beta;
  return LatticeFunction(f.dim, f.window, std::move(vals));
}

LatticeSet restrict_to(const LatticeSet& s, const std::vector<size_t>& u) {
  std::vector<size_t> v = check_subset(u, s.dim);
  std::set<Point> pts;
  for (const Point& x : s.points) {
    bool zero_off = true;
    for (size_t i = 0; i < s.dim && zero_off; ++i)
      if (std::find(v.begin(), v.end(), i) == v.end() && sgn(x[i]) != 0)
        zero_off = false;
    if (!zero_off) continue;
    Point y;
    for (size_t i : v) y.push_back(x[i]);
    pts.insert(std::move(y));
  }
  if (pts.empty()) throw empty_result("restriction empties the set");
  return LatticeSet(v.size(), std::move(pts));
}

LatticeFunction restrict_to(const LatticeFunction& f,
                            const std::vector<size_t>& u) {
  std::vector<size_t> v = check_subset(u, f.dim);
  std::map<Point, Rat> vals;
  for (const auto& [x, val] : f.values) {
    bool zero_off = true;
    for (size_t i = 0; i < f.dim && zero_off; ++i)
      if (std::find(v.begin(), v.end(), i) == v.end() && sgn(x[i]) != 0)
        zero_off = false;
    if (!zero_off) continue;
    Point y;
    for (size_t i : v) y.push_back(x[i]);
    vals[y] = val;
  }
  if (vals.empty()) throw empty_result("restriction empties the domain");
  Point lo, hi;
  for (size_t i : v) {
    lo.push_back(f.window.lo[i]);
    hi.push_back(f.window.hi[i]);
  }
  return LatticeFunction(v.size(), Window(lo, hi), std::move(vals));
}

LatticeFunction restrict_box(const LatticeFunction& f, const Window& box) {
  if (box.dim() != f.dim) throw model_error("box dim mismatch");
  std::map<Point, Rat> vals;
  for (const auto& [x, val] : f.values)
    if (box.contains(x)) vals[x] = val;
  if (vals.empty()) throw empty_result("box restriction empties the domain");
  // The certification window is kept: restriction narrows the domain, not the
  // region on which class membership is judged.
  return LatticeFunction(f.dim, f.window, std::move(vals));
}

LatticeSet intersect_box(const LatticeSet& s, const Window& box) {
  if (box.dim() != s.dim) throw model_error("box dim mismatch");
  std::set<Point> pts;
  for (const Point& x : s.points)
    if (box.contains(x)) pts.insert(x);
  if (pts.empty()) throw empty_result("box intersection is empty");
  return LatticeSet(s.dim, std::move(pts));
}

LatticeSet project_to(const LatticeSet& s, const std::vector<size_t>& u) {
  std::vector<size_t> v = check_subset(u, s.dim);
  std::set<Point> pts;
  for (const Point& x : s.points) {
    Point y;
    for (size_t i : v) y.push_back(x[i]);
    pts.insert(std::move(y));
  }
  return LatticeSet(v.size(), std::move(pts));
}

LatticeFunction project_to(const LatticeFunction& f,
                           const std::vector<size_t>& u) {
  std::vector<size_t> v = check_subset(u, f.dim);
  std::map<Point, Rat> vals;
  for (const auto& [x, val] : f.values) {
    Point y;
    for (size_t i : v) y.push_back(x[i]);
    auto it = vals.find(y);
    if (it == vals.end() || val < it->second) vals[y] = val;
  }
  Point lo, hi;
  for (size_t i : v) {
    lo.push_back(f.window.lo[i]);
    hi.push_back(f.window.hi[i]);
  }
  return LatticeFunction(v.size(), Window(lo, hi), std::move(vals));
}

LatticeFunction add(const LatticeFunction& f, const LatticeFunction& g) {
  if (f.dim != g.dim) throw model_error("dim mismatch in sum");
  Point lo = join(f.window.lo, g.window.lo);
  Point hi = meet(f.window.hi, g.window.hi);
  if (!leq(lo, hi)) throw empty_result("windows of summands are disjoint");
  std::map<Point, Rat> vals;
  for (const auto& [x, val] : f.values) {
    ExtVal gv = g.eval(x);
    if (gv.is_finite()) vals[x] = val + gv.finite();
  }
  if (vals.empty()) throw empty_result("sum has empty domain");
  return LatticeFunction(f.dim, Window(lo, hi), std::move(vals));
}

LatticeSet intersect(const LatticeSet& a, const LatticeSet& b) {
  if (a.dim != b.dim) throw model_error("dim mismatch in intersection");
  std::set<Point> pts;
  for (const Point& x : a.points)
    if (b.contains(x)) pts.insert(x);
  if (pts.empty()) throw empty_result("intersection is empty");
  return LatticeSet(a.dim, std::move(pts));
}

LatticeFunction convolve(const LatticeFunction& f, const LatticeFunction& g) {
  if (f.dim != g.dim) throw model_error("dim mismatch in convolution");
  std::map<Point, Rat> vals;
  for (const auto& [y, fv] : f.values)
    for (const auto& [z, gv] : g.values) {
      Point x = add(y, z);
      Rat v = fv + gv;
      auto it = vals.find(x);
      if (it == vals.end() || v < it->second) vals[x] = v;
    }
  Window w(add(f.window.lo, g.window.lo), add(f.window.hi, g.window.hi));
  return LatticeFunction(f.dim, std::move(w), std::move(vals));
}

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b) {
  if (a.dim != b.dim) throw model_error("dim mismatch in Minkowski sum");
  std::set<Point> pts;
  for (const Point& x : a.points)
    for (const Point& y : b.points) pts.insert(add(x, y));
  return LatticeSet(a.dim, std::move(pts));
}

LatticeSet lift_mnat_to_m(const LatticeSet& s) {
  std::set<Point> pts;
  for (const Point& x : s.points) {
    Point y = x;
    y.insert(y.begin(), Int(-comp_sum(x)));
    pts.insert(std::move(y));
  }
  return LatticeSet(s.dim + 1, std::move(pts));
}

LatticeFunction lift_mnat_to_m(const LatticeFunction& f) {
  std::map<Point, Rat> vals;
  Int lo0, hi0;
  bool first = true;
  for (const auto& [x, v] : f.values) {
    Point y = x;
    Int s = -comp_sum(x);
    y.insert(y.begin(), s);
    vals[y] = v;
    if (first) {
      lo0 = hi0 = s;
      first = false;
    } else {
      lo0 = std::min(lo0, s);
      hi0 = std::max(hi0, s);
    }
  }
  Point lo = f.window.lo, hi = f.window.hi;
  lo.insert(lo.begin(), lo0);
  hi.insert(hi.begin(), hi0);
  return LatticeFunction(f.dim + 1, Window(lo, hi), std::move(vals));
}

LatticeFunction lift_jump_mnat_to_m(const LatticeFunction& f) {
  std::map<Point, Rat> vals;
  for (const auto& [x, v] : f.values) {
    Point y = x;
    Int parity;
    mpz_mod_ui(parity.get_mpz_t(), comp_sum(x).get_mpz_t(), 2);
    y.insert(y.begin(), parity);
    vals[y] = v;
  }
  Point lo = f.window.lo, hi = f.window.hi;
  lo.insert(lo.begin(), Int(0));
  hi.insert(hi.begin(), Int(1));
  return LatticeFunction(f.dim + 1, Window(lo, hi), std::move(vals));
}

LatticeFunction lift_lnat_to_l(const LatticeFunction& f) {
  Int span = 0;
  for (size_t i = 0; i < f.dim; ++i)
    span = std::max(span, Int(f.window.hi[i] - f.window.lo[i]));
  std::map<Point, Rat> vals;
  for (const auto& [x, v] : f.values)
    for (Int x0 = 0; x0 <= span; x0 = x0 + 1) {
      Point y = x;
      for (size_t i = 0; i < f.dim; ++i) y[i] += x0;
      y.insert(y.begin(), x0);
      vals[y] = v;
    }
  Point lo = f.window.lo, hi = f.window.hi;
  for (size_t i = 0; i < f.dim; ++i) hi[i] += span;
  lo.insert(lo.begin(), Int(0));
  hi.insert(hi.begin(), span);
  return LatticeFunction(f.dim + 1, Window(lo, hi), std::move(vals));
}

LatticeSet mm_to_lnat(const LatticeSet& s) {
  std::set<Point> pts;
  for (const Point& x : s.points) pts.insert(bidiagonal_inverse(x));
  return LatticeSet(s.dim, std::move(pts));
}
LatticeSet lnat_to_mm(const LatticeSet& s) {
  std::set<Point> pts;
  for (const Point& x : s.points) pts.insert(bidiagonal_apply(x));
  return LatticeSet(s.dim, std::move(pts));
}
LatticeFunction mm_to_lnat(const LatticeFunction& f) {
  std::map<Point, Rat> vals;
  for (const auto& [x, v] : f.values) vals[bidiagonal_inverse(x)] = v;
  std::set<Point> keys;
  for (const auto& [p, v] : vals) keys.insert(p);
  return LatticeFunction(f.dim, bounding_box(keys, f.dim), std::move(vals));
}
LatticeFunction lnat_to_mm(const LatticeFunction& g) {
  std::map<Point, Rat> vals;
  for (const auto& [p, v] : g.values) vals[bidiagonal_apply(p)] = v;
  std::set<Point> keys;
  for (const auto& [x, v] : vals) keys.insert(x);
  return LatticeFunction(g.dim, bounding_box(keys, g.dim), std::move(vals));
}

}  // namespace dca
