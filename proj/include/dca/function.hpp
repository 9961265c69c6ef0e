#pragma once
// The function model: finite integer boxes (windows), explicit finite lattice
// sets, and lattice functions with finite effective domain.  A function is a
// window plus a map from points to exact rationals; every point outside the
// map evaluates to +infinity.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dca/lattice.hpp"
#include "dca/value.hpp"

namespace dca {

struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite box [lo, hi] in Z^n.  Degenerate (lo == hi) is fine; lo > hi in
// some coordinate is rejected.
struct Window {
  Point lo, hi;

  Window() = default;
  Window(Point l, Point h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.size() != hi.size()) throw model_error("window dim mismatch");
    if (!leq(lo, hi)) throw model_error("window lo exceeds hi");
  }
  static Window cube(size_t n, long lo, long hi) {
    return Window(Point(n, Int(lo)), Point(n, Int(hi)));
  }

  size_t dim() const { return lo.size(); }
  bool contains(const Point& x) const { return leq(lo, x) && leq(x, hi); }
  bool contains(const Window& w) const {
    return leq(lo, w.lo) && leq(w.hi, hi);
  }
  Int grid_size() const {
    Int s = 1;
    for (size_t i = 0; i < dim(); ++i) s *= hi[i] - lo[i] + 1;
    return s;
  }
  Window inflate(long by) const {
    Window w = *this;
    for (size_t i = 0; i < dim(); ++i) {
      w.lo[i] -= by;
      w.hi[i] += by;
    }
    return w;
  }
  // Visits every grid point in lexicographic order.
  template <typename F>
  void for_each(F&& f) const {
    Point x = lo;
    while (true) {
      f(const_cast<const Point&>(x));
      size_t i = dim();
      while (i > 0) {
        --i;
        if (x[i] < hi[i]) {
          x[i] += 1;
          for (size_t j = i + 1; j < dim(); ++j) x[j] = lo[j];
          break;
        }
        if (i == 0) return;
      }
      if (dim() == 0) return;
    }
  }
  bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi; }
};

inline Window bounding_box(const std::set<Point>& pts, size_t dim) {
  if (pts.empty()) throw model_error("bounding box of empty set");
  Point lo(dim), hi(dim);
  bool first = true;
  for (const Point& p : pts) {
    if (first) {
      lo = hi = p;
      first = false;
    } else {
      lo = meet(lo, p);
      hi = join(hi, p);
    }
  }
  return Window(lo, hi);
}

// An explicit finite subset of Z^n.
struct LatticeSet {
  size_t dim = 0;
  std::set<Point> points;

  LatticeSet() = default;
  LatticeSet(size_t d, std::set<Point> pts) : dim(d), points(std::move(pts)) {
    for (const Point& p : points)
      if (p.size() != dim) throw model_error("set point dim mismatch");
  }
  static LatticeSet of(size_t d, std::initializer_list<std::vector<long>> xs) {
    std::set<Point> pts;
    for (const auto& v : xs) {
      Point p(v.size());
      for (size_t i = 0; i < v.size(); ++i) p[i] = v[i];
      pts.insert(std::move(p));
    }
    return LatticeSet(d, std::move(pts));
  }

  bool empty() const { return points.empty(); }
  size_t size() const { return points.size(); }
  bool contains(const Point& x) const { return points.count(x) > 0; }
  Window bbox() const { return bounding_box(points, dim); }
  bool operator==(const LatticeSet& o) const {
    return dim == o.dim && points == o.points;
  }
};

// A function Z^n -> Q (+inf), finite on its explicit domain, +inf elsewhere.
// The window is part of the object: window-certified checks (L-convexity)
// and serialization quantify over it, and every domain point must lie in it.
struct LatticeFunction {
  size_t dim = 0;
  Window window;
  std::map<Point, Rat> values;

  LatticeFunction() = default;
  LatticeFunction(size_t d, Window w, std::map<Point, Rat> v)
      : dim(d), window(std::move(w)), values(std::move(v)) {
    if (window.dim() != dim) throw model_error("window dim mismatch");
    for (const auto& [x, val] : values) {
      if (x.size() != dim) throw model_error("value point dim mismatch");
      if (!window.contains(x))
        throw model_error("domain point outside window");
    }
  }

  ExtVal eval(const Point& x) const {
    auto it = values.find(x);
    if (it == values.end()) return ExtVal::infinity();
    return ExtVal(it->second);
  }
  bool dom_empty() const { return values.empty(); }
  size_t dom_size() const { return values.size(); }

  LatticeSet support_set() const {  // the effective domain as a set
    std::set<Point> pts;
    for (const auto& [x, v] : values) pts.insert(x);
    return LatticeSet(dim, std::move(pts));
  }
  bool integer_valued() const {
    for (const auto& [x, v] : values)
      if (v.get_den() != 1) return false;
    return true;
  }
  Rat min_value() const {
    if (values.empty()) throw model_error("min of empty function");
    Rat m = values.begin()->second;
    for (const auto& [x, v] : values) m = std::min(m, v);
    return m;
  }
  Rat max_value() const {
    if (values.empty()) throw model_error("max of empty function");
    Rat m = values.begin()->second;
    for (const auto& [x, v] : values) m = std::max(m, v);
    return m;
  }
  std::vector<Point> dom_points() const {
    std::vector<Point> r;
    r.reserve(values.size());
    for (const auto& [x, v] : values) r.push_back(x);
    return r;
  }

  bool operator==(const LatticeFunction& o) const {
    return dim == o.dim && window == o.window && values == o.values;
  }
};

// Indicator of a set: 0 on S, +inf elsewhere.  The window defaults to the
// bounding box of S but may be widened explicitly.
inline LatticeFunction indicator(const LatticeSet& s) {
  std::map<Point, Rat> v;
  for (const Point& p : s.points) v[p] = 0;
  return LatticeFunction(s.dim, s.bbox(), std::move(v));
}
inline LatticeFunction indicator(const LatticeSet& s, Window w) {
  std::map<Point, Rat> v;
  for (const Point& p : s.points) v[p] = 0;
  return LatticeFunction(s.dim, std::move(w), std::move(v));
}

inline Point make_point(std::initializer_list<long> xs) {
  Point p;
  for (long v : xs) p.emplace_back(v);
  return p;
}

}  // namespace dca
