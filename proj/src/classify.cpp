#include "dca/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dca/extension.hpp"

namespace dca {

namespace {

const std::map<SetClass, std::string> kSetNames = {
    {SetClass::IntegerBox, "integer-box"},
    {SetClass::IntegrallyConvex, "integrally-convex"},
    {SetClass::LNat, "l-natural"},
    {SetClass::L, "l-convex"},
    {SetClass::MNat, "m-natural"},
    {SetClass::M, "m-convex"},
    {SetClass::Multimodular, "multimodular"},
    {SetClass::Dmc, "discrete-midpoint-convex"},
    {SetClass::JumpSystem, "jump-system"},
    {SetClass::SeJump, "simultaneous-exchange-jump"},
    {SetClass::CpJump, "constant-parity-jump"},
};
const std::map<FnClass, std::string> kFnNames = {
    {FnClass::Separable, "separable-convex"},
    {FnClass::IntegrallyConvex, "integrally-convex"},
    {FnClass::LNat, "l-natural"},
    {FnClass::L, "l-convex"},
    {FnClass::MNat, "m-natural"},
    {FnClass::M, "m-convex"},
    {FnClass::Multimodular, "multimodular"},
    {FnClass::GloballyDmc, "globally-dmc"},
    {FnClass::LocallyDmc, "locally-dmc"},
    {FnClass::JumpMNat, "jump-m-natural"},
    {FnClass::JumpM, "jump-m"},
    {FnClass::Submodular, "submodular"},
    {FnClass::Supermodular, "supermodular"},
};

std::string pts_str(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (const Point& p : pts) {
    os << " (";
    for (size_t i = 0; i < p.size(); ++i)
      os << (i ? "," : "") << p[i].get_str();
    os << ")";
  }
  return os.str();
}

// ---------- set checks ----------

Verdict set_integer_box(const LatticeSet& s) {
  Window b = s.bbox();
  Verdict v = Verdict::yes();
  b.for_each([&](const Point& x) {
    if (v.holds && !s.contains(x))
      v = Verdict::no("bounding-box point missing from set", {x});
  });
  return v;
}

Verdict set_lnat(const LatticeSet& s) {
  for (const Point& x : s.points)
    for (const Point& y : s.points) {
      if (!(x < y)) continue;
      if (!s.contains(mid_up(x, y)))
        return Verdict::no("rounded-up midpoint missing", {x, y, mid_up(x, y)});
      if (!s.contains(mid_down(x, y)))
        return Verdict::no("rounded-down midpoint missing",
                           {x, y, mid_down(x, y)});
    }
  return Verdict::yes();
}

Verdict set_l(const LatticeSet& s, const Window& w) {
  Verdict mid = set_lnat(s);
  if (!mid.holds) return mid;
  Point one = ones(s.dim);
  for (const Point& x : s.points) {
    Point up = add(x, one), dn = sub(x, one);
    if (w.contains(up) && !s.contains(up))
      return Verdict::no("all-ones shift leaves set inside window", {x, up});
    if (w.contains(dn) && !s.contains(dn))
      return Verdict::no("all-ones shift leaves set inside window", {x, dn});
  }
  return Verdict::yes();
}

Verdict set_ic(const LatticeSet& s) {
  std::vector<Point> pts(s.points.begin(), s.points.end());
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (linf_norm(sub(pts[a], pts[b])) <= 1) continue;
      RatPoint z = midpoint(pts[a], pts[b]);
      // z is in conv(S) by construction; it must already lie in the hull of
      // the near points S n N(z).
      std::vector<Point> near;
      for (const Point& w : integral_neighborhood(z))
        if (s.contains(w)) near.push_back(w);
      if (!hull_membership(near, z))
        return Verdict::no(
            "midpoint escapes the hull of its integral neighbourhood",
            {pts[a], pts[b]});
    }
  return Verdict::yes();
}

Verdict set_mnat(const LatticeSet& s) {
  for (const Point& x : s.points)
    for (const Point& y : s.points) {
      Point d = sub(x, y);
      for (size_t i : supp_pos(d)) {
        bool ok = s.contains(sub(x, unit(s.dim, i))) &&
                  s.contains(add(y, unit(s.dim, i)));
        for (size_t j : supp_neg(d)) {
          if (ok) break;
          Point e = sub(unit(s.dim, i), unit(s.dim, j));
          ok = s.contains(sub(x, e)) && s.contains(add(y, e));
        }
        if (!ok)
          return Verdict::no("exchange axiom fails", {x, y},
                             {static_cast<long>(i)});
      }
    }
  return Verdict::yes();
}

Verdict set_m(const LatticeSet& s) {
  const Point& first = *s.points.begin();
  Int target = comp_sum(first);
  for (const Point& x : s.points)
    if (comp_sum(x) != target)
      return Verdict::no("component sums differ", {first, x});
  for (const Point& x : s.points)
    for (const Point& y : s.points) {
      Point d = sub(x, y);
      for (size_t i : supp_pos(d)) {
        bool ok = false;
        for (size_t j : supp_neg(d)) {
          Point e = sub(unit(s.dim, i), unit(s.dim, j));
          if (s.contains(sub(x, e)) && s.contains(add(y, e))) {
            ok = true;
            break;
          }
        }
        if (!ok)
          return Verdict::no("exchange axiom fails", {x, y},
                             {static_cast<long>(i)});
      }
    }
  return Verdict::yes();
}

LatticeSet prefix_sum_image(const LatticeSet& s) {
  std::set<Point> pts;
  for (const Point& x : s.points) pts.insert(bidiagonal_inverse(x));
  return LatticeSet(s.dim, std::move(pts));
}

Verdict set_multimodular(const LatticeSet& s) {
  Verdict v = set_lnat(prefix_sum_image(s));
  if (v.holds) return v;
  // Map the witness back to the original coordinates.
  for (Point& p : v.points) p = bidiagonal_apply(p);
  v.reason = "prefix-sum image is not l-natural: " + v.reason;
  return v;
}

Verdict set_dmc(const LatticeSet& s) {
  for (const Point& x : s.points)
    for (const Point& y : s.points) {
      if (!(x < y) || linf_norm(sub(x, y)) < 2) continue;
      if (!s.contains(mid_up(x, y)) || !s.contains(mid_down(x, y)))
        return Verdict::no("distant midpoint rounding missing", {x, y});
    }
  return Verdict::yes();
}

// All (x,y)-increments: unit steps from x toward y.
std::vector<Point> increments(const Point& x, const Point& y) {
  std::vector<Point> r;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) r.push_back(unit(x.size(), i, +1));
    if (x[i] > y[i]) r.push_back(unit(x.size(), i, -1));
  }
  return r;
}

Verdict set_jump(const LatticeSet& s) {
  for (const Point& x : s.points)
    for (const Point& y : s.points)
      for (const Point& st : increments(x, y)) {
        Point xs = add(x, st);
        if (s.contains(xs)) continue;
        bool ok = false;
        for (const Point& t : increments(xs, y))
          if (s.contains(add(xs, t))) {
            ok = true;
            break;
          }
        if (!ok) return Verdict::no("two-step axiom fails", {x, y, xs});
      }
  return Verdict::yes();
}

Verdict set_se_jump(const LatticeSet& s) {
  for (const Point& x : s.points)
    for (const Point& y : s.points)
      for (const Point& st : increments(x, y)) {
        Point xs = add(x, st), ys = sub(y, st);
        if (s.contains(xs) && s.contains(ys)) continue;
        bool ok = false;
        for (const Point& t : increments(xs, y))
          if (s.contains(add(xs, t)) && s.contains(sub(ys, t))) {
            ok = true;
            break;
          }
        if (!ok)
          return Verdict::no("simultaneous exchange fails", {x, y, xs});
      }
  return Verdict::yes();
}

Verdict set_cp_jump(const LatticeSet& s) {
  for (const Point& x : s.points)
    for (const Point& y : s.points)
      for (const Point& st : increments(x, y)) {
        Point xs = add(x, st), ys = sub(y, st);
        bool ok = false;
        for (const Point& t : increments(xs, y))
          if (s.contains(add(xs, t)) && s.contains(sub(ys, t))) {
            ok = true;
            break;
          }
        if (!ok)
          return Verdict::no("constant-parity exchange fails", {x, y, xs});
      }
  return Verdict::yes();
}

// ---------- function checks ----------

Verdict fn_separable(const LatticeFunction& f) {
  LatticeSet dom = f.support_set();
  Verdict box = set_integer_box(dom);
  if (!box.holds) {
    box.reason = "effective domain is not a box: " + box.reason;
    return box;
  }
  Window b = dom.bbox();
  const Point& a = b.lo;
  Rat fa = f.eval(a).finite();
  // phi_i(t) = f(a + (t - a_i) e_i); separability means
  // f(x) = sum_i phi_i(x_i) - (n-1) f(a).
  Verdict v = Verdict::yes();
  for (const auto& [x, val] : f.values) {
    Rat expect = -Rat(f.dim - 1) * fa;
    for (size_t i = 0; i < f.dim; ++i) {
      Point slice = a;
      slice[i] = x[i];
      expect += f.eval(slice).finite();
    }
    if (val != expect)
      return Verdict::no("value is not a sum of coordinate slices", {x});
  }
  // Convexity of each slice.
  for (size_t i = 0; i < f.dim; ++i)
    for (Int t = b.lo[i] + 1; t < b.hi[i]; t = t + 1) {
      Point lo = a, mi = a, hi = a;
      lo[i] = t - 1;
      mi[i] = t;
      hi[i] = t + 1;
      if (f.eval(lo).finite() + f.eval(hi).finite() <
          2 * f.eval(mi).finite())
        return Verdict::no("coordinate slice is not convex", {lo, mi, hi},
                           {static_cast<long>(i)});
    }
  return Verdict::yes();
}

Verdict fn_lnat_pairs(const LatticeFunction& f, int max_dist) {
  // max_dist < 0: all pairs; otherwise only linf distance <= max_dist.
  std::vector<Point> pts = f.dom_points();
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (max_dist >= 0 && linf_norm(sub(pts[a], pts[b])) > max_dist)
        continue;
      ExtVal lhs = f.eval(pts[a]) + f.eval(pts[b]);
      ExtVal rhs = f.eval(mid_up(pts[a], pts[b])) +
                   f.eval(mid_down(pts[a], pts[b]));
      if (!(lhs >= rhs))
        return Verdict::no("discrete midpoint inequality fails",
                           {pts[a], pts[b]});
    }
  return Verdict::yes();
}

Verdict fn_submodular(const LatticeFunction& f, bool super) {
  std::vector<Point> pts = f.dom_points();
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      ExtVal lhs = f.eval(pts[a]) + f.eval(pts[b]);
      ExtVal rhs = f.eval(join(pts[a], pts[b])) + f.eval(meet(pts[a], pts[b]));
      bool ok = super ? lhs <= rhs : lhs >= rhs;
      if (!ok)
        return Verdict::no(super ? "supermodular inequality fails"
                                 : "submodular inequality fails",
                           {pts[a], pts[b]});
    }
  return Verdict::yes();
}

Verdict fn_l(const LatticeFunction& f) {
  Verdict submod = fn_submodular(f, false);
  if (!submod.holds) return submod;
  Point one = ones(f.dim);
  std::optional<Rat> slope;
  for (const auto& [x, val] : f.values) {
    Point up = add(x, one);
    if (f.window.contains(up)) {
      ExtVal fu = f.eval(up);
      if (fu.is_inf())
        return Verdict::no("all-ones shift leaves domain inside window",
                           {x, up});
      Rat r = fu.finite() - val;
      if (slope && *slope != r)
        return Verdict::no("all-ones shift increment is not constant",
                           {x, up});
      slope = r;
    }
    Point dn = sub(x, one);
    if (f.window.contains(dn) && f.eval(dn).is_inf())
      return Verdict::no("all-ones shift leaves domain inside window",
                         {x, dn});
  }
  return Verdict::yes();
}

Verdict fn_ic(const LatticeFunction& f) {
  Verdict dom = set_ic(f.support_set());
  if (!dom.holds) {
    dom.reason = "effective domain is not integrally convex: " + dom.reason;
    return dom;
  }
  std::vector<Point> pts = f.dom_points();
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (linf_norm(sub(pts[a], pts[b])) != 2) continue;
      ExtVal ext = local_extension_value(f, midpoint(pts[a], pts[b]));
      ExtVal avg = (f.eval(pts[a]) + f.eval(pts[b])) * Rat(1, 2);
      if (!(ext <= avg))
        return Verdict::no("local extension exceeds the midpoint average",
                           {pts[a], pts[b]});
    }
  return Verdict::yes();
}

Verdict fn_mnat(const LatticeFunction& f) {
  std::vector<Point> pts = f.dom_points();
  for (const Point& x : pts)
    for (const Point& y : pts) {
      Point d = sub(x, y);
      ExtVal lhs = f.eval(x) + f.eval(y);
      for (size_t i : supp_pos(d)) {
        ExtVal best = f.eval(sub(x, unit(f.dim, i))) +
                      f.eval(add(y, unit(f.dim, i)));
        for (size_t j : supp_neg(d)) {
          Point e = sub(unit(f.dim, i), unit(f.dim, j));
          best = min(best, f.eval(sub(x, e)) + f.eval(add(y, e)));
        }
        if (!(lhs >= best))
          return Verdict::no("exchange inequality fails", {x, y},
                             {static_cast<long>(i)});
      }
    }
  return Verdict::yes();
}

Verdict fn_m(const LatticeFunction& f) {
  std::vector<Point> pts = f.dom_points();
  Int target = comp_sum(pts.front());
  for (const Point& x : pts)
    if (comp_sum(x) != target)
      return Verdict::no("component sums differ on the domain",
                         {pts.front(), x});
  for (const Point& x : pts)
    for (const Point& y : pts) {
      Point d = sub(x, y);
      ExtVal lhs = f.eval(x) + f.eval(y);
      for (size_t i : supp_pos(d)) {
        ExtVal best = ExtVal::infinity();
        for (size_t j : supp_neg(d)) {
          Point e = sub(unit(f.dim, i), unit(f.dim, j));
          best = min(best, f.eval(sub(x, e)) + f.eval(add(y, e)));
        }
        if (!(lhs >= best))
          return Verdict::no("exchange inequality fails", {x, y},
                             {static_cast<long>(i)});
      }
    }
  return Verdict::yes();
}

LatticeFunction prefix_sum_pullback(const LatticeFunction& f) {
  std::map<Point, Rat> vals;
  for (const auto& [x, v] : f.values) vals[bidiagonal_inverse(x)] = v;
  std::set<Point> keys;
  for (const auto& [p, v] : vals) keys.insert(p);
  return LatticeFunction(f.dim, bounding_box(keys, f.dim), std::move(vals));
}

Verdict fn_multimodular(const LatticeFunction& f) {
  Verdict v = fn_lnat_pairs(prefix_sum_pullback(f), -1);
  if (v.holds) return v;
  for (Point& p : v.points) p = bidiagonal_apply(p);
  v.reason = "prefix-sum pullback is not l-natural: " + v.reason;
  return v;
}

Verdict fn_dmc(const LatticeFunction& f, bool local) {
  std::vector<Point> pts = f.dom_points();
  if (local) {
    Verdict dom = set_dmc(f.support_set());
    if (!dom.holds) {
      dom.reason =
          "effective domain is not a discrete midpoint convex set: " +
          dom.reason;
      return dom;
    }
  }
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      Int d = linf_norm(sub(pts[a], pts[b]));
      if (local ? d != 2 : d < 2) continue;
      ExtVal lhs = f.eval(pts[a]) + f.eval(pts[b]);
      ExtVal rhs = f.eval(mid_up(pts[a], pts[b])) +
                   f.eval(mid_down(pts[a], pts[b]));
      if (!(lhs >= rhs))
        return Verdict::no("distant midpoint inequality fails",
                           {pts[a], pts[b]});
    }
  return Verdict::yes();
}

Verdict fn_jump(const LatticeFunction& f, bool natural) {
  std::vector<Point> pts = f.dom_points();
  for (const Point& x : pts)
    for (const Point& y : pts) {
      ExtVal lhs = f.eval(x) + f.eval(y);
      for (const Point& st : increments(x, y)) {
        Point xs = add(x, st), ys = sub(y, st);
        ExtVal best = natural ? f.eval(xs) + f.eval(ys) : ExtVal::infinity();
        for (const Point& t : increments(xs, y))
          best = min(best, f.eval(add(xs, t)) + f.eval(sub(ys, t)));
        if (!(lhs >= best))
          return Verdict::no("jump exchange inequality fails", {x, y, xs});
      }
    }
  return Verdict::yes();
}

}  // namespace

std::string set_class_name(SetClass c) { return kSetNames.at(c); }
std::string fn_class_name(FnClass c) { return kFnNames.at(c); }

std::optional<SetClass> parse_set_class(const std::string& name) {
  for (const auto& [c, n] : kSetNames)
    if (n == name) return c;
  return std::nullopt;
}
std::optional<FnClass> parse_fn_class(const std::string& name) {
  for (const auto& [c, n] : kFnNames)
    if (n == name) return c;
  return std::nullopt;
}
const std::vector<SetClass>& all_set_classes() {
  static const std::vector<SetClass> v = [] {
    std::vector<SetClass> r;
    for (const auto& [c, n] : kSetNames) r.push_back(c);
    return r;
  }();
  return v;
}
const std::vector<FnClass>& all_fn_classes() {
  static const std::vector<FnClass> v = [] {
    std::vector<FnClass> r;
    for (const auto& [c, n] : kFnNames) r.push_back(c);
    return r;
  }();
  return v;
}

std::string Verdict::describe() const {
  if (holds) return "holds";
  std::ostringstream os;
  os << reason << ";" << pts_str(points);
  if (!indices.empty()) {
    os << " [i=";
    for (size_t k = 0; k < indices.size(); ++k)
      os << (k ? "," : "") << indices[k];
    os << "]";
  }
  return os.str();
}

Verdict check_set(const LatticeSet& s, SetClass c) {
  if (s.empty()) return Verdict::no("empty set");
  return check_set(s, c, s.bbox());
}

Verdict check_set(const LatticeSet& s, SetClass c, const Window& w) {
  if (s.empty()) return Verdict::no("empty set");
  switch (c) {
    case SetClass::IntegerBox: return set_integer_box(s);
    case SetClass::IntegrallyConvex: return set_ic(s);
    case SetClass::LNat: return set_lnat(s);
    case SetClass::L: return set_l(s, w);
    case SetClass::MNat: return set_mnat(s);
    case SetClass::M: return set_m(s);
    case SetClass::Multimodular: return set_multimodular(s);
    case SetClass::Dmc: return set_dmc(s);
    case SetClass::JumpSystem: return set_jump(s);
    case SetClass::SeJump: return set_se_jump(s);
    case SetClass::CpJump: return set_cp_jump(s);
  }
  throw model_error("unknown set class");
}

Verdict check_fn(const LatticeFunction& f, FnClass c) {
  if (f.dom_empty()) return Verdict::no("empty effective domain");
  switch (c) {
    case FnClass::Separable: return fn_separable(f);
    case FnClass::IntegrallyConvex: return fn_ic(f);
    case FnClass::LNat: return fn_lnat_pairs(f, -1);
    case FnClass::L: return fn_l(f);
    case FnClass::MNat: return fn_mnat(f);
    case FnClass::M: return fn_m(f);
    case FnClass::Multimodular: return fn_multimodular(f);
    case FnClass::GloballyDmc: return fn_dmc(f, false);
    case FnClass::LocallyDmc: return fn_dmc(f, true);
    case FnClass::JumpMNat: return fn_jump(f, true);
    case FnClass::JumpM: return fn_jump(f, false);
    case FnClass::Submodular: return fn_submodular(f, false);
    case FnClass::Supermodular: return fn_submodular(f, true);
  }
  throw model_error("unknown function class");
}

LConvexForm l_convex_form(const LatticeFunction& f) {
  LConvexForm form;
  Point one = ones(f.dim);
  for (const auto& [x, val] : f.values) {
    Point up = add(x, one);
    ExtVal fu = f.eval(up);
    if (f.window.contains(up) && fu.is_finite()) {
      form.slope = fu.finite() - val;
      form.determined = true;
      return form;
    }
  }
  return form;
}

LnatProfile lnat_profile(const LatticeFunction& f) {
  LnatProfile p;
  p.midpoint = check_fn(f, FnClass::LNat);

  // (b) domain closure plus near midpoint inequality.
  Verdict dom = check_set(f.support_set(), SetClass::LNat);
  if (!dom.holds) {
    dom.reason = "effective domain is not an l-natural set: " + dom.reason;
    p.local = dom;
  } else {
    p.local = [&] {
      std::vector<Point> pts = f.dom_points();
      for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b) {
          if (linf_norm(sub(pts[a], pts[b])) > 2) continue;
          ExtVal lhs = f.eval(pts[a]) + f.eval(pts[b]);
          ExtVal rhs = f.eval(mid_up(pts[a], pts[b])) +
                       f.eval(mid_down(pts[a], pts[b]));
          if (!(lhs >= rhs))
            return Verdict::no("near midpoint inequality fails",
                               {pts[a], pts[b]});
        }
      return Verdict::yes();
    }();
  }

  // (c) integrally convex + submodular.
  Verdict ic = check_fn(f, FnClass::IntegrallyConvex);
  Verdict sm = check_fn(f, FnClass::Submodular);
  p.ic_submodular = ic.holds ? sm : ic;

  // (d) translation submodularity: for all x, y and mu >= 0,
  // f(x)+f(y) >= f((x - mu 1) v y) + f(x ^ (y + mu 1)).
  p.translation = [&] {
    std::vector<Point> pts = f.dom_points();
    for (const Point& x : pts)
      for (const Point& y : pts) {
        Int cap = 0;  // beyond max(x - y)^+ the inequality stabilizes
        for (size_t i = 0; i < f.dim; ++i) cap = std::max(cap, Int(x[i] - y[i]));
        for (Int mu = 0; mu <= cap; mu = mu + 1) {
          Point xs = x, yt = y;
          for (size_t i = 0; i < f.dim; ++i) {
            xs[i] = std::max(Int(x[i] - mu), y[i]);
            yt[i] = std::min(x[i], Int(y[i] + mu));
          }
          if (!(f.eval(x) + f.eval(y) >= f.eval(xs) + f.eval(yt)))
            return Verdict::no("translation submodularity fails", {x, y, xs, yt});
        }
      }
    return Verdict::yes();
  }();

  // (e) exchange at the full argmax set of x - y.
  p.argmax = [&] {
    std::vector<Point> pts = f.dom_points();
    for (const Point& x : pts)
      for (const Point& y : pts) {
        Point d = sub(x, y);
        if (supp_pos(d).empty()) continue;
        Int mx = d[0];
        for (size_t i = 1; i < f.dim; ++i) mx = std::max(mx, d[i]);
        Point xa = x, ya = y;
        for (size_t i = 0; i < f.dim; ++i)
          if (d[i] == mx) {
            xa[i] -= 1;
            ya[i] += 1;
          }
        if (!(f.eval(x) + f.eval(y) >= f.eval(xa) + f.eval(ya)))
          return Verdict::no("argmax exchange inequality fails", {x, y, xa, ya});
      }
    return Verdict::yes();
  }();

  // (f) submodularity of the lift g(x0, x) = f(x - x0 1), certified over
  // x0 in [0, K] with K the largest coordinate span of the domain.
  p.lifted = [&] {
    Window b = f.support_set().bbox();
    Int span = 0;
    for (size_t i = 0; i < f.dim; ++i) span = std::max(span, Int(b.hi[i] - b.lo[i]));
    struct Lifted {
      Int x0;
      Point x;  // lifted coordinates; base point is x - x0 1
    };
    std::vector<Lifted> pts;
    for (const auto& [z, v] : f.values)
      for (Int x0 = 0; x0 <= span; x0 = x0 + 1) {
        Point x = z;
        for (size_t i = 0; i < f.dim; ++i) x[i] += x0;
        pts.push_back({x0, x});
      }
    auto geval = [&](const Int& x0, const Point& x) {
      Point z = x;
      for (size_t i = 0; i < f.dim; ++i) z[i] -= x0;
      return f.eval(z);
    };
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b2 = a + 1; b2 < pts.size(); ++b2) {
        const Lifted &u = pts[a], &v = pts[b2];
        Int j0 = std::max(u.x0, v.x0), m0 = std::min(u.x0, v.x0);
        ExtVal lhs = geval(u.x0, u.x) + geval(v.x0, v.x);
        ExtVal rhs = geval(j0, join(u.x, v.x)) + geval(m0, meet(u.x, v.x));
        if (!(lhs >= rhs)) {
          Point up = u.x, vp = v.x;
          up.insert(up.begin(), u.x0);
          vp.insert(vp.begin(), v.x0);
          return Verdict::no("lifted submodularity fails", {up, vp});
        }
      }
    return Verdict::yes();
  }();

  return p;
}

namespace {
LatticeSet flip_second(const LatticeSet& s) {
  std::set<Point> pts;
  for (Point p : s.points) {
    p[1] = -p[1];
    pts.insert(std::move(p));
  }
  return LatticeSet(s.dim, std::move(pts));
}
LatticeFunction flip_second(const LatticeFunction& f) {
  std::map<Point, Rat> vals;
  for (const auto& [x, v] : f.values) {
    Point p = x;
    p[1] = -p[1];
    vals[p] = v;
  }
  Window w(Point{f.window.lo[0], Int(-f.window.hi[1])},
           Point{f.window.hi[0], Int(-f.window.lo[1])});
  return LatticeFunction(f.dim, w, std::move(vals));
}
}  // namespace

Dim2Cross dim2_crosscheck(const LatticeSet& s) {
  if (s.dim != 2) throw model_error("dim2_crosscheck requires dimension 2");
  Dim2Cross c;
  c.lnat = check_set(s, SetClass::LNat);
  c.flipped_mnat = check_set(flip_second(s), SetClass::MNat);
  c.mnat = check_set(s, SetClass::MNat);
  c.multimodular = check_set(s, SetClass::Multimodular);
  return c;
}

Dim2Cross dim2_crosscheck(const LatticeFunction& f) {
  if (f.dim != 2) throw model_error("dim2_crosscheck requires dimension 2");
  Dim2Cross c;
  c.lnat = check_fn(f, FnClass::LNat);
  c.flipped_mnat = check_fn(flip_second(f), FnClass::MNat);
  c.mnat = check_fn(f, FnClass::MNat);
  c.multimodular = check_fn(f, FnClass::Multimodular);
  return c;
}

Verdict quadratic_multimodular(const std::vector<std::vector<Rat>>& a) {
  size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw model_error("quadratic matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a[i][j] != a[j][i])
        throw model_error("quadratic matrix must be symmetric");
  auto at = [&](size_t i, size_t j) {  // 1-based with zero padding
    if (i == 0 || j == n + 1) return Rat(0);
    return a[i - 1][j - 1];
  };
  for (size_t i = 0; i + 1 <= n; ++i)
    for (size_t j = i + 1; j <= n; ++j) {
      Rat d = at(i, j) - at(i, j + 1) - at(i + 1, j) + at(i + 1, j + 1);
      if (sgn(d) > 0)
        return Verdict::no("second difference of coefficients is positive",
                           {}, {static_cast<long>(i), static_cast<long>(j)});
    }
  return Verdict::yes();
}

LatticeFunction quadratic_function(const std::vector<std::vector<Rat>>& a,
                                   const Window& w) {
  size_t n = a.size();
  if (w.dim() != n) throw model_error("window dim mismatch with matrix");
  std::map<Point, Rat> vals;
  w.for_each([&](const Point& x) {
    Rat s = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) s += a[i][j] * Rat(x[i] * x[j]);
    vals[x] = s;
  });
  return LatticeFunction(n, w, std::move(vals));
}

}  // namespace dca
