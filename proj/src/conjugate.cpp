#include "dca/conjugate.hpp"

#include <algorithm>

#include "dca/lp.hpp"
#include "dca/transform.hpp"

namespace dca {
namespace {

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}
Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int initial_radius(const LatticeFunction& f) {
  return 1 + ceil_rat(Rat(f.max_value() - f.min_value()));
}
Int cap_radius(const LatticeFunction& f) { return 64 * initial_radius(f); }

Rat conjugate_value(const LatticeFunction& f, const Point& p) {
  bool first = true;
  Rat best;
  for (const auto& [x, v] : f.values) {
    Rat cand = inner(p, x) - v;
    if (first || cand > best) {
      best = cand;
      first = false;
    }
  }
  return best;
}

}  // namespace

Window default_conjugate_window(const LatticeFunction& f) {
  if (f.dom_empty()) throw model_error("conjugate of empty function");
  Int r = ceil_rat(Rat(2 * (f.max_value() - f.min_value()) + 2));
  return Window(Point(f.dim, Int(-r)), Point(f.dim, r));
}

LatticeFunction conjugate(const LatticeFunction& f, const Window& p_window) {
  if (f.dom_empty()) throw model_error("conjugate of empty function");
  if (p_window.dim() != f.dim) throw model_error("p-window dim mismatch");
  std::map<Point, Rat> vals;
  p_window.for_each(
      [&](const Point& p) { vals[p] = conjugate_value(f, p); });
  return LatticeFunction(f.dim, p_window, std::move(vals));
}

BiconjugateResult biconjugate_at(const LatticeFunction& f, const Point& x) {
  if (f.dom_empty()) throw model_error("biconjugate of empty function");
  BiconjugateResult res;
  res.envelope = envelope_value(f, to_rat_point(x));
  if (res.envelope.is_inf()) {
    // x lies outside conv(dom f): a separating direction makes the integer
    // supremum +infinity.
    res.value = ExtVal::infinity();
    res.radius = 0;
    return res;
  }
  Int b0 = initial_radius(f), cap = cap_radius(f);
  bool have_best = false;
  Rat best, prev_best;
  Int best_shell = 0;   // smallest max-norm of an argmax point seen so far
  Int scanned = -1;     // shells 0..scanned already visited
  for (Int radius = b0;; radius = radius * 2) {
    // Scan the box in max-norm shells: since the supremum is bracketed from
    // above by the LP envelope, an argmax hitting the envelope ends the
    // search without visiting the rest of the box.
    for (Int r = scanned + 1; r <= radius; r = r + 1) {
      Window shell_box(Point(f.dim, Int(-r)), Point(f.dim, r));
      shell_box.for_each([&](const Point& p) {
        if (linf_norm(p) != r) return;  // interior shells already visited
        Rat v = inner(p, x) - conjugate_value(f, p);
        if (!have_best || v > best) {
          have_best = true;
          best = v;
          best_shell = r;
          res.argmax = p;
        }
      });
      if (ExtVal(best) == res.envelope) {
        res.radius = radius;
        res.value = ExtVal(best);
        return res;  // cannot do better
      }
    }
    scanned = radius;
    res.radius = radius;
    bool interior = best_shell < radius;
    bool grew = (radius != b0) && best > prev_best;
    if (interior && !grew && radius != b0) break;
    if (interior && radius == b0) break;
    prev_best = best;
    if (radius * 2 > cap)
      throw inconclusive_error(
          "biconjugate search hit the radius cap; best bracket [" +
          rational_to_string(best) + ", " +
          rational_to_string(res.envelope.finite()) + "]");
  }
  res.value = ExtVal(best);
  return res;
}

SubgradientBox subdifferential_box(const LatticeFunction& f, const Point& x) {
  ExtVal fx = f.eval(x);
  if (fx.is_inf()) throw model_error("subdifferential at a point outside dom");
  Int cap = cap_radius(f);
  SubgradientBox box;
  box.lo.assign(f.dim, Rat(0));
  box.hi.assign(f.dim, Rat(0));
  box.clamped_lo.assign(f.dim, false);
  box.clamped_hi.assign(f.dim, false);

  // Constraints <p, y - x> <= f(y) - f(x) plus the clamp box |p_i| <= cap.
  LP lp;
  for (const auto& [y, v] : f.values) {
    if (y == x) continue;
    std::vector<Rat> row(f.dim);
    Point d = sub(y, x);
    for (size_t i = 0; i < f.dim; ++i) row[i] = Rat(d[i]);
    lp.A.push_back(std::move(row));
    lp.b.push_back(v - fx.finite());
    lp.rel.push_back(-1);
  }
  for (size_t i = 0; i < f.dim; ++i) {
    std::vector<Rat> row(f.dim, Rat(0));
    row[i] = 1;
    lp.A.push_back(row);
    lp.b.push_back(Rat(cap));
    lp.rel.push_back(-1);
    row[i] = -1;
    lp.A.push_back(row);
    lp.b.push_back(Rat(cap));
    lp.rel.push_back(-1);
  }
  std::vector<bool> free_vars(f.dim, true);
  for (size_t i = 0; i < f.dim; ++i) {
    lp.c.assign(f.dim, Rat(0));
    lp.c[i] = 1;
    LPResult lo = solve_lp_mixed(lp, free_vars);
    if (lo.status == LPStatus::Infeasible) return box;  // empty
    lp.c[i] = -1;
    LPResult hi = solve_lp_mixed(lp, free_vars);
    box.lo[i] = lo.value;
    box.hi[i] = -hi.value;
    box.clamped_lo[i] = box.lo[i] == -Rat(cap);
    box.clamped_hi[i] = box.hi[i] == Rat(cap);
  }
  box.exists = true;
  return box;
}

std::optional<Point> integer_subgradient(const LatticeFunction& f,
                                         const Point& x) {
  SubgradientBox box = subdifferential_box(f, x);
  if (!box.exists) return std::nullopt;
  Point lo(f.dim), hi(f.dim);
  for (size_t i = 0; i < f.dim; ++i) {
    lo[i] = ceil_rat(box.lo[i]);
    hi[i] = floor_rat(box.hi[i]);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  Window grid(lo, hi);
  Rat fx = f.eval(x).finite();
  if (grid.grid_size() > 200000) {
    // The polyhedron is unbounded (clamped at the cap radius) or simply huge:
    // enumeration is hopeless.  Fall back on conjugate attainment: an integer
    // subgradient exists iff the integral biconjugate attains f(x), and the
    // attaining p is itself a subgradient (f*(p) = <p,x> - f(x)).
    BiconjugateResult b = biconjugate_at(f, x);
    if (!(b.value == ExtVal(fx))) return std::nullopt;
    for (const auto& [y, v] : f.values)
      if (inner(b.argmax, sub(y, x)) > v - fx)
        throw inconclusive_error("biconjugate argmax failed re-validation");
    return b.argmax;
  }
  std::optional<Point> found;
  grid.for_each([&](const Point& p) {
    if (found) return;
    for (const auto& [y, v] : f.values)
      if (inner(p, sub(y, x)) > v - fx) return;
    found = p;
  });
  return found;
}

ConjugateClassReport conjugate_class_check(
    const LatticeFunction& f, FnClass c,
    const std::optional<Window>& p_window) {
  ConjugateClassReport rep;
  switch (c) {
    case FnClass::Separable:
    case FnClass::LNat:
    case FnClass::L:
    case FnClass::MNat:
    case FnClass::M:
    case FnClass::Multimodular:
      break;
    default:
      return rep;  // no conjugate column entry for this class
  }
  rep.applicable = true;
  rep.premise = check_fn(f, c);
  if (!rep.premise.holds) return rep;

  Window pwin = p_window ? *p_window : default_conjugate_window(f);
  switch (c) {
    case FnClass::Separable: {
      rep.image_class = fn_class_name(FnClass::Separable);
      rep.image = check_fn(conjugate(f, pwin), FnClass::Separable);
      break;
    }
    case FnClass::LNat: {
      rep.image_class = fn_class_name(FnClass::MNat);
      rep.image = check_fn(conjugate(f, pwin), FnClass::MNat);
      break;
    }
    case FnClass::MNat: {
      rep.image_class = fn_class_name(FnClass::LNat);
      rep.image = check_fn(conjugate(f, pwin), FnClass::LNat);
      break;
    }
    case FnClass::M: {
      rep.image_class = fn_class_name(FnClass::L);
      LatticeFunction g = conjugate(f, pwin);
      rep.image = check_fn(g, FnClass::L);
      LConvexForm form = l_convex_form(g);
      rep.slope_checked = true;
      rep.slope_ok = form.determined &&
                     form.slope == Rat(comp_sum(*f.support_set().points.begin()));
      break;
    }
    case FnClass::L: {
      // The model carries one window of the (infinite) arithmetic orbit; the
      // honest conjugate lives on the hyperplane p(N) = slope, where the
      // orbit terms cancel.
      rep.image_class = fn_class_name(FnClass::M);
      LConvexForm form = l_convex_form(f);
      if (!form.determined || form.slope.get_den() != 1) {
        rep.image = Verdict::no("window determines no integer slope");
        break;
      }
      Int s = form.slope.get_num();
      LatticeFunction g = conjugate(f, pwin);
      std::map<Point, Rat> vals;
      for (const auto& [p, v] : g.values)
        if (comp_sum(p) == s) vals[p] = v;
      if (vals.empty()) {
        rep.image = Verdict::no("slope hyperplane misses the p-window");
        break;
      }
      rep.image = check_fn(LatticeFunction(f.dim, pwin, std::move(vals)),
                           FnClass::M);
      break;
    }
    case FnClass::Multimodular: {
      // f*(p) = h(Dt p) with h the conjugate of the l-natural pullback.
      rep.image_class = fn_class_name(FnClass::MNat);
      LatticeFunction g = mm_to_lnat(f);
      Int r = 0;
      for (size_t i = 0; i < f.dim; ++i)
        r = std::max(r, Int(abs(pwin.lo[i])));
      Window qwin(Point(f.dim, Int(-2 * r)), Point(f.dim, 2 * r));
      LatticeFunction h = conjugate(g, qwin);
      // M-natural-ness is certified on the inner box (box restriction
      // preserves the class); the full grid is kept for the identity below.
      Window inner(Point(f.dim, Int(-r)), Point(f.dim, r));
      std::map<Point, Rat> hv;
      for (const auto& [q, v] : h.values)
        if (inner.contains(q)) hv.emplace(q, v);
      rep.image = check_fn(LatticeFunction(f.dim, inner, std::move(hv)),
                           FnClass::MNat);
      if (rep.image.holds) {
        // Verify the change-of-variables identity on the whole p-window.
        Verdict ident = Verdict::yes();
        pwin.for_each([&](const Point& p) {
          if (!ident.holds) return;
          Point q = bidiagonal_transpose_apply(p);
          ExtVal hv = h.eval(q);
          if (hv.is_inf() || hv.finite() != conjugate_value(f, p))
            ident = Verdict::no("transpose change-of-variables identity fails",
                                {p});
        });
        rep.image = ident;
      }
      break;
    }
    default:
      break;
  }
  return rep;
}

}  // namespace dca
