#include "dca/generate.hpp"

#include <random>

#include "dca/conjugate.hpp"
#include "dca/transform.hpp"

namespace dca {

namespace {

using Rng = std::mt19937_64;

long rand_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}
bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

constexpr int kBudget = 400;

// A convex integer sequence phi(lo..hi): random start value and slope,
// nonnegative second differences.
std::vector<Int> convex_sequence(Rng& rng, long len, long vmax = 2) {
  std::vector<Int> v(len);
  Int val = rand_long(rng, -vmax, vmax);
  Int slope = rand_long(rng, -vmax, 1);
  for (long k = 0; k < len; ++k) {
    v[k] = val;
    val += slope;
    slope += rand_long(rng, 0, 1);
  }
  return v;
}

Window random_subbox(Rng& rng, const Window& w, long max_width = 3) {
  size_t n = w.dim();
  Point lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    long a = w.lo[i].get_si(), b = w.hi[i].get_si();
    long width = std::min(b - a, max_width);
    long wl = rand_long(rng, 1, std::max<long>(1, width));
    long start = rand_long(rng, a, b - wl);
    lo[i] = start;
    hi[i] = start + wl;
  }
  return Window(lo, hi);
}

Point random_point_in(Rng& rng, const Window& w) {
  Point p(w.dim());
  for (size_t i = 0; i < w.dim(); ++i)
    p[i] = rand_long(rng, w.lo[i].get_si(), w.hi[i].get_si());
  return p;
}

// ---------------- set candidates ----------------

LatticeSet box_points(const Window& b) {
  std::set<Point> pts;
  b.for_each([&](const Point& x) { pts.insert(x); });
  return LatticeSet(b.dim(), std::move(pts));
}

// Integer points of a sub-box cut by random difference constraints
// x_i - x_j <= c:  closed under the rounded midpoints.
LatticeSet difference_bounded(Rng& rng, const Window& w, bool with_box) {
  size_t n = w.dim();
  Window b = with_box ? random_subbox(rng, w) : w;
  struct Diff {
    size_t i, j;
    long c;
  };
  std::vector<Diff> diffs;
  long cuts = rand_long(rng, 0, 3);
  for (long k = 0; k < cuts && n >= 2; ++k) {
    size_t i = rand_long(rng, 0, n - 1);
    size_t j = rand_long(rng, 0, n - 1);
    if (i == j) continue;
    diffs.push_back({i, j, rand_long(rng, -1, 3)});
  }
  std::set<Point> pts;
  b.for_each([&](const Point& x) {
    for (const Diff& d : diffs)
      if (x[d.i] - x[d.j] > d.c) return;
    pts.insert(x);
  });
  return LatticeSet(n, std::move(pts));
}

// Minkowski sum of a base point and k segments {0, d}; the direction pool is
// supplied by the caller (exchange directions per class).
LatticeSet segment_sum(Rng& rng, size_t n, const Window& w,
                       const std::vector<Point>& pool, long k) {
  LatticeSet s(n, {random_point_in(rng, w)});
  for (long t = 0; t < k; ++t) {
    const Point& d = pool[rand_long(rng, 0, (long)pool.size() - 1)];
    std::set<Point> pts = s.points;
    bool fits = true;
    for (const Point& x : s.points) {
      Point y = add(x, d);
      if (!w.contains(y)) {
        fits = false;
        break;
      }
      pts.insert(y);
    }
    if (fits) s.points = std::move(pts);
  }
  return s;
}

std::vector<Point> mnat_directions(size_t n) {
  std::vector<Point> pool;
  for (size_t i = 0; i < n; ++i) {
    pool.push_back(unit(n, i, 1));
    pool.push_back(unit(n, i, -1));
    for (size_t j = 0; j < n; ++j)
      if (j != i) pool.push_back(sub(unit(n, i), unit(n, j)));
  }
  return pool;
}
std::vector<Point> parity_two_directions(size_t n) {
  std::vector<Point> pool;
  for (size_t i = 0; i < n; ++i) {
    Point two = unit(n, i);
    two[i] = 2;
    pool.push_back(two);
    pool.push_back(neg(two));
    for (size_t j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Point d(n, Int(0));
          d[i] = si;
          d[j] = sj;
          pool.push_back(d);
        }
  }
  return pool;
}
std::vector<Point> jump_directions(size_t n) {
  std::vector<Point> pool = parity_two_directions(n);
  for (size_t i = 0; i < n; ++i) {
    pool.push_back(unit(n, i, 1));
    pool.push_back(unit(n, i, -1));
  }
  return pool;
}

// Random add/remove mutations kept only when the class predicate survives.
template <typename Pred>
LatticeSet mutate_set(Rng& rng, LatticeSet s, const Window& w, Pred ok,
                      int rounds) {
  for (int t = 0; t < rounds; ++t) {
    LatticeSet cand = s;
    Point p = random_point_in(rng, w);
    if (cand.contains(p)) {
      cand.points.erase(p);
      if (cand.empty()) continue;
    } else {
      cand.points.insert(p);
    }
    if (ok(cand)) s = std::move(cand);
  }
  return s;
}

// ---------------- function candidates ----------------

LatticeFunction separable_candidate(Rng& rng, size_t n, const Window& w) {
  Window b = random_subbox(rng, w);
  std::vector<std::vector<Int>> phi(n);
  for (size_t i = 0; i < n; ++i)
    phi[i] = convex_sequence(rng, Int(b.hi[i] - b.lo[i] + 1).get_si());
  std::map<Point, Rat> vals;
  b.for_each([&](const Point& x) {
    Int s = 0;
    for (size_t i = 0; i < n; ++i) s += phi[i][Int(x[i] - b.lo[i]).get_si()];
    vals[x] = Rat(s);
  });
  return LatticeFunction(n, b, std::move(vals));
}

// f(x) = sum_i phi_i(x_i) + sum_{i<j} psi_ij(x_i - x_j) with convex pieces,
// tabulated on a sub-box: L-natural by construction.
LatticeFunction lnat_candidate(Rng& rng, size_t n, const Window& w) {
  Window b = random_subbox(rng, w);
  std::vector<std::vector<Int>> phi(n);
  for (size_t i = 0; i < n; ++i)
    phi[i] = convex_sequence(rng, Int(b.hi[i] - b.lo[i] + 1).get_si(), 1);
  struct Pair {
    size_t i, j;
    std::vector<Int> psi;
    long off;  // index offset: psi is tabulated on [-(off), +...]
  };
  std::vector<Pair> pairs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!coin(rng, 0.6)) continue;
      long lo = Int(b.lo[i] - b.hi[j]).get_si();
      long hi = Int(b.hi[i] - b.lo[j]).get_si();
      pairs.push_back({i, j, convex_sequence(rng, hi - lo + 1, 1), -lo});
    }
  std::map<Point, Rat> vals;
  b.for_each([&](const Point& x) {
    Int s = 0;
    for (size_t i = 0; i < n; ++i) s += phi[i][Int(x[i] - b.lo[i]).get_si()];
    for (const Pair& p : pairs)
      s += p.psi[Int(x[p.i] - x[p.j]).get_si() + p.off];
    vals[x] = Rat(s);
  });
  return LatticeFunction(n, b, std::move(vals));
}

// f(x) = sum_{i<j} psi_ij(x_i - x_j) + r x(N) on the full window cube:
// submodular with exact all-ones linearity, i.e. window-certified L-convex.
LatticeFunction l_candidate(Rng& rng, size_t n, const Window& w) {
  Window b = random_subbox(rng, w);
  // make the box a cube so that +/- all-ones shifts stay representative
  long width = 3;
  for (size_t i = 0; i < n; ++i)
    width = std::min(width, Int(b.hi[i] - b.lo[i]).get_si());
  for (size_t i = 0; i < n; ++i) b.hi[i] = b.lo[i] + width;
  struct Pair {
    size_t i, j;
    std::vector<Int> psi;
    long off;
  };
  std::vector<Pair> pairs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!coin(rng, 0.7)) continue;
      long lo = Int(b.lo[i] - b.hi[j]).get_si();
      long hi = Int(b.hi[i] - b.lo[j]).get_si();
      pairs.push_back({i, j, convex_sequence(rng, hi - lo + 1, 1), -lo});
    }
  long r = rand_long(rng, -2, 2);
  std::map<Point, Rat> vals;
  b.for_each([&](const Point& x) {
    Int s = comp_sum(x) * r;
    for (const Pair& p : pairs)
      s += p.psi[Int(x[p.i] - x[p.j]).get_si() + p.off];
    vals[x] = Rat(s);
  });
  return LatticeFunction(n, b, std::move(vals));
}

// Laminar convex sum: f(x) = sum_{A in laminar family} phi_A(x(A)) on a box.
LatticeFunction laminar_candidate(Rng& rng, size_t n, const Window& w) {
  Window b = random_subbox(rng, w);
  struct Term {
    std::vector<size_t> a;
    std::vector<Int> phi;
    long off;
  };
  std::vector<Term> terms;
  auto add_term = [&](std::vector<size_t> a) {
    Int lo = 0, hi = 0;
    for (size_t i : a) {
      lo += b.lo[i];
      hi += b.hi[i];
    }
    terms.push_back(
        {std::move(a), convex_sequence(rng, Int(hi - lo + 1).get_si(), 1),
         -lo.get_si()});
  };
  for (size_t i = 0; i < n; ++i)
    if (coin(rng, 0.7)) add_term({i});
  std::vector<size_t> all(n);
  for (size_t i = 0; i < n; ++i) all[i] = i;
  if (coin(rng, 0.7)) add_term(all);
  if (n >= 3 && coin(rng)) add_term({0, 1});
  std::map<Point, Rat> vals;
  b.for_each([&](const Point& x) {
    Int s = 0;
    for (const Term& t : terms) {
      Int xa = 0;
      for (size_t i : t.a) xa += x[i];
      s += t.phi[xa.get_si() + t.off];
    }
    vals[x] = Rat(s);
  });
  return LatticeFunction(n, b, std::move(vals));
}

// Indicator of a jump system plus a linear term (linear parts cancel in the
// exchange inequalities, so the jump axioms are inherited from the set).
LatticeFunction linear_on_set(Rng& rng, const LatticeSet& s) {
  Point a(s.dim);
  for (size_t i = 0; i < s.dim; ++i) a[i] = rand_long(rng, -2, 2);
  std::map<Point, Rat> vals;
  for (const Point& x : s.points) vals[x] = inner(a, x);
  return LatticeFunction(s.dim, s.bbox(), std::move(vals));
}

// Perturb up to `rounds` single values (or drop/extend domain points), keep
// only changes surviving the predicate.
template <typename Pred>
LatticeFunction mutate_fn(Rng& rng, LatticeFunction f, Pred ok, int rounds) {
  for (int t = 0; t < rounds; ++t) {
    LatticeFunction cand = f;
    Point p = random_point_in(rng, f.window);
    auto it = cand.values.find(p);
    int move = rand_long(rng, 0, 2);
    if (it != cand.values.end() && move == 0 && cand.values.size() > 1) {
      cand.values.erase(it);
    } else if (it != cand.values.end()) {
      it->second += rand_long(rng, -1, 1);
    } else {
      cand.values[p] = rand_long(rng, -2, 2);
    }
    if (ok(cand)) f = std::move(cand);
  }
  return f;
}

LatticeFunction negate_values(LatticeFunction f) {
  for (auto& [x, v] : f.values) v = -v;
  return f;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

LatticeSet generate_set(SetClass c, std::size_t n, const Window& window,
                        std::uint64_t seed) {
  Rng rng(mix_seed(seed, hash_string(set_class_name(c)) + n));
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    LatticeSet s;
    try {
      switch (c) {
        case SetClass::IntegerBox:
          s = box_points(random_subbox(rng, window));
          break;
        case SetClass::LNat:
          s = difference_bounded(rng, window, true);
          break;
        case SetClass::L: {
          s = difference_bounded(rng, window, false);
          if (!s.empty() && !check_set(s, SetClass::L, window).holds) continue;
          break;
        }
        case SetClass::MNat:
          s = segment_sum(rng, n, window, mnat_directions(n),
                          rand_long(rng, 1, 3));
          break;
        case SetClass::M: {
          if (n == 1) {
            s = LatticeSet(1, {random_point_in(rng, window)});
            break;
          }
          Window inner_w(
              Point(window.lo.begin() + 1, window.lo.end()),
              Point(window.hi.begin() + 1, window.hi.end()));
          LatticeSet base = generate_set(SetClass::MNat, n - 1, inner_w,
                                         mix_seed(seed, attempt + 977));
          s = lift_mnat_to_m(base);
          break;
        }
        case SetClass::Multimodular: {
          Window small = Window::cube(n, 0, 2);
          LatticeSet base = generate_set(SetClass::LNat, n, small,
                                         mix_seed(seed, attempt + 311));
          s = lnat_to_mm(base);
          break;
        }
        case SetClass::Dmc: {
          s = difference_bounded(rng, window, true);
          if (s.empty()) continue;
          s = mutate_set(
              rng, s, window,
              [](const LatticeSet& t) {
                return check_set(t, SetClass::Dmc).holds;
              },
              6);
          break;
        }
        case SetClass::IntegrallyConvex: {
          s = coin(rng) ? difference_bounded(rng, window, true)
                        : segment_sum(rng, n, window, mnat_directions(n), 2);
          if (s.empty()) continue;
          s = mutate_set(
              rng, s, window,
              [](const LatticeSet& t) {
                return check_set(t, SetClass::IntegrallyConvex).holds;
              },
              6);
          break;
        }
        case SetClass::JumpSystem:
          s = segment_sum(rng, n, window, jump_directions(n),
                          rand_long(rng, 1, 3));
          break;
        case SetClass::SeJump:
          s = segment_sum(rng, n, window,
                          attempt % 2 ? parity_two_directions(n)
                                      : jump_directions(n),
                          rand_long(rng, 1, 3));
          break;
        case SetClass::CpJump:
          s = segment_sum(rng, n, window, parity_two_directions(n),
                          rand_long(rng, 1, 3));
          break;
      }
    } catch (const empty_result&) {
      continue;
    }
    if (s.empty()) continue;
    Verdict v = (c == SetClass::L) ? check_set(s, c, window)
                                   : check_set(s, c);
    if (v.holds) return s;
  }
  throw generation_error("generation budget exhausted for set class " +
                         set_class_name(c));
}

LatticeFunction generate_fn(FnClass c, std::size_t n, const Window& window,
                            std::uint64_t seed) {
  Rng rng(mix_seed(seed, hash_string(fn_class_name(c)) + 1000 * n));
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    LatticeFunction f;
    try {
      switch (c) {
        case FnClass::Separable:
          f = separable_candidate(rng, n, window);
          break;
        case FnClass::LNat:
          f = lnat_candidate(rng, n, window);
          break;
        case FnClass::L:
          f = l_candidate(rng, n, window);
          break;
        case FnClass::MNat: {
          if (attempt % 2 == 0) {
            f = laminar_candidate(rng, n, window);
          } else {
            // conjugates of L-natural functions, restricted to a small box
            LatticeFunction g = lnat_candidate(rng, n, window);
            f = restrict_box(conjugate(g, Window::cube(n, -2, 2)),
                             Window::cube(n, -2, 2));
          }
          break;
        }
        case FnClass::M: {
          if (n == 1) {
            std::map<Point, Rat> v;
            v[random_point_in(rng, window)] = rand_long(rng, -2, 2);
            f = LatticeFunction(1, window, std::move(v));
            break;
          }
          Window inner_w(
              Point(window.lo.begin() + 1, window.lo.end()),
              Point(window.hi.begin() + 1, window.hi.end()));
          f = lift_mnat_to_m(generate_fn(FnClass::MNat, n - 1, inner_w,
                                         mix_seed(seed, attempt + 977)));
          break;
        }
        case FnClass::Multimodular: {
          LatticeFunction g = generate_fn(FnClass::LNat, n,
                                          Window::cube(n, 0, 2),
                                          mix_seed(seed, attempt + 311));
          f = lnat_to_mm(g);
          break;
        }
        case FnClass::GloballyDmc:
        case FnClass::LocallyDmc: {
          FnClass target = c;
          f = mutate_fn(
              rng, lnat_candidate(rng, n, window),
              [target](const LatticeFunction& g) {
                return check_fn(g, target).holds;
              },
              5);
          break;
        }
        case FnClass::IntegrallyConvex: {
          LatticeFunction base = coin(rng) ? lnat_candidate(rng, n, window)
                                           : laminar_candidate(rng, n, window);
          f = mutate_fn(
              rng, base,
              [](const LatticeFunction& g) {
                return check_fn(g, FnClass::IntegrallyConvex).holds;
              },
              4);
          break;
        }
        case FnClass::Submodular:
          f = mutate_fn(
              rng, lnat_candidate(rng, n, window),
              [](const LatticeFunction& g) {
                return check_fn(g, FnClass::Submodular).holds;
              },
              5);
          break;
        case FnClass::Supermodular:
          f = negate_values(generate_fn(FnClass::Submodular, n, window,
                                        mix_seed(seed, attempt + 733)));
          break;
        case FnClass::JumpMNat:
          f = linear_on_set(
              rng, generate_set(SetClass::SeJump, n, window,
                                mix_seed(seed, attempt + 577)));
          break;
        case FnClass::JumpM:
          f = linear_on_set(
              rng, generate_set(SetClass::CpJump, n, window,
                                mix_seed(seed, attempt + 587)));
          break;
      }
    } catch (const empty_result&) {
      continue;
    } catch (const generation_error&) {
      continue;
    }
    if (f.dom_empty()) continue;
    if (check_fn(f, c).holds) return f;
  }
  throw generation_error("generation budget exhausted for function class " +
                         fn_class_name(c));
}

LatticeFunction generate_arbitrary_fn(std::size_t n, const Window& window,
                                      std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0xa5a5a5a5ULL + n));
  std::map<Point, Rat> vals;
  window.for_each([&](const Point& x) {
    if (!coin(rng, 0.7)) return;  // +inf hole
    Rat v(rand_long(rng, -6, 6), coin(rng, 0.25) ? 2 : 1);
    v.canonicalize();
    vals[x] = v;
  });
  if (vals.empty()) vals[random_point_in(rng, window)] = 0;
  return LatticeFunction(n, window, std::move(vals));
}

}  // namespace dca
