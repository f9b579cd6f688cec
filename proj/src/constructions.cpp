#include "h14/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "h14/errors.hpp"

namespace h14 {

VarSet y_vars(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return VarSet(names);
}

CoordinateChange y_coords(int n) {
  if (n < 2) throw MathError("y-coordinates need n >= 2");
  const VarSet xv = x_vars(n), yv = y_vars(n);
  std::vector<LaurentPoly> to_x, to_y;
  for (int i = 0; i < n; ++i) {
    to_x.push_back(LaurentPoly::variable(xv, static_cast<size_t>(i)));
    to_y.push_back(LaurentPoly::variable(yv, static_cast<size_t>(i)));
  }
  const LaurentPoly x1 = to_x[0], y1 = to_y[0];
  to_x[1] = to_x[1] - x1 + x1 * x1;
  to_y[1] = to_y[1] + y1 - y1 * y1;
  return {Substitution(yv, xv, to_x), Substitution(xv, yv, to_y)};
}

namespace {

std::set<Exponents> orbit(const PermGroupSpec& G, const Exponents& m) {
  if (m.size() != static_cast<size_t>(G.n)) throw StructuralError("monomial has the wrong number of exponents");
  std::set<Exponents> out;
  for (const auto& s : G.elements()) {
    Exponents b(m.size(), 0);
    for (int i = 0; i < G.n; ++i) b[static_cast<size_t>(s(i))] = m[static_cast<size_t>(i)];
    out.insert(b);
  }
  return out;
}

}  // namespace

LaurentPoly orbit_sum_y(const PermGroupSpec& G, const Exponents& m) {
  G.validate();
  for (int a : m)
    if (a < 0) throw MathError("orbit sums need a monomial with non-negative exponents");
  LaurentPoly r(y_vars(G.n));
  for (const auto& b : orbit(G, m)) r.add_term(b, Rat(1));
  return r;
}

LaurentPoly orbit_sum(const PermGroupSpec& G, const Exponents& m) {
  return subst_laurent(orbit_sum_y(G, m), y_coords(G.n).to_x);
}

std::vector<Invariant> invariants(const PermGroupSpec& G, int degree) {
  G.validate();
  if (degree < 1) throw MathError("degree bound must be >= 1");
  const CoordinateChange cc = y_coords(G.n);
  std::vector<Invariant> out;
  for (int deg = 1; deg <= degree; ++deg) {
    std::set<Exponents> seen;
    // Exponent vectors of total degree deg, in descending lexicographic order.
    std::vector<Exponents> all;
    Exponents cur(static_cast<size_t>(G.n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == G.n - 1) {
        cur[static_cast<size_t>(i)] = left;
        all.push_back(cur);
        return;
      }
      for (int a = left; a >= 0; --a) {
        cur[static_cast<size_t>(i)] = a;
        rec(i + 1, left - a);
      }
    };
    rec(0, deg);
    for (const auto& m : all) {
      if (seen.count(m)) continue;
      auto orb = orbit(G, m);
      seen.insert(orb.begin(), orb.end());
      Invariant inv;
      inv.rep = *orb.rbegin();
      inv.in_y = orbit_sum_y(G, m);
      inv.in_x = subst_laurent(inv.in_y, cc.to_x);
      out.push_back(std::move(inv));
    }
  }
  return out;
}

WitnessPack invariant_family_pack(const PermGroupSpec& G, std::optional<int> degree_bound) {
  G.validate();
  if (G.n < 2) throw MathError("the invariant family needs n >= 2");
  if (!G.find_mapping(0, 1)) throw MathError("no group element sends y1 to y2");
  const int bound = degree_bound.value_or(G.n);
  if (bound < 2) throw MathError("degree bound must be >= 2 to include I_{y1 y2}");
  auto invs = invariants(G, bound);
  Exponents e1(static_cast<size_t>(G.n), 0), e12(static_cast<size_t>(G.n), 0);
  e1[0] = 1;
  e12[0] = e12[1] = 1;
  const LaurentPoly i1 = orbit_sum(G, e1), i12 = orbit_sum(G, e12);

  WitnessPack p;
  p.n = G.n;
  size_t a = 0, b = 0;
  for (size_t k = 0; k < invs.size(); ++k) {
    p.r_gens.push_back(invs[k].in_x);
    if (invs[k].in_x == i1) a = k;
    if (invs[k].in_x == i12) b = k;
  }
  p.f = i1 + i12;
  p.g = i1;
  const VarSet rv = gen_vars(p.r_gens.size());
  p.f_expr = LaurentPoly::variable(rv, a) + LaurentPoly::variable(rv, b);
  p.g_expr = LaurentPoly::variable(rv, a);
  p.group = G;
  LaurentPoly h = compute_h(p.f, p.g);  // throws if eps(f)/eps(g) is not in k[x1]
  p.h = h;
  return p;
}

std::optional<CheckResult> group_invariance_check(const WitnessPack& pack) {
  if (!pack.group) return std::nullopt;
  CheckResult r{"R_gens_group_invariant", false, ""};
  try {
    pack.group->validate();
    if (pack.group->n != pack.n) {
      r.detail = "group acts on " + std::to_string(pack.group->n) + " letters, pack has n = " + std::to_string(pack.n);
      return r;
    }
    const CoordinateChange cc = y_coords(pack.n);
    for (size_t gi = 0; gi < pack.group->generators.size(); ++gi) {
      RingMap s = perm_map(pack.group->generators[gi], cc);
      for (size_t k = 0; k < pack.r_gens.size(); ++k) {
        if (!(s.apply_laurent(pack.r_gens[k]) == pack.r_gens[k])) {
          r.detail = "generator " + std::to_string(gi + 1) + " moves R generator r" + std::to_string(k + 1);
          return r;
        }
      }
    }
    r.pass = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

LaurentPoly d_apply(const Derivation& D, const LaurentPoly& p) {
  if (D.images.size() != static_cast<size_t>(D.n)) throw StructuralError("derivation needs one image per variable");
  const VarSet xv = x_vars(D.n);
  const LaurentPoly q = p.embed(xv);
  LaurentPoly acc(xv);
  for (int i = 0; i < D.n; ++i) {
    const LaurentPoly& im = D.images[static_cast<size_t>(i)];
    if (im.is_zero()) continue;
    acc += q.derivative(static_cast<size_t>(i)) * im.embed(xv);
  }
  return acc;
}

bool is_locally_nilpotent(const Derivation& D, const std::vector<LaurentPoly>& tests, int max_iter) {
  if (max_iter < 1) throw MathError("max_iter must be >= 1");
  for (const auto& t : tests) {
    LaurentPoly cur = t.embed(x_vars(D.n));
    int it = 0;
    while (!cur.is_zero() && it < max_iter) {
      cur = d_apply(D, cur);
      ++it;
    }
    if (!cur.is_zero()) return false;
  }
  return true;
}

LaurentPoly find_preslice(const Derivation& D, const std::vector<LaurentPoly>& candidates) {
  for (const auto& s : candidates) {
    LaurentPoly ds = d_apply(D, s);
    if (!ds.is_zero() && d_apply(D, ds).is_zero()) return s.embed(x_vars(D.n));
  }
  throw MathError("no preslice among the candidates");
}

RingMap build_involution(const Derivation& D, const LaurentPoly& s) {
  const VarSet xv = x_vars(D.n);
  const LaurentPoly se = s.embed(xv);
  std::optional<size_t> j;
  for (size_t i = 0; i < xv.size(); ++i)
    if (se == LaurentPoly::variable(xv, i)) j = i;
  if (!j) throw MathError("unsupported: the preslice is not a coordinate variable");
  for (size_t i = 0; i < xv.size(); ++i)
    if (i != *j && !D.images.at(i).is_zero())
      throw MathError("unsupported: D does not kill the coordinate " + xv.name(i));
  const LaurentPoly ds = d_apply(D, se);
  if (ds.is_zero() || !d_apply(D, ds).is_zero()) throw MathError("s is not a preslice of D");
  const VarSet v = xv.with_laurent(*j, true);
  std::vector<LaurentPoly> imgs;
  for (size_t i = 0; i < v.size(); ++i) imgs.push_back(LaurentPoly::variable(v, i));
  imgs[*j] = imgs[*j].monomial_inverse();
  return RingMap(MapKind::involution, InvolutionParams{xv.name(*j)}, Substitution(v, v, imgs));
}

Report check_eq3(const Derivation& D, const LaurentPoly& s, const std::vector<LaurentPoly>& kernel_gens) {
  Report rep;
  RingMap iota = build_involution(D, s);
  const VarSet& v = iota.source();
  RingMap sq = compose(iota, iota);
  rep.add("involution_squared_identity", sq.same_images(RingMap::identity(v)));
  const LaurentPoly sv = s.embed(v);
  const LaurentPoly trace = sv + sv.monomial_inverse();
  rep.add("trace_fixed", iota.apply_laurent(trace) == trace);
  for (size_t k = 0; k < kernel_gens.size(); ++k) {
    const std::string tag = "kernel_gen[" + std::to_string(k) + "]";
    LaurentPoly dp = d_apply(D, kernel_gens[k]);
    rep.add(tag + ".in_ker_D", dp.is_zero(), dp.is_zero() ? "" : "D(p) = " + dp.to_string());
    const LaurentPoly p = kernel_gens[k].embed(v);
    rep.add(tag + ".fixed", iota.apply_laurent(p) == p);
  }
  return rep;
}

}  // namespace h14
