#include "h14/witness.hpp"

#include <algorithm>
#include <climits>

#include "h14/errors.hpp"
#include "h14/semigroup.hpp"

namespace h14 {

VarSet pi_coeff_vars() {
  static const VarSet v(std::vector<std::string>{"G"});
  return v;
}

VarSet gen_vars(size_t k) {
  std::vector<std::string> names;
  for (size_t i = 1; i <= k; ++i) names.push_back("r" + std::to_string(i));
  return VarSet(names);
}

namespace {

int var_count(const LaurentPoly& p) {
  int n = 0;
  while (p.vars().index_of("x" + std::to_string(n + 1))) ++n;
  return n;
}

// eps(p) over p's own variables: terms free of x2..xn survive.
LaurentPoly eps(const LaurentPoly& p) {
  LaurentPoly r(p.vars());
  auto x1 = p.vars().index_of("x1");
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (size_t i = 0; i < e.size() && keep; ++i) {
      const std::string& nm = p.vars().name(i);
      if ((x1 && i == *x1) || nm == "z") continue;
      if (e[i] != 0) keep = false;
    }
    if (keep) r.add_term(e, c);
  }
  return r;
}

std::string term_string(const VarSet& vars, const Exponents& e, const Rat& c) {
  return LaurentPoly::monomial(vars, e, c).to_string();
}

// First term with a negative exponent, or with x1-exponent below min_x1.
std::optional<std::string> bad_term(const LaurentPoly& p, int min_x1) {
  auto x1 = p.vars().index_of("x1");
  for (const auto& [e, c] : p.terms()) {
    bool bad = false;
    for (size_t i = 0; i < e.size(); ++i) {
      int lo = (x1 && i == *x1) ? min_x1 : 0;
      if (e[i] < lo) bad = true;
    }
    if (bad) return term_string(p.vars(), e, c);
  }
  return std::nullopt;
}

LaurentPoly from_dense(const VarSet& vars, const std::vector<Rat>& c) {
  LaurentPoly r(vars);
  size_t x1 = vars.require("x1");
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    Exponents e(vars.size(), 0);
    e[x1] = static_cast<int>(k);
    r.add_term(e, c[k]);
  }
  return r;
}

void trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

}  // namespace

LaurentPoly compute_h(const LaurentPoly& f, const LaurentPoly& g) {
  std::vector<Rat> a, b;
  try {
    a = univariate_coeffs(eps(f));
    b = univariate_coeffs(eps(g));
  } catch (const MathError& ex) {
    throw WitnessError(std::string("eps(f) or eps(g) is not in k[x1]: ") + ex.what());
  }
  trim(a);
  trim(b);
  if (b.empty()) throw WitnessError("eps(g) = 0");
  std::vector<Rat> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  for (size_t k = q.size(); k-- > 0;) {
    Rat c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw WitnessError("eps(g) does not divide eps(f) in k[x1]");
  return from_dense(f.vars(), q);
}

UniPoly build_pi(const LaurentPoly& f, const LaurentPoly& g) {
  std::vector<Rat> fb, gb;
  try {
    fb = univariate_coeffs(eps(f));
    gb = univariate_coeffs(eps(g));
  } catch (const MathError& ex) {
    throw WitnessError(std::string("eps(f) or eps(g) is not in k[x1]: ") + ex.what());
  }
  trim(fb);
  trim(gb);
  if (gb.size() < 2) throw WitnessError("eps(g) is constant");

  const VarSet cv(std::vector<std::string>{"Z", "G"});
  auto lin = [&cv](const std::vector<Rat>& c, size_t var) {
    std::vector<LaurentPoly> coeffs;
    for (size_t k = 0; k < std::max<size_t>(c.size(), 1); ++k)
      coeffs.push_back(LaurentPoly::constant(cv, k < c.size() ? -c[k] : Rat(0)));
    coeffs[0] += LaurentPoly::variable(cv, var);
    return UniPoly(cv, coeffs);
  };
  LaurentPoly res = resultant(lin(fb, 0), lin(gb, 1));
  UniPoly inz = to_unipoly(res, 0);
  auto lead = inz.leading().constant_value();
  if (!lead || lead->is_zero()) throw MathError("resultant has a non-constant leading coefficient");
  Rat inv = lead->inverse();
  std::vector<LaurentPoly> coeffs;
  for (const auto& c : inz.coeffs()) coeffs.push_back((c * inv).embed(pi_coeff_vars()));
  UniPoly pi_poly(pi_coeff_vars(), coeffs);

  std::string why;
  if (!pi_annihilates(pi_poly, f, g, &why)) throw MathError("resultant construction failed: " + why);
  if (realize_pi(pi_poly, f, g).is_zero()) throw WitnessError("pi = Pi(f) vanishes identically");
  return pi_poly;
}

LaurentPoly realize_pi(const UniPoly& pi_poly, const LaurentPoly& x, const LaurentPoly& g) {
  Substitution s(pi_coeff_vars(), g.vars(), std::vector<LaurentPoly>{g});
  LaurentPoly acc(x.vars());
  for (int k = pi_poly.degree(); k >= 0; --k)
    acc = acc * x + subst_laurent(pi_poly.coeff(k).embed(pi_coeff_vars()), s);
  return acc;
}

bool pi_annihilates(const UniPoly& pi_poly, const LaurentPoly& f, const LaurentPoly& g, std::string* why) {
  auto fail = [why](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!(pi_poly.coeff_vars() == pi_coeff_vars())) return fail("Pi coefficients are not over G");
  if (pi_poly.degree() < 1) return fail("Pi has degree < 1");
  if (!pi_poly.is_monic()) return fail("Pi is not monic");
  for (const auto& c : pi_poly.coeffs())
    if (!c.is_polynomial()) return fail("Pi has a coefficient outside k[G]");
  LaurentPoly v = realize_pi(pi_poly, eps(f), eps(g));
  if (!v.is_zero()) return fail("Pi(eps f)|_{G=eps g} = " + v.to_string());
  return true;
}

bool in_ker_epsilon(const LaurentPoly& p) { return eps(p).is_zero(); }

std::vector<int> choose_t(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h,
                          const LaurentPoly& pi) {
  LaurentPoly r = f - g * h;
  if (!in_ker_epsilon(r)) throw WitnessError("f - g*h is not in ker eps");
  if (!in_ker_epsilon(pi)) throw WitnessError("pi is not in ker eps");
  int m = 0;
  if (!r.is_zero()) m = std::max(m, deg_in(r, "x1"));
  if (!pi.is_zero()) m = std::max(m, deg_in(pi, "x1"));
  int n = var_count(f);
  return std::vector<int>(static_cast<size_t>(std::max(n - 1, 0)), 1 + m);
}

DdagResult check_ddag(const RingMap& theta, const LaurentPoly& f, const LaurentPoly& g,
                      const LaurentPoly& h, const LaurentPoly& pi) {
  const VarSet& src = theta.source();
  DdagResult r;
  LaurentPoly a = theta.apply_laurent((f - g * h).embed(src));
  auto bad = bad_term(a, 0);
  r.f_minus_gh_polynomial = !bad;
  if (bad) r.f_minus_gh_detail = "theta(f - g*h) has the term " + *bad;
  LaurentPoly b = theta.apply_laurent(pi.embed(src));
  if (b.is_zero()) {
    r.pi_detail = "theta(pi) = 0";
  } else {
    bad = bad_term(b, 1);
    r.pi_in_x1_ideal = !bad;
    if (bad) r.pi_detail = "theta(pi) has the term " + *bad;
  }
  return r;
}

bool e_condition_holds(const LaurentPoly& theta_pi, const LaurentPoly& theta_f, int d, int e, int* failing_i) {
  if (e < 1) {
    if (failing_i) *failing_i = 0;
    return false;
  }
  LaurentPoly pe = theta_pi.pow(static_cast<unsigned>(e));
  LaurentPoly fi = LaurentPoly::constant(theta_f.vars(), Rat(1));
  for (int i = 0; i < d; ++i) {
    if (!(pe * fi).is_polynomial()) {
      if (failing_i) *failing_i = i;
      return false;
    }
    fi = fi * theta_f;
  }
  return true;
}

int choose_e(const RingMap& theta, const LaurentPoly& pi, const LaurentPoly& f, int d) {
  const VarSet& src = theta.source();
  LaurentPoly tp = theta.apply_laurent(pi.embed(src));
  if (tp.is_zero() || bad_term(tp, 1)) throw WitnessError("theta(pi) is not in x1*k[x]");
  LaurentPoly tf = theta.apply_laurent(f.embed(src));
  int lo = tf.is_zero() ? 0 : std::min(0, ord_x1(tf));
  // ord(theta(pi)) >= 1, so this e always suffices.
  int e_max = 1 + std::max(0, -(d - 1) * lo);
  std::vector<LaurentPoly> fpow{LaurentPoly::constant(tf.vars(), Rat(1))};
  for (int i = 1; i < d; ++i) fpow.push_back(fpow.back() * tf);
  LaurentPoly pe = tp;
  for (int e = 1; e <= e_max; ++e, pe = pe * tp) {
    bool ok = std::all_of(fpow.begin(), fpow.end(), [&pe](const LaurentPoly& q) { return (pe * q).is_polynomial(); });
    if (ok) return e;
  }
  throw MathError("no admissible e found");
}

LaurentPoly linear_part(const LaurentPoly& f) {
  LaurentPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    int s = 0;
    bool nonneg = true;
    for (int x : e) {
      s += x;
      if (x < 0) nonneg = false;
    }
    if (nonneg && s == 1) r.add_term(e, c);
  }
  return r;
}

int jacobian_rank_at(const std::vector<LaurentPoly>& fs, const std::vector<Rat>& a) {
  RatMatrix m;
  for (const auto& f : fs) {
    RatVector row;
    for (size_t j = 0; j < f.vars().size(); ++j) row.push_back(evaluate_at(f.derivative(j), a));
    m.push_back(std::move(row));
  }
  return static_cast<int>(rank(m));
}

WitnessValidation validate_pack(const WitnessPack& pack, const WitnessOptions& opts) {
  WitnessValidation out;
  Report& rep = out.report;
  const int n = pack.n;

  bool shape_ok = n >= 2;
  std::string shape_detail = shape_ok ? "" : "need n >= 2";
  const VarSet xv = shape_ok ? x_vars(n) : VarSet();
  if (shape_ok) {
    auto over = [&xv](const LaurentPoly& p) { return p.vars() == xv; };
    if (!over(pack.f) || !over(pack.g) || !std::all_of(pack.r_gens.begin(), pack.r_gens.end(), over)) {
      shape_ok = false;
      shape_detail = "polynomials must be over x1..x" + std::to_string(n);
    } else if (!pack.f.is_polynomial() || !pack.g.is_polynomial() ||
               !std::all_of(pack.r_gens.begin(), pack.r_gens.end(),
                            [](const LaurentPoly& p) { return p.is_polynomial(); })) {
      shape_ok = false;
      shape_detail = "f, g and the R generators must lie in k[x]";
    }
  }
  rep.add("pack.shape", shape_ok, shape_detail);
  if (!shape_ok) return out;

  if (pack.f_expr || pack.g_expr) {
    Substitution s(gen_vars(pack.r_gens.size()), xv, pack.r_gens);
    auto check = [&](const std::optional<LaurentPoly>& ex, const LaurentPoly& target, const char* name) {
      if (!ex) return;
      bool ok = false;
      std::string det;
      try {
        ok = ex->is_polynomial() && subst_laurent(ex->embed(s.source), s) == target;
        if (!ok) det = std::string(name) + " expression does not evaluate to " + name;
      } catch (const std::exception& e) {
        det = e.what();
      }
      rep.add(std::string(name) + "_in_R", ok, det);
    };
    check(pack.f_expr, pack.f, "f");
    check(pack.g_expr, pack.g, "g");
    if (!rep.all_pass()) return out;
  } else {
    rep.note("f_g_in_R", "asserted");
  }

  LaurentPoly eg = eps(pack.g);
  bool g_ok = !eg.is_constant();
  rep.add("eps_g_nonconstant", g_ok, g_ok ? "" : "eps(g) = " + eg.to_string());
  if (!g_ok) return out;

  LaurentPoly h;
  try {
    h = compute_h(pack.f, pack.g);
    rep.add("h_exact", true, "h = " + h.to_string());
  } catch (const MathError& e) {
    rep.add("h_exact", false, e.what());
    return out;
  }
  if (pack.h) {
    bool ok = pack.h->embed(xv) == h;
    rep.add("h_matches", ok, ok ? "" : "supplied h = " + pack.h->to_string() + ", computed " + h.to_string());
    if (!ok) return out;
  }

  std::vector<LaurentPoly> eps_gens;
  for (const auto& r : pack.r_gens) eps_gens.push_back(eps(r));
  int min_ord = INT_MAX;
  for (const auto& e : eps_gens) {
    LaurentPoly s = e - LaurentPoly::constant(xv, e.coeff(Exponents(static_cast<size_t>(n), 0)));
    if (!s.is_zero()) min_ord = std::min(min_ord, ord_x1(s));
  }
  const int hdeg = h.is_zero() ? 0 : deg_in(h, "x1");
  const int bound = std::max({opts.semigroup_bound, hdeg, min_ord == INT_MAX ? 0 : 2 * min_ord});
  {
    bool ok = excluded_from_subalgebra(h, eps_gens, bound);
    rep.add("h_not_in_Rbar", ok,
            ok ? "" : "could not exclude h from eps(R) modulo x1^" + std::to_string(bound + 1));
    if (!ok) return out;
  }
  {
    bool ok = false;
    std::string det;
    if (min_ord == INT_MAX) {
      det = "eps(R) = k is normal";
    } else {
      SemigroupTable tab = semigroup_orders(eps_gens, bound);
      ok = !is_normal(tab);
      std::string orders;
      for (int o : tab.orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
      det = "orders up to " + std::to_string(bound) + ": {" + orders + "}";
    }
    rep.add("Rbar_not_normal", ok, det);
    if (!ok) return out;
  }

  UniPoly pi_poly;
  if (pack.pi_poly) {
    std::string why;
    bool ok = pi_annihilates(*pack.pi_poly, pack.f, pack.g, &why);
    rep.add("Pi_monic_annihilates", ok, why);
    if (!ok) return out;
    pi_poly = *pack.pi_poly;
  } else {
    try {
      pi_poly = build_pi(pack.f, pack.g);
      rep.add("Pi_monic_annihilates", true, "built by resultant");
    } catch (const MathError& e) {
      rep.add("Pi_monic_annihilates", false, e.what());
      return out;
    }
  }
  const int d = pi_poly.degree();
  LaurentPoly pi = realize_pi(pi_poly, pack.f, pack.g);
  rep.add("pi_nonzero", !pi.is_zero(), pi.is_zero() ? "Pi(f)|_{G=g} = 0" : "");
  if (pi.is_zero()) return out;

  LaurentPoly fgh = pack.f - pack.g * h;
  bool k1 = in_ker_epsilon(fgh), k2 = in_ker_epsilon(pi);
  rep.add("f_minus_gh_in_ker_eps", k1, k1 ? "" : "eps(f - g*h) = " + eps(fgh).to_string());
  rep.add("pi_in_ker_eps", k2, k2 ? "" : "eps(pi) = " + eps(pi).to_string());
  if (!k1 || !k2) return out;

  std::vector<int> t;
  if (opts.t_override) t = *opts.t_override;
  else if (pack.t) t = *pack.t;
  else t = choose_t(pack.f, pack.g, h, pi);
  bool t_ok = t.size() == static_cast<size_t>(n - 1);
  rep.add("t_shape", t_ok, t_ok ? "" : "t needs " + std::to_string(n - 1) + " entries");
  if (!t_ok) return out;
  {
    std::string ts;
    for (int v : t) ts += (ts.empty() ? "" : ",") + std::to_string(v);
    rep.note("t", "(" + ts + ")");
  }

  RingMap theta = theta_build(t, h, true);
  DdagResult dd = check_ddag(theta, pack.f, pack.g, h, pi);
  rep.add("ddag.f_minus_gh", dd.f_minus_gh_polynomial, dd.f_minus_gh_detail);
  rep.add("ddag.pi", dd.pi_in_x1_ideal, dd.pi_detail);
  if (!dd.holds()) return out;

  const VarSet xz = theta.source();
  LaurentPoly th_f = theta.apply_laurent(pack.f.embed(xz));
  LaurentPoly th_pi = theta.apply_laurent(pi.embed(xz));
  int e = choose_e(theta, pi, pack.f, d);
  if (pack.e) {
    int bad_i = 0;
    bool ok = e_condition_holds(th_pi, th_f, d, *pack.e, &bad_i);
    rep.add("e_conditions", ok,
            ok ? "e = " + std::to_string(*pack.e)
               : "theta(pi)^" + std::to_string(*pack.e) + " * theta(f)^" + std::to_string(bad_i) +
                     " has a negative exponent");
    if (!ok) return out;
    if (*pack.e != e) rep.note("e_minimal", std::to_string(e));
    e = *pack.e;
  } else {
    rep.add("e_conditions", true, "e = " + std::to_string(e) + " (least admissible)");
  }

  LaurentPoly th_pi_e = th_pi.pow(static_cast<unsigned>(e));
  {
    // theta(pi)^e is a nonzero element of x1*k[x,z].
    bool ok = !th_pi_e.is_zero() && !bad_term(th_pi_e, 1);
    rep.add("theta_pi_e_in_x1_ideal", ok);
    if (!ok) return out;
  }

  ResolvedWitness w;
  w.n = n;
  w.f = pack.f;
  w.g = pack.g;
  w.h = h;
  w.pi = pi;
  w.pi_poly = pi_poly;
  w.d = d;
  w.t = t;
  w.e = e;
  w.theta = theta;
  w.th_f = th_f;
  w.th_g = theta.apply_laurent(pack.g.embed(xz));
  w.th_pi = th_pi;
  w.th_h = theta.apply_laurent(h.embed(xz));
  w.th_pi_e = th_pi_e;
  w.pack = pack;
  w.pack.h = h;
  w.pack.pi_poly = pi_poly;
  w.pack.t = t;
  w.pack.e = e;
  out.resolved = std::move(w);
  return out;
}

}  // namespace h14
