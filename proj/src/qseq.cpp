#include "h14/qseq.hpp"

#include "h14/errors.hpp"

namespace h14 {

FGElement FVec::at(int k) const {
  if (k == 0) return fg_one();
  if (k < 0 || k > l()) throw StructuralError("f index out of range");
  return entries[static_cast<size_t>(k - 1)];
}

FGElement next_fvec_entry(const FVec& prev, const UniPoly& pi_poly, FGElement* p_neg) {
  const int l = prev.l() + 1;
  FGElement p(fg_vars());
  for (int j = 1; j <= l; ++j) p += prev.at(l - j) * fg_term(factorial(static_cast<unsigned>(j)).inverse(), j, 0, -j);
  auto [pos, neg] = decompose(p, pi_poly);
  if (p_neg) *p_neg = neg;
  return -pos;
}

FGElement p_at_r(int i, const FVec& fv, int e) {
  if (i < 0 || i > fv.l()) throw StructuralError("P index out of range");
  FGElement acc(fg_vars());
  for (int k = 0; k <= i; ++k)
    acc += fv.at(k) * fg_term(factorial(static_cast<unsigned>(i - k)).inverse(), i - k, e, -(i - k));
  return acc;
}

std::vector<FGElement> p_abstract(int i, const FVec& fv, int e) {
  if (i < 0 || i > fv.l()) throw StructuralError("P index out of range");
  std::vector<FGElement> c;
  for (int k = 0; k <= i; ++k) c.push_back(fv.at(i - k) * fg_term(factorial(static_cast<unsigned>(k)).inverse(), 0, e, 0));
  return c;
}

QSeqContext::QSeqContext(const ResolvedWitness& w)
    : w_(w), xz_(xz_vars(w.n)), real_(w.th_f, w.th_g, w.th_pi), eps_(epsilon_map(w.n, true)) {
  zs_.push_back(LaurentPoly::constant(xz_, Rat(1)));
}

bool QSeqContext::theta_in_localization(const FGElement& p, int* valuation) const {
  RatFunc r = real_.realize(p);
  if (r.is_zero()) return true;
  int v = v_x1(r);
  if (valuation) *valuation = v;
  return v >= 0;
}

LaurentPoly QSeqContext::theta_polynomial(const FGElement& p) const { return real_.realize_polynomial(p); }

RatFunc QSeqContext::theta_rational(const FGElement& p) const { return real_.realize(p); }

void QSeqContext::extend(FVec& fv) const {
  fv.entries.push_back(next_fvec_entry(fv, w_.pi_poly));
  int v = 0;
  if (!theta_in_localization(p_at_r(fv.l(), fv, w_.e), &v))
    throw WitnessError("theta(P_" + std::to_string(fv.l()) + "(r)) has x1-valuation " + std::to_string(v));
}

const LaurentPoly& QSeqContext::z_shift_power(int k) const {
  const LaurentPoly base = LaurentPoly::variable(xz_, "z") + w_.th_h;
  while (zs_.size() <= static_cast<size_t>(k)) zs_.push_back(zs_.back() * base);
  return zs_[static_cast<size_t>(k)];
}

LaurentPoly QSeqContext::q(int l, const FVec& fv) const {
  if (l > fv.l()) throw StructuralError("fvec too short for q");
  LaurentPoly acc(xz_);
  for (int k = 0; k <= l; ++k) {
    LaurentPoly c = w_.th_pi_e * theta_polynomial(fv.at(k));
    acc += factorial(static_cast<unsigned>(l - k)).inverse() * (c * z_shift_power(l - k));
  }
  return acc;
}

QChecks QSeqContext::check_q(int l, const LaurentPoly& q) const {
  QChecks r;
  const size_t zi = xz_.require("z");
  auto add = [&r](const std::string& s) { r.detail += (r.detail.empty() ? "" : "; ") + s; };

  r.polynomial = q.is_polynomial();
  if (!r.polynomial) {
    for (const auto& [e, c] : q.terms()) {
      bool bad = false;
      for (int x : e) bad = bad || x < 0;
      if (bad) {
        add("z^" + std::to_string(e[zi]) + " coefficient has the term " + LaurentPoly::monomial(xz_, e, c).to_string());
        break;
      }
    }
  }
  LaurentPoly lq = factorial(static_cast<unsigned>(l)) * q;
  LaurentPoly zl = LaurentPoly::monomial(xz_, [&] {
    Exponents e(xz_.size(), 0);
    e[zi] = l;
    return e;
  }());
  LaurentPoly diff = lq - w_.th_pi_e * zl;
  r.degree_ok = diff.is_zero() || diff.degree(zi) < l;
  if (!r.degree_ok) add("deg_z(l! q - theta(pi)^e z^l) = " + std::to_string(diff.degree(zi)));
  r.leading_ok = lq.coefficient_in(zi, l) == w_.th_pi_e;
  if (!r.leading_ok) add("z^l coefficient of l! q differs from theta(pi)^e");
  try {
    LaurentPoly eq = eps_.apply_laurent(q);
    r.eps_constant = eq.is_constant();
    if (!r.eps_constant) add("eps(q) = " + eq.to_string());
  } catch (const MathError& ex) {
    add(std::string("eps(q) undefined: ") + ex.what());
  }
  return r;
}

bool QSeqContext::shifted_coefficient_polynomial(const FVec& fv, int k) const {
  return (w_.th_pi_e * theta_polynomial(fv.at(k))).is_polynomial();
}

bool QSeqContext::taylor_identity(int l, const FVec& fv, std::string* diag) const {
  // Everything is brought over the common denominator theta(g)^M.
  const LaurentPoly& tg = w_.th_g;
  const LaurentPoly w_num = LaurentPoly::variable(xz_, "z") * tg - (w_.th_f - tg * w_.th_h);
  std::vector<FGElement> pr;
  int M = 0;
  for (int i = 0; i <= l; ++i) {
    pr.push_back(p_at_r(l - i, fv, w_.e));
    M = std::max(M, FGRealizer::g_denominator_power(pr.back()) + i);
  }
  std::vector<LaurentPoly> tgp{LaurentPoly::constant(xz_, Rat(1))};
  while (tgp.size() <= static_cast<size_t>(M)) tgp.push_back(tgp.back() * tg);
  LaurentPoly rhs(xz_), wp = LaurentPoly::constant(xz_, Rat(1));
  for (int i = 0; i <= l; ++i) {
    int a = FGRealizer::g_denominator_power(pr[static_cast<size_t>(i)]);
    LaurentPoly term = real_.numerator_over(pr[static_cast<size_t>(i)], a) * wp * tgp[static_cast<size_t>(M - a - i)];
    rhs += factorial(static_cast<unsigned>(i)).inverse() * term;
    wp = wp * w_num;
  }
  LaurentPoly lhs = q(l, fv) * tgp[static_cast<size_t>(M)];
  bool ok = lhs == rhs;
  if (!ok && diag) *diag = "Taylor identity fails at l = " + std::to_string(l);
  return ok;
}

FVec build_fvec(int l, const ResolvedWitness& w) {
  if (l < 0) throw StructuralError("l must be non-negative");
  QSeqContext ctx(w);
  FVec fv;
  while (fv.l() < l) ctx.extend(fv);
  return fv;
}

LaurentPoly build_q(int l, const ResolvedWitness& w, const FVec& fv) {
  QSeqContext ctx(w);
  LaurentPoly q = ctx.q(l, fv);
  if (!q.is_polynomial()) {
    const size_t zi = ctx.vars().require("z");
    for (const auto& [e, c] : q.terms())
      for (int x : e)
        if (x < 0)
          throw WitnessError("q_" + std::to_string(l) + ": z^" + std::to_string(e[zi]) +
                             " coefficient is not a polynomial");
  }
  return q;
}

bool taylor_identity_check(int l, const ResolvedWitness& w, const FVec& fv, std::string* diag) {
  return QSeqContext(w).taylor_identity(l, fv, diag);
}

}  // namespace h14
