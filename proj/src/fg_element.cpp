#include "h14/fg_element.hpp"

#include <algorithm>

#include "h14/errors.hpp"

namespace h14 {

VarSet fg_vars() {
  static const VarSet v(std::vector<std::string>{"f", "pi", "g"}, {false, false, true});
  return v;
}

FGElement fg_term(const Rat& c, int i, int j, int m) { return LaurentPoly::monomial(fg_vars(), {i, j, m}, c); }

FGElement fg_one() { return LaurentPoly::constant(fg_vars(), Rat(1)); }

bool in_fg_ring(const FGElement& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.first[1] == 0 && t.first[2] >= 0; });
}

bool in_n_module(const FGElement& p, int d) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [d](const auto& t) { return t.first[0] < d && t.first[2] < 0; });
}

bool is_reduced(const FGElement& p, int d) {
  return std::all_of(p.terms().begin(), p.terms().end(), [d](const auto& t) { return t.first[0] < d; });
}

namespace {

void require_monic(const UniPoly& pi_poly) {
  if (pi_poly.degree() < 1 || !pi_poly.is_monic()) throw MathError("Pi must be monic of degree >= 1");
  for (const auto& c : pi_poly.coeffs())
    if (!c.is_polynomial() || c.vars().size() != 1) throw MathError("Pi coefficients must lie in k[G]");
}

// Terms b*G^a of the k-th coefficient of Pi, for k < d.
std::vector<std::vector<std::pair<int, Rat>>> lower_coeffs(const UniPoly& pi_poly) {
  std::vector<std::vector<std::pair<int, Rat>>> out(static_cast<size_t>(pi_poly.degree()));
  for (int k = 0; k < pi_poly.degree(); ++k) {
    const LaurentPoly ck = pi_poly.coeff(k);
    for (const auto& [e, c] : ck.terms()) out[static_cast<size_t>(k)].emplace_back(e[0], c);
  }
  return out;
}

}  // namespace

FGElement pi_in_fg(const UniPoly& pi_poly) {
  require_monic(pi_poly);
  FGElement r(fg_vars());
  for (int k = 0; k <= pi_poly.degree(); ++k) {
    const LaurentPoly ck = pi_poly.coeff(k);
    for (const auto& [e, c] : ck.terms()) r.add_term({k, 0, e[0]}, c);
  }
  return r;
}

FGElement reduce_mod_pi(const FGElement& p, const UniPoly& pi_poly) {
  require_monic(pi_poly);
  if (!(p.vars() == fg_vars())) throw StructuralError("reduce_mod_pi expects an FG element");
  const int d = pi_poly.degree();
  const auto low = lower_coeffs(pi_poly);
  FGElement work = p;
  // Terms are in descending (i, j, m) order, so the first term has the largest i.
  while (!work.is_zero() && work.terms().begin()->first[0] >= d) {
    const Exponents e = work.terms().begin()->first;
    const Rat c = work.terms().begin()->second;
    work.add_term(e, -c);
    const int i = e[0] - d, j = e[1], m = e[2];
    work.add_term({i, j + 1, m}, c);
    for (int k = 0; k < d; ++k)
      for (const auto& [a, b] : low[static_cast<size_t>(k)]) work.add_term({i + k, j, m + a}, -c * b);
  }
  return work;
}

std::pair<FGElement, FGElement> decompose(const FGElement& p, const UniPoly& pi_poly) {
  const FGElement r = reduce_mod_pi(p, pi_poly);
  const FGElement pi_fg = pi_in_fg(pi_poly);
  std::vector<FGElement> pi_pow{fg_one()};
  FGElement pos(fg_vars()), neg(fg_vars());
  for (const auto& [e, c] : r.terms()) {
    if (e[2] < 0) {
      neg.add_term(e, c);
      continue;
    }
    while (pi_pow.size() <= static_cast<size_t>(e[1])) pi_pow.push_back(pi_pow.back() * pi_fg);
    pos += fg_term(c, e[0], 0, e[2]) * pi_pow[static_cast<size_t>(e[1])];
  }
  return {pos, neg};
}

FGRealizer::FGRealizer(LaurentPoly f, LaurentPoly g, LaurentPoly pi)
    : f_(std::move(f)), g_(std::move(g)), pi_(std::move(pi)) {
  if (!(f_.vars() == g_.vars()) || !(f_.vars() == pi_.vars()))
    throw StructuralError("realizer images must share a variable set");
  LaurentPoly one = LaurentPoly::constant(f_.vars(), Rat(1));
  fp_ = gp_ = pp_ = {one};
}

const LaurentPoly& FGRealizer::power(std::vector<LaurentPoly>& cache, const LaurentPoly& base, int k) const {
  while (cache.size() <= static_cast<size_t>(k)) cache.push_back(cache.back() * base);
  return cache[static_cast<size_t>(k)];
}

int FGRealizer::g_denominator_power(const FGElement& p) {
  int lo = 0;
  for (const auto& [e, c] : p.terms()) lo = std::min(lo, e[2]);
  return -lo;
}

LaurentPoly FGRealizer::numerator_over(const FGElement& p, int m) const {
  if (m < g_denominator_power(p)) throw StructuralError("denominator power too small");
  LaurentPoly acc(f_.vars());
  for (const auto& [e, c] : p.terms())
    acc += c * (power(fp_, f_, e[0]) * power(pp_, pi_, e[1]) * power(gp_, g_, e[2] + m));
  return acc;
}

RatFunc FGRealizer::realize(const FGElement& p) const {
  int m = g_denominator_power(p);
  return RatFunc(numerator_over(p, m), power(gp_, g_, m));
}

LaurentPoly FGRealizer::realize_polynomial(const FGElement& p) const {
  if (g_denominator_power(p) > 0) throw MathError("element has negative powers of g");
  return numerator_over(p, 0);
}

}  // namespace h14
