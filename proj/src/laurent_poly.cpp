#include "h14/laurent_poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "h14/errors.hpp"

namespace h14 {

LaurentPoly LaurentPoly::constant(VarSet vars, const Rat& c) {
  LaurentPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, size_t index) {
  if (index >= vars.size()) throw StructuralError("variable index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

LaurentPoly LaurentPoly::variable(VarSet vars, std::string_view name) {
  size_t i = vars.require(name);
  return variable(std::move(vars), i);
}

LaurentPoly LaurentPoly::monomial(VarSet vars, Exponents e, const Rat& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rat> LaurentPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

bool LaurentPoly::is_invertible_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !vars_.is_laurent(i)) return false;
  return true;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

Rat LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size()) throw StructuralError("exponent vector has wrong length");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && !vars_.is_laurent(i))
      throw StructuralError("negative exponent on non-Laurent variable '" + vars_.name(i) + "'");
  add_unchecked(e, c);
}

void LaurentPoly::add_unchecked(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int LaurentPoly::min_degree(size_t i) const {
  if (terms_.empty()) throw MathError("order of the zero polynomial is undefined");
  if (i >= vars_.size()) throw StructuralError("variable index out of range");
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

int LaurentPoly::degree(size_t i) const {
  if (terms_.empty()) throw MathError("degree of the zero polynomial is undefined");
  if (i >= vars_.size()) throw StructuralError("variable index out of range");
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

int LaurentPoly::total_degree() const {
  if (terms_.empty()) throw MathError("degree of the zero polynomial is undefined");
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    m = std::max(m, s);
  }
  return m;
}

LaurentPoly LaurentPoly::coefficient_in(size_t v, int k) const {
  if (v >= vars_.size()) throw StructuralError("variable index out of range");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponents e2 = e;
    e2[v] = 0;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

LaurentPoly LaurentPoly::derivative(size_t v) const {
  if (v >= vars_.size()) throw StructuralError("variable index out of range");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents e2 = e;
    e2[v] -= 1;
    r.add_unchecked(e2, c * Rat(e[v]));
  }
  return r;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_invertible_monomial()) throw MathError("polynomial is not an invertible monomial");
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e.size());
  for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
  LaurentPoly r(vars_);
  r.terms_.emplace(std::move(ne), c.inverse());
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(vars_, Rat(1));
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::embed(const VarSet& target) const {
  if (target == vars_) return *this;
  std::vector<size_t> map(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto j = target.index_of(vars_.name(i));
    if (!j) {
      bool used = std::any_of(terms_.begin(), terms_.end(),
                              [i](const auto& t) { return t.first[i] != 0; });
      if (used)
        throw StructuralError("variable '" + vars_.name(i) + "' missing from target variable set");
      map[i] = SIZE_MAX;
      continue;
    }
    map[i] = *j;
  }
  LaurentPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents e2(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (map[i] != SIZE_MAX) e2[map[i]] = e[i];
    r.add_term(e2, c);
  }
  return r;
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
  if (!(vars_ == o.vars_)) throw StructuralError("polynomials over different variable sets");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_unchecked(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_unchecked(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_vars(b);
  LaurentPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const size_t n = a.vars_.size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.try_emplace(e, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool wrote = false;
    if (!mag.is_one() || !has_var) {
      os << mag.to_short_string();
      wrote = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_.name(i);
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw StructuralError("unknown polynomial operation");
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.vars() == b.vars())) throw StructuralError("polynomials over different variable sets");
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  const VarSet& vars = a.vars();
  LaurentPoly q(vars);
  if (a.is_zero()) return q;
  const size_t n = vars.size();
  // If a = q*b then per variable min(q) = min(a) - min(b) and max(q) = max(a) - max(b).
  std::vector<int> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = a.min_degree(i) - b.min_degree(i);
    hi[i] = a.degree(i) - b.degree(i);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto& [lead_e, lead_c] = *b.terms().begin();
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    Exponents qe(n);
    for (size_t i = 0; i < n; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
      if (qe[i] < 0 && !vars.is_laurent(i)) return std::nullopt;
    }
    LaurentPoly step = LaurentPoly::monomial(vars, qe, rc / lead_c);
    q += step;
    rem -= step * b;
  }
  return q;
}

int ord_x1(const LaurentPoly& p) {
  return p.min_degree(p.vars().require("x1"));
}

int deg_in(const LaurentPoly& p, std::string_view var) {
  return p.degree(p.vars().require(var));
}

}  // namespace h14

namespace h14 {

Rat evaluate_at(const LaurentPoly& p, const std::vector<Rat>& point) {
  if (point.size() != p.vars().size()) throw StructuralError("evaluation point has the wrong dimension");
  Rat sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0) {
        if (point[i].is_zero()) throw MathError("negative power of a variable evaluated at 0");
        t *= point[i].inverse().pow(static_cast<unsigned>(-e[i]));
      } else {
        t *= point[i].pow(static_cast<unsigned>(e[i]));
      }
    }
    sum += t;
  }
  return sum;
}

}  // namespace h14
