#include "h14/uni_poly.hpp"

#include "h14/errors.hpp"

namespace h14 {

UniPoly::UniPoly(VarSet coeff_vars, std::vector<LaurentPoly> coeffs)
    : vars_(std::move(coeff_vars)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.vars() == vars_)) throw StructuralError("coefficient over the wrong variable set");
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return LaurentPoly(vars_);
  return coeffs_[static_cast<size_t>(i)];
}

const LaurentPoly& UniPoly::leading() const {
  if (coeffs_.empty()) throw MathError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool UniPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().constant_value() == Rat(1);
}

LaurentPoly UniPoly::evaluate(const LaurentPoly& x) const {
  if (!(x.vars() == vars_)) throw StructuralError("evaluation point over the wrong variable set");
  LaurentPoly acc(vars_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (!(a.vars_ == b.vars_)) throw StructuralError("univariate polynomials over different coefficient rings");
  std::vector<LaurentPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()), LaurentPoly(a.vars_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(a.vars_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  if (!(a.vars_ == b.vars_)) throw StructuralError("univariate polynomials over different coefficient rings");
  std::vector<LaurentPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()), LaurentPoly(a.vars_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UniPoly(a.vars_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.vars_ == b.vars_)) throw StructuralError("univariate polynomials over different coefficient rings");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.vars_);
  std::vector<LaurentPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, LaurentPoly(a.vars_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(a.vars_, std::move(c));
}

UniPoly to_unipoly(const LaurentPoly& p, size_t v) {
  std::vector<LaurentPoly> coeffs;
  if (!p.is_zero()) {
    if (p.min_degree(v) < 0) throw MathError("negative power of the main variable");
    int deg = p.degree(v);
    for (int k = 0; k <= deg; ++k) coeffs.push_back(p.coefficient_in(v, k));
  }
  return UniPoly(p.vars(), std::move(coeffs));
}

std::pair<UniPoly, UniPoly> unipoly_divmod(const UniPoly& a, const UniPoly& b) {
  if (!(a.coeff_vars() == b.coeff_vars())) throw StructuralError("univariate polynomials over different coefficient rings");
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  if (!b.is_monic()) throw MathError("divisor is not monic");
  const VarSet& vars = a.coeff_vars();
  std::vector<LaurentPoly> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  std::vector<LaurentPoly> quot(da >= db ? static_cast<size_t>(da - db + 1) : 0, LaurentPoly(vars));
  for (int k = da; k >= db; --k) {
    LaurentPoly c = rem[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    quot[static_cast<size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
  }
  if (rem.size() > static_cast<size_t>(std::max(db, 0))) rem.resize(static_cast<size_t>(std::max(db, 0)), LaurentPoly(vars));
  return {UniPoly(vars, std::move(quot)), UniPoly(vars, std::move(rem))};
}

std::vector<std::vector<LaurentPoly>> sylvester_matrix(const UniPoly& a, const UniPoly& b) {
  if (!(a.coeff_vars() == b.coeff_vars())) throw StructuralError("univariate polynomials over different coefficient rings");
  if (a.is_zero() || b.is_zero()) throw MathError("resultant of the zero polynomial");
  const VarSet& vars = a.coeff_vars();
  const int m = a.degree();
  const int n = b.degree();
  const int size = m + n;
  std::vector<std::vector<LaurentPoly>> s(static_cast<size_t>(size),
                                          std::vector<LaurentPoly>(static_cast<size_t>(size), LaurentPoly(vars)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = b.coeff(n - k);
  return s;
}

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, const VarSet& vars) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(vars, Rat(1));
  bool negate = false;
  LaurentPoly prev = LaurentPoly::constant(vars, Rat(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return LaurentPoly(vars);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_div(t, prev);
        if (!q) throw MathError("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly(vars);
    }
    prev = m[k][k];
  }
  LaurentPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

LaurentPoly resultant(const UniPoly& a, const UniPoly& b) {
  return bareiss_det(sylvester_matrix(a, b), a.coeff_vars());
}

}  // namespace h14
