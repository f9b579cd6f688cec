#pragma once

#include <utility>
#include <vector>

#include "h14/laurent_poly.hpp"

namespace h14 {

/// Polynomial in an abstract indeterminate Z with Laurent-polynomial
/// coefficients; coeffs[i] multiplies Z^i. Trailing zeros are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(VarSet coeff_vars) : vars_(std::move(coeff_vars)) {}
  UniPoly(VarSet coeff_vars, std::vector<LaurentPoly> coeffs);

  const VarSet& coeff_vars() const { return vars_; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPoly coeff(int i) const;
  const LaurentPoly& leading() const;
  bool is_monic() const;

  /// Horner evaluation at Z = x (x over the coefficient variables).
  LaurentPoly evaluate(const LaurentPoly& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  VarSet vars_;
  std::vector<LaurentPoly> coeffs_;
};

/// Views p as a polynomial in its variable `v`; the coefficients keep the
/// remaining variables (v's exponent set to zero). Requires v non-negative.
UniPoly to_unipoly(const LaurentPoly& p, size_t v);

/// Division by a monic divisor: a = b*quot + rem with deg rem < deg b.
std::pair<UniPoly, UniPoly> unipoly_divmod(const UniPoly& a, const UniPoly& b);

/// Sylvester matrix: deg(b) shifted rows of a, then deg(a) shifted rows of b,
/// coefficients from the highest power down.
std::vector<std::vector<LaurentPoly>> sylvester_matrix(const UniPoly& a, const UniPoly& b);

/// Determinant of a square polynomial matrix by fraction-free Bareiss
/// elimination.
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, const VarSet& vars);

/// Resultant with respect to the abstract indeterminate.
LaurentPoly resultant(const UniPoly& a, const UniPoly& b);

}  // namespace h14
