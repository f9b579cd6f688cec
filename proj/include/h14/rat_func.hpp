#pragma once

#include <optional>

#include "h14/laurent_poly.hpp"

namespace h14 {

/// Quotient num/den of Laurent polynomials. Fractions are never reduced;
/// equality is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(LaurentPoly num);
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  /// The value as a Laurent polynomial when the denominator is a constant or
  /// an invertible monomial.
  std::optional<LaurentPoly> as_laurent() const;
  RatFunc inverse() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Valuation at the variable `var` (x1 by default): ord(num) - ord(den).
/// Membership in the localization at the prime (var) holds iff it is >= 0.
int v_x1(const RatFunc& q, std::string_view var = "x1");

}  // namespace h14
