#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h14/rat.hpp"
#include "h14/varset.hpp"

namespace h14 {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q whose Laurent-flagged variables may
/// carry negative exponents. Terms are kept in lexicographically descending
/// exponent order; no stored coefficient is zero.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rat, std::greater<>>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(VarSet vars, const Rat& c);
  static LaurentPoly variable(VarSet vars, size_t index);
  static LaurentPoly variable(VarSet vars, std::string_view name);
  static LaurentPoly monomial(VarSet vars, Exponents e, const Rat& c = Rat(1));

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant value if the polynomial is constant (zero counts).
  std::optional<Rat> constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Single term whose inverse is representable over the same variables.
  bool is_invertible_monomial() const;
  /// No negative exponent on any variable.
  bool is_polynomial() const;

  Rat coeff(const Exponents& e) const;
  /// Adds c * x^e, validating exponent count and Laurent flags.
  void add_term(const Exponents& e, const Rat& c);

  /// Minimum exponent of variable i over all terms. Throws on zero.
  int min_degree(size_t i) const;
  /// Maximum exponent of variable i over all terms. Throws on zero.
  int degree(size_t i) const;
  /// Maximal total degree (sum of exponents). Throws on zero.
  int total_degree() const;

  /// Coefficient of v^k viewed as a polynomial in variable v.
  LaurentPoly coefficient_in(size_t v, int k) const;
  LaurentPoly derivative(size_t v) const;
  /// Inverse of an invertible monomial.
  LaurentPoly monomial_inverse() const;
  LaurentPoly pow(unsigned k) const;
  /// Re-expresses the polynomial over `target`, matching variables by name.
  LaurentPoly embed(const VarSet& target) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "x1^5*x2 + x1^-2", in canonical term order.
  std::string to_string() const;

 private:
  void check_same_vars(const LaurentPoly& o) const;
  void add_unchecked(const Exponents& e, const Rat& c);

  VarSet vars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };
/// Ring arithmetic on two polynomials over the same variables.
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

/// Exact quotient a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// x1-adic order: minimum exponent of x1 over all terms. Throws on zero.
int ord_x1(const LaurentPoly& p);
/// Maximum exponent of the named variable. Throws on zero.
int deg_in(const LaurentPoly& p, std::string_view var);

/// Value at a rational point (one coordinate per variable). Throws MathError
/// when a negative power meets a zero coordinate.
Rat evaluate_at(const LaurentPoly& p, const std::vector<Rat>& point);

}  // namespace h14
