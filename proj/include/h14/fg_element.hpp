#pragma once

#include <utility>
#include <vector>

#include "h14/laurent_poly.hpp"
#include "h14/rat_func.hpp"
#include "h14/uni_poly.hpp"

namespace h14 {

/// Variables f, pi, g (g invertible) of k[f, pi, g, 1/g]. An element's term
/// f^i pi^j g^m has exponent vector (i, j, m).
VarSet fg_vars();

/// Elements of k[f, g, 1/g] written with an explicit pi symbol.
using FGElement = LaurentPoly;

FGElement fg_term(const Rat& c, int i, int j, int m);
FGElement fg_one();

/// No pi and no negative power of g: an element of k[f, g].
bool in_fg_ring(const FGElement& p);
/// Every term has i < d and m < 0: an element of N = sum_{i<d} f^i k[pi, 1/g].
bool in_n_module(const FGElement& p, int d);
/// Every term has i < d.
bool is_reduced(const FGElement& p, int d);

/// Pi(f) expanded in k[f, g].
FGElement pi_in_fg(const UniPoly& pi_poly);

/// Rewrites f^d = pi - sum_{k<d} c_k(g) f^k until every f-exponent is below d.
/// Throws MathError unless Pi is monic of degree >= 1 over k[G].
FGElement reduce_mod_pi(const FGElement& p, const UniPoly& pi_poly);

/// p = p_poly + p_neg with p_poly in k[f, g] (pi expanded back) and p_neg in N.
std::pair<FGElement, FGElement> decompose(const FGElement& p, const UniPoly& pi_poly);

/// Evaluates FG elements at concrete f, g, pi. Keeps power caches, so one
/// instance should not be shared between threads.
class FGRealizer {
 public:
  FGRealizer(LaurentPoly f, LaurentPoly g, LaurentPoly pi);

  const VarSet& vars() const { return f_.vars(); }
  /// max(0, -least g-exponent).
  static int g_denominator_power(const FGElement& p);
  /// Numerator N with realize(p) = N / g^m; requires m >= g_denominator_power(p).
  LaurentPoly numerator_over(const FGElement& p, int m) const;
  RatFunc realize(const FGElement& p) const;
  /// Realization of an element with no negative g-powers.
  LaurentPoly realize_polynomial(const FGElement& p) const;

 private:
  const LaurentPoly& power(std::vector<LaurentPoly>& cache, const LaurentPoly& base, int k) const;

  LaurentPoly f_, g_, pi_;
  mutable std::vector<LaurentPoly> fp_, gp_, pp_;
};

}  // namespace h14
