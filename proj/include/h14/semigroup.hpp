#pragma once

#include <set>
#include <vector>

#include "h14/laurent_poly.hpp"
#include "h14/linalg.hpp"

namespace h14 {

/// Orders of the nonzero elements of a subalgebra A of k[x1], up to `bound`.
struct SemigroupTable {
  int bound = 0;
  std::set<int> orders;
  /// Echelon of the truncated span of A, pivots at lowest order.
  Echelon basis_echelon{0};
};

/// Exact order set {ord p : p in A, ord p <= bound} for A = k[gens].
/// Elements are compared modulo x1^(bound+1), so every product of generators
/// whose order is at most `bound` takes part, whatever its degree.
SemigroupTable semigroup_orders(const std::vector<LaurentPoly>& gens, int bound);

/// True iff the table is m*N up to its bound, with m the least nonzero order.
/// Throws MathError when bound < 2m.
bool is_normal(const SemigroupTable& table);

/// True iff h lies in the Q-span of the products of generators of x1-degree
/// at most `bound`. Throws MathError when deg h > bound.
bool subalgebra_member(const LaurentPoly& h, const std::vector<LaurentPoly>& gens, int bound);

/// True when h is proven not to lie in k[gens]: its truncation modulo
/// x1^(bound+1) is outside the truncated span. A false result proves nothing.
bool excluded_from_subalgebra(const LaurentPoly& h, const std::vector<LaurentPoly>& gens, int bound);

/// Dense coefficients c[0..] of a polynomial that involves only x1.
/// Throws MathError for other variables or negative exponents.
std::vector<Rat> univariate_coeffs(const LaurentPoly& p);

}  // namespace h14
