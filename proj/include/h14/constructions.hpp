#pragma once

#include <optional>
#include <vector>

#include "h14/permutation.hpp"
#include "h14/report.hpp"
#include "h14/ring_map.hpp"
#include "h14/witness.hpp"

namespace h14 {

/// y1..yn, all non-negative.
VarSet y_vars(int n);

/// y2 = x2 - x1 + x1^2, y_i = x_i otherwise; inverse x2 = y2 + y1 - y1^2.
/// Throws MathError for n < 2.
CoordinateChange y_coords(int n);

/// Sum of the G-orbit of the y-monomial y^m, where sigma sends y_i to y_sigma(i).
LaurentPoly orbit_sum_y(const PermGroupSpec& G, const Exponents& m);
/// The same orbit sum written in x-coordinates.
LaurentPoly orbit_sum(const PermGroupSpec& G, const Exponents& m);

struct Invariant {
  Exponents rep;  // lexicographically largest exponent vector in the orbit
  LaurentPoly in_y;
  LaurentPoly in_x;
};

/// Orbit sums of all y-monomials of total degree 1..degree, grouped by degree,
/// each orbit once. Throws MathError for degree < 1.
std::vector<Invariant> invariants(const PermGroupSpec& G, int degree);

/// The permutation-invariant witness pack: R generated by orbit sums of degree
/// <= degree_bound (default n), f = I_{y1} + I_{y1 y2}, g = I_{y1}.
/// Throws MathError when no element maps index 1 to index 2.
WitnessPack invariant_family_pack(const PermGroupSpec& G, std::optional<int> degree_bound = std::nullopt);

/// Checks that each generator of pack.group fixes each R generator, acting
/// through y_coords. Nullopt when the pack carries no group.
std::optional<CheckResult> group_invariance_check(const WitnessPack& pack);

/// A derivation of k[x1..xn] given by the images of the variables.
struct Derivation {
  int n = 0;
  std::vector<LaurentPoly> images;  // over x_vars(n), polynomials
  std::optional<std::vector<LaurentPoly>> kernel_gens;
};

/// D(p) = sum_i dp/dx_i * D(x_i).
LaurentPoly d_apply(const Derivation& D, const LaurentPoly& p);

/// True iff D^l(p) = 0 for some l <= max_iter, for every test polynomial.
/// A false result only means "not verified within the bound".
bool is_locally_nilpotent(const Derivation& D, const std::vector<LaurentPoly>& tests, int max_iter);

/// First candidate s with D(s) != 0 and D^2(s) = 0. Throws MathError if none.
LaurentPoly find_preslice(const Derivation& D, const std::vector<LaurentPoly>& candidates);

/// s -> 1/s, other variables fixed, over x1..xn with s invertible. Supported
/// only when s is a coordinate x_j and D kills every other coordinate;
/// throws MathError otherwise.
RingMap build_involution(const Derivation& D, const LaurentPoly& s);

/// iota^2 = id on the variables, iota(s + 1/s) = s + 1/s, and each kernel
/// generator p has D(p) = 0 and iota(p) = p.
Report check_eq3(const Derivation& D, const LaurentPoly& s, const std::vector<LaurentPoly>& kernel_gens);

}  // namespace h14
