#pragma once

#include <vector>

#include "h14/rat_func.hpp"

namespace h14 {

/// Images of every source variable as rational functions over `target`.
struct Substitution {
  VarSet source;
  VarSet target;
  std::vector<RatFunc> images;

  Substitution() = default;
  Substitution(VarSet source, VarSet target, std::vector<RatFunc> images);
  Substitution(VarSet source, VarSet target, const std::vector<LaurentPoly>& images);

  static Substitution identity(const VarSet& vars);
};

/// Applies the ring homomorphism determined by `m` to p. When every image is a
/// Laurent polynomial and negative exponents only meet invertible-monomial
/// images, the denominator is the constant 1.
RatFunc lp_subst(const LaurentPoly& p, const Substitution& m);
RatFunc lp_subst(const RatFunc& p, const Substitution& m);

/// lp_subst followed by as_laurent(); throws MathError if the image is not a
/// Laurent polynomial in the representation.
LaurentPoly subst_laurent(const LaurentPoly& p, const Substitution& m);

}  // namespace h14
