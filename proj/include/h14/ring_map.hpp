#pragma once

#include <string>
#include <variant>
#include <vector>

#include "h14/permutation.hpp"
#include "h14/substitution.hpp"

namespace h14 {

class RingMap;

enum class MapKind {
  epsilon,
  theta,
  theta_inverse,
  translation,
  rho,
  rho_inverse,
  psi,
  psi_inverse,
  permutation,
  involution,
  composite,
  generic,
};

std::string to_string(MapKind k);
MapKind map_kind_from_string(const std::string& s);

/// Images of x1..xn in y-coordinates and back, for permutation actions that
/// act on y rather than x.
struct CoordinateChange {
  Substitution to_x;  // y-variables -> polynomials in x
  Substitution to_y;  // x-variables -> polynomials in y
};

struct EpsilonParams {
  int n = 0;
  bool with_z = false;
};
struct ThetaParams {
  std::vector<int> t;  // t_2..t_n
  LaurentPoly h;       // element of k[x1], over x_vars(n)
  bool with_z = true;
};
struct TranslationParams {
  std::vector<Rat> a;
};
struct RhoParams {
  int n = 0;
};
struct PsiParams {
  Rat alpha, beta;
  int n = 0;
};
struct PermutationParams {
  Permutation perm;
  CoordinateChange change;
};
struct InvolutionParams {
  std::string s;  // name of the inverted coordinate
};
struct CompositeParams {
  std::vector<RingMap> factors;  // application order: factors[0] first
};
struct GenericParams {};

using MapParams = std::variant<EpsilonParams, ThetaParams, TranslationParams, RhoParams, PsiParams,
                               PermutationParams, InvolutionParams, CompositeParams, GenericParams>;

/// A substitution homomorphism together with the family it was built from.
class RingMap {
 public:
  RingMap(MapKind kind, MapParams params, Substitution subst);
  /// A generic map given only by images.
  static RingMap from_images(VarSet source, VarSet target, std::vector<RatFunc> images);
  static RingMap identity(const VarSet& vars);

  MapKind kind() const { return kind_; }
  const MapParams& params() const { return params_; }
  const Substitution& subst() const { return subst_; }
  const VarSet& source() const { return subst_.source; }
  const VarSet& target() const { return subst_.target; }
  const std::vector<RatFunc>& images() const { return subst_.images; }
  const RatFunc& image(std::string_view var) const;

  RatFunc apply(const LaurentPoly& p) const { return lp_subst(p, subst_); }
  RatFunc apply(const RatFunc& p) const { return lp_subst(p, subst_); }
  /// Image as a Laurent polynomial; throws MathError otherwise.
  LaurentPoly apply_laurent(const LaurentPoly& p) const { return subst_laurent(p, subst_); }

  /// Same images on every variable (rational-function equality).
  bool same_images(const RingMap& o) const;

 private:
  MapKind kind_;
  MapParams params_;
  Substitution subst_;
};

/// x1 -> x1, xi -> 0 (i >= 2), and z -> z when with_z.
RingMap epsilon_map(int n, bool with_z);
/// x1 -> x1^-1, xi -> x1^ti xi, z -> z + h(x1^-1).
RingMap theta_build(const std::vector<int>& t, const LaurentPoly& h, bool with_z);
/// x1 -> x1^-1, xi -> x1^ti xi, z -> z - h(x1).
RingMap theta_inverse(const std::vector<int>& t, const LaurentPoly& h, bool with_z);
/// The map v -> outer(inner(v)).
RingMap compose(const RingMap& outer, const RingMap& inner);
/// xi -> xi + ai.
RingMap translation_map(const std::vector<Rat>& a);
/// x1 -> x1*x2, other variables fixed.
RingMap rho_map(int n);
/// Determined by psi(x1 + alpha*x2) = x1 + beta, psi(x2) = x2 + x1^2, psi(xi) = xi.
RingMap psi_map(const Rat& alpha, const Rat& beta, int n);
/// Acts on y-coordinates by y_i -> y_sigma(i), expressed on x.
RingMap perm_map(const Permutation& perm, const CoordinateChange& change);
/// Inverse of a structured map; throws for epsilon and generic maps.
RingMap invert(const RingMap& m);

}  // namespace h14
