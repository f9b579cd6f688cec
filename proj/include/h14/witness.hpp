#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h14/laurent_poly.hpp"
#include "h14/permutation.hpp"
#include "h14/report.hpp"
#include "h14/ring_map.hpp"
#include "h14/uni_poly.hpp"

namespace h14 {

/// Coefficient ring of Pi: k[G], with G standing for g.
VarSet pi_coeff_vars();
/// Abstract generator names r1..rk used by expressions in the R generators.
VarSet gen_vars(size_t k);

/// Data defining one counterexample candidate. All polynomials live over
/// x_vars(n). The field-theoretic hypotheses on R are asserted, not checked.
struct WitnessPack {
  int n = 0;
  std::vector<LaurentPoly> r_gens;
  LaurentPoly f, g;
  std::optional<LaurentPoly> h;
  std::optional<UniPoly> pi_poly;  // over pi_coeff_vars()
  std::optional<std::vector<int>> t;
  std::optional<int> e;
  /// f and g as polynomials in r1..rk, when known.
  std::optional<LaurentPoly> f_expr, g_expr;
  /// Group whose y-coordinate action should fix every R generator.
  std::optional<PermGroupSpec> group;
};

/// h = eps(f)/eps(g) in k[x1]. Throws WitnessError when the division is not exact.
LaurentPoly compute_h(const LaurentPoly& f, const LaurentPoly& g);

/// Monic Pi(z) over k[G] with Pi(eps f)|_{G = eps g} = 0, of degree deg eps(g).
/// Throws WitnessError when eps(g) is constant or Pi(f)|_{G=g} vanishes.
UniPoly build_pi(const LaurentPoly& f, const LaurentPoly& g);

/// sum_k c_k(g) * x^k for Pi = sum_k c_k(G) z^k.
LaurentPoly realize_pi(const UniPoly& pi_poly, const LaurentPoly& x, const LaurentPoly& g);

/// True when Pi is monic of degree >= 1 and Pi(eps f)|_{G = eps g} = 0.
bool pi_annihilates(const UniPoly& pi_poly, const LaurentPoly& f, const LaurentPoly& g,
                    std::string* why = nullptr);

/// Every term involves some x_i with i >= 2.
bool in_ker_epsilon(const LaurentPoly& p);

/// Uniform t_i = 1 + max(deg_x1(f - gh), deg_x1(pi)). Throws WitnessError
/// unless f - gh and pi lie in ker eps.
std::vector<int> choose_t(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h,
                          const LaurentPoly& pi);

struct DdagResult {
  bool f_minus_gh_polynomial = false;
  bool pi_in_x1_ideal = false;
  std::string f_minus_gh_detail;  // offending term, when failing
  std::string pi_detail;
  bool holds() const { return f_minus_gh_polynomial && pi_in_x1_ideal; }
};

/// theta(f - gh) in k[x] and theta(pi) in x1*k[x].
DdagResult check_ddag(const RingMap& theta, const LaurentPoly& f, const LaurentPoly& g,
                      const LaurentPoly& h, const LaurentPoly& pi);

/// True when theta(pi)^e * theta(f)^i has no negative exponent for all i < d.
/// On failure, *failing_i receives the first bad i.
bool e_condition_holds(const LaurentPoly& theta_pi, const LaurentPoly& theta_f, int d, int e,
                       int* failing_i = nullptr);

/// Least e >= 1 passing e_condition_holds. Throws WitnessError unless
/// theta(pi) lies in x1*k[x].
int choose_e(const RingMap& theta, const LaurentPoly& pi, const LaurentPoly& f, int d);

/// Terms of total degree one.
LaurentPoly linear_part(const LaurentPoly& f);

/// Exact rank of the Jacobian of fs at the point a.
int jacobian_rank_at(const std::vector<LaurentPoly>& fs, const std::vector<Rat>& a);

/// A pack with every derived quantity filled in and checked, plus the images
/// under theta that the sequence construction needs (over xz_vars(n)).
struct ResolvedWitness {
  int n = 0;
  LaurentPoly f, g, h, pi;  // over x_vars(n)
  UniPoly pi_poly;
  int d = 0;
  std::vector<int> t;
  int e = 0;
  RingMap theta = RingMap::identity(VarSet());
  LaurentPoly th_f, th_g, th_pi, th_h, th_pi_e;
  WitnessPack pack;  // the input with h, Pi, t, e filled
};

struct WitnessValidation {
  Report report;
  std::optional<ResolvedWitness> resolved;
};

struct WitnessOptions {
  /// Replaces any t stored in the pack.
  std::optional<std::vector<int>> t_override;
  /// Bound used for the semigroup and membership tests on eps(R).
  int semigroup_bound = 12;
};

/// Runs every decidable check on the pack. Missing h, Pi, t, e are computed;
/// supplied ones are checked. `resolved` is set iff every check passes.
WitnessValidation validate_pack(const WitnessPack& pack, const WitnessOptions& opts = {});

}  // namespace h14
