#pragma once

#include <string>
#include <vector>

#include "h14/fg_element.hpp"
#include "h14/witness.hpp"

namespace h14 {

/// Entries f_1..f_l of the recursion, each in k[f, g]; f_0 = 1 is implicit.
struct FVec {
  std::vector<FGElement> entries;

  int l() const { return static_cast<int>(entries.size()); }
  /// f_k for 0 <= k <= l.
  FGElement at(int k) const;
  friend bool operator==(const FVec&, const FVec&) = default;
};

/// Computes f_{l+1} from f_1..f_l: with p = sum_{j=1}^{l+1} f_{l+1-j} r^j / j!
/// and r = f/g, decompose p = p' + p'' and return -p'. *p_neg receives p''.
FGElement next_fvec_entry(const FVec& prev, const UniPoly& pi_poly, FGElement* p_neg = nullptr);

/// P_i(r) = pi^e * sum_{k<=i} f_k r^(i-k) / (i-k)!, with r = f/g.
FGElement p_at_r(int i, const FVec& fv, int e);

/// Coefficients of P_i(z) in the abstract z: entry k is pi^e f_(i-k) / k!.
std::vector<FGElement> p_abstract(int i, const FVec& fv, int e);

/// Results of the per-entry checks on q_l.
struct QChecks {
  bool polynomial = false;       // q in k[x, z]
  bool degree_ok = false;        // deg_z(l! q - theta(pi)^e z^l) < l
  bool leading_ok = false;       // z^l coefficient of l! q is theta(pi)^e
  bool eps_constant = false;     // eps(q) in k
  std::string detail;
  bool all() const { return polynomial && degree_ok && leading_ok && eps_constant; }
};

/// Theta images of a resolved witness, with cached realizations.
class QSeqContext {
 public:
  explicit QSeqContext(const ResolvedWitness& w);

  const ResolvedWitness& witness() const { return w_; }
  const VarSet& vars() const { return xz_; }

  /// v_x1 of theta(p); p = 0 counts as +infinity (returns true).
  bool theta_in_localization(const FGElement& p, int* valuation = nullptr) const;
  /// theta(p) for p without negative g-powers.
  LaurentPoly theta_polynomial(const FGElement& p) const;
  RatFunc theta_rational(const FGElement& p) const;

  /// Appends f_{l+1}; throws WitnessError if theta(P_{l+1}(r)) leaves the localization.
  void extend(FVec& fv) const;
  /// q_l = theta(P_l(z)) = sum_k theta(pi^e f_k) (z + theta(h))^(l-k) / (l-k)!.
  LaurentPoly q(int l, const FVec& fv) const;
  QChecks check_q(int l, const LaurentPoly& q) const;
  /// Whether theta(pi^e f_k) itself has no negative exponent. Not implied by
  /// q in k[x, z]: the z-coefficients of q mix several of these.
  bool shifted_coefficient_polynomial(const FVec& fv, int k) const;
  /// theta(P_l(z)) = sum_i theta(P_{l-i}(r)) (z - theta(f - gh)/theta(g))^i / i!.
  bool taylor_identity(int l, const FVec& fv, std::string* diag = nullptr) const;

 private:
  const LaurentPoly& z_shift_power(int k) const;

  ResolvedWitness w_;
  VarSet xz_;
  FGRealizer real_;
  RingMap eps_;
  mutable std::vector<LaurentPoly> zs_;  // (z + theta(h))^k
};

/// f(l) by the recursion, checking the localization condition at each step.
FVec build_fvec(int l, const ResolvedWitness& w);

/// q_l for a resolved witness. Throws WitnessError naming (l, i) when the
/// z^i coefficient of q_l is not a polynomial.
LaurentPoly build_q(int l, const ResolvedWitness& w, const FVec& fv);

bool taylor_identity_check(int l, const ResolvedWitness& w, const FVec& fv, std::string* diag = nullptr);

}  // namespace h14
