#pragma once

#include <random>
#include <vector>

#include "h14/laurent_poly.hpp"
#include "h14/poly_parse.hpp"
#include "h14/ring_map.hpp"
#include "h14/uni_poly.hpp"
#include "h14/witness.hpp"

namespace h14::testing {

inline LaurentPoly P(std::string_view s, const VarSet& v) { return parse_poly(s, v); }

inline Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  return Rat(num(rng), den(rng));
}

/// Random polynomial; Laurent variables get exponents in [neg_lo, hi].
inline LaurentPoly random_poly(std::mt19937& rng, const VarSet& vars, int max_terms = 4, int hi = 3,
                               int neg_lo = -2) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  LaurentPoly p(vars);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Exponents e(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      std::uniform_int_distribution<int> ex(vars.is_laurent(i) ? neg_lo : 0, hi);
      e[i] = ex(rng);
    }
    p.add_term(e, random_rat(rng));
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, const VarSet& vars, int max_terms = 4,
                                       int hi = 3, int neg_lo = -2) {
  while (true) {
    auto p = random_poly(rng, vars, max_terms, hi, neg_lo);
    if (!p.is_zero()) return p;
  }
}

/// Univariate polynomial in the first variable of `vars` (non-negative only).
inline LaurentPoly random_univariate(std::mt19937& rng, const VarSet& vars, int degree) {
  std::uniform_int_distribution<long> c(-4, 4);
  LaurentPoly p(vars);
  for (int k = 0; k <= degree; ++k) {
    Exponents e(vars.size(), 0);
    e[0] = k;
    long v = c(rng);
    if (k == degree && v == 0) v = 1;
    p.add_term(e, Rat(v));
  }
  return p;
}

/// Determinant by cofactor expansion along the first row.
inline LaurentPoly naive_det(const std::vector<std::vector<LaurentPoly>>& m, const VarSet& vars) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(vars, Rat(1));
  if (n == 1) return m[0][0];
  LaurentPoly acc(vars);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][j] * naive_det(minor, vars);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Sylvester matrix built independently of the library.
inline LaurentPoly naive_resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  const VarSet& vars = a.coeff_vars();
  std::vector<std::vector<LaurentPoly>> s(m + n, std::vector<LaurentPoly>(m + n, LaurentPoly(vars)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = a.coeff(i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = b.coeff(i);
  return naive_det(s, vars);
}

// y2 = x2 - x1 + x1^2, other coordinates unchanged; built by hand here so the
// test does not depend on the constructions module.
inline CoordinateChange hand_coords(int n) {
  VarSet xv = x_vars(n);
  std::vector<std::string> yn;
  for (int i = 1; i <= n; ++i) yn.push_back("y" + std::to_string(i));
  VarSet yv(yn);
  std::vector<LaurentPoly> to_x, to_y;
  for (int i = 0; i < n; ++i) {
    to_x.push_back(LaurentPoly::variable(xv, static_cast<size_t>(i)));
    to_y.push_back(LaurentPoly::variable(yv, static_cast<size_t>(i)));
  }
  to_x[1] = P("x2 - x1 + x1^2", xv);
  to_y[1] = P("y2 + y1 - y1^2", yv);
  return {Substitution(yv, xv, to_x), Substitution(xv, yv, to_y)};
}

/// The two-variable swap example: R generated by y1+y2, y1*y2, y1^2+y2^2,
/// f = y1+y2+y1*y2, g = y1+y2, written out in x-coordinates by hand.
inline WitnessPack hand_example_pack() {
  VarSet xv = x_vars(2);
  WitnessPack p;
  p.n = 2;
  p.r_gens = {P("x2 + x1^2", xv), P("x1*x2 - x1^2 + x1^3", xv),
              P("x1^2 + (x2 - x1 + x1^2)^2", xv)};
  p.f = P("x2 + x1*x2 + x1^3", xv);
  p.g = P("x2 + x1^2", xv);
  VarSet rv = gen_vars(3);
  p.f_expr = P("r1 + r2", rv);
  p.g_expr = P("r1", rv);
  return p;
}

}  // namespace h14::testing

namespace h14::testing {

/// Random monic Pi of degree d over k[G].
inline UniPoly random_pi(std::mt19937& rng, int d) {
  VarSet G = pi_coeff_vars();
  std::vector<LaurentPoly> c;
  for (int k = 0; k < d; ++k) c.push_back(random_poly(rng, G, 2, 3, 0));
  c.push_back(LaurentPoly::constant(G, Rat(1)));
  return UniPoly(G, c);
}

/// Random element of k[f, pi, g, 1/g] with f-degree <= max_i and |g-exponent| <= max_m.
inline LaurentPoly random_fg(std::mt19937& rng, int max_terms, int max_i, int max_j, int max_m) {
  std::uniform_int_distribution<int> nt(1, max_terms), di(0, max_i), dj(0, max_j), dm(-max_m, max_m);
  LaurentPoly p(VarSet(std::vector<std::string>{"f", "pi", "g"}, {false, false, true}));
  int k = nt(rng);
  for (int t = 0; t < k; ++t) p.add_term({di(rng), dj(rng), dm(rng)}, random_rat(rng));
  return p;
}

/// A pack whose eps(R) is k[x1^2, x1^3] and whose f, g are random around
/// eps(f) = eps(g) * h with h having a linear term.
inline std::optional<ResolvedWitness> random_resolved(std::mt19937& rng, int n) {
  VarSet xv = x_vars(n);
  std::uniform_int_distribution<int> dd(1, 2), dh(0, 1);
  WitnessPack p;
  p.n = n;
  p.r_gens = {P("x1^2", xv) + LaurentPoly::variable(xv, 1), P("x1^3", xv) + P("x1", xv) * LaurentPoly::variable(xv, n - 1)};
  LaurentPoly gb = random_univariate(rng, xv, dd(rng));
  LaurentPoly hb = P("x1", xv) + random_univariate(rng, xv, dh(rng)) * P("x1^2", xv);
  LaurentPoly ka = random_poly(rng, xv, 2, 2, 0) * LaurentPoly::variable(xv, 1);
  LaurentPoly kb = random_poly(rng, xv, 2, 2, 0) * LaurentPoly::variable(xv, n - 1);
  p.f = gb * hb + ka;
  p.g = gb + kb;
  try {
    auto v = validate_pack(p);
    return v.resolved;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace h14::testing
