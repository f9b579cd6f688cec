#include "doctest.h"
#include "test_support.hpp"

#include "h14/errors.hpp"
#include "h14/qseq.hpp"

using namespace h14;
using h14::testing::P;

namespace {

const VarSet FG = fg_vars();
const VarSet X2 = x_vars(2);

UniPoly example_pi() {
  VarSet G = pi_coeff_vars();
  return UniPoly(G, {P("-G^3", G), P("0", G), P("1", G)});
}

// Value of an FG element at numbers F, G with pi = Pi(F)|_{G}, by direct
// arithmetic on rationals.
Rat numeric_value(const FGElement& p, const UniPoly& pi_poly, const Rat& F, const Rat& G) {
  Rat pinum(0);
  for (int k = pi_poly.degree(); k >= 0; --k) pinum = pinum * F + evaluate_at(pi_poly.coeff(k), {G});
  Rat acc(0);
  for (const auto& [e, c] : p.terms()) acc += c * F.pow(e[0]) * pinum.pow(e[1]) * G.pow(e[2]);
  return acc;
}

ResolvedWitness example_witness() {
  auto v = validate_pack(testing::hand_example_pack());
  REQUIRE(v.resolved);
  return *v.resolved;
}

}  // namespace

TEST_CASE("reduce_mod_pi examples") {
  UniPoly pi = example_pi();
  CHECK(reduce_mod_pi(P("f^2", FG), pi) == P("pi + g^3", FG));
  FGElement low = P("f + 3*pi^2*g^-4 - 7", FG);
  CHECK(reduce_mod_pi(low, pi) == low);
  CHECK(reduce_mod_pi(P("f^3*g^-1", FG), pi) == P("f*pi*g^-1 + f*g^2", FG));
  CHECK(is_reduced(reduce_mod_pi(P("f^7 + f^5*pi*g^-3", FG), pi), 2));
  VarSet G = pi_coeff_vars();
  CHECK_THROWS_AS(reduce_mod_pi(P("f^2", FG), UniPoly(G, {P("1", G), P("2", G)})), MathError);
}

TEST_CASE("decompose examples") {
  UniPoly pi = example_pi();
  auto [a1, b1] = decompose(P("g^-1", FG), pi);
  CHECK(a1.is_zero());
  CHECK(b1 == P("g^-1", FG));
  auto [a2, b2] = decompose(P("f + g", FG), pi);
  CHECK(a2 == P("f + g", FG));
  CHECK(b2.is_zero());
  auto [a3, b3] = decompose(P("f^2*g^-2", FG), pi);
  CHECK(a3 == P("g", FG));
  CHECK(b3 == P("pi*g^-2", FG));
  // pi with non-negative g-powers is expanded back into k[f, g].
  auto [a4, b4] = decompose(P("pi*g", FG), pi);
  CHECK(a4 == P("f^2*g - g^4", FG));
  CHECK(b4.is_zero());
}

TEST_CASE("reduction and decomposition preserve the value (numeric oracle)") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dd(1, 3);
  for (int it = 0; it < 120; ++it) {
    UniPoly pi = testing::random_pi(rng, dd(rng));
    FGElement p = testing::random_fg(rng, 5, 6, 2, 4);
    FGElement r = reduce_mod_pi(p, pi);
    auto [pos, neg] = decompose(p, pi);
    CHECK(is_reduced(r, pi.degree()));
    CHECK(in_fg_ring(pos));
    CHECK(in_n_module(neg, pi.degree()));
    for (int k = 0; k < 3; ++k) {
      Rat F = testing::random_rat(rng), G = testing::random_rat(rng);
      if (G.is_zero()) G = Rat(2, 3);
      Rat v = numeric_value(p, pi, F, G);
      CHECK(numeric_value(r, pi, F, G) == v);
      CHECK(numeric_value(pos, pi, F, G) + numeric_value(neg, pi, F, G) == v);
    }
  }
}

TEST_CASE("realization agrees with decomposition as rational functions") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> dd(1, 3);
  for (int it = 0; it < 100; ++it) {
    UniPoly pi = testing::random_pi(rng, dd(rng));
    LaurentPoly f = testing::random_nonzero_poly(rng, X2, 3, 2, 0);
    LaurentPoly g = testing::random_nonzero_poly(rng, X2, 3, 2, 0);
    FGRealizer re(f, g, realize_pi(pi, f, g));
    FGElement p = testing::random_fg(rng, 4, 5, 1, 3);
    auto [pos, neg] = decompose(p, pi);
    CHECK(re.realize(reduce_mod_pi(p, pi)) == re.realize(p));
    CHECK(re.realize(pos) + re.realize(neg) == re.realize(p));
  }
}

TEST_CASE("fvec on the example matches an independent computation") {
  auto w = example_witness();
  FVec fv = build_fvec(4, w);
  // f_1..f_4 computed separately with a computer algebra system.
  REQUIRE(fv.l() == 4);
  CHECK(fv.entries[0].is_zero());
  CHECK(fv.entries[1] == P("-1/2*g", FG));
  CHECK(fv.entries[2] == P("1/3*f", FG));
  CHECK(fv.entries[3] == P("-1/8*g^2", FG));
  CHECK(build_fvec(0, w).l() == 0);
}

TEST_CASE("fvec extends its prefix and P_l(r) lies in pi^e N") {
  auto w = example_witness();
  FVec prev;
  for (int l = 1; l <= 8; ++l) {
    FVec fv = build_fvec(l, w);
    REQUIRE(fv.l() == l);
    CHECK(std::equal(prev.entries.begin(), prev.entries.end(), fv.entries.begin()));
    for (const auto& e : fv.entries) CHECK(in_fg_ring(e));
    FVec head = prev;
    FGElement neg;
    CHECK(next_fvec_entry(head, w.pi_poly, &neg) == fv.entries.back());
    CHECK(in_n_module(neg, w.d));
    CHECK(reduce_mod_pi(p_at_r(l, fv, w.e), w.pi_poly) == fg_term(Rat(1), 0, w.e, 0) * neg);
    prev = fv;
  }
}

TEST_CASE("P_i values") {
  auto w = example_witness();
  FVec fv = build_fvec(2, w);
  CHECK(p_at_r(0, fv, w.e) == fg_term(Rat(1), 0, w.e, 0));
  auto c1 = p_abstract(1, fv, w.e);  // f_1 = 0
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].is_zero());
  CHECK(c1[1] == fg_term(Rat(1), 0, w.e, 0));
  CHECK_THROWS_AS(p_at_r(3, fv, w.e), StructuralError);
}

TEST_CASE("q_l on the example") {
  auto w = example_witness();
  QSeqContext ctx(w);
  VarSet xz = xz_vars(2);
  FVec fv;
  CHECK(ctx.q(0, fv) == w.th_pi.pow(3));
  for (int l = 0; l <= 8; ++l) {
    if (l > 0) ctx.extend(fv);
    LaurentPoly q = build_q(l, w, fv);
    CHECK(q == ctx.q(l, fv));
    QChecks c = ctx.check_q(l, q);
    INFO("l = " << l << " " << c.detail);
    CHECK(c.polynomial);
    CHECK(c.degree_ok);
    CHECK(c.leading_ok);
    CHECK(c.eps_constant);
    CHECK(q.degree(xz.require("z")) == l);
    CHECK(taylor_identity_check(l, w, fv));
  }
  // The pieces theta(pi^e f_k) are not all polynomials: with e = 3 and
  // f_4 = -g^2/8, theta(pi)^3 theta(g)^2 has x1-order 3 - 4.
  for (int k = 0; k <= 3; ++k) CHECK(ctx.shifted_coefficient_polynomial(fv, k));
  CHECK_FALSE(ctx.shifted_coefficient_polynomial(fv, 4));
}

TEST_CASE("q_1 on the example, written out") {
  auto w = example_witness();
  VarSet xz = xz_vars(2);
  FVec fv = build_fvec(1, w);
  // f_1 = 0, so q_1 = theta(pi)^3 (z + 1/x1).
  CHECK(build_q(1, w, fv) == w.th_pi.pow(3) * P("z + x1^-1", xz));
}

TEST_CASE("checks catch a damaged q") {
  auto w = example_witness();
  QSeqContext ctx(w);
  FVec fv = build_fvec(3, w);
  VarSet xz = xz_vars(2);
  LaurentPoly q = ctx.q(3, fv);
  CHECK_FALSE(ctx.check_q(3, q + P("x1^-1*z", xz)).polynomial);
  CHECK_FALSE(ctx.check_q(3, q + P("z^3", xz)).leading_ok);
  CHECK_FALSE(ctx.check_q(3, q + P("z^4", xz)).degree_ok);
  CHECK_FALSE(ctx.check_q(3, q + P("x1*z", xz)).eps_constant);
  FVec bad = fv;
  bad.entries[1] = bad.entries[1] + P("g", FG);
  bool same = ctx.q(3, bad) == q;
  CHECK_FALSE(same);
}

TEST_CASE("random witnesses: q_l checks and Taylor identity for l <= 4") {
  std::mt19937 rng(31);
  int done = 0;
  for (int it = 0; done < 8 && it < 100; ++it) {
    auto w = testing::random_resolved(rng, 2 + it % 2);
    if (!w) continue;
    ++done;
    QSeqContext ctx(*w);
    FVec fv;
    for (int l = 0; l <= 4; ++l) {
      if (l > 0) ctx.extend(fv);
      LaurentPoly q = ctx.q(l, fv);
      QChecks c = ctx.check_q(l, q);
      INFO("it " << it << " l " << l << " " << c.detail);
      CHECK(c.all());
      CHECK(ctx.taylor_identity(l, fv));
    }
  }
  CHECK(done == 8);
}
