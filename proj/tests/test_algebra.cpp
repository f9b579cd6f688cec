#include "doctest.h"
#include "test_support.hpp"

#include "h14/errors.hpp"
#include "h14/linalg.hpp"
#include "h14/rat_func.hpp"
#include "h14/substitution.hpp"

using namespace h14;
using h14::testing::P;

namespace {

const VarSet X2 = x_vars(2);
const VarSet X3 = x_vars(3);

// theta for h = x1, t2 = 5 on k[x1,x2], written out by hand.
Substitution theta_t5() {
  return Substitution(X2, X2, std::vector<LaurentPoly>{P("x1^-1", X2), P("x1^5*x2", X2)});
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -2).to_string() == "-1/2");
  CHECK(Rat(0).to_string() == "0/1");
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK(factorial(5) == Rat(120));
}

TEST_CASE("lp_arith examples") {
  CHECK(lp_arith(P("x1 + 1", X2), P("x1 - 1", X2), PolyOp::mul) == P("x1^2 - 1", X2));
  auto p = P("3*x1^-2*x2 + 1/2", X2);
  CHECK(lp_arith(p, LaurentPoly(X2), PolyOp::add) == p);
  CHECK(lp_arith(p, p, PolyOp::sub).is_zero());
  CHECK_THROWS_AS(lp_arith(p, P("x1", X3), PolyOp::add), StructuralError);

  // epsilon(f^2 - g^3) = 0 for the two-variable permutation example.
  auto f = P("x2 + x1*x2 + x1^3", X2);
  auto g = P("x2 + x1^2", X2);
  auto pi = f * f - g * g * g;
  Substitution eps(X2, X2, std::vector<LaurentPoly>{P("x1", X2), LaurentPoly(X2)});
  CHECK(subst_laurent(pi, eps).is_zero());
  CHECK_FALSE(pi.is_zero());
}

TEST_CASE("non-Laurent variables reject negative exponents") {
  CHECK_THROWS_AS(P("x2^-1", X2), ParseError);
  LaurentPoly p(X2);
  CHECK_THROWS_AS(p.add_term({0, -1}, Rat(1)), StructuralError);
  CHECK_NOTHROW(p.add_term({-3, 0}, Rat(1)));
}

TEST_CASE("canonical order is lexicographically descending") {
  auto p = P("x1^-2 + x1^5*x2 + 7", X2);
  CHECK(p.to_string() == "x1^5*x2 + 7 + x1^-2");
  CHECK(P("0", X2).to_string() == "0");
  CHECK(P("-x1 + 3/2*x2^2", X2).to_string() == "-x1 + 3/2*x2^2");
}

TEST_CASE("lp_subst examples") {
  CHECK(subst_laurent(P("x1", X2), theta_t5()) == P("x1^-1", X2));
  auto p = P("x1^3*x2 - 2*x1^-1 + 5", X2);
  CHECK(subst_laurent(p, Substitution::identity(X2)) == p);

  auto y1y2 = P("x1*(x2 - x1 + x1^2)", X2);
  CHECK(subst_laurent(y1y2, theta_t5()) == P("x1^4*x2 - x1^-2 + x1^-3", X2));

  // Missing image and zero image on a negatively-exponented variable.
  CHECK_THROWS_AS(Substitution(X2, X2, std::vector<LaurentPoly>{P("x1", X2)}), StructuralError);
  Substitution kill(X2, X2, std::vector<LaurentPoly>{LaurentPoly(X2), P("x2", X2)});
  CHECK_THROWS_AS(lp_subst(P("x1^-1", X2), kill), MathError);

  // Multi-term image for a negative exponent goes to the denominator.
  Substitution shift(X2, X2, std::vector<LaurentPoly>{P("x1 + 1", X2), P("x2", X2)});
  RatFunc r = lp_subst(P("x1^-2*x2", X2), shift);
  CHECK(r == RatFunc(P("x2", X2), P("x1^2 + 2*x1 + 1", X2)));
}

TEST_CASE("ord_x1, v_x1 and deg_in") {
  CHECK(ord_x1(P("x1^2 + x1^3", X2)) == 2);
  CHECK(ord_x1(P("x1^-3 + x2", X2)) == -3);
  auto tg = subst_laurent(P("x2 + x1^2", X2), theta_t5());
  CHECK(tg == P("x1^5*x2 + x1^-2", X2));
  CHECK(ord_x1(tg) == -2);
  CHECK_THROWS_AS(ord_x1(LaurentPoly(X2)), MathError);

  CHECK(v_x1(RatFunc(LaurentPoly::constant(X2, 1), tg)) == 2);
  CHECK(v_x1(RatFunc(P("x2", X3), P("x3", X3))) == 0);
  CHECK(v_x1(RatFunc(P("x2", X2), P("x1", X2))) == -1);
  CHECK_THROWS_AS(v_x1(RatFunc(LaurentPoly(X2))), MathError);

  VarSet xz = xz_vars(1);
  CHECK(deg_in(P("z^3 + x1*z", xz), "z") == 3);
  auto f = P("x2 + x1*x2 + x1^3", X2);
  auto g = P("x2 + x1^2", X2);
  auto h = P("x1", X2);
  CHECK(f - g * h == P("x2", X2));
  CHECK(deg_in(f - g * h, "x1") == 0);
  // Hand expansion of f^2 - g^3, cross-checked against an independent CAS run.
  auto pi = f * f - g.pow(3);
  CHECK(pi == P("-x1^4*x2 + 2*x1^3*x2 - 2*x1^2*x2^2 + 2*x1*x2^2 - x2^3 + x2^2", X2));
  CHECK(deg_in(pi, "x1") == 4);
  CHECK_THROWS_AS(deg_in(LaurentPoly(X2), "x1"), MathError);
}

TEST_CASE("unipoly_divmod") {
  VarSet gv({"g"});
  auto one = LaurentPoly::constant(gv, 1);
  LaurentPoly zero(gv);
  auto g3 = P("g^3", gv);
  UniPoly a(gv, {zero, zero, one});
  UniPoly b(gv, {-g3, zero, one});
  auto [q, r] = unipoly_divmod(a, b);
  CHECK(q == UniPoly(gv, {one}));
  CHECK(r == UniPoly(gv, {g3}));

  auto [q2, r2] = unipoly_divmod(b, b);
  CHECK(q2 == UniPoly(gv, {one}));
  CHECK(r2.is_zero());

  UniPoly small(gv, {g3, one});
  auto [q3, r3] = unipoly_divmod(small, b);
  CHECK(q3.is_zero());
  CHECK(r3 == small);

  CHECK_THROWS_AS(unipoly_divmod(a, UniPoly(gv, {one, P("2", gv)})), MathError);
  CHECK_THROWS_AS(unipoly_divmod(a, UniPoly(gv)), MathError);
}

TEST_CASE("unipoly_divmod round trip on random inputs") {
  std::mt19937 rng(11);
  VarSet cv({"u", "v"});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<LaurentPoly> ac, bc;
    int da = std::uniform_int_distribution<int>(0, 5)(rng);
    int db = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i <= da; ++i) ac.push_back(testing::random_poly(rng, cv, 3, 2));
    for (int i = 0; i < db; ++i) bc.push_back(testing::random_poly(rng, cv, 3, 2));
    bc.push_back(LaurentPoly::constant(cv, 1));
    UniPoly a(cv, ac), b(cv, bc);
    auto [q, r] = unipoly_divmod(a, b);
    CHECK(b * q + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("resultant examples") {
  VarSet cd({"c", "d"});
  auto one = LaurentPoly::constant(cd, 1);
  UniPoly a(cd, {-P("c", cd), one});
  UniPoly b(cd, {-P("d", cd), one});
  CHECK(resultant(a, b) == P("c - d", cd));

  VarSet zw({"Z", "W"});
  LaurentPoly zero(zw);
  auto mone = LaurentPoly::constant(zw, -1);
  UniPoly za(zw, {P("Z", zw), zero, zero, mone});
  UniPoly wb(zw, {P("W", zw), zero, mone});
  auto res = resultant(za, wb);
  CHECK(res == testing::naive_resultant(za, wb));
  CHECK(res == P("W^3 - Z^2", zw));

  CHECK_THROWS_AS(resultant(UniPoly(zw), wb), MathError);
  // Degree-zero operand: res(c, b) = c^deg b.
  UniPoly c(zw, {P("Z + 1", zw)});
  CHECK(resultant(c, wb) == P("(Z + 1)^2", zw));
}

TEST_CASE("resultant agrees with naive Sylvester determinant") {
  std::mt19937 rng(7);
  VarSet cv({"u", "w"});
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<LaurentPoly> ac, bc;
    int da = std::uniform_int_distribution<int>(1, 4)(rng);
    int db = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i <= da; ++i) ac.push_back(testing::random_poly(rng, cv, 2, 2));
    for (int i = 0; i <= db; ++i) bc.push_back(testing::random_poly(rng, cv, 2, 2));
    if (ac.back().is_zero()) ac.back() = LaurentPoly::constant(cv, 1);
    if (bc.back().is_zero()) bc.back() = P("u + 2", cv);
    UniPoly a(cv, ac), b(cv, bc);
    CHECK(resultant(a, b) == testing::naive_resultant(a, b));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_poly(rng, X3);
    auto b = testing::random_poly(rng, X3);
    auto c = testing::random_poly(rng, X3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("ord_x1 is additive and v_x1 is representation independent") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_nonzero_poly(rng, X3);
    auto b = testing::random_nonzero_poly(rng, X3);
    auto c = testing::random_nonzero_poly(rng, X3);
    CHECK(ord_x1(a * b) == ord_x1(a) + ord_x1(b));
    CHECK(v_x1(RatFunc(a, b)) == v_x1(RatFunc(a * c, b * c)));
  }
}

TEST_CASE("lp_subst is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LaurentPoly> imgs;
    // x1 alternates between a monomial and a general image.
    if (trial % 2) imgs.push_back(LaurentPoly::monomial(X3, {std::uniform_int_distribution<int>(-2, 2)(rng), 1, 0}, testing::random_rat(rng) + Rat(7)));
    else imgs.push_back(testing::random_nonzero_poly(rng, X3, 3, 2));
    imgs.push_back(testing::random_poly(rng, X3, 3, 2));
    imgs.push_back(testing::random_poly(rng, X3, 3, 2));
    Substitution m(X3, X3, imgs);
    auto p = testing::random_poly(rng, X3, 3, 2);
    auto q = testing::random_poly(rng, X3, 3, 2);
    CHECK(lp_subst(p * q, m) == lp_subst(p, m) * lp_subst(q, m));
    CHECK(lp_subst(p + q, m) == lp_subst(p, m) + lp_subst(q, m));
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_poly(rng, X3);
    auto b = testing::random_nonzero_poly(rng, X3);
    auto q = exact_div(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(exact_div(P("x2 + 1", X2), P("x2", X2)).has_value());
  CHECK(exact_div(P("x1^-1*x2 + x2^2", X2), P("x1^-1 + x2", X2)) == P("x2", X2));
}

TEST_CASE("polynomial parser") {
  CHECK(P("(x1 + x2)^2", X2) == P("x1^2 + 2*x1*x2 + x2^2", X2));
  CHECK(P("x2/x1", X2) == P("x1^-1*x2", X2));
  CHECK(P("3/2*x1", X2).coeff({1, 0}) == Rat(3, 2));
  CHECK_THROWS_AS(P("x9", X2), ParseError);
  CHECK_THROWS_AS(P("x1 +", X2), ParseError);
  CHECK_THROWS_AS(P("1/(x1 + 1)", X2), ParseError);
}

TEST_CASE("echelon rank and membership") {
  RatMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(m) == 2);
  Echelon e(3);
  CHECK(e.insert({0, 1, 1}) == std::optional<size_t>(1));
  CHECK(e.insert({0, 2, 2}) == std::nullopt);
  CHECK(e.contains({0, 3, 3}));
  CHECK_FALSE(e.contains({1, 0, 0}));
}
