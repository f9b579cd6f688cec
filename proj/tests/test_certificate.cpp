#include "doctest.h"
#include "test_support.hpp"

#include "h14/certificate.hpp"
#include "h14/constructions.hpp"

using namespace h14;
using h14::testing::P;

namespace {

const Certificate& example_cert() {
  static const Certificate c = build_certificate(invariant_family_pack({2, {Permutation::from_one_based({2, 1})}}), {8, {}});
  return c;
}

bool fails(const Certificate& c, const std::string& check) {
  Report r = verify_certificate(c);
  const CheckResult* f = r.find(check);
  return !r.all_pass() && f && !f->pass;
}

}  // namespace

TEST_CASE("build and verify the example certificate") {
  const Certificate& c = example_cert();
  CHECK(c.entries.size() == 9);
  CHECK(c.d == 2);
  CHECK(c.e == 3);
  CHECK(*c.witness.t == std::vector<int>{5});
  CHECK(c.report.all_pass());
  Report r = verify_certificate(c);
  INFO((r.first_failure() ? r.first_failure()->name : std::string()));
  CHECK(r.all_pass());
  CHECK(r.find("entry[8].taylor"));
}

TEST_CASE("lmax 0 gives the single entry theta(pi)^e") {
  Certificate c = build_certificate(testing::hand_example_pack(), {0, {}});
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].q == c.theta.apply_laurent(c.pi.embed(c.theta.source())).pow(3));
  CHECK(verify_certificate(c).all_pass());
}

TEST_CASE("threshold t is rejected at build time") {
  try {
    build_certificate(testing::hand_example_pack(), {2, std::vector<int>{4}});
    FAIL("expected rejection");
  } catch (const PackRejected& e) {
    CHECK(std::string(e.what()) == "ddag.pi: theta(pi) has the term -x2");
    CHECK_FALSE(e.report().find("ddag.pi")->pass);
  }
}

TEST_CASE("verification rejects damaged certificates") {
  VarSet xz = xz_vars(2);
  SUBCASE("perturbed q") {
    Certificate c = example_cert();
    c.entries[5].q = c.entries[5].q + P("x2*z", xz);
    CHECK(fails(c, "entry[5].q_matches"));
  }
  SUBCASE("perturbed fvec entry") {
    Certificate c = example_cert();
    c.entries[3].fvec.entries[1] = c.entries[3].fvec.entries[1] + P("g", fg_vars());
    CHECK_FALSE(verify_certificate(c).all_pass());
  }
  SUBCASE("lowered t") {
    Certificate c = example_cert();
    c.witness.t = std::vector<int>{4};
    CHECK(fails(c, "witness.ddag.pi"));
  }
  SUBCASE("raised t") {
    Certificate c = example_cert();
    c.witness.t = std::vector<int>{6};
    CHECK_FALSE(verify_certificate(c).all_pass());
  }
  SUBCASE("wrong e") {
    Certificate c = example_cert();
    c.e = 4;
    CHECK(fails(c, "certificate.e"));
  }
  SUBCASE("missing entry") {
    Certificate c = example_cert();
    c.entries.erase(c.entries.begin() + 2);
    CHECK(fails(c, "certificate.entries_contiguous"));
  }
  SUBCASE("damaged pi") {
    Certificate c = example_cert();
    c.pi = c.pi + P("x2^2", x_vars(2));
    CHECK(fails(c, "certificate.pi"));
  }
  SUBCASE("damaged R generator caught by group invariance") {
    Certificate c = example_cert();
    c.witness.r_gens[2] = c.witness.r_gens[2] + P("x1^4", x_vars(2));
    CHECK(fails(c, "witness.R_gens_group_invariant"));
  }
  SUBCASE("fail-fast reports a single failure") {
    Certificate c = example_cert();
    c.entries[1].q = c.entries[1].q + P("z", xz);
    Report r = verify_certificate(c, {true});
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.checks.back().pass);
  }
}
