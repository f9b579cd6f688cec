#include "doctest.h"
#include "test_support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "h14/certificate.hpp"
#include "h14/constructions.hpp"
#include "h14/errors.hpp"
#include "h14/io.hpp"

using namespace h14;
using namespace h14::io;
using h14::testing::P;

namespace {

const Certificate& example_cert() {
  static const Certificate c = build_certificate(invariant_family_pack({2, {Permutation::from_one_based({2, 1})}}), {4, {}});
  return c;
}

bool parse_fails(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const ParseError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("rational and polynomial JSON") {
  CHECK(rat_to_json(Rat(-3, 4)) == "-3/4");
  CHECK(rat_from_json(Json("7")) == Rat(7));
  VarSet xv = x_vars(2).with_laurent(0, true);
  LaurentPoly p = P("x1^-2*x2 - 1/3 + 5*x1^4", xv);
  Json j = poly_to_json(p);
  CHECK(j["vars"] == Json::array({"x1", "x2"}));
  CHECK(poly_from_json(j, xv) == p);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(poly_to_json(LaurentPoly(xv)), xv).is_zero());
}

TEST_CASE("polynomial round trips are exact") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + it % 4;
    VarSet v = x_vars(n);
    if (it % 2) v = v.with_laurent(0, true);
    LaurentPoly p = testing::random_poly(rng, v, 6, 5, -4);
    Json j = poly_to_json(p);
    LaurentPoly back = poly_from_json(Json::parse(j.dump()), v);
    CHECK(back == p);
    CHECK(poly_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("FG element and group round trips") {
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    FGElement a = testing::random_fg(rng, 5, 3, 3, 4);
    Json j = fg_to_json(a);
    CHECK(fg_from_json(Json::parse(j.dump())) == a);
  }
  PermGroupSpec g{3, {Permutation::from_one_based({2, 3, 1}), Permutation::from_one_based({2, 1, 3})}};
  PermGroupSpec h = group_from_json(group_to_json(g));
  CHECK(h.n == 3);
  CHECK(h.generators == g.generators);
}

TEST_CASE("ring maps of every kind round trip") {
  VarSet x2 = x_vars(2);
  std::vector<RingMap> maps = {
      epsilon_map(3, true),
      epsilon_map(2, false),
      theta_build({5}, P("x1", x2), true),
      theta_inverse({5, 2}, P("x1 + 2*x1^2", x_vars(3)), true),
      translation_map({Rat(1), Rat(-2, 3)}),
      rho_map(3),
      invert(rho_map(2)),
      psi_map(Rat(2), Rat(-1, 2), 2),
      invert(psi_map(Rat(3), Rat(1), 3)),
      perm_map(Permutation::from_one_based({2, 1}), y_coords(2)),
      build_involution(Derivation{2, {LaurentPoly::constant(x2, Rat(1)), LaurentPoly(x2)}, std::nullopt},
                       LaurentPoly::variable(x2, 0)),
      compose(theta_build({5}, P("x1", x2), false), epsilon_map(2, false)),
  };
  for (const auto& m : maps) {
    Json j = ring_map_to_json(m);
    CAPTURE(j.dump());
    RingMap back = ring_map_from_json(Json::parse(j.dump()));
    CHECK(back.kind() == m.kind());
    CHECK(back.source() == m.source());
    CHECK(back.target() == m.target());
    CHECK(back.same_images(m));
    CHECK(ring_map_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("witness packs and derivations round trip") {
  WitnessPack p = invariant_family_pack({2, {Permutation::from_one_based({2, 1})}});
  p.t = std::vector<int>{5};
  p.e = 3;
  p.pi_poly = build_pi(p.f, p.g);
  Json j = pack_to_json(p);
  WitnessPack back = pack_from_json(Json::parse(j.dump()));
  CHECK(pack_to_json(back).dump() == j.dump());
  CHECK(back.r_gens == p.r_gens);
  CHECK(*back.pi_poly == *p.pi_poly);
  CHECK(back.group->generators == p.group->generators);
  CHECK(validate_pack(back).report.all_pass());

  VarSet x3 = x_vars(3);
  Derivation d{3, {LaurentPoly(x3), LaurentPoly::variable(x3, 0), LaurentPoly::variable(x3, 1)}, {{P("x1", x3)}}};
  Derivation db = derivation_from_json(derivation_to_json(d));
  CHECK(db.images == d.images);
  CHECK(*db.kernel_gens == *d.kernel_gens);
}

TEST_CASE("certificate round trip is exact and still verifies") {
  const Certificate& c = example_cert();
  Json j = certificate_to_json(c);
  Certificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(certificate_to_json(back).dump() == j.dump());
  CHECK(verify_certificate(back).all_pass());

  auto path = (std::filesystem::temp_directory_path() / "h14_io_roundtrip.json").string();
  write_json_file(path, j);
  Json r = read_json_file(path);
  CHECK(r.dump() == j.dump());
  std::remove(path.c_str());
}

TEST_CASE("malformed input is rejected with a path") {
  VarSet xv = x_vars(2);
  Json good = poly_to_json(P("x1 + 2*x2", xv));

  Json j = good;
  j["terms"][0]["c"] = "0";
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "$.terms[0].c: zero coefficient"));
  j = good;
  j["terms"][1]["e"] = j["terms"][0]["e"];
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "repeated exponent"));
  j = good;
  j["terms"][0]["e"] = Json::array({1});
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "$.terms[0].e"));
  j = good;
  j["terms"][0]["e"] = Json::array({0, -1});
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "negative exponent on 'x2'"));
  j = good;
  j["terms"][0]["c"] = "1/0";
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "bad rational"));
  j = good;
  j["terms"][0]["c"] = 3;
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "expected a string"));
  j = good;
  j["vars"] = Json::array({"x2", "x1"});
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "expected variables"));
  j = good;
  j.erase("terms");
  CHECK(parse_fails([&] { poly_from_json(j, xv); }, "missing field 'terms'"));
  CHECK(parse_fails([&] { poly_from_json(Json::array(), xv); }, "expected an object"));

  Json g = group_to_json({2, {Permutation::from_one_based({2, 1})}});
  g["generators"][0] = Json::array({1, 1});
  CHECK(parse_fails([&] { group_from_json(g); }, "$.generators[0]"));
  g["generators"][0] = Json::array({1, 2, 3});
  CHECK(parse_fails([&] { group_from_json(g); }, "$"));

  Json m = ring_map_to_json(rho_map(2));
  m["kind"] = "warp";
  CHECK(parse_fails([&] { ring_map_from_json(m); }, "$.kind"));
  m = ring_map_to_json(rho_map(2));
  m["images"].erase(0);
  CHECK(parse_fails([&] { ring_map_from_json(m); }, "$.images: expected 2 images"));

  Json c = certificate_to_json(example_cert());
  c["entries"][2]["fvec"][1]["terms"][0]["e"] = Json::array({0, 0});
  CHECK(parse_fails([&] { certificate_from_json(c); }, "$.entries[2].fvec[1].terms[0].e"));
  c = certificate_to_json(example_cert());
  c["witness"]["n"] = 0;
  CHECK(parse_fails([&] { certificate_from_json(c); }, "$.witness.n"));

  auto path = (std::filesystem::temp_directory_path() / "h14_io_bad.json").string();
  {
    std::ofstream out(path);
    out << "{\n  \"n\": 2,\n  \"R_gens\": [\n}";
  }
  CHECK(parse_fails([&] { read_json_file(path); }, "line 4"));
  std::remove(path.c_str());
  CHECK(parse_fails([&] { read_json_file("/nonexistent/h14.json"); }, "cannot open"));
}
