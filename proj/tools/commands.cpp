#include "commands.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "h14/certificate.hpp"
#include "h14/constructions.hpp"
#include "h14/errors.hpp"
#include "h14/io.hpp"
#include "h14/poly_parse.hpp"

namespace h14::cli {

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  int l_max = 8;
  std::vector<int> t;
  int t2 = 0;
  int semigroup_bound = 12;
  int degree = 1;
  bool quiet = false;
  bool json = false;
};

std::optional<std::vector<int>> t_override(const RunConfig& c) {
  if (c.t.empty()) return std::nullopt;
  return c.t;
}

void print_report(std::ostream& out, const Report& r, bool quiet) {
  size_t failed = 0;
  for (const auto& c : r.checks) {
    if (!c.pass) ++failed;
    if (quiet && c.pass) continue;
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  if (!quiet)
    for (const auto& [k, v] : r.info) out << "info " << k << ": " << v << "\n";
  out << "summary: " << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
}

void write_or_print(const std::string& file, const io::Json& j, std::ostream& out) {
  if (file.empty() || file == "-") out << j.dump(2) << "\n";
  else io::write_json_file(file, j);
}

int report_exit(std::ostream& out, std::ostream& err, const Report& r, bool quiet) {
  print_report(out, r, quiet);
  if (const CheckResult* bad = r.first_failure()) {
    err << "error: " << bad->name << (bad->detail.empty() ? "" : ": " + bad->detail) << "\n";
    return math_failure;
  }
  return ok;
}

int rejected(std::ostream& out, std::ostream& err, const PackRejected& e, bool quiet) {
  print_report(out, e.report(), quiet);
  err << "error: witness rejected: " << e.what() << "\n";
  return math_failure;
}

// The field generators theta(y1+y2), theta(y1*y2), theta(z) expected for the
// two-variable swap example with h = x1 and t = (5).
Report demo_generators(const Certificate& cert, bool standard_t) {
  Report r;
  const int n = cert.witness.n;
  const VarSet yv = y_vars(n), xz = xz_vars(n);
  const CoordinateChange ch = y_coords(n);
  struct Gen {
    const char* label;
    LaurentPoly image;
    const char* expected;
  };
  auto in_x = [&](const char* s) { return subst_laurent(parse_poly(s, yv), ch.to_x).embed(xz); };
  std::vector<Gen> gens = {
      {"theta(y1+y2)", cert.theta.apply_laurent(in_x("y1 + y2")), "x1^5*x2 + x1^-2"},
      {"theta(y1*y2)", cert.theta.apply_laurent(in_x("y1*y2")), "x1^4*x2 - x1^-2 + x1^-3"},
      {"theta(z)", cert.theta.apply_laurent(LaurentPoly::variable(xz, static_cast<size_t>(n))), "z + x1^-1"},
  };
  for (const auto& g : gens) {
    r.note(std::string("L.") + g.label, g.image.to_string());
    if (standard_t) {
      bool same = g.image == parse_poly(g.expected, xz);
      r.add(std::string("L.") + g.label, same, same ? "" : std::string("expected ") + g.expected);
    }
  }
  r.note("field_degree", "[k(x,z):L] = 2 is assumed from the construction, not checked");
  return r;
}

int cmd_demo(const RunConfig& c, std::ostream& out, std::ostream& err) {
  WitnessPack pack = invariant_family_pack({2, {Permutation::from_one_based({2, 1})}});
  BuildOptions bo{c.l_max, std::nullopt};
  if (c.t2 != 0) bo.t_override = std::vector<int>{c.t2};
  Certificate cert;
  try {
    cert = build_certificate(pack, bo);
  } catch (const PackRejected& e) {
    return rejected(out, err, e, c.quiet);
  }
  Report r = cert.report;
  r.append(demo_generators(cert, !bo.t_override || *bo.t_override == std::vector<int>{5}));
  Report v = verify_certificate(cert);
  for (auto& chk : v.checks) r.add("verify." + chk.name, chk.pass, chk.detail);
  if (!c.output.empty()) {
    io::write_json_file(c.output, io::certificate_to_json(cert));
    r.note("certificate", c.output);
  }
  return report_exit(out, err, r, c.quiet);
}

int cmd_witness_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
  WitnessPack pack = io::pack_from_json(io::read_json_file(c.input));
  WitnessOptions wo;
  wo.t_override = t_override(c);
  wo.semigroup_bound = c.semigroup_bound;
  return report_exit(out, err, check_witness(pack, wo).report, c.quiet);
}

int cmd_cert_build(const RunConfig& c, std::ostream& out, std::ostream& err) {
  WitnessPack pack = io::pack_from_json(io::read_json_file(c.input));
  Certificate cert;
  try {
    cert = build_certificate(pack, {c.l_max, t_override(c)});
  } catch (const PackRejected& e) {
    return rejected(out, err, e, c.quiet);
  }
  io::Json j = io::certificate_to_json(cert);
  if (c.output.empty() || c.output == "-") {
    out << j.dump(2) << "\n";
    return ok;
  }
  io::write_json_file(c.output, j);
  return report_exit(out, err, cert.report, c.quiet);
}

int cmd_cert_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Certificate cert = io::certificate_from_json(io::read_json_file(c.input));
  return report_exit(out, err, verify_certificate(cert), c.quiet);
}

int cmd_invariants(const RunConfig& c, std::ostream& out, std::ostream&) {
  PermGroupSpec g = io::group_from_json(io::read_json_file(c.input));
  std::vector<Invariant> inv = invariants(g, c.degree);
  if (c.json) {
    io::Json a = io::Json::array();
    for (const auto& i : inv) {
      io::Json o;
      o["rep"] = i.rep;
      o["in_y"] = io::poly_to_json(i.in_y);
      o["in_x"] = io::poly_to_json(i.in_x);
      a.push_back(std::move(o));
    }
    write_or_print(c.output, a, out);
    return ok;
  }
  for (const auto& i : inv) out << i.in_y.to_string() << " = " << i.in_x.to_string() << "\n";
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for a non-finitely-generated intersection ring"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("-q,--quiet", cfg.quiet, "Print only failing checks and the summary");

  auto lmax_opt = [&](CLI::App* a) {
    a->add_option("--lmax", cfg.l_max, "Largest l in the witness family")->check(CLI::NonNegativeNumber);
  };
  auto t_opt = [&](CLI::App* a) {
    a->add_option("--t", cfg.t, "Exponent vector t (comma separated)")->delimiter(',');
  };

  CLI::App* demo = app.add_subcommand("demo", "Build and verify the two-variable example");
  lmax_opt(demo);
  demo->add_option("--t2", cfg.t2, "Override the exponent t2");
  demo->add_option("--out", cfg.output, "Write the certificate here");

  CLI::App* witness = app.add_subcommand("witness", "Witness pack commands");
  witness->require_subcommand(1);
  CLI::App* wcheck = witness->add_subcommand("check", "Validate a witness pack");
  wcheck->add_option("file", cfg.input, "Witness pack JSON")->required();
  t_opt(wcheck);
  wcheck->add_option("--bound", cfg.semigroup_bound, "Order bound for the semigroup table")->check(CLI::PositiveNumber);

  CLI::App* cert = app.add_subcommand("cert", "Certificate commands");
  cert->require_subcommand(1);
  CLI::App* build = cert->add_subcommand("build", "Build a certificate from a witness pack");
  build->add_option("file", cfg.input, "Witness pack JSON")->required();
  lmax_opt(build);
  t_opt(build);
  build->add_option("--out", cfg.output, "Output file (default: stdout)");
  CLI::App* verify = cert->add_subcommand("verify", "Verify a certificate");
  verify->add_option("file", cfg.input, "Certificate JSON")->required();

  CLI::App* inv = app.add_subcommand("invariants", "List orbit-sum invariants");
  inv->add_option("--group", cfg.input, "Group JSON {\"n\", \"generators\"}")->required();
  inv->add_option("--degree", cfg.degree, "Largest monomial degree")->required()->check(CLI::PositiveNumber);
  inv->add_flag("--json", cfg.json, "Print JSON");
  inv->add_option("--out", cfg.output, "JSON output file (with --json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? ok : bad_input;
  }

  try {
    if (*demo) return cmd_demo(cfg, out, err);
    if (*wcheck) return cmd_witness_check(cfg, out, err);
    if (*build) return cmd_cert_build(cfg, out, err);
    if (*verify) return cmd_cert_verify(cfg, out, err);
    if (*inv) return cmd_invariants(cfg, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const StructuralError& e) {
    err << "malformed input: " << e.what() << "\n";
    return bad_input;
  } catch (const io::Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return bad_input;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return math_failure;
  }
  return bad_input;
}

}  // namespace h14::cli
