#include "h14/certificate.hpp"

#include <algorithm>

#include "h14/constructions.hpp"

namespace h14 {

WitnessValidation check_witness(const WitnessPack& pack, const WitnessOptions& opts) {
  WitnessValidation out;
  if (auto g = group_invariance_check(pack)) {
    out.report.checks.push_back(*g);
    if (!g->pass) return out;
  }
  WitnessValidation v = validate_pack(pack, opts);
  out.report.append(v.report);
  out.resolved = std::move(v.resolved);
  return out;
}

namespace {

std::string entry_tag(int l, const char* what) { return "entry[" + std::to_string(l) + "]." + what; }

void note_growth(Report& rep, int l, const FVec& fv, const LaurentPoly& q) {
  std::string s = "q terms " + std::to_string(q.size());
  if (l > 0) {
    const FGElement& fl = fv.entries.back();
    s += ", f_l terms " + std::to_string(fl.size());
    if (!fl.is_zero()) s += ", deg_f " + std::to_string(fl.degree(0)) + ", deg_g " + std::to_string(fl.degree(2));
  }
  rep.note("growth.l" + std::to_string(l), s);
}

void add_q_checks(Report& rep, int l, const QChecks& c) {
  rep.add(entry_tag(l, "polynomial"), c.polynomial, c.polynomial ? "" : c.detail);
  rep.add(entry_tag(l, "degree"), c.degree_ok, c.degree_ok ? "" : c.detail);
  rep.add(entry_tag(l, "leading"), c.leading_ok, c.leading_ok ? "" : c.detail);
  rep.add(entry_tag(l, "eps_constant"), c.eps_constant, c.eps_constant ? "" : c.detail);
}

}  // namespace

Certificate build_certificate(const WitnessPack& pack, const BuildOptions& opts) {
  if (opts.l_max < 0) throw MathError("l_max must be >= 0");
  WitnessOptions wo;
  wo.t_override = opts.t_override;
  WitnessValidation v = check_witness(pack, wo);
  if (!v.resolved) {
    const CheckResult* bad = v.report.first_failure();
    std::string msg = bad ? bad->name + (bad->detail.empty() ? "" : ": " + bad->detail) : "witness rejected";
    throw PackRejected(msg, v.report);
  }
  const ResolvedWitness& w = *v.resolved;
  Certificate cert;
  cert.witness = w.pack;
  cert.theta = w.theta;
  cert.pi = w.pi;
  cert.d = w.d;
  cert.e = w.e;
  cert.report = v.report;

  QSeqContext ctx(w);
  FVec fv;
  for (int l = 0; l <= opts.l_max; ++l) {
    if (l > 0) ctx.extend(fv);
    LaurentPoly q = ctx.q(l, fv);
    QChecks c = ctx.check_q(l, q);
    add_q_checks(cert.report, l, c);
    std::string diag;
    bool tay = ctx.taylor_identity(l, fv, &diag);
    cert.report.add(entry_tag(l, "taylor"), tay, diag);
    if (!c.all() || !tay) throw WitnessError("q_" + std::to_string(l) + " failed: " + (c.detail.empty() ? diag : c.detail));
    note_growth(cert.report, l, fv, q);
    cert.entries.push_back({l, fv, std::move(q)});
  }
  cert.report.note("conclusion", "certified by witness family up to l_max = " + std::to_string(opts.l_max));
  return cert;
}

Report verify_certificate(const Certificate& cert, const VerifyOptions& opts) {
  Report rep;
  bool stop = false;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    rep.add(std::move(name), pass, std::move(detail));
    if (!pass && opts.fail_fast) stop = true;
    return pass;
  };

  const WitnessPack& pk = cert.witness;
  bool fields = pk.h && pk.pi_poly && pk.t && pk.e;
  if (!add("certificate.resolved_fields", fields, fields ? "" : "witness must carry h, Pi, t and e")) return rep;

  WitnessValidation v = check_witness(pk);
  for (const auto& c : v.report.checks) {
    add("witness." + c.name, c.pass, c.detail);
    if (stop) return rep;
  }
  if (!v.resolved) return rep;
  const ResolvedWitness& w = *v.resolved;

  add("certificate.theta", cert.theta.kind() == MapKind::theta && cert.theta.source() == w.theta.source() &&
                               cert.theta.target() == w.theta.target() && cert.theta.same_images(w.theta));
  if (stop) return rep;
  add("certificate.pi", cert.pi == w.pi, cert.pi == w.pi ? "" : "stored pi differs from Pi(f)|_{G=g}");
  if (stop) return rep;
  add("certificate.d", cert.d == w.d);
  if (stop) return rep;
  add("certificate.e", cert.e == w.e && cert.e == *pk.e);
  if (stop) return rep;
  bool contiguous = !cert.entries.empty();
  for (size_t k = 0; k < cert.entries.size(); ++k) contiguous = contiguous && cert.entries[k].l == static_cast<int>(k);
  add("certificate.entries_contiguous", contiguous, contiguous ? "" : "entries must run l = 0, 1, 2, ...");
  if (stop || !contiguous) return rep;

  QSeqContext ctx(w);
  const FVec* prev = nullptr;
  for (const auto& en : cert.entries) {
    const int l = en.l;
    const FVec& fv = en.fvec;
    if (!add(entry_tag(l, "fvec_length"), fv.l() == l)) {
      if (stop) return rep;
      prev = nullptr;
      continue;
    }
    bool syn = true;
    for (const auto& fk : fv.entries) syn = syn && fk.vars() == fg_vars() && in_fg_ring(fk);
    add(entry_tag(l, "fvec_in_fg_ring"), syn);
    if (stop) return rep;
    if (!syn) {
      prev = nullptr;
      continue;
    }
    if (l > 0) {
      bool prefix = prev && std::equal(prev->entries.begin(), prev->entries.end(), fv.entries.begin());
      add(entry_tag(l, "fvec_prefix"), prefix);
      if (stop) return rep;
      FVec head{std::vector<FGElement>(fv.entries.begin(), fv.entries.end() - 1)};
      FGElement p_neg;
      FGElement next = next_fvec_entry(head, w.pi_poly, &p_neg);
      add(entry_tag(l, "fvec_recursion"), next == fv.entries.back(),
          next == fv.entries.back() ? "" : "f_" + std::to_string(l) + " is not -p' of the recursion");
      if (stop) return rep;
      FGElement pr = p_at_r(l, fv, w.e);
      bool in_n = in_n_module(p_neg, w.d) &&
                  reduce_mod_pi(pr, w.pi_poly) == fg_term(Rat(1), 0, w.e, 0) * p_neg;
      add(entry_tag(l, "p_r_in_pi_e_N"), in_n);
      if (stop) return rep;
      int val = 0;
      bool loc = ctx.theta_in_localization(pr, &val);
      add(entry_tag(l, "localization"), loc, loc ? "" : "x1-valuation " + std::to_string(val));
      if (stop) return rep;
    }
    LaurentPoly q = ctx.q(l, fv);
    add(entry_tag(l, "q_matches"), q == en.q, q == en.q ? "" : "stored q differs from theta(P_l(z))");
    if (stop) return rep;
    QChecks c = ctx.check_q(l, en.q);
    add(entry_tag(l, "polynomial"), c.polynomial, c.polynomial ? "" : c.detail);
    if (stop) return rep;
    add(entry_tag(l, "degree"), c.degree_ok, c.degree_ok ? "" : c.detail);
    if (stop) return rep;
    add(entry_tag(l, "leading"), c.leading_ok, c.leading_ok ? "" : c.detail);
    if (stop) return rep;
    add(entry_tag(l, "eps_constant"), c.eps_constant, c.eps_constant ? "" : c.detail);
    if (stop) return rep;
    const size_t zi = ctx.vars().require("z");
    bool zdeg = !en.q.is_zero() && en.q.degree(zi) == l;
    add(entry_tag(l, "z_degree"), zdeg);
    if (stop) return rep;
    std::string diag;
    add(entry_tag(l, "taylor"), ctx.taylor_identity(l, fv, &diag), diag);
    if (stop) return rep;
    prev = &en.fvec;
  }
  return rep;
}

}  // namespace h14
