#include "h14/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "h14/errors.hpp"

namespace h14::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) { throw ParseError(path + ": " + why); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json* opt_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& a = field(j, key, path);
  if (!a.is_array()) fail(sub(path, key), "expected an array");
  return a;
}

int int_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) fail(path, "integer out of range");
  return static_cast<int>(v);
}

bool bool_value(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(int_value(j[i], idx(path, i)));
  return out;
}

Json int_list_json(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json terms_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["e"] = int_list_json(e);
    t["c"] = rat_to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

// Reads the term list into a polynomial over vars.
LaurentPoly terms_from_json(const Json& terms, const VarSet& vars, const std::string& path) {
  if (!terms.is_array()) fail(path, "expected an array");
  LaurentPoly p(vars);
  std::set<Exponents> seen;
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = idx(path, i);
    Exponents e = int_list(field(terms[i], "e", tp), sub(tp, "e"));
    if (e.size() != vars.size()) fail(sub(tp, "e"), "expected " + std::to_string(vars.size()) + " exponents");
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k] < 0 && !vars.is_laurent(k)) fail(sub(tp, "e"), "negative exponent on '" + vars.name(k) + "'");
    Rat c = rat_from_json(field(terms[i], "c", tp), sub(tp, "c"));
    if (c.is_zero()) fail(sub(tp, "c"), "zero coefficient");
    if (!seen.insert(e).second) fail(tp, "repeated exponent vector");
    p.add_term(e, c);
  }
  return p;
}

std::vector<std::string> var_names(const Json& j, const std::string& path) {
  const Json& v = field(j, "vars", path);
  if (!v.is_array()) fail(sub(path, "vars"), "expected an array");
  std::vector<std::string> names;
  for (size_t i = 0; i < v.size(); ++i) names.push_back(string_value(v[i], idx(sub(path, "vars"), i)));
  return names;
}

Json poly_list(const std::vector<LaurentPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(poly_to_json(p));
  return a;
}

std::vector<LaurentPoly> poly_list_from(const Json& a, const VarSet& vars, const std::string& path) {
  if (!a.is_array()) fail(path, "expected an array");
  std::vector<LaurentPoly> out;
  for (size_t i = 0; i < a.size(); ++i) out.push_back(poly_from_json(a[i], vars, idx(path, i)));
  return out;
}

Json varset_json(const VarSet& v) {
  Json j;
  Json names = Json::array(), flags = Json::array();
  for (size_t i = 0; i < v.size(); ++i) {
    names.push_back(v.name(i));
    flags.push_back(static_cast<bool>(v.is_laurent(i)));
  }
  j["vars"] = names;
  j["laurent"] = flags;
  return j;
}

VarSet varset_from(const Json& j, const std::string& path) {
  auto names = var_names(j, path);
  const Json& f = array_field(j, "laurent", path);
  if (f.size() != names.size()) fail(sub(path, "laurent"), "one flag per variable expected");
  std::vector<bool> flags;
  for (size_t i = 0; i < f.size(); ++i) flags.push_back(bool_value(f[i], idx(sub(path, "laurent"), i)));
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) fail(sub(path, "vars"), "repeated variable name");
  return VarSet(names, flags);
}

Json image_json(const RatFunc& r) {
  if (auto l = r.as_laurent(); l && r.den().is_constant() && r.den().constant_value() == Rat(1)) return poly_to_json(*l);
  Json j;
  j["num"] = poly_to_json(r.num());
  j["den"] = poly_to_json(r.den());
  return j;
}

RatFunc image_from(const Json& j, const VarSet& vars, const std::string& path) {
  if (j.is_object() && j.contains("num")) {
    LaurentPoly den = poly_from_json(field(j, "den", path), vars, sub(path, "den"));
    if (den.is_zero()) fail(sub(path, "den"), "zero denominator");
    return RatFunc(poly_from_json(j["num"], vars, sub(path, "num")), den);
  }
  return RatFunc(poly_from_json(j, vars, path));
}

int positive_n(const Json& j, const std::string& path, int lo) {
  int n = int_value(field(j, "n", path), sub(path, "n"));
  if (n < lo || n > 64) fail(sub(path, "n"), "n out of range");
  return n;
}

// Wraps builder exceptions (bad parameters) as parse errors at `path`.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const Json& j, const std::string& path) {
  std::string s = string_value(j, path);
  try {
    return Rat::parse(s);
  } catch (const std::exception& e) {
    fail(path, "bad rational \"" + s + "\"");
  }
}

Json poly_to_json(const LaurentPoly& p) {
  Json j;
  j["vars"] = p.vars().names();
  j["terms"] = terms_json(p);
  return j;
}

LaurentPoly poly_from_json(const Json& j, const VarSet& vars, const std::string& path) {
  auto names = var_names(j, path);
  if (names != vars.names()) {
    std::string want;
    for (const auto& n : vars.names()) want += (want.empty() ? "" : ",") + n;
    fail(sub(path, "vars"), "expected variables [" + want + "]");
  }
  return terms_from_json(field(j, "terms", path), vars, sub(path, "terms"));
}

LaurentPoly poly_from_json(const Json& j, const std::string& path) {
  auto names = var_names(j, path);
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) fail(sub(path, "vars"), "repeated variable name");
  std::vector<bool> flags(names.size(), false);
  const Json& terms = field(j, "terms", path);
  if (terms.is_array())
    for (const auto& t : terms)
      if (t.is_object() && t.contains("e") && t["e"].is_array())
        for (size_t k = 0; k < t["e"].size() && k < flags.size(); ++k)
          if (t["e"][k].is_number_integer() && t["e"][k].get<long long>() < 0) flags[k] = true;
  return terms_from_json(terms, VarSet(names, flags), sub(path, "terms"));
}

Json fg_to_json(const FGElement& p) {
  Json j;
  j["terms"] = terms_json(p);
  return j;
}

FGElement fg_from_json(const Json& j, const std::string& path) {
  return terms_from_json(field(j, "terms", path), fg_vars(), sub(path, "terms"));
}

Json ring_map_to_json(const RingMap& m) {
  Json j;
  j["kind"] = to_string(m.kind());
  std::visit(
      [&j, &m](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EpsilonParams>) {
          j["n"] = p.n;
          j["with_z"] = p.with_z;
        } else if constexpr (std::is_same_v<T, ThetaParams>) {
          j["t"] = int_list_json(p.t);
          j["h"] = poly_to_json(p.h);
          j["with_z"] = p.with_z;
        } else if constexpr (std::is_same_v<T, TranslationParams>) {
          Json a = Json::array();
          for (const auto& v : p.a) a.push_back(rat_to_json(v));
          j["a"] = a;
        } else if constexpr (std::is_same_v<T, RhoParams>) {
          j["n"] = p.n;
        } else if constexpr (std::is_same_v<T, PsiParams>) {
          j["alpha"] = rat_to_json(p.alpha);
          j["beta"] = rat_to_json(p.beta);
          j["n"] = p.n;
        } else if constexpr (std::is_same_v<T, PermutationParams>) {
          j["perm"] = int_list_json(p.perm.one_based());
          Json c;
          c["y_vars"] = p.change.to_y.target.names();
          Json tx = Json::array(), ty = Json::array();
          for (const auto& im : p.change.to_x.images) tx.push_back(image_json(im));
          for (const auto& im : p.change.to_y.images) ty.push_back(image_json(im));
          c["to_x"] = tx;
          c["to_y"] = ty;
          j["change"] = c;
        } else if constexpr (std::is_same_v<T, InvolutionParams>) {
          j["n"] = static_cast<int>(m.source().size());
          j["s"] = p.s;
        } else if constexpr (std::is_same_v<T, CompositeParams>) {
          Json fs = Json::array();
          for (const auto& f : p.factors) fs.push_back(ring_map_to_json(f));
          j["factors"] = fs;
        } else {
          j["source"] = varset_json(m.source());
          j["target"] = varset_json(m.target());
        }
      },
      m.params());
  Json imgs = Json::array();
  for (const auto& im : m.images()) imgs.push_back(image_json(im));
  j["images"] = imgs;
  return j;
}

RingMap ring_map_from_json(const Json& j, const std::string& path) {
  std::string ks = string_value(field(j, "kind", path), sub(path, "kind"));
  MapKind kind;
  try {
    kind = map_kind_from_string(ks);
  } catch (const std::exception& e) {
    fail(sub(path, "kind"), e.what());
  }
  auto rat_at = [&](const char* key) { return rat_from_json(field(j, key, path), sub(path, key)); };
  RingMap built = guarded(path, [&]() -> RingMap {
    switch (kind) {
      case MapKind::epsilon:
        return epsilon_map(positive_n(j, path, 1), bool_value(field(j, "with_z", path), sub(path, "with_z")));
      case MapKind::theta:
      case MapKind::theta_inverse: {
        std::vector<int> t = int_list(field(j, "t", path), sub(path, "t"));
        LaurentPoly h = poly_from_json(field(j, "h", path), x_vars(static_cast<int>(t.size()) + 1), sub(path, "h"));
        bool wz = bool_value(field(j, "with_z", path), sub(path, "with_z"));
        return kind == MapKind::theta ? theta_build(t, h, wz) : theta_inverse(t, h, wz);
      }
      case MapKind::translation: {
        const Json& a = array_field(j, "a", path);
        std::vector<Rat> v;
        for (size_t i = 0; i < a.size(); ++i) v.push_back(rat_from_json(a[i], idx(sub(path, "a"), i)));
        return translation_map(v);
      }
      case MapKind::rho: return rho_map(positive_n(j, path, 2));
      case MapKind::rho_inverse: return invert(rho_map(positive_n(j, path, 2)));
      case MapKind::psi:
      case MapKind::psi_inverse: {
        RingMap p = psi_map(rat_at("alpha"), rat_at("beta"), positive_n(j, path, 2));
        return kind == MapKind::psi ? p : invert(p);
      }
      case MapKind::permutation: {
        Permutation perm = Permutation::from_one_based(int_list(field(j, "perm", path), sub(path, "perm")));
        const Json& c = field(j, "change", path);
        const std::string cp = sub(path, "change");
        const Json& yn = array_field(c, "y_vars", cp);
        std::vector<std::string> names;
        for (size_t i = 0; i < yn.size(); ++i) names.push_back(string_value(yn[i], idx(sub(cp, "y_vars"), i)));
        VarSet yv(names), xv = x_vars(perm.size());
        const Json& tx = array_field(c, "to_x", cp);
        const Json& ty = array_field(c, "to_y", cp);
        std::vector<RatFunc> ix, iy;
        for (size_t i = 0; i < tx.size(); ++i) ix.push_back(image_from(tx[i], xv, idx(sub(cp, "to_x"), i)));
        for (size_t i = 0; i < ty.size(); ++i) iy.push_back(image_from(ty[i], yv, idx(sub(cp, "to_y"), i)));
        return perm_map(perm, {Substitution(yv, xv, ix), Substitution(xv, yv, iy)});
      }
      case MapKind::involution: {
        int n = positive_n(j, path, 1);
        std::string s = string_value(field(j, "s", path), sub(path, "s"));
        std::vector<LaurentPoly> d(static_cast<size_t>(n), LaurentPoly(x_vars(n)));
        size_t k = x_vars(n).require(s);
        d[k] = LaurentPoly::constant(x_vars(n), Rat(1));
        return build_involution(Derivation{n, d, std::nullopt}, LaurentPoly::variable(x_vars(n), k));
      }
      case MapKind::composite: {
        const Json& fs = array_field(j, "factors", path);
        if (fs.empty()) fail(sub(path, "factors"), "empty composite");
        RingMap acc = ring_map_from_json(fs[0], idx(sub(path, "factors"), 0));
        for (size_t i = 1; i < fs.size(); ++i) acc = compose(ring_map_from_json(fs[i], idx(sub(path, "factors"), i)), acc);
        if (fs.size() == 1) {
          std::vector<RingMap> one{acc};
          return RingMap(MapKind::composite, CompositeParams{one}, acc.subst());
        }
        return acc;
      }
      case MapKind::generic: {
        VarSet src = varset_from(field(j, "source", path), sub(path, "source"));
        VarSet tgt = varset_from(field(j, "target", path), sub(path, "target"));
        std::vector<RatFunc> none;
        for (size_t i = 0; i < src.size(); ++i) none.emplace_back(LaurentPoly::variable(tgt, 0));
        return RingMap::from_images(src, tgt, none);
      }
    }
    fail(path, "unknown kind");
  });
  const Json& imgs = array_field(j, "images", path);
  if (imgs.size() != built.source().size())
    fail(sub(path, "images"), "expected " + std::to_string(built.source().size()) + " images");
  std::vector<RatFunc> parsed;
  for (size_t i = 0; i < imgs.size(); ++i) parsed.push_back(image_from(imgs[i], built.target(), idx(sub(path, "images"), i)));
  return RingMap(kind, built.params(), Substitution(built.source(), built.target(), parsed));
}

Json group_to_json(const PermGroupSpec& g) {
  Json j;
  j["n"] = g.n;
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(int_list_json(p.one_based()));
  j["generators"] = gens;
  return j;
}

PermGroupSpec group_from_json(const Json& j, const std::string& path) {
  PermGroupSpec g;
  g.n = positive_n(j, path, 1);
  const Json& gens = array_field(j, "generators", path);
  for (size_t i = 0; i < gens.size(); ++i) {
    const std::string gp = idx(sub(path, "generators"), i);
    auto one = int_list(gens[i], gp);
    g.generators.push_back(guarded(gp, [&] { return Permutation::from_one_based(one); }));
  }
  guarded(path, [&] {
    g.validate();
    return 0;
  });
  return g;
}

Json pack_to_json(const WitnessPack& p) {
  Json j;
  j["n"] = p.n;
  j["R_gens"] = poly_list(p.r_gens);
  j["f"] = poly_to_json(p.f);
  j["g"] = poly_to_json(p.g);
  if (p.h) j["h"] = poly_to_json(*p.h);
  if (p.pi_poly) j["Pi"] = poly_list(p.pi_poly->coeffs());
  if (p.t) j["t"] = int_list_json(*p.t);
  if (p.e) j["e"] = *p.e;
  if (p.f_expr) j["f_expr"] = poly_to_json(*p.f_expr);
  if (p.g_expr) j["g_expr"] = poly_to_json(*p.g_expr);
  if (p.group) j["group"] = group_to_json(*p.group);
  return j;
}

WitnessPack pack_from_json(const Json& j, const std::string& path) {
  WitnessPack p;
  p.n = positive_n(j, path, 1);
  const VarSet xv = x_vars(p.n);
  p.r_gens = poly_list_from(field(j, "R_gens", path), xv, sub(path, "R_gens"));
  p.f = poly_from_json(field(j, "f", path), xv, sub(path, "f"));
  p.g = poly_from_json(field(j, "g", path), xv, sub(path, "g"));
  if (auto h = opt_field(j, "h")) p.h = poly_from_json(*h, xv, sub(path, "h"));
  if (auto pi = opt_field(j, "Pi")) p.pi_poly = UniPoly(pi_coeff_vars(), poly_list_from(*pi, pi_coeff_vars(), sub(path, "Pi")));
  if (auto t = opt_field(j, "t")) p.t = int_list(*t, sub(path, "t"));
  if (auto e = opt_field(j, "e")) p.e = int_value(*e, sub(path, "e"));
  const VarSet rv = gen_vars(p.r_gens.size());
  if (auto f = opt_field(j, "f_expr")) p.f_expr = poly_from_json(*f, rv, sub(path, "f_expr"));
  if (auto g = opt_field(j, "g_expr")) p.g_expr = poly_from_json(*g, rv, sub(path, "g_expr"));
  if (auto g = opt_field(j, "group")) p.group = group_from_json(*g, sub(path, "group"));
  return p;
}

Json report_to_json(const Report& r) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json o;
    o["name"] = c.name;
    o["pass"] = c.pass;
    o["detail"] = c.detail;
    checks.push_back(std::move(o));
  }
  j["checks"] = checks;
  Json info = Json::array();
  for (const auto& [k, v] : r.info) info.push_back(Json::array({k, v}));
  j["info"] = info;
  j["all_pass"] = r.all_pass();
  return j;
}

Report report_from_json(const Json& j, const std::string& path) {
  Report r;
  const Json& checks = array_field(j, "checks", path);
  for (size_t i = 0; i < checks.size(); ++i) {
    const std::string cp = idx(sub(path, "checks"), i);
    r.add(string_value(field(checks[i], "name", cp), sub(cp, "name")),
          bool_value(field(checks[i], "pass", cp), sub(cp, "pass")),
          string_value(field(checks[i], "detail", cp), sub(cp, "detail")));
  }
  if (auto info = opt_field(j, "info")) {
    if (!info->is_array()) fail(sub(path, "info"), "expected an array");
    for (size_t i = 0; i < info->size(); ++i) {
      const Json& kv = (*info)[i];
      const std::string ip = idx(sub(path, "info"), i);
      if (!kv.is_array() || kv.size() != 2) fail(ip, "expected [key, value]");
      r.note(string_value(kv[0], ip), string_value(kv[1], ip));
    }
  }
  return r;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["witness"] = pack_to_json(c.witness);
  j["theta"] = ring_map_to_json(c.theta);
  j["pi"] = poly_to_json(c.pi);
  j["d"] = c.d;
  j["e"] = c.e;
  Json entries = Json::array();
  for (const auto& en : c.entries) {
    Json o;
    o["l"] = en.l;
    Json fv = Json::array();
    for (const auto& f : en.fvec.entries) fv.push_back(fg_to_json(f));
    o["fvec"] = fv;
    o["q"] = poly_to_json(en.q);
    entries.push_back(std::move(o));
  }
  j["entries"] = entries;
  j["report"] = report_to_json(c.report);
  return j;
}

Certificate certificate_from_json(const Json& j, const std::string& path) {
  Certificate c;
  c.witness = pack_from_json(field(j, "witness", path), sub(path, "witness"));
  c.theta = ring_map_from_json(field(j, "theta", path), sub(path, "theta"));
  c.pi = poly_from_json(field(j, "pi", path), x_vars(c.witness.n), sub(path, "pi"));
  c.d = int_value(field(j, "d", path), sub(path, "d"));
  c.e = int_value(field(j, "e", path), sub(path, "e"));
  const Json& entries = array_field(j, "entries", path);
  const VarSet xz = xz_vars(c.witness.n);
  for (size_t i = 0; i < entries.size(); ++i) {
    const std::string ep = idx(sub(path, "entries"), i);
    CertificateEntry en;
    en.l = int_value(field(entries[i], "l", ep), sub(ep, "l"));
    const Json& fv = array_field(entries[i], "fvec", ep);
    for (size_t k = 0; k < fv.size(); ++k) en.fvec.entries.push_back(fg_from_json(fv[k], idx(sub(ep, "fvec"), k)));
    en.q = poly_from_json(field(entries[i], "q", ep), xz, sub(ep, "q"));
    c.entries.push_back(std::move(en));
  }
  if (auto r = opt_field(j, "report")) c.report = report_from_json(*r, sub(path, "report"));
  return c;
}

Json derivation_to_json(const Derivation& d) {
  Json j;
  j["n"] = d.n;
  j["images"] = poly_list(d.images);
  if (d.kernel_gens) j["kernel_gens"] = poly_list(*d.kernel_gens);
  return j;
}

Derivation derivation_from_json(const Json& j, const std::string& path) {
  Derivation d;
  d.n = positive_n(j, path, 1);
  const VarSet xv = x_vars(d.n);
  d.images = poly_list_from(field(j, "images", path), xv, sub(path, "images"));
  if (d.images.size() != static_cast<size_t>(d.n)) fail(sub(path, "images"), "expected one image per variable");
  for (size_t i = 0; i < d.images.size(); ++i)
    if (!d.images[i].is_polynomial()) fail(idx(sub(path, "images"), i), "derivation images must be polynomials");
  if (auto k = opt_field(j, "kernel_gens")) d.kernel_gens = poly_list_from(*k, xv, sub(path, "kernel_gens"));
  return d;
}

Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(file + ": " + e.what());
  }
}

void write_json_file(const std::string& file, const Json& j) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error(file + ": cannot open for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error(file + ": write failed");
}

}  // namespace h14::io
