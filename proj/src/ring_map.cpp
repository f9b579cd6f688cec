#include "h14/ring_map.hpp"

#include <array>

#include "h14/errors.hpp"

namespace h14 {

namespace {

constexpr std::array<std::pair<MapKind, const char*>, 12> kKindNames{{
    {MapKind::epsilon, "epsilon"},
    {MapKind::theta, "theta"},
    {MapKind::theta_inverse, "theta_inverse"},
    {MapKind::translation, "translation"},
    {MapKind::rho, "rho"},
    {MapKind::rho_inverse, "rho_inverse"},
    {MapKind::psi, "psi"},
    {MapKind::psi_inverse, "psi_inverse"},
    {MapKind::permutation, "permutation"},
    {MapKind::involution, "involution"},
    {MapKind::composite, "composite"},
    {MapKind::generic, "generic"},
}};

LaurentPoly var(const VarSet& v, std::string_view name) { return LaurentPoly::variable(v, name); }

// h must lie in k[x1]; returns it over x_vars(n).
LaurentPoly check_h(const LaurentPoly& h, int n) {
  for (size_t i = 0; i < h.vars().size(); ++i) {
    if (h.vars().name(i) == "x1") continue;
    for (const auto& [e, c] : h.terms())
      if (e[i] != 0) throw MathError("h must lie in k[x1] but involves '" + h.vars().name(i) + "'");
  }
  LaurentPoly hx = h.embed(x_vars(n));
  if (!hx.is_zero() && hx.min_degree(0) < 0) throw MathError("h must be a polynomial in x1");
  return hx;
}

// h(x1) re-expressed over `target` after substituting x1 -> x1^sign.
LaurentPoly h_at(const LaurentPoly& hx, const VarSet& target, int sign) {
  LaurentPoly out(target);
  for (const auto& [e, c] : hx.terms()) {
    Exponents e2(target.size(), 0);
    e2[0] = sign * e[0];
    out.add_term(e2, c);
  }
  return out;
}

RingMap theta_impl(const std::vector<int>& t, const LaurentPoly& h, bool with_z, bool inverse) {
  const int n = static_cast<int>(t.size()) + 1;
  LaurentPoly hx = check_h(h, n);
  VarSet vars = with_z ? xz_vars(n) : x_vars(n);
  std::vector<LaurentPoly> imgs;
  imgs.push_back(var(vars, "x1").monomial_inverse());
  for (int i = 2; i <= n; ++i) {
    Exponents e(vars.size(), 0);
    e[0] = t[static_cast<size_t>(i - 2)];
    e[static_cast<size_t>(i - 1)] = 1;
    imgs.push_back(LaurentPoly::monomial(vars, e));
  }
  if (with_z) {
    LaurentPoly z = var(vars, "z");
    imgs.push_back(inverse ? z - h_at(hx, vars, 1) : z + h_at(hx, vars, -1));
  }
  return RingMap(inverse ? MapKind::theta_inverse : MapKind::theta, ThetaParams{t, hx, with_z},
                 Substitution(vars, vars, imgs));
}

}  // namespace

std::string to_string(MapKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "generic";
}

MapKind map_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kKindNames)
    if (s == name) return kind;
  throw ParseError("unknown map kind '" + s + "'");
}

RingMap::RingMap(MapKind kind, MapParams params, Substitution subst)
    : kind_(kind), params_(std::move(params)), subst_(std::move(subst)) {}

RingMap RingMap::from_images(VarSet source, VarSet target, std::vector<RatFunc> images) {
  return RingMap(MapKind::generic, GenericParams{},
                 Substitution(std::move(source), std::move(target), std::move(images)));
}

RingMap RingMap::identity(const VarSet& vars) {
  return RingMap(MapKind::generic, GenericParams{}, Substitution::identity(vars));
}

const RatFunc& RingMap::image(std::string_view v) const {
  return subst_.images.at(subst_.source.require(v));
}

bool RingMap::same_images(const RingMap& o) const {
  if (!(source() == o.source()) || !(target() == o.target())) return false;
  for (size_t i = 0; i < images().size(); ++i)
    if (!(images()[i] == o.images()[i])) return false;
  return true;
}

RingMap epsilon_map(int n, bool with_z) {
  VarSet vars = with_z ? xz_vars(n) : x_vars(n);
  std::vector<LaurentPoly> imgs;
  imgs.push_back(var(vars, "x1"));
  for (int i = 2; i <= n; ++i) imgs.emplace_back(vars);
  if (with_z) imgs.push_back(var(vars, "z"));
  return RingMap(MapKind::epsilon, EpsilonParams{n, with_z}, Substitution(vars, vars, imgs));
}

RingMap theta_build(const std::vector<int>& t, const LaurentPoly& h, bool with_z) {
  return theta_impl(t, h, with_z, false);
}

RingMap theta_inverse(const std::vector<int>& t, const LaurentPoly& h, bool with_z) {
  return theta_impl(t, h, with_z, true);
}

RingMap compose(const RingMap& outer, const RingMap& inner) {
  // Laurent flags may differ (e.g. after rho^-1); names must agree.
  if (inner.target().names() != outer.source().names())
    throw StructuralError("cannot compose: inner target and outer source differ");
  std::vector<RatFunc> imgs;
  for (const auto& im : inner.images()) {
    LaurentPoly num = im.num().embed(outer.source());
    LaurentPoly den = im.den().embed(outer.source());
    imgs.push_back(outer.apply(num) / outer.apply(den));
  }
  std::vector<RingMap> factors;
  auto append = [&factors](const RingMap& m) {
    if (m.kind() == MapKind::composite) {
      const auto& fs = std::get<CompositeParams>(m.params()).factors;
      factors.insert(factors.end(), fs.begin(), fs.end());
    } else {
      factors.push_back(m);
    }
  };
  append(inner);
  append(outer);
  return RingMap(MapKind::composite, CompositeParams{std::move(factors)},
                 Substitution(inner.source(), outer.target(), std::move(imgs)));
}

RingMap translation_map(const std::vector<Rat>& a) {
  const int n = static_cast<int>(a.size());
  VarSet vars = x_vars(n);
  std::vector<LaurentPoly> imgs;
  for (int i = 0; i < n; ++i)
    imgs.push_back(LaurentPoly::variable(vars, static_cast<size_t>(i)) +
                   LaurentPoly::constant(vars, a[static_cast<size_t>(i)]));
  return RingMap(MapKind::translation, TranslationParams{a}, Substitution(vars, vars, imgs));
}

RingMap rho_map(int n) {
  if (n < 2) throw MathError("rho needs at least two variables");
  VarSet vars = x_vars(n);
  std::vector<LaurentPoly> imgs;
  for (int i = 0; i < n; ++i) imgs.push_back(LaurentPoly::variable(vars, static_cast<size_t>(i)));
  imgs[0] = var(vars, "x1") * var(vars, "x2");
  return RingMap(MapKind::rho, RhoParams{n}, Substitution(vars, vars, imgs));
}

RingMap psi_map(const Rat& alpha, const Rat& beta, int n) {
  if (n < 2) throw MathError("psi needs at least two variables");
  if (alpha.is_zero()) throw MathError("psi requires alpha != 0");
  VarSet vars = x_vars(n);
  LaurentPoly x1 = var(vars, "x1"), x2 = var(vars, "x2");
  std::vector<LaurentPoly> imgs;
  for (int i = 0; i < n; ++i) imgs.push_back(LaurentPoly::variable(vars, static_cast<size_t>(i)));
  LaurentPoly x2_img = x2 + x1 * x1;
  imgs[0] = x1 + LaurentPoly::constant(vars, beta) - alpha * x2_img;
  imgs[1] = x2_img;
  return RingMap(MapKind::psi, PsiParams{alpha, beta, n}, Substitution(vars, vars, imgs));
}

RingMap perm_map(const Permutation& perm, const CoordinateChange& change) {
  const VarSet& xv = change.to_y.source;
  const VarSet& yv = change.to_x.source;
  if (!(change.to_y.target == yv) || !(change.to_x.target == xv))
    throw StructuralError("coordinate change variable sets do not line up");
  if (perm.size() != static_cast<int>(yv.size())) throw StructuralError("permutation of the wrong size");
  // Invertibility: both round trips must be the identity.
  for (size_t i = 0; i < xv.size(); ++i) {
    LaurentPoly xi = LaurentPoly::variable(xv, i);
    if (!(lp_subst(lp_subst(xi, change.to_y), change.to_x) == RatFunc(xi)))
      throw MathError("coordinate change is not invertible");
  }
  for (size_t i = 0; i < yv.size(); ++i) {
    LaurentPoly yi = LaurentPoly::variable(yv, i);
    if (!(lp_subst(lp_subst(yi, change.to_x), change.to_y) == RatFunc(yi)))
      throw MathError("coordinate change is not invertible");
  }
  std::vector<LaurentPoly> sigma_imgs;
  for (int i = 0; i < perm.size(); ++i)
    sigma_imgs.push_back(LaurentPoly::variable(yv, static_cast<size_t>(perm(i))));
  Substitution sigma(yv, yv, sigma_imgs);
  std::vector<RatFunc> imgs;
  for (size_t j = 0; j < xv.size(); ++j) {
    RatFunc in_y = lp_subst(LaurentPoly::variable(xv, j), change.to_y);
    imgs.push_back(lp_subst(lp_subst(in_y, sigma), change.to_x));
  }
  return RingMap(MapKind::permutation, PermutationParams{perm, change}, Substitution(xv, xv, std::move(imgs)));
}

RingMap invert(const RingMap& m) {
  switch (m.kind()) {
    case MapKind::theta: {
      const auto& p = std::get<ThetaParams>(m.params());
      return theta_inverse(p.t, p.h, p.with_z);
    }
    case MapKind::theta_inverse: {
      const auto& p = std::get<ThetaParams>(m.params());
      return theta_build(p.t, p.h, p.with_z);
    }
    case MapKind::translation: {
      auto a = std::get<TranslationParams>(m.params()).a;
      for (auto& v : a) v = -v;
      return translation_map(a);
    }
    case MapKind::rho: {
      int n = std::get<RhoParams>(m.params()).n;
      VarSet src = x_vars(n);
      VarSet tgt = src.with_laurent(1, true);
      std::vector<LaurentPoly> imgs;
      for (int i = 0; i < n; ++i) imgs.push_back(LaurentPoly::variable(tgt, static_cast<size_t>(i)));
      imgs[0] = var(tgt, "x1") * var(tgt, "x2").monomial_inverse();
      return RingMap(MapKind::rho_inverse, RhoParams{n}, Substitution(src, tgt, imgs));
    }
    case MapKind::rho_inverse: return rho_map(std::get<RhoParams>(m.params()).n);
    case MapKind::psi: {
      const auto& p = std::get<PsiParams>(m.params());
      VarSet vars = x_vars(p.n);
      LaurentPoly x1 = var(vars, "x1"), x2 = var(vars, "x2");
      // psi^-1(x1) = x1 + alpha*x2 - beta, psi^-1(x2) = x2 - psi^-1(x1)^2.
      LaurentPoly inv_x1 = x1 + p.alpha * x2 - LaurentPoly::constant(vars, p.beta);
      std::vector<LaurentPoly> imgs;
      for (int i = 0; i < p.n; ++i) imgs.push_back(LaurentPoly::variable(vars, static_cast<size_t>(i)));
      imgs[0] = inv_x1;
      imgs[1] = x2 - inv_x1 * inv_x1;
      return RingMap(MapKind::psi_inverse, p, Substitution(vars, vars, imgs));
    }
    case MapKind::psi_inverse: {
      const auto& p = std::get<PsiParams>(m.params());
      return psi_map(p.alpha, p.beta, p.n);
    }
    case MapKind::permutation: {
      const auto& p = std::get<PermutationParams>(m.params());
      return perm_map(p.perm.inverse(), p.change);
    }
    case MapKind::involution: return m;
    case MapKind::composite: {
      const auto& fs = std::get<CompositeParams>(m.params()).factors;
      RingMap acc = invert(fs.back());
      for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = compose(invert(*it), acc);
      return acc;
    }
    case MapKind::epsilon:
    case MapKind::generic: break;
  }
  throw MathError("map of kind '" + to_string(m.kind()) + "' has no structured inverse");
}

}  // namespace h14
