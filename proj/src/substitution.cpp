#include "h14/substitution.hpp"

#include <algorithm>
#include <climits>

#include "h14/errors.hpp"

namespace h14 {

Substitution::Substitution(VarSet src, VarSet tgt, std::vector<RatFunc> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (images.size() != source.size()) throw StructuralError("substitution is missing variable images");
  for (const auto& im : images)
    if (!(im.vars() == target)) throw StructuralError("substitution image over the wrong variable set");
}

Substitution::Substitution(VarSet src, VarSet tgt, const std::vector<LaurentPoly>& imgs)
    : source(std::move(src)), target(std::move(tgt)) {
  if (imgs.size() != source.size()) throw StructuralError("substitution is missing variable images");
  for (const auto& im : imgs) {
    if (!(im.vars() == target)) throw StructuralError("substitution image over the wrong variable set");
    images.emplace_back(im);
  }
}

Substitution Substitution::identity(const VarSet& vars) {
  std::vector<LaurentPoly> imgs;
  for (size_t i = 0; i < vars.size(); ++i) imgs.push_back(LaurentPoly::variable(vars, i));
  return Substitution(vars, vars, imgs);
}

namespace {

// Powers of one image, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(LaurentPoly base) : base_(std::move(base)) {
    pows_.push_back(LaurentPoly::constant(base_.vars(), Rat(1)));
  }
  const LaurentPoly& get(int k) {
    while (static_cast<int>(pows_.size()) <= k) pows_.push_back(pows_.back() * base_);
    return pows_[static_cast<size_t>(k)];
  }

 private:
  LaurentPoly base_;
  std::vector<LaurentPoly> pows_;
};

}  // namespace

RatFunc lp_subst(const LaurentPoly& p, const Substitution& m) {
  if (!(p.vars() == m.source)) throw StructuralError("polynomial and map source differ in variables");
  const VarSet& tgt = m.target;
  const size_t n = m.source.size();
  if (p.is_zero()) return RatFunc(LaurentPoly(tgt));

  std::vector<int> lo(n, 0), hi(n, 0);
  for (size_t v = 0; v < n; ++v) {
    lo[v] = std::min(0, p.min_degree(v));
    hi[v] = std::max(0, p.degree(v));
  }

  // A "direct" variable has a Laurent image that can be raised to any needed
  // power; otherwise the image a/b contributes a^(e+neglo) b^(hi-e) to the
  // numerator and a^neglo b^hi to the common denominator.
  struct Slot {
    bool direct = true;
    bool used = false;
    std::optional<PowerCache> pos, neg, a, b;
  };
  std::vector<Slot> slots(n);
  LaurentPoly den = LaurentPoly::constant(tgt, Rat(1));
  for (size_t v = 0; v < n; ++v) {
    Slot& s = slots[v];
    s.used = lo[v] != 0 || hi[v] != 0;
    if (!s.used) continue;
    const RatFunc& img = m.images[v];
    auto lp = img.as_laurent();
    if (lp && (lo[v] == 0 || lp->is_invertible_monomial())) {
      s.pos.emplace(*lp);
      if (lo[v] < 0) s.neg.emplace(lp->monomial_inverse());
      continue;
    }
    if (lo[v] < 0 && img.is_zero())
      throw MathError("variable '" + m.source.name(v) + "' has a negative exponent but maps to zero");
    s.direct = false;
    s.a.emplace(img.num());
    s.b.emplace(img.den());
    den = den * s.a->get(-lo[v]) * s.b->get(hi[v]);
  }

  LaurentPoly num(tgt);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(tgt, c);
    for (size_t v = 0; v < n; ++v) {
      Slot& s = slots[v];
      if (!s.used) continue;
      if (s.direct) {
        if (e[v] > 0) t = t * s.pos->get(e[v]);
        else if (e[v] < 0) t = t * s.neg->get(-e[v]);
      } else {
        int pa = e[v] - lo[v];
        int pb = hi[v] - e[v];
        if (pa > 0) t = t * s.a->get(pa);
        if (pb > 0) t = t * s.b->get(pb);
      }
    }
    num += t;
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc lp_subst(const RatFunc& p, const Substitution& m) {
  return lp_subst(p.num(), m) / lp_subst(p.den(), m);
}

LaurentPoly subst_laurent(const LaurentPoly& p, const Substitution& m) {
  RatFunc r = lp_subst(p, m);
  auto lp = r.as_laurent();
  if (!lp) {
    if (auto q = exact_div(r.num(), r.den())) return *q;
    throw MathError("image is not a Laurent polynomial");
  }
  return *lp;
}

}  // namespace h14
