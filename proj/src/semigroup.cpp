#include "h14/semigroup.hpp"

#include <algorithm>
#include <functional>

#include "h14/errors.hpp"

namespace h14 {

std::vector<Rat> univariate_coeffs(const LaurentPoly& p) {
  auto x1 = p.vars().index_of("x1");
  std::vector<Rat> out;
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (x1 && i == *x1) continue;
      if (e[i] != 0) throw MathError("generator outside k[x1]: involves '" + p.vars().name(i) + "'");
    }
    int k = x1 ? e[*x1] : 0;
    if (k < 0) throw MathError("generator outside k[x1]: negative power of x1");
    if (out.size() <= static_cast<size_t>(k)) out.resize(static_cast<size_t>(k) + 1, Rat(0));
    out[static_cast<size_t>(k)] = c;
  }
  return out;
}

namespace {

using Dense = std::vector<Rat>;

Dense truncate(Dense v, size_t width) {
  v.resize(width, Rat(0));
  return v;
}

Dense mul_trunc(const Dense& a, const Dense& b, size_t width) {
  Dense r(width, Rat(0));
  for (size_t i = 0; i < a.size() && i < width; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j < width; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

int lowest(const Dense& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

int highest(const Dense& v) {
  for (size_t i = v.size(); i-- > 0;)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// Calls visit(product) for every product of generators whose weight (as
// measured by `weight`) stays within `bound`, the empty product included.
void enumerate_products(const std::vector<Dense>& gens, const std::vector<int>& weight, int bound,
                        size_t width, const std::function<void(const Dense&)>& visit) {
  Dense one(width, Rat(0));
  one[0] = Rat(1);
  std::function<void(size_t, const Dense&, int)> rec = [&](size_t idx, const Dense& cur, int w) {
    if (idx == gens.size()) {
      visit(cur);
      return;
    }
    Dense acc = cur;
    int wt = w;
    while (true) {
      rec(idx + 1, acc, wt);
      wt += weight[idx];
      if (wt > bound) break;
      acc = mul_trunc(acc, gens[idx], width);
    }
  };
  rec(0, one, 0);
}

// Echelon of k[gens] modulo x1^(bound+1).
Echelon truncated_span(const std::vector<LaurentPoly>& gens, int bound) {
  const size_t width = static_cast<size_t>(bound) + 1;
  std::vector<Dense> shifted;
  std::vector<int> ords;
  for (const auto& g : gens) {
    Dense c = univariate_coeffs(g);
    if (!c.empty()) c[0] = Rat(0);  // k[g] = k[g - g(0)]
    int o = lowest(c);
    if (o < 0 || o > bound) continue;
    shifted.push_back(truncate(std::move(c), width));
    ords.push_back(o);
  }
  Echelon ech(width);
  enumerate_products(shifted, ords, bound, width, [&ech](const Dense& v) { ech.insert(v); });
  return ech;
}

}  // namespace

SemigroupTable semigroup_orders(const std::vector<LaurentPoly>& gens, int bound) {
  if (bound < 0) throw MathError("semigroup bound must be non-negative");
  SemigroupTable t;
  t.bound = bound;
  t.basis_echelon = truncated_span(gens, bound);
  for (size_t p : t.basis_echelon.pivots()) t.orders.insert(static_cast<int>(p));
  return t;
}

bool is_normal(const SemigroupTable& table) {
  auto it = std::find_if(table.orders.begin(), table.orders.end(), [](int o) { return o > 0; });
  if (it == table.orders.end()) {
    if (table.bound < 2) throw MathError("insufficient bound for the normality test");
    // No positive order up to the bound: either A = k or the bound is too small.
    throw MathError("insufficient bound: no nonzero order found up to " + std::to_string(table.bound));
  }
  const int m = *it;
  if (table.bound < 2 * m) throw MathError("insufficient bound for the normality test");
  for (int o : table.orders)
    if (o % m != 0) return false;
  for (int k = 0; k <= table.bound; k += m)
    if (!table.orders.count(k)) return false;
  return true;
}

bool subalgebra_member(const LaurentPoly& h, const std::vector<LaurentPoly>& gens, int bound) {
  Dense hc = univariate_coeffs(h);
  if (highest(hc) > bound) throw MathError("deg h exceeds the bound");
  const size_t width = static_cast<size_t>(bound) + 1;
  std::vector<Dense> nonconst;
  std::vector<int> degs;
  for (const auto& g : gens) {
    Dense c = univariate_coeffs(g);
    int d = highest(c);
    if (d <= 0 || d > bound) continue;  // constants add nothing; too-high degrees are excluded
    nonconst.push_back(truncate(std::move(c), width));
    degs.push_back(d);
  }
  Echelon ech(width);
  enumerate_products(nonconst, degs, bound, width, [&ech](const Dense& v) { ech.insert(v); });
  return ech.contains(truncate(hc, width));
}

bool excluded_from_subalgebra(const LaurentPoly& h, const std::vector<LaurentPoly>& gens, int bound) {
  Echelon ech = truncated_span(gens, bound);
  return !ech.contains(truncate(univariate_coeffs(h), static_cast<size_t>(bound) + 1));
}

}  // namespace h14
