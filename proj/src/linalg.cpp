#include "h14/linalg.hpp"

#include "h14/errors.hpp"

namespace h14 {

RatVector Echelon::reduce(RatVector v) const {
  if (v.size() != width_) throw StructuralError("vector has wrong width");
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    Rat c = v[p];
    for (size_t j = p; j < width_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  return v;
}

std::optional<size_t> Echelon::insert(RatVector v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return std::nullopt;
  Rat inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  for (auto& [q, row] : rows_) {
    if (row[p].is_zero()) continue;
    Rat c = row[p];
    for (size_t j = p; j < width_; ++j) row[j] -= c * v[j];
  }
  rows_.emplace(p, std::move(v));
  return p;
}

bool Echelon::contains(const RatVector& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<size_t> Echelon::pivots() const {
  std::vector<size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  Echelon e(m.front().size());
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

}  // namespace h14
