#include "h14/rat_func.hpp"

#include "h14/errors.hpp"

namespace h14 {

RatFunc::RatFunc(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), Rat(1))) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.vars() == den_.vars())) throw StructuralError("numerator and denominator differ in variables");
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
  if (auto c = den_.constant_value()) return num_ * c->inverse();
  if (den_.is_invertible_monomial()) return num_ * den_.monomial_inverse();
  return std::nullopt;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw MathError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!(a.vars() == b.vars())) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (den_.constant_value() == Rat(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int v_x1(const RatFunc& q, std::string_view var) {
  if (q.is_zero()) throw MathError("valuation of zero is undefined");
  size_t i = q.vars().require(var);
  return q.num().min_degree(i) - q.den().min_degree(i);
}

}  // namespace h14
