#include "h14/rat.hpp"

#include <cctype>

#include "h14/errors.hpp"

namespace h14 {

Rat::Rat(long num, long den) {
  if (den == 0) throw MathError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part) {
    size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::to_short_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return to_string();
}

Rat Rat::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rat(mpq_class(n, d));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rat(mpq_class(r));
}

}  // namespace h14
