#include "h14/poly_parse.hpp"

#include <cctype>
#include <string>

#include "h14/errors.hpp"

namespace h14 {
namespace {

class Parser {
 public:
  Parser(std::string_view s, const VarSet& vars) : s_(s), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        LaurentPoly d = unary();
        if (auto c = d.constant_value()) {
          if (c->is_zero()) fail("division by zero");
          acc *= c->inverse();
        } else if (d.is_invertible_monomial()) {
          acc = acc * d.monomial_inverse();
        } else {
          fail("division by a non-monomial");
        }
      } else {
        return acc;
      }
    }
  }

  LaurentPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    unsigned k = static_cast<unsigned>(std::stoul(digits));
    if (!neg) return base.pow(k);
    if (auto c = base.constant_value()) {
      if (c->is_zero()) fail("negative power of zero");
      return LaurentPoly::constant(vars_, c->inverse().pow(static_cast<int>(k)));
    }
    if (!base.is_invertible_monomial()) fail("negative power of a non-invertible element");
    return base.monomial_inverse().pow(k);
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d = read_digits();
      return LaurentPoly::constant(vars_, Rat::parse(d));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      auto idx = vars_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return LaurentPoly::variable(vars_, *idx);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const VarSet& vars_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).run();
}

}  // namespace h14
