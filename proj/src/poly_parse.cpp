#include <cctype>
#include <optional>

#include "lpa/error.hpp"
#include "lpa/poly.hpp"

namespace lpa {

namespace {

// Recursive-descent parser over Q; the caller maps the result into the target field.
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly parse_all(std::optional<unsigned long>& modulus) {
    Poly p = expr();
    skip_ws();
    if (keyword("mod")) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 10) fail("expected a prime after 'mod'");
      modulus = std::stoul(std::string(s_.substr(start, pos_ - start)));
      skip_ws();
    }
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool keyword(std::string_view kw) {
    if (s_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    if (c == 'm' && s_.substr(pos_, 3) == "mod") return false;
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("can only divide by a nonzero constant");
        acc = acc.scaled(1 / d.leading());
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 4) fail("expected a small non-negative exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    const Field q = Field::rationals();
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return Poly::x(q);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(q, mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) {
  std::optional<unsigned long> modulus;
  Poly q = Parser(text).parse_all(modulus);
  Field target = field;
  if (modulus) {
    const Field fp = Field::prime(*modulus);
    if (!field.is_rational() && !(field == fp)) {
      throw InputError("polynomial is given mod " + std::to_string(*modulus) + " but the field is " +
                       field.to_string());
    }
    target = fp;
  }
  return Poly(target, q.coeffs());
}

}  // namespace lpa
