#include "detcycle/arith/rational.hpp"

#include <cctype>
#include <ostream>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

namespace {

mpz_class parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character in integer", offset + j);
    }
  }
  mpz_class v(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0), 1);
  return Rational(parse_integer(text.substr(0, slash), 0),
                  parse_integer(text.substr(slash + 1), slash + 1));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace detcycle::arith
