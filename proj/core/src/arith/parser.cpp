#include "detcycle/arith/parser.hpp"

#include <cctype>
#include <string>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

namespace {

enum class Tok { kInt, kSym, kPlus, kMinus, kStar, kCaret, kSlash, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_symbol_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_symbol_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::kInt, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (is_symbol_start(c)) {
      while (i < text.size() && is_symbol_char(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::kSym, std::string(text.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '/': kind = Tok::kSlash; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), i});
    ++i;
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, RingPtr ctx) : toks_(std::move(tokens)), ctx_(std::move(ctx)) {}

  RingElem parse() {
    RingElem e = expr();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  RingElem expr() {
    RingElem acc(ctx_);
    bool negate = false;
    if (accept(Tok::kMinus)) {
      negate = true;
    } else {
      accept(Tok::kPlus);
    }
    RingElem t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept(Tok::kPlus)) {
        acc += term();
      } else if (accept(Tok::kMinus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElem term() {
    RingElem acc = factor();
    while (accept(Tok::kStar)) acc = acc * factor();
    if (peek().kind == Tok::kSlash) fail("division is only allowed inside a rational literal");
    return acc;
  }

  RingElem factor() {
    if (accept(Tok::kMinus)) return -factor();
    RingElem base = primary();
    if (accept(Tok::kCaret)) {
      if (peek().kind == Tok::kMinus) fail("exponents must be nonnegative integers");
      if (peek().kind != Tok::kInt) fail("expected integer exponent");
      const Token& e = next();
      if (e.text.size() > 6) throw ParseError("exponent too large", e.pos);
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
      if (peek().kind == Tok::kCaret) fail("chained exponent; use parentheses");
    }
    return base;
  }

  RingElem primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt: {
        next();
        mpz_class num(t.text, 10);
        mpz_class den(1);
        if (accept(Tok::kSlash)) {
          if (peek().kind != Tok::kInt) fail("expected integer denominator in rational literal");
          den = mpz_class(next().text, 10);
          if (den == 0) throw ParseError("zero denominator", toks_[pos_ - 1].pos);
        }
        return RingElem::constant(ctx_, Rational(num, den));
      }
      case Tok::kSym: {
        next();
        auto slot = ctx_->symbol_slot(t.text);
        if (!slot) throw ParseError("unknown symbol '" + t.text + "'", t.pos);
        return RingElem::symbol(ctx_, *slot);
      }
      case Tok::kLParen: {
        next();
        RingElem inner = expr();
        if (!accept(Tok::kRParen)) fail("expected ')'");
        if (peek().kind == Tok::kSlash) fail("division is only allowed inside a rational literal");
        return inner;
      }
      case Tok::kEnd:
        fail("unexpected end of expression");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ctx_;
};

}  // namespace

RingElem parse_poly(std::string_view text, const RingPtr& ctx) {
  return Parser(tokenize(text), ctx).parse();
}

}  // namespace detcycle::arith
