#include "detcycle/arith/ring_elem.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

namespace {

// Merges two canonical term lists with sign applied to the second.
std::vector<Term> merge(const RingContext& ctx, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = ctx.compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational sum = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!sum.is_zero()) out.push_back(Term{a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial eps_part(const RingContext& ctx, const Monomial& m) {
  Monomial out(m);
  for (std::size_t i = 0; i < ctx.nvars(); ++i) out[i] = 0;
  return out;
}

Monomial var_part(const RingContext& ctx, const Monomial& m) {
  Monomial out(m);
  for (std::size_t i = ctx.nvars(); i < ctx.slots(); ++i) out[i] = 0;
  return out;
}

}  // namespace

RingElem RingElem::constant(RingPtr ctx, const Rational& c) {
  Monomial one(ctx->slots());
  return monomial(std::move(ctx), std::move(one), c);
}

RingElem RingElem::symbol(RingPtr ctx, std::size_t slot) {
  Monomial m(ctx->slots());
  m[slot] = 1;
  return monomial(std::move(ctx), std::move(m), 1);
}

RingElem RingElem::monomial(RingPtr ctx, Monomial m, const Rational& c) {
  RingElem out(std::move(ctx));
  if (!c.is_zero() && !out.ctx_->is_truncated(m)) out.terms_.push_back(Term{std::move(m), c});
  return out;
}

RingElem RingElem::from_terms(RingPtr ctx, std::vector<Term> terms) {
  RingElem out(std::move(ctx));
  const RingContext& c = *out.ctx_;
  std::erase_if(terms, [&](const Term& t) { return t.coeff.is_zero() || c.is_truncated(t.monomial); });
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return c.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff.is_one();
}

bool RingElem::is_pure() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ctx_->eps_degree(t.monomial) == 0; });
}

bool RingElem::is_nonzero_constant() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one();
}

Rational RingElem::constant_value() const {
  return is_nonzero_constant() ? terms_[0].coeff : Rational(0);
}

std::uint64_t RingElem::var_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, ctx_->var_degree(t.monomial));
  return d;
}

std::uint64_t RingElem::eps_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, ctx_->eps_degree(t.monomial));
  return d;
}

RingElem RingElem::operator-() const {
  RingElem out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RingElem& RingElem::operator+=(const RingElem& other) {
  require_same(ctx_, other.ctx_);
  terms_ = merge(*ctx_, terms_, other.terms_, false);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  require_same(ctx_, other.ctx_);
  terms_ = merge(*ctx_, terms_, other.terms_, true);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  *this = *this * other;
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same(a.ctx_, b.ctx_);
  if (a.is_zero() || b.is_zero()) return RingElem(a.ctx_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.monomial * t.monomial;
      if (a.ctx_->is_truncated(m)) continue;
      terms.push_back(Term{std::move(m), s.coeff * t.coeff});
    }
  }
  return RingElem::from_terms(a.ctx_, std::move(terms));
}

bool operator==(const RingElem& a, const RingElem& b) {
  require_same(a.ctx_, b.ctx_);
  return a.terms_ == b.terms_;
}

RingElem RingElem::scaled(const Rational& c) const {
  if (c.is_zero()) return RingElem(ctx_);
  RingElem out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

RingElem RingElem::times_monomial(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return RingElem(ctx_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{t.monomial * m, t.coeff * c});
  // Multiplication by a monomial preserves the variable order but can
  // reorder the e-tiebreak, so re-canonicalize.
  return from_terms(ctx_, std::move(terms));
}

RingElem RingElem::pow(unsigned n) const {
  RingElem result = one(ctx_);
  RingElem base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<std::pair<Monomial, RingElem>> RingElem::eps_components() const {
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  for (const auto& t : terms_) {
    Monomial key = eps_part(*ctx_, t.monomial);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.emplace_back(key, std::vector<Term>{});
      it = std::prev(groups.end());
    }
    it->second.push_back(Term{var_part(*ctx_, t.monomial), t.coeff});
  }
  std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
    return ctx_->compare(a.first, b.first) > 0;
  });
  std::vector<std::pair<Monomial, RingElem>> out;
  out.reserve(groups.size());
  for (auto& [key, terms] : groups) out.emplace_back(key, from_terms(ctx_, std::move(terms)));
  return out;
}

RingElem RingElem::rebased(RingPtr ctx) const {
  require_same(ctx_, ctx);
  return from_terms(std::move(ctx), terms_);
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational magnitude = t.coeff.abs();
    std::vector<std::string> factors;
    // Artinian generators first, then variables, each in declared order.
    auto emit = [&](std::size_t slot) {
      auto e = t.monomial[slot];
      if (e == 0) return;
      std::string f = ctx_->slot_name(slot);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    };
    for (std::size_t s = ctx_->nvars(); s < ctx_->slots(); ++s) emit(s);
    for (std::size_t s = 0; s < ctx_->nvars(); ++s) emit(s);
    if (factors.empty()) {
      os << magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) os << magnitude.to_string() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& a) { return os << a.to_string(); }

RingElem augment(const RingElem& a) {
  std::vector<Term> kept;
  for (const auto& t : a.terms()) {
    if (a.context()->eps_degree(t.monomial) == 0) kept.push_back(t);
  }
  return RingElem::from_terms(a.context(), std::move(kept));
}

RingElem rho_split(const RingElem& a) {
  std::vector<Term> kept;
  for (const auto& t : a.terms()) {
    if (a.context()->eps_degree(t.monomial) > 0) kept.push_back(t);
  }
  return RingElem::from_terms(a.context(), std::move(kept));
}

RingElem ring_arith(ArithOp op, const RingElem& a, const RingElem& b) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kNeg: return -a;
  }
  throw InvalidInput("unknown ring operation");
}

bool ring_equal(const RingElem& a, const RingElem& b) { return a == b; }

DivisionResult divide(const RingElem& dividend, const RingElem& divisor) {
  require_same(dividend.context(), divisor.context());
  if (divisor.is_zero()) throw InvalidInput("division by zero polynomial");
  if (!divisor.is_pure()) throw InvalidInput("divisor must not carry artinian terms");
  const auto& ctx = dividend.context();
  const Term& lead = divisor.leading_term();
  const Rational lead_inv = lead.coeff.inverse();

  std::vector<Term> quotient;
  std::vector<Term> remainder;
  RingElem p = dividend;
  while (!p.is_zero()) {
    const Term t = p.leading_term();
    if (lead.monomial.divides(t.monomial)) {
      Monomial q = lead.monomial.quotient_of(t.monomial);
      Rational c = t.coeff * lead_inv;
      p -= divisor.times_monomial(q, c);
      quotient.push_back(Term{std::move(q), std::move(c)});
    } else {
      remainder.push_back(t);
      p -= RingElem::monomial(ctx, t.monomial, t.coeff);
    }
  }
  return {RingElem::from_terms(ctx, std::move(quotient)),
          RingElem::from_terms(ctx, std::move(remainder))};
}

std::optional<RingElem> divide_exact(const RingElem& dividend, const RingElem& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::optional<unsigned> valuation(const RingElem& a, const RingElem& divisor) {
  if (a.is_zero()) return std::nullopt;
  if (divisor.is_zero() || divisor.var_degree() == 0) {
    throw InvalidInput("valuation requires a non-constant divisor");
  }
  unsigned m = 0;
  RingElem cur = a;
  while (auto q = divide_exact(cur, divisor)) {
    cur = std::move(*q);
    ++m;
  }
  return m;
}

RingElem substitute_eps(const RingElem& a, const RingPtr& target,
                        const std::vector<RingElem>& images) {
  const auto& src = *a.context();
  if (src.variables() != target->variables() || src.order() != target->order()) {
    throw ContextMismatch("substitution requires identical polynomial variables and order");
  }
  if (images.size() != src.neps()) {
    throw InvalidInput("substitution needs one image per artinian generator");
  }
  for (const auto& img : images) require_same(img.context(), target);

  RingElem out(target);
  for (const auto& t : a.terms()) {
    Monomial vars(target->slots());
    for (std::size_t i = 0; i < src.nvars(); ++i) vars[i] = t.monomial[i];
    RingElem term = RingElem::monomial(target, std::move(vars), t.coeff);
    for (std::size_t k = 0; k < src.neps() && !term.is_zero(); ++k) {
      auto e = t.monomial[src.nvars() + k];
      if (e > 0) term = term * images[k].pow(e);
    }
    out += term;
  }
  return out;
}

}  // namespace detcycle::arith
