#include "detcycle/arith/localization.hpp"

#include <sstream>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

namespace {

void require_pure_nonzero(const RingElem& p, const char* what) {
  if (p.is_zero()) throw InvalidInput(std::string(what) + ": zero element");
  if (!p.is_pure()) throw InvalidInput(std::string(what) + ": " + p.to_string() +
                                       " carries artinian terms");
}

std::string parenthesized(const RingElem& p) {
  if (p.terms().size() == 1 && p.leading_term().coeff.sign() > 0) return p.to_string();
  return "(" + p.to_string() + ")";
}

}  // namespace

Localization Localization::away_from_primes(RingPtr ctx, std::vector<std::vector<RingElem>> primes) {
  Localization loc(std::move(ctx));
  loc.kind_ = primes.empty() ? Kind::kNone : Kind::kPrimeComplement;
  for (const auto& gens : primes) {
    if (gens.empty()) throw InvalidInput("localized prime with no generators");
    for (const auto& g : gens) {
      require_same(g.context(), loc.ctx_);
      require_pure_nonzero(g, "prime generator");
    }
    loc.prime_tests_.emplace_back(gens);
  }
  loc.primes_ = std::move(primes);
  return loc;
}

Localization Localization::inverting(RingPtr ctx, std::vector<RingElem> elements) {
  Localization loc(std::move(ctx));
  loc.kind_ = elements.empty() ? Kind::kNone : Kind::kInvertedElements;
  for (const auto& s : elements) {
    require_same(s.context(), loc.ctx_);
    require_pure_nonzero(s, "inverted element");
  }
  loc.inverted_ = std::move(elements);
  return loc;
}

RingElem Localization::inverted_product() const {
  RingElem prod = RingElem::one(ctx_);
  for (const auto& s : inverted_) prod = prod * s;
  return prod;
}

bool Localization::admits_denominator(const RingElem& d) const {
  require_same(d.context(), ctx_);
  if (d.is_zero() || !d.is_pure()) return false;
  if (d.is_nonzero_constant()) return true;
  switch (kind_) {
    case Kind::kNone:
      return false;
    case Kind::kPrimeComplement:
      for (const auto& test : prime_tests_) {
        if (test.contains(d)) return false;
      }
      return true;
    case Kind::kInvertedElements: {
      // d | s^k for some k iff every irreducible factor of d divides s; the
      // multiplicity of any factor in d is at most deg(d), so k = deg(d) suffices.
      RingElem power = inverted_product().pow(static_cast<unsigned>(d.var_degree()));
      return divide_exact(power, d).has_value();
    }
  }
  return false;
}

std::string Localization::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kNone:
      os << "no localization";
      break;
    case Kind::kPrimeComplement:
      os << "away from";
      for (const auto& p : primes_) {
        os << " (";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
        os << ")";
      }
      break;
    case Kind::kInvertedElements:
      os << "inverting";
      for (const auto& s : inverted_) os << " " << parenthesized(s);
      break;
  }
  return os.str();
}

LocalFraction::LocalFraction(RingElem numerator, RingElem denominator, const Localization& loc)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same(num_.context(), loc.context());
  require_same(den_.context(), loc.context());
  if (den_.is_zero()) throw InvalidInput("local fraction with zero denominator");
  if (!den_.is_pure()) throw InvalidInput("local fraction denominator must be pure");
  if (!loc.admits_denominator(den_)) {
    throw InvalidInput("denominator " + den_.to_string() + " is not invertible " +
                       loc.describe());
  }
}

bool LocalFraction::equals(const LocalFraction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

LocalFraction LocalFraction::times(const LocalFraction& other, const Localization& loc) const {
  return LocalFraction(num_ * other.num_, den_ * other.den_, loc);
}

std::string LocalFraction::to_string() const {
  return "(" + num_.to_string() + ")/" + parenthesized(den_);
}

bool is_unit_local(const RingElem& a, const Localization& loc) {
  require_same(a.context(), loc.context());
  RingElem b = augment(a);
  return !b.is_zero() && loc.admits_denominator(b);
}

LocalFraction invert_unit(const RingElem& a, const Localization& loc) {
  if (!is_unit_local(a, loc)) {
    throw InvalidInput(a.to_string() + " is not a unit " + loc.describe());
  }
  const RingPtr& ctx = a.context();
  const RingElem b = augment(a);
  const RingElem n = rho_split(a);

  // Highest K with n^K != 0; bounded by the truncation order.
  std::vector<RingElem> neg_powers{RingElem::one(ctx)};
  const RingElem minus_n = -n;
  while (true) {
    RingElem next = neg_powers.back() * minus_n;
    if (next.is_zero()) break;
    neg_powers.push_back(std::move(next));
  }
  const std::size_t k_max = neg_powers.size() - 1;

  if (b.is_nonzero_constant()) {
    const Rational c_inv = b.constant_value().inverse();
    RingElem sum(ctx);
    Rational scale = c_inv;
    for (std::size_t k = 0; k <= k_max; ++k) {
      sum += neg_powers[k].scaled(scale);
      scale *= c_inv;
    }
    return LocalFraction(std::move(sum), RingElem::one(ctx), loc);
  }
  // (b + n) * sum_k (-n)^k b^(K-k) = b^(K+1) since n^(K+1) = 0.
  RingElem sum(ctx);
  for (std::size_t k = 0; k <= k_max; ++k) {
    sum += neg_powers[k] * b.pow(static_cast<unsigned>(k_max - k));
  }
  return LocalFraction(std::move(sum), b.pow(static_cast<unsigned>(k_max + 1)), loc);
}

}  // namespace detcycle::arith
