#include "detcycle/arith/random.hpp"

namespace detcycle::arith {

std::uint64_t RandomSource::mix(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational RandomSource::small_rational(std::int64_t bound, bool allow_fractions) {
  std::int64_t num = uniform(-bound, bound);
  std::int64_t den = allow_fractions && coin(0.25) ? uniform(1, 3) : 1;
  return Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

Rational RandomSource::nonzero_rational(std::int64_t bound) {
  Rational r;
  do {
    r = small_rational(bound);
  } while (r.is_zero());
  return r;
}

RingElem RandomSource::pure_poly(const RingPtr& ctx, unsigned max_degree, unsigned max_terms,
                                 bool allow_zero) {
  std::vector<Term> terms;
  const auto count = static_cast<unsigned>(uniform(allow_zero ? 0 : 1, max_terms));
  for (unsigned i = 0; i < count; ++i) {
    Monomial m(ctx->slots());
    auto budget = static_cast<unsigned>(uniform(0, max_degree));
    for (unsigned d = 0; d < budget && ctx->nvars() > 0; ++d) {
      ++m[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(ctx->nvars()) - 1))];
    }
    terms.push_back(Term{std::move(m), nonzero_rational()});
  }
  return RingElem::from_terms(ctx, std::move(terms));
}

RingElem RandomSource::nonzero_pure_poly(const RingPtr& ctx, unsigned max_degree,
                                         unsigned max_terms) {
  for (;;) {
    RingElem p = pure_poly(ctx, max_degree, max_terms, false);
    if (!p.is_zero()) return p;
  }
}

RingElem RandomSource::nilpotent(const RingPtr& ctx, unsigned max_degree, unsigned max_terms) {
  RingElem out(ctx);
  if (ctx->artin().is_field()) return out;
  const auto count = static_cast<unsigned>(uniform(0, max_terms));
  for (unsigned i = 0; i < count; ++i) {
    Monomial e(ctx->slots());
    auto deg = static_cast<unsigned>(uniform(1, ctx->truncation_order() - 1));
    for (unsigned d = 0; d < deg; ++d) {
      ++e[ctx->nvars() +
          static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(ctx->neps()) - 1))];
    }
    out += pure_poly(ctx, max_degree, 2).times_monomial(e, 1);
  }
  return out;
}

RingElem RandomSource::element(const RingPtr& ctx, unsigned max_degree, unsigned max_terms) {
  return pure_poly(ctx, max_degree, max_terms) + nilpotent(ctx, max_degree, max_terms);
}

}  // namespace detcycle::arith
