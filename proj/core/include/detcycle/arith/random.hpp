#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::arith {

// Seeded source of random ring elements for property suites. Deterministic
// for a given seed on a given standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent stream, e.g. one per test case index.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p = 0.5);
  Rational small_rational(std::int64_t bound = 5, bool allow_fractions = true);
  Rational nonzero_rational(std::int64_t bound = 5);

  // Pure polynomial with up to `max_terms` terms of total degree <= max_degree.
  RingElem pure_poly(const RingPtr& ctx, unsigned max_degree, unsigned max_terms,
                     bool allow_zero = true);
  RingElem nonzero_pure_poly(const RingPtr& ctx, unsigned max_degree, unsigned max_terms);
  // Element of Q[x] (x) m_A: random e-monomials of degree >= 1 times pure polys.
  RingElem nilpotent(const RingPtr& ctx, unsigned max_degree, unsigned max_terms);
  // Arbitrary element: pure part plus nilpotent part.
  RingElem element(const RingPtr& ctx, unsigned max_degree, unsigned max_terms);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detcycle::arith
