#pragma once

#include <string>
#include <vector>

#include "detcycle/arith/groebner.hpp"
#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::arith {

// A localization S^{-1} Q[x], tensored with A. Two shapes occur:
//   - complement of primes: S = Q[x] minus (P_1 u ... u P_k), e.g. O_{X,y}
//     when P = (f) is the ideal of the divisor;
//   - inverted elements: S generated by s_1..s_k, as on a chart overlap.
// Without either the ring is Q[x] (x) A and only nonzero constants are
// invertible in the augmentation.
class Localization {
 public:
  enum class Kind { kNone, kPrimeComplement, kInvertedElements };

  explicit Localization(RingPtr ctx) : ctx_(std::move(ctx)) {}
  // Each inner list generates a prime ideal (primality is trusted).
  static Localization away_from_primes(RingPtr ctx, std::vector<std::vector<RingElem>> primes);
  static Localization inverting(RingPtr ctx, std::vector<RingElem> elements);

  const RingPtr& context() const noexcept { return ctx_; }
  Kind kind() const noexcept { return kind_; }
  const std::vector<std::vector<RingElem>>& primes() const noexcept { return primes_; }
  const std::vector<RingElem>& inverted() const noexcept { return inverted_; }

  // Whether the pure polynomial `d` lies in the multiplicative set.
  bool admits_denominator(const RingElem& d) const;

  // Product of the inverted elements (1 for other kinds).
  RingElem inverted_product() const;

  std::string describe() const;

 private:
  RingPtr ctx_;
  Kind kind_ = Kind::kNone;
  std::vector<std::vector<RingElem>> primes_;
  std::vector<IdealMembership> prime_tests_;
  std::vector<RingElem> inverted_;
};

// numerator / denominator with a pure denominator from the multiplicative set.
class LocalFraction {
 public:
  // Throws InvalidInput when the denominator is zero, not pure, or not
  // admitted by the localization.
  LocalFraction(RingElem numerator, RingElem denominator, const Localization& loc);

  const RingElem& numerator() const noexcept { return num_; }
  const RingElem& denominator() const noexcept { return den_; }

  // Cross-multiplied equality: a/b == c/d iff a*d == c*b. Denominators are
  // nonzero divisors, so this is exact.
  bool equals(const LocalFraction& other) const;
  bool is_one() const { return num_ == den_; }
  LocalFraction times(const LocalFraction& other, const Localization& loc) const;

  std::string to_string() const;

 private:
  RingElem num_;
  RingElem den_;
};

// a is a unit of S^{-1}Q[x] (x) A iff augment(a) is a unit of S^{-1}Q[x];
// m_A is nilpotent.
bool is_unit_local(const RingElem& a, const Localization& loc);

// Inverse of a unit: 1/b times the finite Neumann series in the nilpotent
// part n = rho_split(a), where b = augment(a). Throws InvalidInput on non-units.
LocalFraction invert_unit(const RingElem& a, const Localization& loc);

}  // namespace detcycle::arith
