#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detcycle/arith/rational.hpp"
#include "detcycle/arith/ring.hpp"

namespace detcycle::arith {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// An element of Q[x] (x) A in canonical form: terms strictly decreasing in the
// context's canonical order, no zero coefficients, no truncated e-monomials.
class RingElem {
 public:
  explicit RingElem(RingPtr ctx) : ctx_(std::move(ctx)) {}

  static RingElem constant(RingPtr ctx, const Rational& c);
  static RingElem one(RingPtr ctx) { return constant(std::move(ctx), 1); }
  // The symbol in the given slot (variable or artinian generator).
  static RingElem symbol(RingPtr ctx, std::size_t slot);
  static RingElem monomial(RingPtr ctx, Monomial m, const Rational& c = 1);
  // Sorts, merges like terms, drops zeros and truncated monomials.
  static RingElem from_terms(RingPtr ctx, std::vector<Term> terms);

  const RingPtr& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  // No artinian generator appears.
  bool is_pure() const;
  // A nonzero element of Q (e-degree 0 and variable degree 0).
  bool is_nonzero_constant() const;
  // Constant term of a pure constant; zero otherwise.
  Rational constant_value() const;
  // Total degree in the polynomial variables (0 for the zero element).
  std::uint64_t var_degree() const;
  std::uint64_t eps_degree() const;

  // Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b);

  RingElem scaled(const Rational& c) const;
  RingElem times_monomial(const Monomial& m, const Rational& c) const;
  RingElem pow(unsigned n) const;

  // Coefficient-wise decomposition over the e-monomial basis of A: pairs
  // (e-monomial, pure polynomial coefficient), ordered by the canonical e order.
  std::vector<std::pair<Monomial, RingElem>> eps_components() const;

  // Same terms over a structurally compatible context (e.g. after re-parsing).
  RingElem rebased(RingPtr ctx) const;

  // Canonical rendering, e.g. "x^2*y - 3/2" or "2*e*x*y".
  std::string to_string() const;

 private:
  RingPtr ctx_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& a);

// Projection onto the e-degree-0 part, i.e. O (x) A -> O induced by A -> k.
RingElem augment(const RingElem& a);
// Projection onto O (x) m_A; augment(a) + rho_split(a) == a.
RingElem rho_split(const RingElem& a);

enum class ArithOp { kAdd, kSub, kMul, kNeg };
// Dispatching form of the ring operations; kNeg ignores b. Throws ContextMismatch.
RingElem ring_arith(ArithOp op, const RingElem& a, const RingElem& b);
bool ring_equal(const RingElem& a, const RingElem& b);

// Division of `dividend` by a single pure polynomial `divisor` via the
// multivariate division algorithm. {divisor} is a Groebner basis of its own
// ideal, so the remainder is zero exactly when divisor divides each
// e-coefficient of dividend.
struct DivisionResult {
  RingElem quotient;
  RingElem remainder;
};
DivisionResult divide(const RingElem& dividend, const RingElem& divisor);

// Exact quotient when divisor | dividend, otherwise nullopt.
std::optional<RingElem> divide_exact(const RingElem& dividend, const RingElem& divisor);

// Largest m with divisor^m | a, computed by repeated exact division. Returns
// nullopt for a == 0 (infinite valuation). `divisor` must be non-constant.
std::optional<unsigned> valuation(const RingElem& a, const RingElem& divisor);

// Substitutes the artinian generators of `a` by elements of another ring with
// the same polynomial variables; variables map to themselves.
RingElem substitute_eps(const RingElem& a, const RingPtr& target,
                        const std::vector<RingElem>& images);

}  // namespace detcycle::arith
