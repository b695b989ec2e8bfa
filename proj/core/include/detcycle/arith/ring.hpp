#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace detcycle::arith {

// Truncated polynomial algebra k[e_1..e_s] / (all e-monomials of degree >= n).
//
// With s == 0 or n == 1 the algebra is the base field itself. The maximal
// ideal is spanned by the e-monomials of degree >= 1.
struct ArtinAlgebra {
  std::vector<std::string> generators;
  unsigned truncation_order = 1;

  static ArtinAlgebra field() { return {}; }
  static ArtinAlgebra dual_numbers(std::string name = "e") { return {{std::move(name)}, 2}; }

  bool is_field() const noexcept { return generators.empty() || truncation_order <= 1; }
  // Dimension over k of the algebra, i.e. the number of e-monomials of degree < n.
  std::size_t dimension() const;

  friend bool operator==(const ArtinAlgebra&, const ArtinAlgebra&) = default;
};

enum class MonomialOrder { kLex, kGrLex, kGrevLex };

std::optional<MonomialOrder> parse_monomial_order(std::string_view name);
std::string_view to_string(MonomialOrder order);

// Exponent vector over all ring symbols: the first `nvars` slots are the
// polynomial variables, the remaining slots are the artinian generators.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t slots) : exps_(slots, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  // Sum of exponents over slots [begin, end).
  std::uint64_t degree(std::size_t begin, std::size_t end) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool is_one() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// The coefficient ring O(U) (x) A = Q[x_1..x_d] (x) A, with a fixed monomial
// order on the variables. Shared immutably by every element built over it.
class RingContext {
 public:
  // Throws InvalidInput on repeated or clashing symbol names.
  static RingPtr make(std::vector<std::string> variables, ArtinAlgebra artin = {},
                      MonomialOrder order = MonomialOrder::kLex);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const ArtinAlgebra& artin() const noexcept { return artin_; }
  MonomialOrder order() const noexcept { return order_; }

  std::size_t nvars() const noexcept { return variables_.size(); }
  std::size_t neps() const noexcept { return artin_.generators.size(); }
  std::size_t slots() const noexcept { return nvars() + neps(); }
  unsigned truncation_order() const noexcept { return artin_.truncation_order; }

  // Slot index of a declared symbol (variable or artinian generator).
  std::optional<std::size_t> symbol_slot(std::string_view name) const;
  const std::string& slot_name(std::size_t slot) const;

  std::uint64_t var_degree(const Monomial& m) const { return m.degree(0, nvars()); }
  std::uint64_t eps_degree(const Monomial& m) const { return m.degree(nvars(), slots()); }
  // True when the monomial vanishes in A (e-degree at or above the truncation order).
  bool is_truncated(const Monomial& m) const;

  // Compares the variable parts under the ring's monomial order: <0, 0, >0.
  int compare_vars(const Monomial& a, const Monomial& b) const;
  // Canonical total order: variable part first, then e-part by degree then lex.
  int compare(const Monomial& a, const Monomial& b) const;

  // Same variables and order, different artinian base.
  RingPtr with_artin(ArtinAlgebra artin) const;

  // Structural equality; elements over equal contexts are interoperable.
  bool same_as(const RingContext& other) const;

  std::string describe() const;

 private:
  RingContext(std::vector<std::string> variables, ArtinAlgebra artin, MonomialOrder order)
      : variables_(std::move(variables)), artin_(std::move(artin)), order_(order) {}

  std::vector<std::string> variables_;
  ArtinAlgebra artin_;
  MonomialOrder order_;
};

// Throws ContextMismatch unless the two contexts are structurally equal.
void require_same(const RingPtr& a, const RingPtr& b);

}  // namespace detcycle::arith
