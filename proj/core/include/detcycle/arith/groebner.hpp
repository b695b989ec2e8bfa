#pragma once

#include <vector>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::arith {

// Reduced Groebner basis of the ideal generated by pure polynomials `gens`
// under the context's monomial order. Elements are monic and sorted by
// leading monomial, largest first. Throws InvalidInput on an empty list, an
// all-zero list or a generator carrying artinian terms.
std::vector<RingElem> groebner_basis(const std::vector<RingElem>& gens);

// Full reduction of `a` modulo a Groebner basis. `a` may carry e-terms; each
// e-coefficient is reduced independently.
RingElem normal_form(const RingElem& a, const std::vector<RingElem>& basis);

// True iff every e-coefficient of `a` lies in the ideal (gens) of Q[x].
bool ideal_membership(const RingElem& a, const std::vector<RingElem>& gens);

// Precomputed basis for repeated membership queries against one ideal.
class IdealMembership {
 public:
  explicit IdealMembership(const std::vector<RingElem>& gens) : basis_(groebner_basis(gens)) {}
  bool contains(const RingElem& a) const { return normal_form(a, basis_).is_zero(); }
  const std::vector<RingElem>& basis() const noexcept { return basis_; }

 private:
  std::vector<RingElem> basis_;
};

}  // namespace detcycle::arith
