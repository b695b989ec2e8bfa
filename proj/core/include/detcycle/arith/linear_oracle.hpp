#pragma once

#include <vector>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::arith {

// Degree-bounded ideal membership by linear algebra over Q.
//
// For each e-coefficient c of `a`, decides whether c = sum_i q_i * g_i with
// deg(q_i * g_i) <= degree_bound by solving for the cofactor coefficients on
// the Q-span of monomials of degree <= degree_bound (exact elimination).
// A `true` answer is a certificate; `false` only means no certificate within
// the bound. Independent of the Groebner engine.
bool bounded_membership(const RingElem& a, const std::vector<RingElem>& gens,
                        unsigned degree_bound);

// Rank of a dense rational matrix given row-major (exact Gaussian elimination).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace detcycle::arith
