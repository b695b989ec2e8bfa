#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace detcycle::det {

enum class Axiom { kNaturality, kAssociativity, kCommutativity };

std::string_view axiom_name(Axiom a);

struct AxiomCase {
  Axiom axiom;
  std::size_t index;
  bool passed;
  // Scalars along both routes, or the error raised while building the case.
  std::string witness;
};

struct AxiomReport {
  std::size_t cases = 0;
  std::vector<AxiomCase> results;

  std::size_t failures(Axiom a) const;
  std::size_t suites_passed() const;
  bool all_passed() const { return suites_passed() == 3; }

  // One line per (axiom, case) then "axioms: k/3 suites passed, N cases".
  std::string to_text() const;
};

// Randomized check of the determinant-functor axioms (naturality,
// associativity, commutativity) over Q[x,y] (x) Q[e]/(e^2) with ranks <= 4.
// Every diagram is compared by exact equality of scalars. Case i draws from
// an independent stream derived from (seed, i).
AxiomReport axiom_suite(std::uint64_t seed, std::size_t cases);

}  // namespace detcycle::det
