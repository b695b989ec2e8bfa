#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detcycle/deformation/scene.hpp"

namespace detcycle::deformation {

using arith::LocalFraction;

// g with lifting(source) = g * lifting(target) on an overlap.
struct Transition {
  std::string overlap;
  std::string source;
  std::string target;
  std::optional<LocalFraction> unit;  // absent when the liftings do not glue
  std::string diagnostic;
};

struct CocycleCheck {
  std::string overlap;
  bool holds;
};

struct CechReport {
  std::vector<Transition> transitions;
  std::vector<CocycleCheck> inverse_pairs;  // g_ij * g_ji == 1
  std::vector<CocycleCheck> triples;        // g_ij * g_jk * g_ki == 1
  bool valid() const;
  std::string to_text() const;
};

// Solves s * a = q * b with s a power of the overlap's inverted product,
// order by order in the artinian degree. Returns q / s, or nullopt when no
// power up to `max_power` works.
std::optional<LocalFraction> divide_liftings(const RingElem& a, const RingElem& b,
                                             const Localization& loc, unsigned max_power = 8);

CechReport cech_transitions(const Scene& scene);

}  // namespace detcycle::deformation
