#pragma once

#include <string>
#include <vector>

#include "detcycle/deformation/scene.hpp"
#include "detcycle/localcoh/classes.hpp"

namespace detcycle::deformation {

// Morphism of artinian bases B -> A over k given by images of B's
// generators; polynomial variables map to themselves.
class ArtinMorphism {
 public:
  // Throws InvalidInput when an image has a constant term or the relations
  // of B are not sent to zero.
  ArtinMorphism(RingPtr source, RingPtr target, std::vector<RingElem> images);

  // k[e]/(e^n) -> k[e]/(e^m) for m <= n; m <= 1 targets the residue field.
  static ArtinMorphism truncation(const RingPtr& source, unsigned target_order);
  static ArtinMorphism identity(const RingPtr& ctx);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  RingElem apply(const RingElem& a) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<RingElem> images_;
};

struct FunctorialityResult {
  localcoh::H1yClassRep pushed_first;  // map_p(alpha(phi(lifting)))
  localcoh::H1yClassRep class_first;   // phi applied to map_p(alpha(lifting))
  bool commutes;
};

FunctorialityResult functoriality_check(const Scene& scene, const ArtinMorphism& phi,
                                        const std::string& chart);
FunctorialityResult functoriality_check(const RingElem& lifting, const RingElem& divisor,
                                        const ArtinMorphism& phi);

}  // namespace detcycle::deformation
