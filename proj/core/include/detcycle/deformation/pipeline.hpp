#pragma once

#include <string>
#include <vector>

#include "detcycle/complexes/presentation.hpp"
#include "detcycle/deformation/scene.hpp"
#include "detcycle/localcoh/classes.hpp"

namespace detcycle::deformation {

using complexes::ModulePresentation;
using localcoh::Ext2ClassRep;
using localcoh::H1yClassRep;

// Koszul presentation 0 -> R_A -> R_A of O_A/(lifting).
ModulePresentation alpha_of(const RingElem& lifting);
ModulePresentation alpha(const Scene& scene, const std::string& chart);

// Level-1 class rho(|M|)/c over f, where |M| is the selected minor and
// augment(|M|) = c*f with c a nonzero constant. Throws InvalidInput when the
// augmented minor is not of that form.
H1yClassRep map_p(const ModulePresentation& p, const RingElem& f);

struct DirectionVerdict {
  std::size_t index;  // 1-based position of the parameter
  Ext2ClassRep gamma;
  bool zero;
};

struct CycleReport {
  std::string chart;
  H1yClassRep cls;
  std::vector<DirectionVerdict> directions;
  bool overall;

  // "class: ...", one "gamma[...] = ... : ZERO|NONZERO" per direction,
  // then "overall: PASS|FAIL".
  std::string to_text() const;
};

// Boundary of map_p(alpha(chart)) along every direction (f_1, f_j), j >= 2.
CycleReport cycle_check(const Scene& scene, const std::string& chart);

}  // namespace detcycle::deformation
