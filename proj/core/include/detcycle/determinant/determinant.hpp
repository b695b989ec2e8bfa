#pragma once

#include <utility>

#include "detcycle/complexes/complex.hpp"
#include "detcycle/complexes/presentation.hpp"
#include "detcycle/determinant/graded_line.hpp"

namespace detcycle::det {

using complexes::ChainComplex;
using complexes::FreeModule;
using complexes::Matrix;
using complexes::ModuleMap;
using complexes::ModulePresentation;

// (b_1 ^ ... ^ b_r, r).
GradedLine det_free(const FreeModule& m);

// Alternating tensor product of det(F_i), odd degrees dualized; grade is
// sum_i (-1)^i rank F_i. Throws InvalidInput when c is not a complex.
GradedLine det_complex(const ChainComplex& c);

// Determinant of the presented module together with its trivialization:
// the canonical element maps to the classical determinant of the selected
// r1 x r1 minor.
std::pair<GradedLine, DetIso> det_presentation(const ModulePresentation& p);

// Determinant of the selected minor (see ModulePresentation::selected_rows).
RingElem submatrix_det(const ModulePresentation& p);

// Split short exact sequence 0 -> A -> B -> C -> 0 of free modules.
struct SplitSES {
  FreeModule a;
  FreeModule b;
  FreeModule c;
  Matrix inclusion;   // B x A
  Matrix projection;  // C x B
  Matrix splitting;   // B x C

  // Checks projection*inclusion == 0, projection*splitting == 1 and that
  // [inclusion | splitting] is invertible. Throws InvalidInput on failure.
  void certify() const;
};

// det(C) (x) det(A) -> det(B). The generator maps to the wedge of the
// images of the A-basis followed by the lifted C-basis, so the scalar is
// det[inclusion | splitting].
DetIso det_ses(const SplitSES& s);

}  // namespace detcycle::det
