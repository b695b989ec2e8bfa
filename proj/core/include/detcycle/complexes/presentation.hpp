#pragma once

#include <optional>
#include <vector>

#include "detcycle/complexes/complex.hpp"

namespace detcycle::complexes {

// Two-term complex 0 -> L_1 -> L_0 whose differential is injective,
// presenting its cokernel M. Injectivity is certified by a nonzero maximal
// minor of the augmented matrix; nilpotent terms cannot affect that.
class ModulePresentation {
 public:
  // Throws InvalidInput if `complex` is not two-term, r1 > r0, or no
  // r1 x r1 minor of the augmented differential is nonzero.
  explicit ModulePresentation(ChainComplex complex);

  static std::optional<ModulePresentation> try_make(ChainComplex complex);

  const ChainComplex& complex() const noexcept { return complex_; }
  const Matrix& matrix() const { return complex_.differential(1); }
  std::size_t rank1() const { return complex_.module(1).rank(); }
  std::size_t rank0() const { return complex_.module(0).rank(); }
  // Lexicographically first row subset whose augmented minor is nonzero.
  const std::vector<std::size_t>& selected_rows() const noexcept { return rows_; }

 private:
  ModulePresentation(ChainComplex complex, std::vector<std::size_t> rows)
      : complex_(std::move(complex)), rows_(std::move(rows)) {}
  static std::optional<std::vector<std::size_t>> find_minor(const ChainComplex& c);

  ChainComplex complex_;
  std::vector<std::size_t> rows_;
};

// 0 -> R^cols -> R^rows with the given matrix, basis labels e_i and g_j.
ChainComplex two_term(const Matrix& m);

// Direct sum of presentations (block-diagonal matrix).
ModulePresentation direct_sum(const ModulePresentation& p, const ModulePresentation& q);

}  // namespace detcycle::complexes
