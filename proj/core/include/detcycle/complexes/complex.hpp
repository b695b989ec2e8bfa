#pragma once

#include <string>
#include <vector>

#include "detcycle/complexes/matrix.hpp"

namespace detcycle::complexes {

// Finite free module with named basis vectors.
struct FreeModule {
  RingPtr ctx;
  std::vector<std::string> labels;

  std::size_t rank() const noexcept { return labels.size(); }

  // Labels prefix1..prefixN. Throws on duplicate labels when constructed via make().
  static FreeModule standard(RingPtr ctx, std::size_t rank, const std::string& prefix);
  static FreeModule make(RingPtr ctx, std::vector<std::string> labels);
};

// Homomorphism of free modules; matrix is target.rank() x source.rank().
class ModuleMap {
 public:
  ModuleMap(FreeModule source, FreeModule target, Matrix matrix);

  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

 private:
  FreeModule source_;
  FreeModule target_;
  Matrix matrix_;
};

// Bounded complex 0 -> F_n -> ... -> F_1 -> F_0 -> 0, homologically indexed.
// Construction checks shapes only; use verify_complex for d o d = 0.
class ChainComplex {
 public:
  // modules[i] is F_i; differentials[i] is d_{i+1}: F_{i+1} -> F_i.
  ChainComplex(std::vector<FreeModule> modules, std::vector<Matrix> differentials);

  const RingPtr& context() const noexcept { return modules_.front().ctx; }
  // Index of the top nonzero-length degree (n).
  std::size_t length() const noexcept { return modules_.size() - 1; }
  const FreeModule& module(std::size_t degree) const { return modules_.at(degree); }
  // d_degree: F_degree -> F_{degree-1}, degree >= 1.
  const Matrix& differential(std::size_t degree) const { return differentials_.at(degree - 1); }
  ModuleMap differential_map(std::size_t degree) const;
  std::vector<std::size_t> ranks() const;

  // Line-per-degree rendering, top degree first.
  std::string to_string() const;

 private:
  std::vector<FreeModule> modules_;
  std::vector<Matrix> differentials_;
};

// True iff every composite d_{i} o d_{i+1} is the zero matrix.
bool verify_complex(const ChainComplex& c);

// Degreewise direct sum with block-diagonal differentials. Labels are tagged
// with "a." and "b." by origin. Throws ContextMismatch.
ChainComplex direct_sum(const ChainComplex& c1, const ChainComplex& c2);

// Koszul complex on f_1..f_q: degree p is the p-th exterior power of the
// rank-q free module on e_1..e_q, with
//   e_{j1}^...^e_{jp} -> sum_m (-1)^(m+1) f_{jm} * (omit e_{jm}).
// Throws InvalidInput on an empty sequence or a zero entry.
ChainComplex koszul(const std::vector<RingElem>& seq);

}  // namespace detcycle::complexes
