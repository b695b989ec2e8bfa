#include "detcycle/complexes/presentation.hpp"

#include "detcycle/errors.hpp"

namespace detcycle::complexes {

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> ModulePresentation::find_minor(const ChainComplex& c) {
  if (c.length() != 1) return std::nullopt;
  const Matrix& m = c.differential(1);
  const std::size_t r1 = m.cols();
  const std::size_t r0 = m.rows();
  if (r1 > r0) return std::nullopt;
  const Matrix augmented = m.map(&arith::augment);
  std::vector<std::size_t> cols(r1);
  for (std::size_t i = 0; i < r1; ++i) cols[i] = i;
  std::vector<std::size_t> rows = cols;
  do {
    if (!augmented.select(rows, cols).determinant().is_zero()) return rows;
  } while (r1 > 0 && next_combination(rows, r0));
  return std::nullopt;
}

ModulePresentation::ModulePresentation(ChainComplex complex) : complex_(std::move(complex)) {
  if (complex_.length() != 1) throw InvalidInput("a presentation must be a two-term complex");
  if (rank1() > rank0()) throw InvalidInput("presentation has rank L1 > rank L0");
  auto rows = find_minor(complex_);
  if (!rows) throw InvalidInput("presentation differential is not injective: no nonzero maximal minor");
  rows_ = std::move(*rows);
}

std::optional<ModulePresentation> ModulePresentation::try_make(ChainComplex complex) {
  auto rows = find_minor(complex);
  if (!rows) return std::nullopt;
  return ModulePresentation(std::move(complex), std::move(*rows));
}

ChainComplex two_term(const Matrix& m) {
  const RingPtr& ctx = m.context();
  std::vector<FreeModule> modules{FreeModule::standard(ctx, m.rows(), "g"),
                                  FreeModule::standard(ctx, m.cols(), "e")};
  return ChainComplex(std::move(modules), {m});
}

ModulePresentation direct_sum(const ModulePresentation& p, const ModulePresentation& q) {
  return ModulePresentation(direct_sum(p.complex(), q.complex()));
}

}  // namespace detcycle::complexes
