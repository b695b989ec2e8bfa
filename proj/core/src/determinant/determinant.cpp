#include "detcycle/determinant/determinant.hpp"

#include "detcycle/errors.hpp"

namespace detcycle::det {

GradedLine det_free(const FreeModule& m) {
  return GradedLine(m.ctx, {WedgeWord{m.labels, false}}, static_cast<int>(m.rank()));
}

GradedLine det_complex(const ChainComplex& c) {
  if (!complexes::verify_complex(c)) throw InvalidInput("det_complex: differentials do not compose to zero");
  GradedLine out = GradedLine::unit(c.context());
  for (std::size_t deg = c.length() + 1; deg-- > 0;) {
    GradedLine d = det_free(c.module(deg));
    out = out.tensor(deg % 2 == 1 ? d.dual() : d);
  }
  return out;
}

RingElem submatrix_det(const ModulePresentation& p) {
  std::vector<std::size_t> cols(p.rank1());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return p.matrix().select(p.selected_rows(), cols).determinant();
}

std::pair<GradedLine, DetIso> det_presentation(const ModulePresentation& p) {
  GradedLine line = det_complex(p.complex());
  GradedLine trivial = GradedLine::unit(line.context(), line.grade());
  DetIso iso(line, std::move(trivial), submatrix_det(p));
  return {std::move(line), std::move(iso)};
}

void SplitSES::certify() const {
  const RingPtr& ctx = b.ctx;
  arith::require_same(a.ctx, ctx);
  arith::require_same(c.ctx, ctx);
  auto shape = [](const Matrix& m, std::size_t r, std::size_t cc) {
    return m.rows() == r && m.cols() == cc;
  };
  if (!shape(inclusion, b.rank(), a.rank()) || !shape(projection, c.rank(), b.rank()) ||
      !shape(splitting, b.rank(), c.rank())) {
    throw InvalidInput("split sequence: matrix shapes do not match the modules");
  }
  if (a.rank() + c.rank() != b.rank()) throw InvalidInput("split sequence: rank B != rank A + rank C");
  if (!(projection * inclusion).is_zero()) throw InvalidInput("split sequence: projection o inclusion != 0");
  if (!(projection * splitting == Matrix::identity(ctx, c.rank()))) {
    throw InvalidInput("split sequence: projection o splitting != identity");
  }
  RingElem d = inclusion.hconcat(splitting).determinant();
  if (!arith::augment(d).is_nonzero_constant()) {
    throw InvalidInput("split sequence: inclusion and splitting do not span B");
  }
}

DetIso det_ses(const SplitSES& s) {
  s.certify();
  GradedLine source = det_free(s.c).tensor(det_free(s.a));
  return DetIso(std::move(source), det_free(s.b), s.inclusion.hconcat(s.splitting).determinant());
}

}  // namespace detcycle::det
