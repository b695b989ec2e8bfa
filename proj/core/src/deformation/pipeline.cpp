#include "detcycle/deformation/pipeline.hpp"

#include <sstream>

#include "detcycle/complexes/complex.hpp"
#include "detcycle/determinant/determinant.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::deformation {

ModulePresentation alpha_of(const RingElem& lifting) {
  return ModulePresentation(complexes::koszul({lifting}));
}

ModulePresentation alpha(const Scene& scene, const std::string& chart) {
  return alpha_of(scene.chart(chart).lifting);
}

H1yClassRep map_p(const ModulePresentation& p, const RingElem& f) {
  if (p.rank0() != p.rank1()) {
    throw InvalidInput("support condition fails: presentation of ranks " + std::to_string(p.rank1()) + " -> " +
                       std::to_string(p.rank0()) + " is not torsion");
  }
  const RingElem minor = det::submatrix_det(p);
  const RingElem reduced = arith::augment(minor);
  const auto order = arith::valuation(reduced, f);
  if (!order || *order != 1) {
    throw InvalidInput("support condition fails: augmented determinant " + reduced.to_string() +
                       " does not have valuation 1 along " + f.to_string());
  }
  const RingElem cofactor = *arith::divide_exact(reduced, f);
  if (!cofactor.is_nonzero_constant()) {
    throw InvalidInput("augmented determinant " + reduced.to_string() + " has non-constant cofactor " +
                       cofactor.to_string() + " along " + f.to_string());
  }
  return H1yClassRep(f, 1, arith::rho_split(minor).scaled(cofactor.constant_value().inverse()));
}

std::string CycleReport::to_text() const {
  std::ostringstream os;
  os << "class: " << cls.to_string() << "\n";
  for (const auto& d : directions) {
    os << d.gamma.to_string() << " : " << (d.zero ? "ZERO" : "NONZERO") << "\n";
  }
  os << "overall: " << (overall ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CycleReport cycle_check(const Scene& scene, const std::string& chart_name) {
  const Chart& chart = scene.chart(chart_name);
  H1yClassRep cls = map_p(alpha_of(chart.lifting), chart.divisor());
  std::vector<DirectionVerdict> directions;
  bool overall = true;
  for (std::size_t j = 1; j < chart.parameters.size(); ++j) {
    try {
      Ext2ClassRep gamma = localcoh::boundary_to_ext2(cls, chart.parameters[j]);
      const bool zero = localcoh::ext2_is_zero(gamma);
      overall = overall && zero;
      directions.push_back({j + 1, std::move(gamma), zero});
    } catch (const InvalidInput& e) {
      throw InvalidInput("direction " + std::to_string(j + 1) + ": " + e.what());
    }
  }
  return CycleReport{chart.name, std::move(cls), std::move(directions), overall};
}

}  // namespace detcycle::deformation
