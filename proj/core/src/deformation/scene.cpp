#include "detcycle/deformation/scene.hpp"

#include <set>

#include "detcycle/errors.hpp"

namespace detcycle::deformation {

std::string Overlap::name() const {
  std::string out;
  for (std::size_t i = 0; i < charts.size(); ++i) out += (i ? "." : "") + charts[i];
  return out;
}

Localization Overlap::localization(const RingPtr& ctx) const {
  return Localization::inverting(ctx, inverted);
}

Scene Scene::make(RingPtr ctx, std::vector<Chart> charts, std::vector<Overlap> overlaps,
                  SceneOptions options) {
  if (charts.empty()) throw InvalidInput("scene declares no charts");
  std::set<std::string> names;
  for (const auto& c : charts) {
    const std::string where = "chart " + c.name + ": ";
    if (!names.insert(c.name).second) throw InvalidInput("duplicate chart " + c.name);
    if (c.parameters.empty()) throw InvalidInput(where + "no parameters");
    for (const auto& p : c.parameters) {
      arith::require_same(p.context(), ctx);
      if (p.is_zero() || !p.is_pure()) {
        throw InvalidInput(where + "parameter " + p.to_string() + " must be a nonzero polynomial");
      }
    }
    if (c.divisor().var_degree() == 0) throw InvalidInput(where + "divisor equation is constant");
    arith::require_same(c.lifting.context(), ctx);
    if (!(arith::augment(c.lifting) == c.divisor())) {
      throw InvalidInput(where + "lifting " + c.lifting.to_string() + " does not reduce to " +
                         c.divisor().to_string());
    }
    for (std::size_t j = 1; j < c.parameters.size(); ++j) {
      if (arith::divide_exact(c.parameters[j], c.divisor()).has_value()) {
        throw InvalidInput(where + "parameter " + std::to_string(j + 1) + " (" +
                           c.parameters[j].to_string() + ") lies in (" + c.divisor().to_string() + ")");
      }
    }
  }
  for (const auto& o : overlaps) {
    if (o.charts.size() < 2 || o.charts.size() > 3) {
      throw InvalidInput("overlap " + o.name() + " must name two or three charts");
    }
    std::set<std::string> seen;
    for (const auto& n : o.charts) {
      if (!names.count(n)) throw InvalidInput("overlap " + o.name() + " names unknown chart " + n);
      if (!seen.insert(n).second) throw InvalidInput("overlap " + o.name() + " repeats chart " + n);
    }
    for (const auto& s : o.inverted) arith::require_same(s.context(), ctx);
    (void)o.localization(ctx);
  }
  return Scene(std::move(ctx), std::move(charts), std::move(overlaps), options);
}

const Chart& Scene::chart(const std::string& name) const {
  for (const auto& c : charts_) {
    if (c.name == name) return c;
  }
  throw InvalidInput("unknown chart " + name);
}

}  // namespace detcycle::deformation
