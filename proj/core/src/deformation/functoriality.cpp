#include "detcycle/deformation/functoriality.hpp"

#include <algorithm>
#include <limits>

#include "detcycle/deformation/pipeline.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::deformation {

namespace {

std::uint64_t min_eps_degree(const RingElem& a) {
  std::uint64_t low = std::numeric_limits<std::uint64_t>::max();
  for (const auto& t : a.terms()) low = std::min(low, a.context()->eps_degree(t.monomial));
  return low;
}

}  // namespace

ArtinMorphism::ArtinMorphism(RingPtr source, RingPtr target, std::vector<RingElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (source_->variables() != target_->variables() || source_->order() != target_->order()) {
    throw ContextMismatch("artinian morphism must fix the polynomial variables and order");
  }
  if (images_.size() != source_->neps()) {
    throw InvalidInput("artinian morphism needs one image per generator of the source");
  }
  std::uint64_t lowest = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t k = 0; k < images_.size(); ++k) {
    arith::require_same(images_[k].context(), target_);
    if (images_[k].is_zero()) continue;
    const std::uint64_t d = min_eps_degree(images_[k]);
    if (d == 0) {
      throw InvalidInput("image of " + source_->slot_name(source_->nvars() + k) + " (" +
                         images_[k].to_string() + ") is not in the maximal ideal");
    }
    lowest = std::min(lowest, d);
  }
  // Relations of the source have artinian degree >= n_B; their images vanish
  // once n_B * (lowest image degree) reaches the target truncation.
  if (lowest != std::numeric_limits<std::uint64_t>::max() && !target_->artin().is_field() &&
      source_->truncation_order() * lowest < target_->truncation_order()) {
    throw InvalidInput("artinian morphism does not respect truncation");
  }
}

ArtinMorphism ArtinMorphism::truncation(const RingPtr& source, unsigned target_order) {
  const auto& artin = source->artin();
  if (target_order > artin.truncation_order) {
    throw InvalidInput("truncation cannot raise the order from " + std::to_string(artin.truncation_order) +
                       " to " + std::to_string(target_order));
  }
  if (target_order <= 1) {
    RingPtr field = source->with_artin(arith::ArtinAlgebra::field());
    return ArtinMorphism(source, field, std::vector<RingElem>(source->neps(), RingElem(field)));
  }
  RingPtr target = source->with_artin(arith::ArtinAlgebra{artin.generators, target_order});
  std::vector<RingElem> images;
  for (std::size_t k = 0; k < source->neps(); ++k) {
    images.push_back(RingElem::symbol(target, target->nvars() + k));
  }
  return ArtinMorphism(source, target, std::move(images));
}

ArtinMorphism ArtinMorphism::identity(const RingPtr& ctx) {
  return truncation(ctx, ctx->truncation_order());
}

RingElem ArtinMorphism::apply(const RingElem& a) const {
  arith::require_same(a.context(), source_);
  return arith::substitute_eps(a, target_, images_);
}

FunctorialityResult functoriality_check(const RingElem& lifting, const RingElem& divisor,
                                        const ArtinMorphism& phi) {
  const RingElem pushed_divisor = phi.apply(divisor);
  H1yClassRep pushed_first = map_p(alpha_of(phi.apply(lifting)), pushed_divisor);
  const H1yClassRep over_source = map_p(alpha_of(lifting), divisor);
  H1yClassRep class_first(pushed_divisor, over_source.level(), phi.apply(over_source.numerator()));
  const bool commutes = localcoh::h1y_equal(pushed_first, class_first);
  return {std::move(pushed_first), std::move(class_first), commutes};
}

FunctorialityResult functoriality_check(const Scene& scene, const ArtinMorphism& phi,
                                        const std::string& chart) {
  arith::require_same(scene.context(), phi.source());
  const Chart& c = scene.chart(chart);
  return functoriality_check(c.lifting, c.divisor(), phi);
}

}  // namespace detcycle::deformation
