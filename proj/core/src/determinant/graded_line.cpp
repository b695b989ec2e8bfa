#include "detcycle/determinant/graded_line.hpp"

#include "detcycle/errors.hpp"

namespace detcycle::det {

GradedLine GradedLine::tensor(const GradedLine& other) const {
  arith::require_same(ctx_, other.ctx_);
  std::vector<WedgeWord> factors = factors_;
  factors.insert(factors.end(), other.factors_.begin(), other.factors_.end());
  return GradedLine(ctx_, std::move(factors), grade_ + other.grade_);
}

GradedLine GradedLine::dual() const {
  std::vector<WedgeWord> factors = factors_;
  for (auto& f : factors) f.dual = !f.dual;
  return GradedLine(ctx_, std::move(factors), -grade_);
}

std::string GradedLine::symbol() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " ⊗ ";
    const auto& w = factors_[i];
    out += "(";
    if (w.labels.empty()) out += "1";
    for (std::size_t j = 0; j < w.labels.size(); ++j) {
      if (j) out += "∧";
      const bool compound = w.labels.size() > 1 && w.labels[j].find("∧") != std::string::npos;
      out += compound ? "[" + w.labels[j] + "]" : w.labels[j];
    }
    out += ")";
    if (w.dual) out += "^∨";
  }
  return out;
}

std::string GradedLine::to_string() const {
  return "(" + symbol() + ", " + std::to_string(grade_) + ")";
}

DetIso::DetIso(GradedLine source, GradedLine target, RingElem scalar)
    : source_(std::move(source)), target_(std::move(target)), scalar_(std::move(scalar)) {
  arith::require_same(source_.context(), target_.context());
  arith::require_same(source_.context(), scalar_.context());
}

DetIso DetIso::identity(const GradedLine& line) {
  return DetIso(line, line, RingElem::one(line.context()));
}

DetIso DetIso::then(const DetIso& next) const {
  if (target_.grade() != next.source_.grade()) {
    throw InvalidInput("cannot compose determinant isomorphisms of different grades");
  }
  return DetIso(source_, next.target_, scalar_ * next.scalar_);
}

DetIso DetIso::tensor(const DetIso& other) const {
  return DetIso(source_.tensor(other.source_), target_.tensor(other.target_),
                scalar_ * other.scalar_);
}

std::string DetIso::to_string() const {
  return source_.symbol() + " -> " + target_.symbol() + " : " + scalar_.to_string();
}

DetIso symmetry(const GradedLine& first, const GradedLine& second) {
  const bool odd = (first.grade() * second.grade()) % 2 != 0;
  RingElem sign = RingElem::constant(first.context(), odd ? -1 : 1);
  return DetIso(first.tensor(second), second.tensor(first), std::move(sign));
}

}  // namespace detcycle::det
