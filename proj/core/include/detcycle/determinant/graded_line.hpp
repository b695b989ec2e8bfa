#pragma once

#include <string>
#include <vector>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::det {

using arith::RingElem;
using arith::RingPtr;

// Top exterior power generator b_1 ^ ... ^ b_r, possibly dualized.
struct WedgeWord {
  std::vector<std::string> labels;
  bool dual = false;

  friend bool operator==(const WedgeWord&, const WedgeWord&) = default;
};

// Graded invertible module: a rank-one free module with a distinguished
// generator (a tensor word of wedge words) and an integer grade.
class GradedLine {
 public:
  GradedLine(RingPtr ctx, std::vector<WedgeWord> factors, int grade)
      : ctx_(std::move(ctx)), factors_(std::move(factors)), grade_(grade) {}

  // The structure sheaf itself in grade `grade`, generator "1".
  static GradedLine unit(RingPtr ctx, int grade = 0) { return GradedLine(std::move(ctx), {}, grade); }

  const RingPtr& context() const noexcept { return ctx_; }
  const std::vector<WedgeWord>& factors() const noexcept { return factors_; }
  int grade() const noexcept { return grade_; }

  GradedLine tensor(const GradedLine& other) const;
  GradedLine dual() const;

  // e.g. "(e1)^∨ ⊗ (g1∧g2)"; compound labels are bracketed, "([e1∧e2]∧[e1∧e3])";
  // the empty word renders as "1".
  std::string symbol() const;
  std::string to_string() const;

  friend bool operator==(const GradedLine& a, const GradedLine& b) {
    return a.grade_ == b.grade_ && a.factors_ == b.factors_;
  }

 private:
  RingPtr ctx_;
  std::vector<WedgeWord> factors_;
  int grade_;
};

// Isomorphism of graded lines, recorded by the image of the source
// generator as a multiple of the target generator.
class DetIso {
 public:
  DetIso(GradedLine source, GradedLine target, RingElem scalar);

  static DetIso identity(const GradedLine& line);

  const GradedLine& source() const noexcept { return source_; }
  const GradedLine& target() const noexcept { return target_; }
  const RingElem& scalar() const noexcept { return scalar_; }

  // `next` after `*this`; scalars multiply. Throws InvalidInput on a grade mismatch.
  DetIso then(const DetIso& next) const;
  DetIso tensor(const DetIso& other) const;

  std::string to_string() const;

 private:
  GradedLine source_;
  GradedLine target_;
  RingElem scalar_;
};

// Symmetry constraint L1 (x) L2 -> L2 (x) L1 with the Koszul sign (-1)^(g1*g2).
DetIso symmetry(const GradedLine& first, const GradedLine& second);

}  // namespace detcycle::det
