#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detcycle/arith/localization.hpp"
#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::deformation {

using arith::Localization;
using arith::RingElem;
using arith::RingPtr;

// Affine chart with a regular parameter system; parameters.front() is the
// local equation of the divisor and `lifting` deforms it over the artinian base.
struct Chart {
  std::string name;
  std::vector<RingElem> parameters;
  RingElem lifting;

  const RingElem& divisor() const { return parameters.front(); }
};

// Intersection of two or three charts, localized at the multiplicative set
// generated by `inverted`.
struct Overlap {
  std::vector<std::string> charts;
  std::vector<RingElem> inverted;

  std::string name() const;
  Localization localization(const RingPtr& ctx) const;
};

struct SceneOptions {
  unsigned degree_bound = 8;
  std::uint64_t seed = 0;
};

class Scene {
 public:
  // Validates: at least one chart, unique chart names, pure nonzero
  // parameters, augment(lifting) == divisor, f_j not in (f_1) for j >= 2,
  // overlaps naming existing distinct charts. Throws InvalidInput.
  static Scene make(RingPtr ctx, std::vector<Chart> charts, std::vector<Overlap> overlaps = {},
                    SceneOptions options = {});

  const RingPtr& context() const noexcept { return ctx_; }
  const std::vector<Chart>& charts() const noexcept { return charts_; }
  const std::vector<Overlap>& overlaps() const noexcept { return overlaps_; }
  const SceneOptions& options() const noexcept { return options_; }

  // Throws InvalidInput naming the chart when absent.
  const Chart& chart(const std::string& name) const;

 private:
  Scene(RingPtr ctx, std::vector<Chart> charts, std::vector<Overlap> overlaps, SceneOptions options)
      : ctx_(std::move(ctx)), charts_(std::move(charts)), overlaps_(std::move(overlaps)), options_(options) {}

  RingPtr ctx_;
  std::vector<Chart> charts_;
  std::vector<Overlap> overlaps_;
  SceneOptions options_;
};

}  // namespace detcycle::deformation
