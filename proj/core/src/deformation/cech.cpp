#include "detcycle/deformation/cech.hpp"

#include <algorithm>
#include <sstream>

#include "detcycle/errors.hpp"

namespace detcycle::deformation {

namespace {

RingElem eps_part(const RingElem& a, std::uint64_t degree) {
  std::vector<arith::Term> terms;
  for (const auto& t : a.terms()) {
    if (a.context()->eps_degree(t.monomial) == degree) terms.push_back(t);
  }
  return RingElem::from_terms(a.context(), std::move(terms));
}

// q with q * b == a, solved degree by degree in the artinian grading.
std::optional<RingElem> divide_graded(const RingElem& a, const RingElem& b) {
  const RingElem lead = arith::augment(b);
  if (lead.is_zero()) return std::nullopt;
  RingElem quotient(a.context());
  RingElem rest = a;
  for (std::uint64_t d = 0; d < std::max(1u, a.context()->truncation_order()) && !rest.is_zero(); ++d) {
    auto q = arith::divide_exact(eps_part(rest, d), lead);
    if (!q) return std::nullopt;
    quotient += *q;
    rest -= *q * b;
  }
  if (!rest.is_zero()) return std::nullopt;
  return quotient;
}

}  // namespace

std::optional<LocalFraction> divide_liftings(const RingElem& a, const RingElem& b,
                                             const Localization& loc, unsigned max_power) {
  const RingElem base = loc.inverted_product();
  RingElem s = RingElem::one(a.context());
  for (unsigned k = 0; k <= max_power; ++k) {
    if (auto q = divide_graded(s * a, b)) {
      if (!arith::is_unit_local(*q, loc)) return std::nullopt;
      return LocalFraction(std::move(*q), s, loc);
    }
    if (base.is_nonzero_constant()) break;
    s = s * base;
  }
  return std::nullopt;
}

bool CechReport::valid() const {
  for (const auto& t : transitions) {
    if (!t.unit) return false;
  }
  for (const auto& c : inverse_pairs) {
    if (!c.holds) return false;
  }
  for (const auto& c : triples) {
    if (!c.holds) return false;
  }
  return true;
}

std::string CechReport::to_text() const {
  std::ostringstream os;
  for (const auto& t : transitions) {
    os << "g[" << t.source << "," << t.target << "] = ";
    if (t.unit) {
      os << t.unit->to_string();
    } else {
      os << "NONE (" << t.diagnostic << ")";
    }
    os << "\n";
  }
  for (const auto& c : inverse_pairs) {
    os << "inverse " << c.overlap << ": " << (c.holds ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& c : triples) {
    os << "cocycle " << c.overlap << ": " << (c.holds ? "PASS" : "FAIL") << "\n";
  }
  os << "gluing: " << (valid() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CechReport cech_transitions(const Scene& scene) {
  CechReport report;
  const RingPtr& ctx = scene.context();
  for (const auto& overlap : scene.overlaps()) {
    const Localization loc = overlap.localization(ctx);
    const auto& names = overlap.charts;
    const std::size_t n = names.size();

    // g[i][j] for every ordered pair inside this overlap.
    std::vector<std::vector<std::optional<LocalFraction>>> g(n, std::vector<std::optional<LocalFraction>>(n));
    bool all_glue = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const Chart* ci = &scene.chart(names[i]);
        const Chart* cj = &scene.chart(names[j]);
        Transition t{overlap.name(), names[i], names[j], std::nullopt, ""};
        g[i][j] = divide_liftings(ci->lifting, cj->lifting, loc);
        if (g[i][j] && !(g[i][j]->denominator() * ci->lifting == g[i][j]->numerator() * cj->lifting)) {
          g[i][j].reset();
        }
        if (!g[i][j]) {
          all_glue = false;
          t.diagnostic = ci->lifting.to_string() + " is not a unit multiple of " + cj->lifting.to_string() +
                         " " + loc.describe();
        }
        t.unit = g[i][j];
        // Triple overlaps only report failures; their pairs are listed separately.
        if (n == 2 || !t.unit) report.transitions.push_back(std::move(t));
      }
    }
    if (!all_glue) continue;
    if (n == 2) {
      report.inverse_pairs.push_back({overlap.name(), g[0][1]->times(*g[1][0], loc).is_one()});
    } else {
      LocalFraction prod = g[0][1]->times(*g[1][2], loc).times(*g[2][0], loc);
      report.triples.push_back({overlap.name(), prod.is_one()});
    }
  }
  return report;
}

}  // namespace detcycle::deformation
