#include "detcycle/arith/groebner.hpp"

#include <algorithm>
#include <set>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

namespace {

RingElem monic(const RingElem& p) { return p.scaled(p.leading_term().coeff.inverse()); }

bool coprime_vars(const Monomial& a, const Monomial& b, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

RingElem s_polynomial(const RingElem& f, const RingElem& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times_monomial(lf.monomial.quotient_of(l), lf.coeff.inverse()) -
         g.times_monomial(lg.monomial.quotient_of(l), lg.coeff.inverse());
}

}  // namespace

RingElem normal_form(const RingElem& a, const std::vector<RingElem>& basis) {
  const auto& ctx = a.context();
  std::vector<Term> remainder;
  RingElem p = a;
  while (!p.is_zero()) {
    const Term t = p.leading_term();
    auto it = std::find_if(basis.begin(), basis.end(), [&](const RingElem& g) {
      return g.leading_term().monomial.divides(t.monomial);
    });
    if (it != basis.end()) {
      const Term& lg = it->leading_term();
      p -= it->times_monomial(lg.monomial.quotient_of(t.monomial), t.coeff / lg.coeff);
    } else {
      remainder.push_back(t);
      p -= RingElem::monomial(ctx, t.monomial, t.coeff);
    }
  }
  return RingElem::from_terms(ctx, std::move(remainder));
}

std::vector<RingElem> groebner_basis(const std::vector<RingElem>& gens) {
  if (gens.empty()) throw InvalidInput("groebner_basis: empty generator list");
  const RingPtr ctx = gens.front().context();
  const std::size_t nvars = ctx->nvars();

  std::vector<RingElem> g;
  for (const auto& p : gens) {
    require_same(p.context(), ctx);
    if (!p.is_pure()) throw InvalidInput("groebner_basis: generator " + p.to_string() +
                                         " carries artinian terms");
    if (!p.is_zero()) g.push_back(monic(p));
  }
  if (g.empty()) throw InvalidInput("groebner_basis: all generators are zero");

  auto lcm_of = [&](std::size_t i, std::size_t j) {
    return g[i].leading_term().monomial.lcm(g[j].leading_term().monomial);
  };

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = lcm_of(best->first, best->second);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm_of(it->first, it->second);
      if (ctx->compare_vars(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = g[i].leading_term().monomial;
    const Monomial& lj = g[j].leading_term().monomial;
    if (coprime_vars(li, lj, nvars)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].leading_term().monomial.divides(best_lcm) && !is_pending(i, k) &&
          !is_pending(j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    RingElem r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(monic(r));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<RingElem> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial& li = g[i].leading_term().monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = g[j].leading_term().monomial;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Reduced basis: tail-reduce each element against the others.
  std::vector<RingElem> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<RingElem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Term& lead = minimal[i].leading_term();
    RingElem tail = minimal[i] - RingElem::monomial(ctx, lead.monomial, lead.coeff);
    reduced.push_back(RingElem::monomial(ctx, lead.monomial, lead.coeff) +
                      normal_form(tail, others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const RingElem& a, const RingElem& b) {
    return ctx->compare_vars(a.leading_term().monomial, b.leading_term().monomial) > 0;
  });
  return reduced;
}

bool ideal_membership(const RingElem& a, const std::vector<RingElem>& gens) {
  auto basis = groebner_basis(gens);
  require_same(a.context(), basis.front().context());
  return normal_form(a, basis).is_zero();
}

}  // namespace detcycle::arith
