#include "detcycle/arith/linear_oracle.hpp"

#include <map>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

namespace {

using SparseVec = std::map<std::size_t, Rational>;

// Echelon basis of sparse column vectors keyed by their largest index.
class ColumnSpan {
 public:
  // Reduces v against the basis in place; returns true when v becomes zero.
  bool reduce(SparseVec& v) const {
    while (!v.empty()) {
      auto top = std::prev(v.end());
      auto it = basis_.find(top->first);
      if (it == basis_.end()) return false;
      const Rational factor = top->second;
      for (const auto& [idx, c] : it->second) {
        Rational& slot = v[idx];
        slot -= factor * c;
        if (slot.is_zero()) v.erase(idx);
      }
    }
    return true;
  }

  void insert(SparseVec v) {
    if (reduce(v)) return;
    auto top = std::prev(v.end());
    const Rational inv = top->second.inverse();
    for (auto& [idx, c] : v) c *= inv;
    const std::size_t pivot = top->first;
    basis_.emplace(pivot, std::move(v));
  }

 private:
  std::map<std::size_t, SparseVec> basis_;
};

void enumerate_monomials(std::size_t nvars, unsigned max_degree, std::size_t slots,
                         std::vector<Monomial>& out) {
  Monomial cur(slots);
  // Depth-first over variables, bounded total degree.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, max_degree);
}

bool bounded_membership_pure(const RingElem& c, const std::vector<RingElem>& gens,
                             unsigned degree_bound) {
  if (c.is_zero()) return true;
  if (c.var_degree() > degree_bound) return false;
  const RingPtr& ctx = c.context();

  std::vector<Monomial> monomials;
  enumerate_monomials(ctx->nvars(), degree_bound, ctx->slots(), monomials);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i].exponents(), i);

  auto to_vec = [&](const RingElem& p) {
    SparseVec v;
    for (const auto& t : p.terms()) v.emplace(index.at(t.monomial.exponents()), t.coeff);
    return v;
  };

  ColumnSpan span;
  for (const auto& g : gens) {
    if (g.is_zero() || g.var_degree() > degree_bound) continue;
    const unsigned room = degree_bound - static_cast<unsigned>(g.var_degree());
    for (const auto& m : monomials) {
      if (ctx->var_degree(m) > room) continue;
      span.insert(to_vec(g.times_monomial(m, 1)));
    }
  }
  SparseVec target = to_vec(c);
  return span.reduce(target);
}

}  // namespace

bool bounded_membership(const RingElem& a, const std::vector<RingElem>& gens,
                        unsigned degree_bound) {
  for (const auto& g : gens) {
    require_same(g.context(), a.context());
    if (!g.is_pure()) throw InvalidInput("bounded_membership: generators must be pure");
  }
  for (const auto& [eps, coeff] : a.eps_components()) {
    if (!bounded_membership_pure(coeff, gens, degree_bound)) return false;
  }
  return true;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Rational inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] * inv;
      for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detcycle::arith
