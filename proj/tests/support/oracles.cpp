#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detcycle/arith/groebner.hpp"
#include "detcycle/arith/parser.hpp"

namespace detcycle::testing {

using arith::Rational;

RingPtr ring(std::vector<std::string> vars, unsigned order, std::string eps) {
  arith::ArtinAlgebra artin = order <= 1 ? arith::ArtinAlgebra::field()
                                         : arith::ArtinAlgebra{{std::move(eps)}, order};
  return arith::RingContext::make(std::move(vars), artin);
}

RingElem P(const RingPtr& ctx, const std::string& text) { return arith::parse_poly(text, ctx); }

RingElem leibniz_det(const complexes::Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RingElem total(m.context());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    RingElem term = RingElem::constant(m.context(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

using Key = std::vector<std::uint32_t>;

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                              [&](const auto& r) { return !r[c].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<long>(rank), pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

void monomials_up_to(std::size_t nvars, std::size_t slots, unsigned bound, std::vector<Key>& out) {
  Key cur(slots, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, bound);
}

}  // namespace

bool dense_membership(const RingElem& a, const std::vector<RingElem>& gens, unsigned bound) {
  if (a.is_zero()) return true;
  const RingPtr& ctx = a.context();
  std::vector<Key> monomials;
  monomials_up_to(ctx->nvars(), ctx->slots(), bound, monomials);
  std::map<Key, std::size_t> column;
  for (const auto& m : monomials) column.emplace(m, column.size());
  auto vec = [&](const RingElem& p, std::vector<Rational>& row) {
    row.assign(column.size(), Rational());
    for (const auto& t : p.terms()) {
      auto it = column.find(t.monomial.exponents());
      if (it == column.end()) return false;
      row[it->second] = t.coeff;
    }
    return true;
  };
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row;
  for (const auto& g : gens) {
    for (const auto& m : monomials) {
      if (vec(g.times_monomial(arith::Monomial(m), 1), row)) rows.push_back(row);
    }
  }
  if (!vec(a, row)) return false;
  const std::size_t before = dense_rank(rows);
  rows.push_back(row);
  return dense_rank(rows) == before;
}

bool dense_membership_eps(const RingElem& a, const std::vector<RingElem>& gens, unsigned bound) {
  for (const auto& [eps, coeff] : a.eps_components()) {
    if (!dense_membership(coeff, gens, bound)) return false;
  }
  return true;
}

bool in_power_ideal(const RingElem& p, const RingElem& f, unsigned m) {
  if (p.is_zero() || m == 0) return true;
  return arith::ideal_membership(p, {f.pow(m)});
}

unsigned long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detcycle::testing
