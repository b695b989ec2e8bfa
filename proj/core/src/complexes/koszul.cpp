#include <map>

#include "detcycle/complexes/complex.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::complexes {

namespace {

using Subset = std::vector<std::size_t>;

void subsets_of_size(std::size_t n, std::size_t p, std::size_t start, Subset& cur,
                     std::vector<Subset>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

std::string wedge_label(const Subset& s) {
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += "∧";
    out += "e" + std::to_string(s[i] + 1);
  }
  return out;
}

}  // namespace

ChainComplex koszul(const std::vector<RingElem>& seq) {
  if (seq.empty()) throw InvalidInput("koszul: empty sequence");
  const RingPtr ctx = seq.front().context();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    arith::require_same(seq[i].context(), ctx);
    if (seq[i].is_zero()) throw InvalidInput("koszul: entry " + std::to_string(i + 1) + " is zero");
  }
  const std::size_t q = seq.size();

  std::vector<std::vector<Subset>> basis(q + 1);
  std::vector<FreeModule> modules;
  for (std::size_t p = 0; p <= q; ++p) {
    Subset cur;
    subsets_of_size(q, p, 0, cur, basis[p]);
    FreeModule m{ctx, {}};
    for (const auto& s : basis[p]) m.labels.push_back(wedge_label(s));
    modules.push_back(std::move(m));
  }

  std::vector<Matrix> diffs;
  for (std::size_t p = 1; p <= q; ++p) {
    std::map<Subset, std::size_t> row_of;
    for (std::size_t r = 0; r < basis[p - 1].size(); ++r) row_of.emplace(basis[p - 1][r], r);
    Matrix d(ctx, basis[p - 1].size(), basis[p].size());
    for (std::size_t c = 0; c < basis[p].size(); ++c) {
      const Subset& s = basis[p][c];
      for (std::size_t m = 0; m < s.size(); ++m) {
        Subset face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(m));
        const RingElem& f = seq[s[m]];
        d(row_of.at(face), c) = (m % 2 == 0) ? f : -f;
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(std::move(modules), std::move(diffs));
}

}  // namespace detcycle::complexes
