#include "detcycle/arith/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "detcycle/errors.hpp"

namespace detcycle::arith {

std::size_t ArtinAlgebra::dimension() const {
  if (is_field()) return 1;
  // Number of monomials in s variables of degree < n is binom(s + n - 1, s).
  std::size_t s = generators.size();
  std::size_t n = truncation_order - 1;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= s; ++i) result = result * (n + i) / i;
  return result;
}

std::optional<MonomialOrder> parse_monomial_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::kLex;
  if (name == "grlex" || name == "deglex") return MonomialOrder::kGrLex;
  if (name == "grevlex" || name == "degrevlex") return MonomialOrder::kGrevLex;
  return std::nullopt;
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kLex: return "lex";
    case MonomialOrder::kGrLex: return "grlex";
    case MonomialOrder::kGrevLex: return "grevlex";
  }
  return "lex";
}

std::uint64_t Monomial::degree(std::size_t begin, std::size_t end) const {
  std::uint64_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += exps_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

RingPtr RingContext::make(std::vector<std::string> variables, ArtinAlgebra artin,
                          MonomialOrder order) {
  if (artin.truncation_order < 1) throw InvalidInput("artinian truncation order must be >= 1");
  std::set<std::string> seen;
  auto check = [&](const std::string& name) {
    if (name.empty()) throw InvalidInput("empty symbol name");
    if (!seen.insert(name).second) throw InvalidInput("symbol '" + name + "' declared twice");
  };
  for (const auto& v : variables) check(v);
  for (const auto& e : artin.generators) check(e);
  return RingPtr(new RingContext(std::move(variables), std::move(artin), order));
}

std::optional<std::size_t> RingContext::symbol_slot(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  for (std::size_t i = 0; i < artin_.generators.size(); ++i) {
    if (artin_.generators[i] == name) return nvars() + i;
  }
  return std::nullopt;
}

const std::string& RingContext::slot_name(std::size_t slot) const {
  return slot < nvars() ? variables_[slot] : artin_.generators[slot - nvars()];
}

bool RingContext::is_truncated(const Monomial& m) const {
  return neps() > 0 && eps_degree(m) >= artin_.truncation_order;
}

int RingContext::compare_vars(const Monomial& a, const Monomial& b) const {
  const std::size_t n = nvars();
  if (order_ != MonomialOrder::kLex) {
    auto da = a.degree(0, n);
    auto db = b.degree(0, n);
    if (da != db) return da < db ? -1 : 1;
  }
  if (order_ == MonomialOrder::kGrevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int RingContext::compare(const Monomial& a, const Monomial& b) const {
  if (int c = compare_vars(a, b); c != 0) return c;
  // Lower e-degree ranks higher, so the augmentation part renders first.
  auto ea = eps_degree(a);
  auto eb = eps_degree(b);
  if (ea != eb) return ea < eb ? 1 : -1;
  for (std::size_t i = nvars(); i < slots(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

RingPtr RingContext::with_artin(ArtinAlgebra artin) const {
  return make(variables_, std::move(artin), order_);
}

bool RingContext::same_as(const RingContext& other) const {
  if (this == &other) return true;
  return variables_ == other.variables_ && order_ == other.order_ && artin_ == other.artin_;
}

std::string RingContext::describe() const {
  std::ostringstream os;
  os << "Q[";
  for (std::size_t i = 0; i < variables_.size(); ++i) os << (i ? "," : "") << variables_[i];
  os << "]";
  if (!artin_.is_field()) {
    os << " (x) Q[";
    for (std::size_t i = 0; i < neps(); ++i) os << (i ? "," : "") << artin_.generators[i];
    os << "]/(deg>=" << artin_.truncation_order << ")";
  }
  os << " order=" << to_string(order_);
  return os.str();
}

void require_same(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) {
    throw ContextMismatch("operands belong to different rings: " +
                          (a ? a->describe() : std::string("<null>")) + " vs " +
                          (b ? b->describe() : std::string("<null>")));
  }
}

}  // namespace detcycle::arith
