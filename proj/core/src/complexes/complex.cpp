#include "detcycle/complexes/complex.hpp"

#include <set>
#include <sstream>

#include "detcycle/errors.hpp"

namespace detcycle::complexes {

FreeModule FreeModule::standard(RingPtr ctx, std::size_t rank, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) labels.push_back(prefix + std::to_string(i));
  return FreeModule{std::move(ctx), std::move(labels)};
}

FreeModule FreeModule::make(RingPtr ctx, std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InvalidInput("free module basis labels must be distinct");
  return FreeModule{std::move(ctx), std::move(labels)};
}

ModuleMap::ModuleMap(FreeModule source, FreeModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  arith::require_same(source_.ctx, target_.ctx);
  arith::require_same(source_.ctx, matrix_.context());
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    throw InvalidInput("module map matrix must be target.rank x source.rank");
  }
}

ChainComplex::ChainComplex(std::vector<FreeModule> modules, std::vector<Matrix> differentials)
    : modules_(std::move(modules)), differentials_(std::move(differentials)) {
  if (modules_.empty()) throw InvalidInput("chain complex needs at least one module");
  if (differentials_.size() + 1 != modules_.size()) {
    throw InvalidInput("chain complex needs one differential per adjacent pair of degrees");
  }
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    arith::require_same(modules_[i].ctx, modules_[i + 1].ctx);
    arith::require_same(modules_[i].ctx, differentials_[i].context());
    if (differentials_[i].rows() != modules_[i].rank() ||
        differentials_[i].cols() != modules_[i + 1].rank()) {
      throw InvalidInput("differential d" + std::to_string(i + 1) + " has the wrong shape");
    }
  }
}

ModuleMap ChainComplex::differential_map(std::size_t degree) const {
  return ModuleMap(module(degree), module(degree - 1), differential(degree));
}

std::vector<std::size_t> ChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& m : modules_) out.push_back(m.rank());
  return out;
}

std::string ChainComplex::to_string() const {
  std::ostringstream os;
  for (std::size_t deg = length() + 1; deg-- > 0;) {
    const auto& m = modules_[deg];
    os << "F" << deg << ": rank " << m.rank() << " [";
    for (std::size_t i = 0; i < m.labels.size(); ++i) os << (i ? ", " : "") << m.labels[i];
    os << "]\n";
    if (deg > 0) os << "d" << deg << " = " << differential(deg).to_string() << "\n";
  }
  return os.str();
}

bool verify_complex(const ChainComplex& c) {
  for (std::size_t deg = 2; deg <= c.length(); ++deg) {
    if (!(c.differential(deg - 1) * c.differential(deg)).is_zero()) return false;
  }
  return true;
}

ChainComplex direct_sum(const ChainComplex& c1, const ChainComplex& c2) {
  arith::require_same(c1.context(), c2.context());
  const RingPtr& ctx = c1.context();
  const std::size_t len = std::max(c1.length(), c2.length());
  auto module_or_zero = [&](const ChainComplex& c, std::size_t deg) {
    return deg <= c.length() ? c.module(deg) : FreeModule{ctx, {}};
  };
  auto diff_or_zero = [&](const ChainComplex& c, std::size_t deg) {
    if (deg <= c.length()) return c.differential(deg);
    return Matrix(ctx, module_or_zero(c, deg - 1).rank(), 0);
  };

  std::vector<FreeModule> modules;
  for (std::size_t deg = 0; deg <= len; ++deg) {
    FreeModule m{ctx, {}};
    for (const auto& l : module_or_zero(c1, deg).labels) m.labels.push_back("a." + l);
    for (const auto& l : module_or_zero(c2, deg).labels) m.labels.push_back("b." + l);
    modules.push_back(std::move(m));
  }
  std::vector<Matrix> diffs;
  for (std::size_t deg = 1; deg <= len; ++deg) {
    diffs.push_back(Matrix::block_diagonal(diff_or_zero(c1, deg), diff_or_zero(c2, deg)));
  }
  return ChainComplex(std::move(modules), std::move(diffs));
}

}  // namespace detcycle::complexes
