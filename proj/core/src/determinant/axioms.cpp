#include "detcycle/determinant/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "detcycle/arith/random.hpp"
#include "detcycle/determinant/determinant.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::det {

namespace {

using arith::RandomSource;
using arith::Rational;

constexpr unsigned kMaxRank = 4;

struct Case {
  bool passed;
  std::string witness;
};

class Generator {
 public:
  Generator(RingPtr ctx, std::uint64_t seed) : ctx_(std::move(ctx)), rng_(seed) {}

  RingPtr ctx() const { return ctx_; }
  RandomSource& rng() { return rng_; }

  RingElem entry() { return rng_.element(ctx_, 2, 2); }

  Matrix random_matrix(std::size_t rows, std::size_t cols) {
    Matrix m(ctx_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry();
    }
    return m;
  }

  // Unit of Q[x,y] (x) A: nonzero constant plus a nilpotent part.
  RingElem unit() {
    static const Rational kScalars[] = {1, -1, 2, -2, Rational(1, 2), 3};
    RingElem u = RingElem::constant(ctx_, kScalars[rng_.uniform(0, 5)]);
    if (rng_.coin()) u += rng_.nilpotent(ctx_, 2, 2);
    return u;
  }

  // P * L * D * U with P a permutation, L/U unipotent and D diagonal units.
  Matrix invertible(std::size_t n) {
    Matrix lower = Matrix::identity(ctx_, n);
    Matrix upper = Matrix::identity(ctx_, n);
    Matrix diag(ctx_, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      diag(i, i) = unit();
      for (std::size_t j = i + 1; j < n; ++j) {
        upper(i, j) = entry();
        lower(j, i) = entry();
      }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng_.engine());
    Matrix p(ctx_, n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = RingElem::one(ctx_);
    return p * lower * diag * upper;
  }

  std::size_t rank(std::size_t max) { return static_cast<std::size_t>(rng_.uniform(0, static_cast<std::int64_t>(max))); }

 private:
  RingPtr ctx_;
  RandomSource rng_;
};

Matrix row_block(const Matrix& m, std::size_t begin, std::size_t end) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t i = begin; i < end; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  return m.select(rows, cols);
}

// Split sequence 0 -> A -> B -> C -> 0 adapted to the columns of T: A is
// spanned by the first `a` columns, the splitting lifts C to the remaining
// columns shifted by A-combinations.
SplitSES adapted_sequence(const FreeModule& a, const FreeModule& b, const FreeModule& c,
                          const Matrix& t, const Matrix& t_inv, const Matrix& shift) {
  const std::size_t ra = a.rank();
  Matrix inclusion = t.columns(0, ra);
  Matrix splitting = t.columns(ra, b.rank()) + inclusion * shift;
  Matrix projection = row_block(t_inv, ra, b.rank());
  return SplitSES{a, b, c, std::move(inclusion), std::move(projection), std::move(splitting)};
}

std::string route_witness(const RingElem& left, const RingElem& right) {
  return "left=" + left.to_string() + " right=" + right.to_string();
}

Case naturality_case(Generator& gen) {
  const RingPtr ctx = gen.ctx();
  const std::size_t rb = gen.rank(kMaxRank);
  const std::size_t ra = gen.rank(rb);
  const std::size_t rc = rb - ra;
  FreeModule a = FreeModule::standard(ctx, ra, "a");
  FreeModule b = FreeModule::standard(ctx, rb, "b");
  FreeModule c = FreeModule::standard(ctx, rc, "c");

  Matrix t = gen.invertible(rb);
  SplitSES delta = adapted_sequence(a, b, c, t, t.inverse(), gen.random_matrix(ra, rc));

  // Isomorphism of sequences (alpha, beta, gamma) and the transported sequence.
  Matrix alpha = gen.invertible(ra);
  Matrix beta = gen.invertible(rb);
  Matrix gamma = gen.invertible(rc);
  Matrix inc2 = beta * delta.inclusion * alpha.inverse();
  Matrix proj2 = gamma * delta.projection * beta.inverse();
  Matrix split2 = beta * delta.splitting * gamma.inverse() + inc2 * gen.random_matrix(ra, rc);
  SplitSES delta2{a, b, c, std::move(inc2), std::move(proj2), std::move(split2)};

  // det(beta) o det(delta) == det(delta') o (det(gamma) (x) det(alpha)).
  DetIso upper = det_ses(delta).then(DetIso(det_free(b), det_free(b), beta.determinant()));
  DetIso sides(det_free(c), det_free(c), gamma.determinant());
  DetIso lower = sides.tensor(DetIso(det_free(a), det_free(a), alpha.determinant())).then(det_ses(delta2));
  return {upper.scalar() == lower.scalar(), route_witness(upper.scalar(), lower.scalar())};
}

Case associativity_case(Generator& gen) {
  const RingPtr ctx = gen.ctx();
  // Filtration A >-> B >-> C with A1 = B/A, B1 = C/B, C1 = C/A.
  const std::size_t n = gen.rank(kMaxRank);
  const std::size_t ra = gen.rank(n);
  const std::size_t ra1 = gen.rank(n - ra);
  const std::size_t rb1 = n - ra - ra1;
  const std::size_t rb = ra + ra1;
  const std::size_t rc1 = ra1 + rb1;

  FreeModule a = FreeModule::standard(ctx, ra, "a");
  FreeModule b = FreeModule::standard(ctx, rb, "b");
  FreeModule c = FreeModule::standard(ctx, n, "c");
  FreeModule a1 = FreeModule::standard(ctx, ra1, "p");
  FreeModule b1 = FreeModule::standard(ctx, rb1, "q");
  FreeModule c1 = FreeModule::standard(ctx, rc1, "r");

  // Adapted basis of C; B's basis is a random change of the first rb columns.
  Matrix t = gen.invertible(n);
  Matrix h = gen.invertible(rb);
  Matrix h_inv = h.inverse();
  Matrix j = t.columns(0, rb) * h;

  // delta1: A -> B -> A1, expressed in B coordinates.
  SplitSES delta1 = adapted_sequence(a, b, a1, h_inv, h, gen.random_matrix(ra, ra1));
  // delta2: B -> C -> B1, with inclusion j.
  Matrix t_b = j.hconcat(t.columns(rb, n));
  SplitSES delta2 = adapted_sequence(b, c, b1, t_b, t_b.inverse(), gen.random_matrix(rb, rb1));
  // delta12: A -> C -> C1, inclusion j o i1.
  Matrix t_a = (j * delta1.inclusion).hconcat(t.columns(ra, n));
  SplitSES delta12 = adapted_sequence(a, c, c1, t_a, t_a.inverse(), gen.random_matrix(ra, rc1));
  // Induced sequence A1 -> C1 -> B1.
  Matrix inc_t = delta12.projection * j * delta1.splitting;
  Matrix proj_t = delta2.projection * delta12.splitting;
  Matrix split_t = delta12.projection * delta2.splitting + inc_t * gen.random_matrix(ra1, rb1);
  SplitSES delta_t{a1, c1, b1, std::move(inc_t), std::move(proj_t), std::move(split_t)};

  // B1 (x) (A1 (x) A) -> B1 (x) B -> C versus (B1 (x) A1) (x) A -> C1 (x) A -> C;
  // the regrouping arrow is the identity on generators.
  DetIso left = DetIso::identity(det_free(b1)).tensor(det_ses(delta1)).then(det_ses(delta2));
  DetIso right = det_ses(delta_t).tensor(DetIso::identity(det_free(a))).then(det_ses(delta12));
  return {left.scalar() == right.scalar(), route_witness(left.scalar(), right.scalar())};
}

Case commutativity_case(Generator& gen) {
  const RingPtr ctx = gen.ctx();
  const std::size_t ra = gen.rank(kMaxRank);
  const std::size_t rb = gen.rank(kMaxRank - ra);
  FreeModule a = FreeModule::standard(ctx, ra, "a");
  FreeModule b = FreeModule::standard(ctx, rb, "b");
  FreeModule sum = FreeModule::standard(ctx, ra + rb, "s");

  // Canonical embeddings into A (+) B.
  Matrix ia(ctx, ra + rb, ra);
  Matrix ib(ctx, ra + rb, rb);
  Matrix pa(ctx, ra, ra + rb);
  Matrix pb(ctx, rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i) ia(i, i) = pa(i, i) = RingElem::one(ctx);
  for (std::size_t i = 0; i < rb; ++i) ib(ra + i, i) = pb(i, ra + i) = RingElem::one(ctx);

  SplitSES delta1{a, sum, b, ia, pb, ib};
  SplitSES delta2{b, sum, a, ib, pa, ia};
  // det(delta2) o symmetry == det(delta1) on det(B) (x) det(A).
  DetIso via_swap = symmetry(det_free(b), det_free(a)).then(det_ses(delta2));
  DetIso direct = det_ses(delta1);
  return {via_swap.scalar() == direct.scalar(), route_witness(via_swap.scalar(), direct.scalar())};
}

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kNaturality: return "naturality";
    case Axiom::kAssociativity: return "associativity";
    case Axiom::kCommutativity: return "commutativity";
  }
  return "unknown";
}

std::size_t AxiomReport::failures(Axiom a) const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const AxiomCase& c) {
    return c.axiom == a && !c.passed;
  }));
}

std::size_t AxiomReport::suites_passed() const {
  std::size_t n = 0;
  for (Axiom a : {Axiom::kNaturality, Axiom::kAssociativity, Axiom::kCommutativity}) {
    if (failures(a) == 0) ++n;
  }
  return n;
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << axiom_name(r.axiom) << " case " << r.index << ": " << (r.passed ? "PASS" : "FAIL");
    if (!r.passed) os << " (" << r.witness << ")";
    os << "\n";
  }
  os << "axioms: " << suites_passed() << "/3 suites passed, " << cases << " cases\n";
  return os.str();
}

AxiomReport axiom_suite(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) throw InvalidInput("axiom_suite: cases must be >= 1");
  const RingPtr ctx = arith::RingContext::make({"x", "y"}, arith::ArtinAlgebra::dual_numbers());
  AxiomReport report;
  report.cases = cases;
  const Axiom axioms[] = {Axiom::kNaturality, Axiom::kAssociativity, Axiom::kCommutativity};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < cases; ++i) {
      Generator gen(ctx, RandomSource::mix(seed, i * 3 + k));
      Case result{false, ""};
      try {
        switch (axioms[k]) {
          case Axiom::kNaturality: result = naturality_case(gen); break;
          case Axiom::kAssociativity: result = associativity_case(gen); break;
          case Axiom::kCommutativity: result = commutativity_case(gen); break;
        }
      } catch (const Error& e) {
        result = {false, e.what()};
      }
      report.results.push_back({axioms[k], i, result.passed, std::move(result.witness)});
    }
  }
  return report;
}

}  // namespace detcycle::det
