#include <gtest/gtest.h>

#include "detcycle/arith/random.hpp"
#include "detcycle/determinant/axioms.hpp"
#include "detcycle/determinant/determinant.hpp"
#include "detcycle/errors.hpp"
#include "oracles.hpp"

namespace detcycle {
namespace {

using complexes::ChainComplex;
using complexes::FreeModule;
using complexes::Matrix;
using complexes::ModulePresentation;
using det::SplitSES;
using testing::P;
using testing::ring;

Matrix column(const RingPtr& ctx, std::vector<std::string> entries) {
  std::vector<std::vector<RingElem>> rows;
  for (const auto& e : entries) rows.push_back({P(ctx, e)});
  return Matrix::from_rows(ctx, rows);
}

ModulePresentation koszul_presentation(const RingElem& f) {
  return ModulePresentation(complexes::koszul({f}));
}

TEST(DetFree, Examples) {
  auto ctx = ring({"x"});
  auto empty = det::det_free(FreeModule::standard(ctx, 0, "g"));
  EXPECT_EQ(empty.grade(), 0);
  EXPECT_EQ(empty.symbol(), "(1)");
  auto two = det::det_free(FreeModule::standard(ctx, 2, "g"));
  EXPECT_EQ(two.grade(), 2);
  EXPECT_EQ(two.symbol(), "(g1∧g2)");
  auto sum = det::det_free(FreeModule::standard(ctx, 5, "s"));
  EXPECT_EQ(sum.grade(), 2 + 3);
}

TEST(DetComplex, Examples) {
  auto ctx = ring({"x", "y", "z"});
  EXPECT_EQ(det::det_complex(complexes::koszul({P(ctx, "x + e")})).grade(), 0);

  auto line = det::det_complex(complexes::two_term(column(ctx, {"x", "y"})));
  EXPECT_EQ(line.grade(), 2 - 1);
  EXPECT_EQ(line.symbol(), "(e1)^∨ ⊗ (g1∧g2)");

  auto koszul3 = complexes::koszul({P(ctx, "x"), P(ctx, "y"), P(ctx, "z")});
  int alternating = 0;
  for (unsigned p = 0; p <= 3; ++p) alternating += (p % 2 ? -1 : 1) * static_cast<int>(testing::binomial(3, p));
  EXPECT_EQ(det::det_complex(koszul3).grade(), alternating);

  FreeModule r = FreeModule::standard(ctx, 1, "b");
  ChainComplex bad({r, r, r}, {column(ctx, {"x"}), column(ctx, {"x"})});
  EXPECT_THROW(det::det_complex(bad), InvalidInput);
}

TEST(DetComplex, GradeAdditivity) {
  auto ctx = ring({"x", "y", "z"});
  arith::RandomSource rng(12);
  for (int i = 0; i < 30; ++i) {
    std::vector<RingElem> a, b;
    for (auto k = rng.uniform(1, 3); k > 0; --k) a.push_back(rng.nonzero_pure_poly(ctx, 2, 2));
    for (auto k = rng.uniform(1, 3); k > 0; --k) b.push_back(rng.nonzero_pure_poly(ctx, 2, 2));
    auto ca = complexes::koszul(a);
    auto cb = complexes::koszul(b);
    EXPECT_EQ(det::det_complex(complexes::direct_sum(ca, cb)).grade(),
              det::det_complex(ca).grade() + det::det_complex(cb).grade());
  }
}

TEST(DetPresentation, Examples) {
  auto ctx = ring({"x", "y"});
  RingElem lifting = P(ctx, "x + e*y");
  auto [line, iso] = det::det_presentation(koszul_presentation(lifting));
  EXPECT_EQ(iso.scalar(), lifting);
  EXPECT_EQ(iso.source(), line);
  EXPECT_EQ(iso.target().grade(), line.grade());

  auto doubled = complexes::direct_sum(koszul_presentation(P(ctx, "x")), koszul_presentation(P(ctx, "x")));
  EXPECT_EQ(det::submatrix_det(doubled), testing::leibniz_det(doubled.matrix()));
  EXPECT_EQ(det::submatrix_det(doubled), P(ctx, "x^2"));

  ModulePresentation tall(complexes::two_term(column(ctx, {"x", "y"})));
  EXPECT_EQ(det::submatrix_det(tall), P(ctx, "x"));
  ModulePresentation forced(complexes::two_term(column(ctx, {"0", "y"})));
  EXPECT_EQ(det::submatrix_det(forced), P(ctx, "y"));
  EXPECT_EQ(det::det_presentation(forced).second.scalar(), det::submatrix_det(forced));
}

TEST(DetPresentation, IndependentOfLabels) {
  auto ctx = ring({"x", "y"});
  Matrix m = Matrix::from_rows(ctx, {{P(ctx, "x"), P(ctx, "e")}, {P(ctx, "y"), P(ctx, "x + 1")}});
  ChainComplex a({FreeModule::standard(ctx, 2, "g"), FreeModule::standard(ctx, 2, "e")}, {m});
  ChainComplex b({FreeModule::make(ctx, {"u", "v"}), FreeModule::make(ctx, {"p", "q"})}, {m});
  EXPECT_EQ(det::submatrix_det(ModulePresentation(a)), det::submatrix_det(ModulePresentation(b)));
}

TEST(StabilizationAndMultiplicativity, KoszulPresentations) {
  auto ctx = ring({"x", "y"});
  arith::RandomSource rng(6);
  ModulePresentation identity(complexes::two_term(Matrix::identity(ctx, 1)));
  for (int i = 0; i < 50; ++i) {
    RingElem f = rng.nonzero_pure_poly(ctx, 3, 3) + rng.nilpotent(ctx, 2, 2);
    RingElem g = rng.nonzero_pure_poly(ctx, 3, 3) + rng.nilpotent(ctx, 2, 2);
    auto p = koszul_presentation(f);
    auto q = koszul_presentation(g);
    EXPECT_EQ(det::submatrix_det(complexes::direct_sum(p, identity)), det::submatrix_det(p));
    EXPECT_EQ(det::submatrix_det(complexes::direct_sum(p, q)), det::submatrix_det(p) * det::submatrix_det(q));
  }
}

TEST(DetSes, Examples) {
  auto ctx = ring({"x", "y"});
  FreeModule a = FreeModule::standard(ctx, 2, "a");
  FreeModule zero = FreeModule::standard(ctx, 0, "c");
  SplitSES same{a, a, zero, Matrix::identity(ctx, 2), Matrix(ctx, 0, 2), Matrix(ctx, 2, 0)};
  EXPECT_TRUE(det::det_ses(same).scalar().is_one());

  // 0 -> A -> A (+) B -> B -> 0 with ranks 1 and 1: block permutation of even parity.
  FreeModule r1 = FreeModule::standard(ctx, 1, "a");
  FreeModule s1 = FreeModule::standard(ctx, 1, "b");
  FreeModule sum = FreeModule::standard(ctx, 2, "s");
  SplitSES canonical{r1, sum, s1, column(ctx, {"1", "0"}), Matrix::from_rows(ctx, {{P(ctx, "0"), P(ctx, "1")}}),
                     column(ctx, {"0", "1"})};
  EXPECT_EQ(det::det_ses(canonical).scalar(), P(ctx, "1"));
  SplitSES swapped{s1, sum, r1, column(ctx, {"0", "1"}), Matrix::from_rows(ctx, {{P(ctx, "1"), P(ctx, "0")}}),
                   column(ctx, {"1", "0"})};
  EXPECT_EQ(det::det_ses(swapped).scalar(), P(ctx, "-1"));

  SplitSES unipotent{r1, sum, s1, column(ctx, {"1", "0"}),
                     Matrix::from_rows(ctx, {{P(ctx, "0"), P(ctx, "1")}}), column(ctx, {"x*y + e", "1"})};
  EXPECT_EQ(det::det_ses(unipotent).scalar(),
            testing::leibniz_det(unipotent.inclusion.hconcat(unipotent.splitting)));
  EXPECT_TRUE(det::det_ses(unipotent).scalar().is_one());

  SplitSES broken = unipotent;
  broken.projection = Matrix::from_rows(ctx, {{P(ctx, "1"), P(ctx, "1")}});
  EXPECT_THROW(det::det_ses(broken), InvalidInput);
}

TEST(GradedLines, SymmetryAndComposition) {
  auto ctx = ring({"x"});
  auto l1 = det::det_free(FreeModule::standard(ctx, 1, "a"));
  auto l3 = det::det_free(FreeModule::standard(ctx, 3, "b"));
  auto l2 = det::det_free(FreeModule::standard(ctx, 2, "c"));
  EXPECT_EQ(det::symmetry(l1, l3).scalar(), P(ctx, "-1"));
  EXPECT_EQ(det::symmetry(l1, l2).scalar(), P(ctx, "1"));
  EXPECT_EQ(det::symmetry(l1, l3).target().symbol(), "(b1∧b2∧b3) ⊗ (a1)");
  EXPECT_THROW(det::DetIso::identity(l1).then(det::DetIso::identity(l2)), InvalidInput);
  EXPECT_EQ(l1.dual().grade(), -1);
  EXPECT_EQ(l1.tensor(l2).grade(), 3);
}

TEST(AxiomSuite, PassesAndIsDeterministic) {
  auto report = det::axiom_suite(7, 25);
  EXPECT_TRUE(report.all_passed()) << report.to_text();
  EXPECT_EQ(report.results.size(), 75u);
  EXPECT_EQ(report.to_text(), det::axiom_suite(7, 25).to_text());
  const std::string text = report.to_text();
  EXPECT_NE(text.find("axioms: 3/3 suites passed, 25 cases"), std::string::npos);
  EXPECT_NE(text.find("associativity case 24: PASS"), std::string::npos);
  EXPECT_THROW(det::axiom_suite(7, 0), InvalidInput);
}

TEST(AxiomSuite, OtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    EXPECT_TRUE(det::axiom_suite(seed, 10).all_passed()) << "seed " << seed;
  }
}

}  // namespace
}  // namespace detcycle
