#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "detcycle/arith/groebner.hpp"
#include "detcycle/arith/linear_oracle.hpp"
#include "detcycle/arith/random.hpp"
#include "detcycle/cli/run.hpp"
#include "detcycle/cli/scene_file.hpp"
#include "detcycle/complexes/presentation.hpp"
#include "detcycle/deformation/cech.hpp"
#include "detcycle/deformation/functoriality.hpp"
#include "detcycle/deformation/pipeline.hpp"
#include "detcycle/determinant/determinant.hpp"
#include "detcycle/errors.hpp"
#include "oracles.hpp"

namespace {

using namespace detcycle;
using arith::RingElem;
using arith::RingPtr;
using complexes::Matrix;
using complexes::ModulePresentation;
using deformation::Chart;
using deformation::Scene;
using localcoh::H1yClassRep;
using testing::P;
using testing::ring;

const std::filesystem::path kFixtures = DETCYCLE_FIXTURE_DIR;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Check = std::function<void(Verdict&)>;

bool criterion(int number, const std::string& title, double limit_seconds, const Check& check) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    check(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream os;
    os << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    v.require(seconds < limit_seconds, os.str());
  }
  std::cout << "criterion " << number << " [" << title << "]: " << (v.ok ? "PASS" : "FAIL") << " ("
            << seconds << " s)";
  if (!v.ok) std::cout << " " << v.detail;
  std::cout << std::endl;
  return v.ok;
}

H1yClassRep class_of(const RingElem& lifting, const RingElem& f) {
  return deformation::map_p(deformation::alpha_of(lifting), f);
}

void axioms(Verdict& v) {
  std::ostringstream out, err;
  const int code = cli::run({"check-axioms", "--seed", "7", "--cases", "100"}, out, err);
  v.require(code == cli::kSuccess, "check-axioms exit code " + std::to_string(code));
  const std::string text = out.str();
  v.require(text.find("axioms: 3/3 suites passed, 100 cases") != std::string::npos, "summary line missing");
  v.require(text.find("FAIL") == std::string::npos, "failing case reported");
}

void first_order_class(Verdict& v) {
  auto ctx = ring({"x", "y"});
  RingElem x = P(ctx, "x");
  H1yClassRep cls = class_of(P(ctx, "x + e*y"), x);
  v.require(cls.numerator() == P(ctx, "e*y") && cls.level() == 1 && cls.f() == x,
            "class of x + e*y is " + cls.to_string());
  H1yClassRep expected(x, 1, P(ctx, "e*y"));
  v.require(localcoh::h1y_equal(cls, expected), "class differs from (e*y)/x");
  v.require(!localcoh::h1y_is_zero(cls), "class of x + e*y reported zero");
  H1yClassRep trivial = class_of(x, x);
  v.require(localcoh::h1y_is_zero(trivial) && trivial.numerator().is_zero(), "trivial lifting not zero");
}

void theorem_battery(Verdict& v) {
  const unsigned bound = 8;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  for (const auto& vars : {std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x", "y", "z"}}) {
    auto ctx = ring(vars);
    std::vector<RingElem> params;
    for (const auto& name : vars) params.push_back(P(ctx, name));
    arith::RandomSource rng(arith::RandomSource::mix(7, vars.size()));
    for (int i = 0; i < 100; ++i) {
      RingElem g = rng.pure_poly(ctx, 4, 4);
      Scene scene = Scene::make(ctx, {Chart{"U", params, params[0] + P(ctx, "e") * g}});
      auto report = deformation::cycle_check(scene, "U");
      v.require(report.overall, "cycle_check failed for g = " + g.to_string());
      for (const auto& d : report.directions) {
        const std::vector<RingElem> gens = {d.gamma.f1(), d.gamma.f2()};
        const bool by_basis = arith::ideal_membership(d.gamma.numerator(), gens);
        const bool by_span = arith::bounded_membership(d.gamma.numerator(), gens, bound);
        ++instances;
        if (by_basis == by_span) ++agreements;
        v.require(by_basis && by_span, "uncertified gamma " + d.gamma.to_string());
      }
    }
  }
  v.require(instances > 0 && agreements == instances,
            "deciders agree on " + std::to_string(agreements) + "/" + std::to_string(instances));
}

void colimit_semantics(Verdict& v) {
  auto ctx = ring({"x", "y", "z"}, 3);
  const char* equations[] = {"x", "y - x^2", "x*y + 1", "x + y + z", "x^2 + y^3 + z"};
  arith::RandomSource rng(arith::RandomSource::mix(7, 4));
  for (int i = 0; i < 200; ++i) {
    RingElem f = P(ctx, equations[rng.uniform(0, 4)]);
    const auto n = static_cast<unsigned>(rng.uniform(1, 3));
    RingElem num = rng.nilpotent(ctx, 3, 3);
    const auto k = static_cast<unsigned>(rng.uniform(0, n));
    num = num * f.pow(k);
    H1yClassRep a(f, n, num);
    H1yClassRep rescaled(f, n + 1, num * f);
    v.require(localcoh::h1y_equal(a, rescaled), "rescaling law fails for " + a.to_string());
    v.require(localcoh::h1y_is_zero(a) == localcoh::h1y_equal(a, H1yClassRep::zero(f)),
              "zero test disagrees for " + a.to_string());
    v.require(localcoh::h1y_is_zero(a) == testing::in_power_ideal(num, f, n),
              "zero test disagrees with power-ideal oracle for " + a.to_string());
  }
}

void koszul_correctness(Verdict& v) {
  auto ctx = ring({"x", "y", "z"});
  arith::RandomSource rng(arith::RandomSource::mix(7, 5));
  for (unsigned q = 1; q <= 4; ++q) {
    for (int i = 0; i < 10; ++i) {
      std::vector<RingElem> seq;
      for (unsigned j = 0; j < q; ++j) seq.push_back(rng.nonzero_pure_poly(ctx, 3, 3) + rng.nilpotent(ctx, 2, 2));
      auto k = complexes::koszul(seq);
      v.require(complexes::verify_complex(k), "d o d != 0 for length " + std::to_string(q));
      for (unsigned p = 0; p <= q; ++p) {
        v.require(k.module(p).rank() == testing::binomial(q, p), "rank mismatch in degree " + std::to_string(p));
      }
    }
  }
  auto plane = ring({"x", "y"});
  // Column f2*e1 - f1*e2, negated by the sign normalization.
  Matrix column = Matrix::from_rows(plane, {{P(plane, "y")}, {P(plane, "-x")}});
  Matrix negated = Matrix(plane, 2, 1) - column;
  v.require(complexes::koszul({P(plane, "x"), P(plane, "y")}).differential(2) == negated, "d2 sign");
}

ModulePresentation koszul_presentation(const RingElem& f) { return ModulePresentation(complexes::koszul({f})); }

void determinant_laws(Verdict& v) {
  auto ctx = ring({"x", "y"});
  arith::RandomSource rng(arith::RandomSource::mix(7, 6));
  ModulePresentation identity(complexes::two_term(Matrix::identity(ctx, 1)));
  for (int i = 0; i < 50; ++i) {
    auto p = koszul_presentation(rng.nonzero_pure_poly(ctx, 3, 3) + rng.nilpotent(ctx, 2, 2));
    auto q = koszul_presentation(rng.nonzero_pure_poly(ctx, 3, 3) + rng.nilpotent(ctx, 2, 2));
    const RingElem dp = det::submatrix_det(p);
    v.require(det::submatrix_det(complexes::direct_sum(p, identity)) == dp, "stabilization");
    v.require(det::submatrix_det(complexes::direct_sum(p, q)) == dp * det::submatrix_det(q), "multiplicativity");
    v.require(dp == testing::leibniz_det(p.matrix()), "submatrix determinant vs Leibniz");
  }
}

void cech_gluing(Verdict& v) {
  Scene scene = cli::load_scene(kFixtures / "two_charts.toml");
  const auto& ctx = scene.context();
  v.require(scene.chart("U2").lifting == P(ctx, "1 + e") * scene.chart("U1").lifting,
            "fixture liftings are not related by 1 + e");
  auto report = deformation::cech_transitions(scene);
  v.require(report.transitions.size() == 2 && report.transitions[0].unit && report.transitions[1].unit,
            "missing transition");
  if (!v.ok) return;
  const auto& g12 = *report.transitions[0].unit;
  const auto& g21 = *report.transitions[1].unit;
  v.require(g12.numerator() * g21.numerator() == g12.denominator() * g21.denominator(), "g12 * g21 != 1");
  v.require(g12.numerator() * scene.chart("U2").lifting == g12.denominator() * scene.chart("U1").lifting,
            "g12 does not carry lifting 2 to lifting 1");
  v.require(report.valid(), "gluing identity not validated");
  std::ostringstream out, err;
  v.require(cli::run({"cech", "--scene", (kFixtures / "two_charts.toml").string()}, out, err) == cli::kSuccess,
            "cech exit code on gluing fixture");
  v.require(cli::run({"cech", "--scene", (kFixtures / "non_gluing.toml").string()}, out, err) == cli::kCheckFailed,
            "cech exit code on non-gluing fixture");
}

void functoriality(Verdict& v) {
  auto ctx = ring({"x", "y"}, 3);
  auto to_dual = deformation::ArtinMorphism::truncation(ctx, 2);
  auto to_field = deformation::ArtinMorphism::truncation(to_dual.target(), 1);
  auto direct = deformation::ArtinMorphism::truncation(ctx, 1);
  const RingElem f = P(ctx, "x");
  arith::RandomSource rng(arith::RandomSource::mix(7, 8));
  for (int i = 0; i < 50; ++i) {
    RingElem lifting = f + rng.nilpotent(ctx, 4, 4);
    auto first = deformation::functoriality_check(lifting, f, to_dual);
    v.require(first.commutes, "e^3 -> e^2 fails for " + lifting.to_string());
    RingElem middle = to_dual.apply(lifting);
    v.require(deformation::functoriality_check(middle, to_dual.apply(f), to_field).commutes,
              "e^2 -> k fails for " + middle.to_string());
    v.require(deformation::functoriality_check(lifting, f, direct).commutes,
              "e^3 -> k fails for " + lifting.to_string());
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion(1, "determinant functor axioms", 10.0, axioms);
  all &= criterion(2, "class of a first-order lifting", 1.0, first_order_class);
  all &= criterion(3, "cycle condition battery", 60.0, theorem_battery);
  all &= criterion(4, "colimit semantics", 10.0, colimit_semantics);
  all &= criterion(5, "koszul correctness", 0, koszul_correctness);
  all &= criterion(6, "stabilization and multiplicativity", 0, determinant_laws);
  all &= criterion(7, "cech gluing", 0, cech_gluing);
  all &= criterion(8, "functoriality", 10.0, functoriality);
  return all ? 0 : 1;
}
