#include "detcycle/cli/run.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <sstream>

#include "detcycle/arith/groebner.hpp"
#include "detcycle/arith/linear_oracle.hpp"
#include "detcycle/arith/parser.hpp"
#include "detcycle/cli/scene_file.hpp"
#include "detcycle/deformation/cech.hpp"
#include "detcycle/deformation/functoriality.hpp"
#include "detcycle/deformation/pipeline.hpp"
#include "detcycle/determinant/axioms.hpp"
#include "detcycle/determinant/determinant.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::cli {

namespace {

using Json = nlohmann::ordered_json;
using arith::RingElem;
using arith::RingPtr;
using deformation::Scene;

struct Options {
  std::string scene_path;
  std::string chart;
  std::uint64_t seed = 7;
  std::size_t cases = 100;
  unsigned degree_bound = 0;
  std::string format = "text";
  unsigned target_order = 2;
  std::string variables = "x,y,z";
  unsigned artin_order = 2;
  std::vector<std::string> polys;
};

class Session {
 public:
  Session(const std::string& command, const Options& opts, std::ostream& out)
      : command_(command), opts_(opts), out_(out) {}

  int dispatch() {
    if (command_ == "check-axioms") return check_axioms();
    if (command_ == "koszul") return koszul();
    if (command_ == "det") return det();
    if (command_ == "alpha") return alpha();
    if (command_ == "map-p") return map_p();
    if (command_ == "cycle-check") return cycle_check();
    if (command_ == "cech") return cech();
    if (command_ == "functorial") return functorial();
    if (command_ == "oracle-membership") return oracle_membership();
    throw InvalidInput("unknown command " + command_);
  }

 private:
  bool json() const { return opts_.format == "json-lines"; }

  void emit(Json record) { out_ << record.dump() << "\n"; }

  Json record() const { return Json{{"command", command_}}; }

  const Scene& scene() {
    if (!scene_) {
      if (opts_.scene_path.empty()) throw InvalidInput(command_ + " requires --scene");
      scene_ = load_scene(opts_.scene_path);
    }
    return *scene_;
  }

  RingPtr ring() {
    if (!opts_.scene_path.empty()) return scene().context();
    std::vector<std::string> vars;
    std::stringstream ss(opts_.variables);
    for (std::string v; std::getline(ss, v, ',');) {
      if (!v.empty()) vars.push_back(v);
    }
    arith::ArtinAlgebra algebra{{"e"}, opts_.artin_order};
    return arith::RingContext::make(std::move(vars), algebra);
  }

  std::vector<RingElem> sequence() {
    if (opts_.polys.empty()) throw InvalidInput(command_ + " requires at least one polynomial");
    const RingPtr ctx = ring();
    std::vector<RingElem> out;
    for (const auto& text : opts_.polys) out.push_back(arith::parse_poly(text, ctx));
    return out;
  }

  std::vector<std::string> chart_names() {
    if (!opts_.chart.empty()) {
      scene().chart(opts_.chart);
      return {opts_.chart};
    }
    std::vector<std::string> names;
    for (const auto& c : scene().charts()) names.push_back(c.name);
    return names;
  }

  std::string single_chart() {
    auto names = chart_names();
    if (names.size() != 1) throw InvalidInput(command_ + " requires --chart when the scene has several charts");
    return names.front();
  }

  int check_axioms() {
    const auto report = det::axiom_suite(opts_.seed, opts_.cases);
    if (!json()) {
      out_ << report.to_text();
    } else {
      for (const auto& c : report.results) {
        Json r = record();
        r["axiom"] = det::axiom_name(c.axiom);
        r["case"] = c.index;
        r["verdict"] = c.passed ? "PASS" : "FAIL";
        if (!c.passed) r["witness"] = c.witness;
        emit(std::move(r));
      }
      Json r = record();
      r["suites_passed"] = report.suites_passed();
      r["cases"] = report.cases;
      r["verdict"] = report.all_passed() ? "PASS" : "FAIL";
      emit(std::move(r));
    }
    return report.all_passed() ? kSuccess : kCheckFailed;
  }

  int koszul() {
    const auto complex = complexes::koszul(sequence());
    const bool ok = complexes::verify_complex(complex);
    if (!json()) {
      out_ << complex.to_string();
      out_ << "ranks:";
      for (auto r : complex.ranks()) out_ << " " << r;
      out_ << "\ncomplex: " << (ok ? "PASS" : "FAIL") << "\n";
    } else {
      for (std::size_t p = 1; p <= complex.length(); ++p) {
        Json r = record();
        r["degree"] = p;
        r["differential"] = complex.differential(p).to_string();
        emit(std::move(r));
      }
      Json r = record();
      r["ranks"] = complex.ranks();
      r["verdict"] = ok ? "PASS" : "FAIL";
      emit(std::move(r));
    }
    return ok ? kSuccess : kCheckFailed;
  }

  int det() {
    if (opts_.polys.empty()) {
      const std::string chart = single_chart();
      auto [line, trivialization] = det::det_presentation(deformation::alpha(scene(), chart));
      if (!json()) {
        out_ << "det: " << line.to_string() << "\n";
        out_ << "trivialization: " << trivialization.to_string() << "\n";
      } else {
        Json r = record();
        r["chart"] = chart;
        r["line"] = line.to_string();
        r["scalar"] = trivialization.scalar().to_string();
        emit(std::move(r));
      }
      return kSuccess;
    }
    const auto line = det::det_complex(complexes::koszul(sequence()));
    if (!json()) {
      out_ << "det: " << line.to_string() << "\n";
    } else {
      Json r = record();
      r["line"] = line.to_string();
      r["grade"] = line.grade();
      emit(std::move(r));
    }
    return kSuccess;
  }

  int alpha() {
    const std::string chart = single_chart();
    const auto p = deformation::alpha(scene(), chart);
    const auto augmented = p.matrix().map(&arith::augment);
    if (!json()) {
      out_ << "presentation: " << p.matrix().to_string() << "\n";
      out_ << "augmented: " << augmented.to_string() << "\n";
    } else {
      Json r = record();
      r["chart"] = chart;
      r["presentation"] = p.matrix().to_string();
      r["augmented"] = augmented.to_string();
      emit(std::move(r));
    }
    return kSuccess;
  }

  int map_p() {
    for (const auto& name : chart_names()) {
      const auto& chart = scene().chart(name);
      const auto cls = deformation::map_p(deformation::alpha_of(chart.lifting), chart.divisor());
      const bool zero = localcoh::h1y_is_zero(cls);
      if (!json()) {
        if (opts_.chart.empty() && scene().charts().size() > 1) out_ << "chart: " << name << "\n";
        out_ << "class: " << cls.to_string() << "\n";
        out_ << "zero class: " << (zero ? "yes" : "no") << "\n";
      } else {
        Json r = record();
        r["chart"] = name;
        r["class"] = cls.to_string();
        r["zero"] = zero;
        emit(std::move(r));
      }
    }
    return kSuccess;
  }

  int cycle_check() {
    bool all = true;
    for (const auto& name : chart_names()) {
      const auto report = deformation::cycle_check(scene(), name);
      all = all && report.overall;
      if (!json()) {
        if (opts_.chart.empty() && scene().charts().size() > 1) out_ << "chart: " << name << "\n";
        out_ << report.to_text();
      } else {
        for (const auto& d : report.directions) {
          Json r = record();
          r["chart"] = name;
          r["direction"] = d.index;
          r["class"] = d.gamma.to_string();
          r["verdict"] = d.zero ? "ZERO" : "NONZERO";
          emit(std::move(r));
        }
        Json r = record();
        r["chart"] = name;
        r["class"] = report.cls.to_string();
        r["verdict"] = report.overall ? "PASS" : "FAIL";
        emit(std::move(r));
      }
    }
    return all ? kSuccess : kCheckFailed;
  }

  int cech() {
    const auto report = deformation::cech_transitions(scene());
    if (!json()) {
      out_ << report.to_text();
    } else {
      for (const auto& t : report.transitions) {
        Json r = record();
        r["overlap"] = t.overlap;
        r["source"] = t.source;
        r["target"] = t.target;
        r["class"] = t.unit ? t.unit->to_string() : "";
        r["verdict"] = t.unit ? "UNIT" : "NOT_GLUED";
        emit(std::move(r));
      }
      for (const auto* group : {&report.inverse_pairs, &report.triples}) {
        for (const auto& c : *group) {
          Json r = record();
          r["overlap"] = c.overlap;
          r["check"] = group == &report.triples ? "cocycle" : "inverse";
          r["verdict"] = c.holds ? "PASS" : "FAIL";
          emit(std::move(r));
        }
      }
      Json r = record();
      r["verdict"] = report.valid() ? "PASS" : "FAIL";
      emit(std::move(r));
    }
    return report.valid() ? kSuccess : kCheckFailed;
  }

  int functorial() {
    const std::string chart = single_chart();
    const auto phi = deformation::ArtinMorphism::truncation(scene().context(), opts_.target_order);
    const auto result = deformation::functoriality_check(scene(), phi, chart);
    if (!json()) {
      out_ << "pushed first: " << result.pushed_first.to_string() << "\n";
      out_ << "class first: " << result.class_first.to_string() << "\n";
      out_ << "functorial: " << (result.commutes ? "PASS" : "FAIL") << "\n";
    } else {
      Json r = record();
      r["chart"] = chart;
      r["class"] = result.pushed_first.to_string();
      r["pushed_class"] = result.class_first.to_string();
      r["verdict"] = result.commutes ? "PASS" : "FAIL";
      emit(std::move(r));
    }
    return result.commutes ? kSuccess : kCheckFailed;
  }

  int oracle_membership() {
    auto elems = sequence();
    if (elems.size() < 2) throw InvalidInput("oracle-membership needs an element and at least one generator");
    const RingElem target = elems.front();
    const std::vector<RingElem> gens(elems.begin() + 1, elems.end());
    unsigned bound = opts_.degree_bound;
    if (bound == 0) bound = opts_.scene_path.empty() ? 8 : scene().options().degree_bound;
    const bool by_basis = arith::ideal_membership(target, gens);
    const bool by_span = arith::bounded_membership(target, gens, bound);
    const bool agree = by_basis == by_span;
    auto word = [](bool in) { return in ? "member" : "non-member"; };
    if (!json()) {
      out_ << "groebner: " << word(by_basis) << "\n";
      out_ << "linear-algebra (degree <= " << bound << "): " << word(by_span) << "\n";
      out_ << "agree: " << (agree ? "yes" : "no") << "\n";
    } else {
      Json r = record();
      r["class"] = target.to_string();
      r["groebner"] = by_basis;
      r["linear_algebra"] = by_span;
      r["degree_bound"] = bound;
      r["verdict"] = agree ? "AGREE" : "DISAGREE";
      emit(std::move(r));
    }
    return agree ? kSuccess : kCheckFailed;
  }

  std::string command_;
  const Options& opts_;
  std::ostream& out_;
  std::optional<Scene> scene_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinant-functor and deformation-cycle checks", "detcycle"};
  app.require_subcommand(1);
  Options opts;

  struct CommandInfo {
    const char* name;
    const char* help;
    bool scene;
    bool chart;
    bool polys;
  };
  const CommandInfo commands[] = {
      {"check-axioms", "Randomized determinant-functor axiom suite", false, false, false},
      {"koszul", "Koszul complex of a sequence", true, false, true},
      {"det", "Determinant line of a Koszul complex or of a chart presentation", true, true, true},
      {"alpha", "Presentation of the structure sheaf of a chart's deformed divisor", true, true, false},
      {"map-p", "Local-cohomology class of a chart's lifting", true, true, false},
      {"cycle-check", "Boundary of the class along each codimension-two direction", true, true, false},
      {"cech", "Transition units between chart liftings", true, false, false},
      {"functorial", "Compatibility with a truncation of the artinian base", true, true, false},
      {"oracle-membership", "Groebner versus linear-algebra ideal membership", true, false, true},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json-lines"}));
    if (s.scene) sub->add_option("--scene", opts.scene_path, "Scene file");
    if (s.chart) sub->add_option("--chart", opts.chart, "Chart name");
    if (s.polys) {
      sub->add_option("polys", opts.polys, "Polynomials");
      sub->add_option("--vars", opts.variables, "Comma-separated variables when no scene is given");
      sub->add_option("--artin-order", opts.artin_order, "Truncation order of k[e] without a scene")
          ->check(CLI::Range(1u, 64u));
    }
    if (std::string(s.name) == "check-axioms") {
      sub->add_option("--seed", opts.seed, "Random seed");
      sub->add_option("--cases", opts.cases, "Cases per axiom")->check(CLI::PositiveNumber);
    }
    if (std::string(s.name) == "cycle-check" || std::string(s.name) == "map-p") {
      sub->add_option("--seed", opts.seed, "Unused; accepted for uniformity");
    }
    if (std::string(s.name) == "oracle-membership") {
      sub->add_option("--degree-bound", opts.degree_bound, "Degree bound of the linear-algebra oracle")
          ->check(CLI::Range(1u, 64u));
    }
    if (std::string(s.name) == "functorial") {
      sub->add_option("--target-order", opts.target_order, "Truncation order of the target base")
          ->check(CLI::Range(1u, 64u));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Session(command, opts, out).dispatch();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace detcycle::cli
