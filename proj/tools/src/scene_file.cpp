#include "detcycle/cli/scene_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include "detcycle/arith/parser.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::cli {

namespace {

using deformation::Chart;
using deformation::Overlap;
using deformation::Scene;
using deformation::SceneOptions;

using Value = std::variant<std::string, std::uint64_t, std::vector<std::string>>;

struct Entry {
  Value value;
  std::size_t line;
};

struct Table {
  std::vector<std::string> path;
  std::size_t line;
  std::map<std::string, Entry> entries;
  std::vector<std::string> order;
};

class Reader {
 public:
  Reader(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  std::vector<Table> read() {
    std::vector<Table> tables;
    while (skip_blank(), !at_end()) {
      const char c = peek();
      if (c == '[') {
        tables.push_back(read_header());
      } else {
        if (tables.empty()) fail("key outside of any table");
        read_entry(tables.back());
      }
    }
    return tables;
  }

  [[noreturn]] void fail(const std::string& what, std::optional<std::size_t> line = std::nullopt) const {
    const std::string key = key_.empty() ? "" : key_ + ": ";
    throw ParseError(origin_ + ":" + std::to_string(line.value_or(line_)) + ": " + key + what, pos_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  // Skips whitespace, newlines and comments.
  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void skip_inline() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }

  void end_of_line() {
    skip_inline();
    if (!at_end() && peek() == '#') {
      while (!at_end() && peek() != '\n') advance();
    }
    if (!at_end() && peek() != '\n') fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string bare_word() {
    std::string out;
    while (!at_end()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        out.push_back(c);
        advance();
      } else {
        break;
      }
    }
    if (out.empty()) fail("expected a name");
    return out;
  }

  Table read_header() {
    Table t{{}, line_, {}, {}};
    advance();
    skip_inline();
    t.path.push_back(bare_word());
    skip_inline();
    while (!at_end() && peek() == '.') {
      advance();
      skip_inline();
      t.path.push_back(bare_word());
      skip_inline();
    }
    if (at_end() || peek() != ']') fail("expected ']' closing the table header");
    advance();
    end_of_line();
    return t;
  }

  std::string quoted() {
    if (at_end() || peek() != '"') fail("expected a double-quoted string");
    advance();
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = peek();
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated escape");
        c = peek();
        advance();
        if (c != '"' && c != '\\') fail(std::string("unsupported escape '\\") + c + "'");
      }
      out.push_back(c);
    }
    return out;
  }

  Value value() {
    if (at_end()) fail("missing value");
    const char c = peek();
    if (c == '"') return quoted();
    if (c == '[') {
      advance();
      std::vector<std::string> items;
      skip_blank();
      while (!at_end() && peek() != ']') {
        items.push_back(quoted());
        skip_blank();
        if (!at_end() && peek() == ',') {
          advance();
          skip_blank();
        } else if (!at_end() && peek() != ']') {
          fail("expected ',' or ']' in array");
        }
      }
      if (at_end()) fail("unterminated array");
      advance();
      return items;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(peek());
        advance();
      }
      try {
        return static_cast<std::uint64_t>(std::stoull(digits));
      } catch (const std::out_of_range&) {
        fail("integer out of range");
      }
    }
    fail(std::string("unsupported value starting with '") + c + "'");
  }

  void read_entry(Table& t) {
    const std::size_t line = line_;
    std::string key = bare_word();
    key_ = key;
    skip_inline();
    if (at_end() || peek() != '=') fail("expected '='");
    advance();
    skip_inline();
    Value v = value();
    end_of_line();
    if (t.entries.count(key)) fail("duplicate key", line);
    t.order.push_back(key);
    t.entries.emplace(key, Entry{std::move(v), line});
    key_.clear();
  }

  std::string_view text_;
  std::string origin_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::string key_;
};

class SceneBuilder {
 public:
  explicit SceneBuilder(std::string origin) : origin_(std::move(origin)) {}

  Scene build(const std::vector<Table>& tables) {
    const Table* ring = nullptr;
    const Table* artin = nullptr;
    const Table* options = nullptr;
    std::vector<const Table*> charts;
    std::vector<const Table*> overlaps;
    std::set<std::string> seen;
    for (const auto& t : tables) {
      std::string joined;
      for (const auto& p : t.path) joined += (joined.empty() ? "" : ".") + p;
      if (!seen.insert(joined).second) fail(t.line, "[" + joined + "]", "duplicate table");
      const std::string& head = t.path.front();
      if (head == "ring" && t.path.size() == 1) ring = &t;
      else if (head == "artinian" && t.path.size() == 1) artin = &t;
      else if (head == "options" && t.path.size() == 1) options = &t;
      else if (head == "chart" && t.path.size() == 2) charts.push_back(&t);
      else if (head == "overlap" && (t.path.size() == 3 || t.path.size() == 4)) overlaps.push_back(&t);
      else fail(t.line, "[" + joined + "]", "unknown table");
    }
    if (!ring) fail(1, "[ring]", "missing table");

    allow_keys(*ring, {"variables"});
    std::vector<std::string> variables = strings(*ring, "variables");

    arith::ArtinAlgebra algebra = arith::ArtinAlgebra::field();
    if (artin) {
      allow_keys(*artin, {"generators", "order"});
      algebra.generators = strings(*artin, "generators");
      const std::uint64_t order = integer(*artin, "order");
      if (order < 1 || order > 64) fail(line_of(*artin, "order"), "order", "must be between 1 and 64");
      algebra.truncation_order = static_cast<unsigned>(order);
    }

    SceneOptions opts;
    arith::MonomialOrder mono = arith::MonomialOrder::kLex;
    if (options) {
      allow_keys(*options, {"monomial_order", "degree_bound", "seed"});
      if (options->entries.count("monomial_order")) {
        const std::string name = string(*options, "monomial_order");
        auto parsed = arith::parse_monomial_order(name);
        if (!parsed) fail(line_of(*options, "monomial_order"), "monomial_order", "unknown order " + name);
        mono = *parsed;
      }
      if (options->entries.count("degree_bound")) {
        const std::uint64_t bound = integer(*options, "degree_bound");
        if (bound > 64) fail(line_of(*options, "degree_bound"), "degree_bound", "must be at most 64");
        opts.degree_bound = static_cast<unsigned>(bound);
      }
      if (options->entries.count("seed")) opts.seed = integer(*options, "seed");
    }

    try {
      ctx_ = arith::RingContext::make(variables, algebra, mono);
    } catch (const Error& e) {
      fail(ring->line, "[ring]", e.what());
    }

    std::vector<Chart> chart_values;
    for (const Table* t : charts) {
      allow_keys(*t, {"parameters", "lifting"});
      Chart c{t->path[1], {}, RingElem(ctx_)};
      for (const auto& s : strings(*t, "parameters")) c.parameters.push_back(poly(*t, "parameters", s));
      c.lifting = poly(*t, "lifting", string(*t, "lifting"));
      chart_values.push_back(std::move(c));
    }
    std::vector<Overlap> overlap_values;
    for (const Table* t : overlaps) {
      allow_keys(*t, {"inverted"});
      Overlap o{{t->path.begin() + 1, t->path.end()}, {}};
      if (t->entries.count("inverted")) {
        for (const auto& s : strings(*t, "inverted")) o.inverted.push_back(poly(*t, "inverted", s));
      }
      overlap_values.push_back(std::move(o));
    }
    try {
      return Scene::make(ctx_, std::move(chart_values), std::move(overlap_values), opts);
    } catch (const InvalidInput& e) {
      throw InvalidInput(origin_ + ": " + e.what());
    }
  }

 private:
  using RingElem = arith::RingElem;

  [[noreturn]] void fail(std::size_t line, const std::string& key, const std::string& what) const {
    throw ParseError(origin_ + ":" + std::to_string(line) + ": " + key + ": " + what, 0);
  }

  std::size_t line_of(const Table& t, const std::string& key) const { return t.entries.at(key).line; }

  void allow_keys(const Table& t, std::initializer_list<const char*> keys) const {
    for (const auto& k : t.order) {
      bool ok = false;
      for (const char* allowed : keys) ok = ok || k == allowed;
      if (!ok) fail(t.entries.at(k).line, k, "unknown key");
    }
  }

  const Entry& entry(const Table& t, const std::string& key) const {
    auto it = t.entries.find(key);
    if (it == t.entries.end()) fail(t.line, key, "missing key");
    return it->second;
  }

  std::vector<std::string> strings(const Table& t, const std::string& key) const {
    const Entry& e = entry(t, key);
    if (auto* v = std::get_if<std::vector<std::string>>(&e.value)) return *v;
    fail(e.line, key, "expected an array of strings");
  }

  std::string string(const Table& t, const std::string& key) const {
    const Entry& e = entry(t, key);
    if (auto* v = std::get_if<std::string>(&e.value)) return *v;
    fail(e.line, key, "expected a string");
  }

  std::uint64_t integer(const Table& t, const std::string& key) const {
    const Entry& e = entry(t, key);
    if (auto* v = std::get_if<std::uint64_t>(&e.value)) return *v;
    fail(e.line, key, "expected an integer");
  }

  RingElem poly(const Table& t, const std::string& key, const std::string& text) const {
    try {
      return arith::parse_poly(text, ctx_);
    } catch (const ParseError& e) {
      fail(line_of(t, key), key, "\"" + text + "\": " + e.what());
    }
  }

  std::string origin_;
  arith::RingPtr ctx_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string string_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + quote(items[i]);
  return out + "]";
}

std::vector<std::string> rendered(const std::vector<arith::RingElem>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(e.to_string());
  return out;
}

}  // namespace

Scene parse_scene(std::string_view text, const std::string& origin) {
  Reader reader(text, origin);
  return SceneBuilder(origin).build(reader.read());
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open scene file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str(), path.string());
}

std::string render_scene(const Scene& scene) {
  const auto& ctx = *scene.context();
  std::ostringstream os;
  os << "[ring]\nvariables = " << string_array(ctx.variables()) << "\n";
  if (!ctx.artin().generators.empty()) {
    os << "\n[artinian]\ngenerators = " << string_array(ctx.artin().generators) << "\norder = "
       << ctx.truncation_order() << "\n";
  }
  os << "\n[options]\nmonomial_order = " << quote(std::string(arith::to_string(ctx.order())))
     << "\ndegree_bound = " << scene.options().degree_bound << "\nseed = " << scene.options().seed << "\n";
  for (const auto& c : scene.charts()) {
    os << "\n[chart." << c.name << "]\nparameters = " << string_array(rendered(c.parameters))
       << "\nlifting = " << quote(c.lifting.to_string()) << "\n";
  }
  for (const auto& o : scene.overlaps()) {
    os << "\n[overlap." << o.name() << "]\ninverted = " << string_array(rendered(o.inverted)) << "\n";
  }
  return os.str();
}

}  // namespace detcycle::cli
