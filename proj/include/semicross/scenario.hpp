#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "semicross/covariant.hpp"
#include "semicross/crossed_product.hpp"
#include "semicross/partial_bijection.hpp"
#include "semicross/semigroup_action.hpp"

namespace semicross {

/// Line-oriented structured text: named definition blocks followed by verify
/// directives. Complex matrix entries are written as re,im pairs in decimal,
/// two numbers per entry, e.g. a 2x2 identity is [[1,0, 0,0],[0,0, 1,0]].
namespace scenario_detail {

struct Value {
  enum class Kind { Number, String, Ident, List, Map };
  Kind kind = Kind::Number;
  double num = 0;
  std::string text;                                  // String and Ident
  std::vector<Value> list;                           // List
  std::vector<std::pair<std::string, Value>> map;    // Map, insertion order
  int line = 0;

  const Value* find(const std::string& key) const {
    for (const auto& [k, v] : map)
      if (k == key) return &v;
    return nullptr;
  }
};

struct Token {
  enum class Kind { Ident, Number, String, Punct, End };
  Kind kind;
  std::string text;
  double num = 0;
  int line = 0;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (c == '"') {
      std::size_t j = src.find('"', i + 1);
      if (j == std::string::npos)
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": unterminated string");
      out.push_back({Token::Kind::String, src.substr(i + 1, j - i - 1), 0,
                     line});
      i = j + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               ((c == '-' || c == '+') && i + 1 < src.size() &&
                (std::isdigit(static_cast<unsigned char>(src[i + 1])) ||
                 src[i + 1] == '.')) ||
               c == '.') {
      char* end = nullptr;
      double v = std::strtod(src.c_str() + i, &end);
      std::size_t len = end - (src.c_str() + i);
      out.push_back({Token::Kind::Number,
                     src.substr(i, len), v, line});
      i += len;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '.'))
        ++j;
      out.push_back({Token::Kind::Ident, src.substr(i, j - i), 0, line});
      i = j;
    } else if (std::string("{}[]=:;,").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), 0, line});
      ++i;
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                             ": unexpected character '" +
                                             std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", 0, line});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(peek().line) + ": " + msg);
  }

  bool accept_punct(const std::string& p) {
    if (peek().kind == Token::Kind::Punct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(const std::string& p) {
    if (!accept_punct(p)) fail("expected '" + p + "'");
  }

  Value parse_value() {
    Value v;
    v.line = peek().line;
    if (peek().kind == Token::Kind::Number) {
      v.kind = Value::Kind::Number;
      v.num = next().num;
    } else if (peek().kind == Token::Kind::String) {
      v.kind = Value::Kind::String;
      v.text = next().text;
    } else if (peek().kind == Token::Kind::Ident) {
      v.kind = Value::Kind::Ident;
      v.text = next().text;
    } else if (accept_punct("[")) {
      v.kind = Value::Kind::List;
      if (!accept_punct("]")) {
        for (;;) {
          v.list.push_back(parse_value());
          if (accept_punct("]")) break;
          expect_punct(",");
        }
      }
    } else if (accept_punct("{")) {
      v.kind = Value::Kind::Map;
      for (;;) {
        while (accept_punct(";") || accept_punct(",")) {
        }
        if (accept_punct("}")) break;
        if (peek().kind != Token::Kind::Ident &&
            peek().kind != Token::Kind::Number &&
            peek().kind != Token::Kind::String)
          fail("expected map key");
        std::string key = next().text;
        expect_punct(":");
        v.map.emplace_back(std::move(key), parse_value());
      }
    } else {
      fail("expected a value");
    }
    return v;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct Block {
  std::string type;
  std::string name;
  std::vector<std::pair<std::string, Value>> entries;
  int line = 0;

  const Value* find(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }

  const Value& get(const std::string& key) const {
    const Value* v = find(key);
    if (!v)
      throw Error(ErrorKind::ParseError, "block '" + name + "' (line " +
                                             std::to_string(line) +
                                             ") is missing '" + key + "'");
    return *v;
  }
};

inline std::vector<Block> parse_blocks(const std::string& src) {
  Parser p(tokenize(src));
  std::vector<Block> out;
  while (p.peek().kind != Token::Kind::End) {
    if (p.peek().kind != Token::Kind::Ident)
      p.fail("expected a block type");
    Block b;
    b.line = p.peek().line;
    b.type = p.next().text;
    if (p.peek().kind == Token::Kind::Ident) b.name = p.next().text;
    p.expect_punct("{");
    for (;;) {
      while (p.accept_punct(";")) {
      }
      if (p.accept_punct("}")) break;
      if (p.peek().kind != Token::Kind::Ident) p.fail("expected a key");
      std::string key = p.next().text;
      p.expect_punct("=");
      b.entries.emplace_back(std::move(key), p.parse_value());
    }
    out.push_back(std::move(b));
  }
  return out;
}

inline long long as_int(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Number)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(v.line) +
                                           ": " + what + " must be a number");
  return static_cast<long long>(std::llround(v.num));
}

inline std::vector<int> as_int_list(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::List)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(v.line) +
                                           ": " + what + " must be a list");
  std::vector<int> out;
  for (const auto& e : v.list)
    out.push_back(static_cast<int>(as_int(e, what)));
  return out;
}

inline std::vector<std::vector<int>> as_table(const Value& v,
                                              const std::string& what) {
  if (v.kind != Value::Kind::List)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(v.line) +
                                           ": " + what + " must be a table");
  std::vector<std::vector<int>> out;
  for (const auto& row : v.list) out.push_back(as_int_list(row, what));
  return out;
}

/// Rows of re,im pairs.
inline Matrix as_matrix(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::List || v.list.empty())
    throw Error(ErrorKind::ParseError, "line " + std::to_string(v.line) +
                                           ": " + what +
                                           " must be a nonempty matrix");
  const std::size_t rows = v.list.size();
  Matrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    const Value& row = v.list[r];
    if (row.kind != Value::Kind::List || row.list.size() % 2 != 0)
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(row.line) + ": " + what +
                      " rows need an even count of re,im numbers");
    const std::size_t cols = row.list.size() / 2;
    if (r == 0) m = Matrix::Zero(rows, cols);
    if (static_cast<std::size_t>(m.cols()) != cols)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(row.line) +
                                             ": ragged matrix in " + what);
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Complex(row.list[2 * c].num, row.list[2 * c + 1].num);
  }
  return m;
}

/// Block indices are 1-based in scenario text.
inline std::vector<int> as_blocks(const Value& v, const std::string& what) {
  std::vector<int> out = as_int_list(v, what);
  for (int& b : out) --b;
  return out;
}

}  // namespace scenario_detail

struct ScenarioCovrep {
  std::variant<PartialCovariantRep, SemigroupCovariantRep> rep;
  bool faithful = false;

  bool is_partial() const {
    return std::holds_alternative<PartialCovariantRep>(rep);
  }
  const PartialCovariantRep& partial() const {
    return std::get<PartialCovariantRep>(rep);
  }
  const SemigroupCovariantRep& semigroup() const {
    return std::get<SemigroupCovariantRep>(rep);
  }
};

struct ScenarioLElement {
  std::string action;  // semigroup action name
  LElement value;
};

struct Directive {
  std::string name;
  std::string theorem;
  scenario_detail::Block block;
};

struct Scenario {
  Config config;
  std::map<std::string, FiniteInverseSemigroup> semigroups;
  std::map<std::string, BlockAlgebra> algebras;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, PartialAutomorphism> pautos;
  std::map<std::string, GroupOracle> groups;
  std::map<std::string, PartialAction> partial_actions;
  std::map<std::string, SemigroupAction> semigroup_actions;
  std::map<std::string, HilbertRep> reps;
  std::map<std::string, std::map<long long, Matrix>> families;
  std::map<std::string, Element> elements;
  std::map<std::string, ScenarioLElement> lelements;
  std::map<std::string, std::pair<std::string, bool>> crossed;  // covrep, faithful
  std::map<std::string, ScenarioCovrep> covreps;
  std::vector<Directive> directives;

  template <class M>
  static const typename M::mapped_type& lookup(const M& m,
                                               const std::string& name,
                                               const std::string& what) {
    auto it = m.find(name);
    if (it == m.end())
      throw Error(ErrorKind::UnresolvedReference, what + " '" + name + "'");
    return it->second;
  }
};

inline Scenario parse_scenario(const std::string& text) {
  using namespace scenario_detail;
  Scenario sc;
  auto blocks = parse_blocks(text);

  auto need_name = [](const Block& b) {
    if (b.name.empty())
      throw Error(ErrorKind::ParseError, "line " + std::to_string(b.line) +
                                             ": '" + b.type +
                                             "' block needs a name");
  };

  int directive_count = 0;
  for (const auto& b : blocks) {
    if (b.type == "config") {
      if (const Value* v = b.find("tol")) sc.config.tol = v->num;
      if (const Value* v = b.find("drop_tol")) sc.config.span_drop_tol = v->num;
      if (const Value* v = b.find("seed"))
        sc.config.seed = static_cast<std::uint64_t>(v->num);
      if (const Value* v = b.find("bound"))
        sc.config.closure_bound = static_cast<int>(v->num);
      if (const Value* v = b.find("mode"))
        sc.config.mode = v->text == "lax" ? ValidationMode::Lax
                                          : ValidationMode::Strict;
      if (sc.config.tol <= 0 || sc.config.closure_bound <= 0 ||
          sc.config.span_drop_tol <= 0)
        throw Error(ErrorKind::ParseError, "config values must be positive");
    } else if (b.type == "semigroup") {
      need_name(b);
      if (const Value* kind = b.find("kind")) {
        if (kind->text == "sim") {
          const int m = static_cast<int>(as_int(b.get("points"), "points"));
          sc.semigroups[b.name] = symmetric_inverse_monoid(m).table;
        } else {
          throw Error(ErrorKind::ParseError, "unknown semigroup kind");
        }
      } else {
        auto table = as_table(b.get("mul"), "mul");
        if (const Value* n = b.find("n"))
          if (as_int(*n, "n") != static_cast<long long>(table.size()))
            throw Error(ErrorKind::ParseError,
                        "declared n disagrees with the table size");
        sc.semigroups[b.name] = verify_inverse_semigroup(table);
      }
    } else if (b.type == "algebra") {
      need_name(b);
      sc.algebras[b.name] = BlockAlgebra(as_int_list(b.get("blocks"), "blocks"));
    } else if (b.type == "ideal") {
      need_name(b);
      const auto& alg = Scenario::lookup(sc.algebras,
                                          b.get("algebra").text, "algebra");
      sc.ideals[b.name] = Ideal(alg, as_blocks(b.get("blocks"), "blocks"));
    } else if (b.type == "pauto") {
      need_name(b);
      const Ideal& dom = Scenario::lookup(sc.ideals, b.get("dom").text, "ideal");
      const Ideal& cod = Scenario::lookup(sc.ideals, b.get("cod").text, "ideal");
      std::map<int, int> bm;
      for (const auto& [k, v] : b.get("map").map)
        bm[std::stoi(k) - 1] = static_cast<int>(as_int(v, "map")) - 1;
      std::map<int, Matrix> us;
      for (const auto& [k, v] : b.get("unitaries").map)
        us[std::stoi(k) - 1] = as_matrix(v, "unitary");
      sc.pautos[b.name] =
          PartialAutomorphism(dom, cod, std::move(bm), std::move(us),
                              sc.config.tol);
    } else if (b.type == "group") {
      need_name(b);
      const Value& kind = b.get("kind");
      if (kind.text == "table")
        sc.groups[b.name] = GroupOracle::from_table(as_table(b.get("mul"),
                                                             "mul"));
      else
        sc.groups[b.name] = GroupOracle::by_name(kind.text);
    } else if (b.type == "partial_action") {
      need_name(b);
      const auto& group = Scenario::lookup(sc.groups, b.get("group").text,
                                           "group");
      const auto& alg = Scenario::lookup(sc.algebras, b.get("algebra").text,
                                         "algebra");
      std::map<GroupOracle::Elem, Ideal> ideals;
      if (const Value* d = b.find("D"))
        for (const auto& [k, v] : d->map)
          ideals.emplace(std::stoll(k), Ideal(alg, as_blocks(v, "D")));
      std::map<GroupOracle::Elem, PartialAutomorphism> maps;
      if (const Value* al = b.find("alpha"))
        for (const auto& [k, v] : al->map)
          maps.emplace(std::stoll(k),
                       Scenario::lookup(sc.pautos, v.text, "pauto"));
      for (const auto& [g, m] : maps)
        if (ideals.find(g) == ideals.end()) ideals.emplace(g, m.cod());
      sc.partial_actions[b.name] =
          make_partial_action(alg, group, std::move(ideals), std::move(maps));
      if (const Value* sup = b.find("support")) {
        auto declared = as_int_list(*sup, "support");
        std::vector<GroupOracle::Elem> want(declared.begin(), declared.end());
        std::sort(want.begin(), want.end());
        if (want != sc.partial_actions[b.name].support)
          throw Error(ErrorKind::ParseError,
                      "declared support disagrees with the ideal data");
      }
    } else if (b.type == "semigroup_action") {
      need_name(b);
      const auto& S = Scenario::lookup(sc.semigroups, b.get("semigroup").text,
                                       "semigroup");
      const auto& alg = Scenario::lookup(sc.algebras, b.get("algebra").text,
                                         "algebra");
      std::vector<Ideal> ideals(S.size(), Ideal::zero(alg));
      for (const auto& [k, v] : b.get("E").map)
        ideals[std::stoi(k)] = Ideal(alg, as_blocks(v, "E"));
      if (const Value* beta = b.find("beta")) {
        SemigroupAction a;
        a.S = S;
        a.algebra = alg;
        a.ideals = std::move(ideals);
        a.maps.resize(S.size());
        for (const auto& [k, v] : beta->map)
          a.maps[std::stoi(k)] = Scenario::lookup(sc.pautos, v.text, "pauto");
        sc.semigroup_actions[b.name] = std::move(a);
      } else {
        sc.semigroup_actions[b.name] =
            make_semilattice_action(S, alg, ideals);
      }
    } else if (b.type == "rep") {
      need_name(b);
      const auto& alg = Scenario::lookup(sc.algebras, b.get("algebra").text,
                                         "algebra");
      sc.reps[b.name] = HilbertRep::from_multiplicities(
          alg, as_int_list(b.get("multiplicity"), "multiplicity"));
    } else if (b.type == "family") {
      need_name(b);
      std::map<long long, Matrix> fam;
      for (const auto& [k, v] : b.entries) fam[std::stoll(k)] =
          as_matrix(v, "family entry");
      sc.families[b.name] = std::move(fam);
    } else if (b.type == "element") {
      need_name(b);
      const auto& alg = Scenario::lookup(sc.algebras, b.get("algebra").text,
                                         "algebra");
      Element e(alg);
      for (const auto& [k, v] : b.get("blocks").map)
        e.block(std::stoi(k) - 1) = as_matrix(v, "element block");
      sc.elements[b.name] = std::move(e);
    } else if (b.type == "lelement") {
      need_name(b);
      const auto& action = Scenario::lookup(
          sc.semigroup_actions, b.get("action").text, "semigroup_action");
      std::map<int, Element> values;
      for (const auto& [k, v] : b.get("values").map)
        values.emplace(std::stoi(k),
                       Scenario::lookup(sc.elements, v.text, "element"));
      sc.lelements[b.name] = {b.get("action").text,
                              make_lelement(action, std::move(values),
                                            sc.config.tol)};
    } else if (b.type == "covrep") {
      need_name(b);
      const std::string action_name = b.get("action").text;
      const auto& rep = Scenario::lookup(sc.reps, b.get("rep").text, "rep");
      const auto& fam = Scenario::lookup(sc.families, b.get("family").text,
                                         "family");
      ValidationMode mode = sc.config.mode;
      if (const Value* m = b.find("mode"))
        mode = m->text == "lax" ? ValidationMode::Lax : ValidationMode::Strict;
      ScenarioCovrep out;
      if (const Value* f = b.find("faithful"))
        out.faithful = f->text == "true";
      if (sc.partial_actions.count(action_name)) {
        std::map<GroupOracle::Elem, Matrix> family(fam.begin(), fam.end());
        out.rep = make_covrep(sc.partial_actions.at(action_name), rep,
                              std::move(family), mode);
      } else if (sc.semigroup_actions.count(action_name)) {
        const auto& action = sc.semigroup_actions.at(action_name);
        SemigroupCovariantRep c;
        c.action = action;
        c.rep = rep;
        c.mode = mode;
        c.family.resize(action.S.size(), Matrix::Zero(rep.dim(), rep.dim()));
        for (const auto& [s, m] : fam) {
          if (s < 0 || s >= action.S.size())
            throw Error(ErrorKind::ParseError, "family index outside S");
          c.family[static_cast<int>(s)] = m;
        }
        out.rep = std::move(c);
      } else {
        throw Error(ErrorKind::UnresolvedReference, "action '" + action_name +
                                                        "'");
      }
      sc.covreps[b.name] = std::move(out);
    } else if (b.type == "crossed") {
      need_name(b);
      const std::string covrep_name = b.get("covrep").text;
      if (!sc.covreps.count(covrep_name))
        throw Error(ErrorKind::UnresolvedReference,
                    "covrep '" + covrep_name + "'");
      bool faithful = false;
      if (const Value* f = b.find("faithful")) faithful = f->text == "true";
      sc.crossed[b.name] = {covrep_name, faithful};
    } else if (b.type == "verify") {
      Directive d;
      d.name = b.name.empty()
                   ? "verify_" + std::to_string(directive_count)
                   : b.name;
      d.theorem = b.get("theorem").text;
      d.block = b;
      sc.directives.push_back(std::move(d));
      ++directive_count;
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(b.line) +
                                             ": unknown block type '" +
                                             b.type + "'");
    }
  }
  return sc;
}

}  // namespace semicross
