#pragma once

// Line-oriented text formats for machines, maps, wirings and bridges.
//
//   machine <name>
//   states <q> ...
//   block <q> ...                 one line per block
//   inputs <a> ...
//   trans <q> <a> lower { <q> ... } upper { <q> ... }
//
// '#' starts a comment. Braces need not be separated from names.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "machine.hpp"
#include "morphism.hpp"
#include "products.hpp"

namespace rfsm {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

/// Splits text into non-empty lines of tokens. Comments are dropped and
/// braces are always tokens of their own.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(start, end - start);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (c == '{' || c == '}') {
        line.tokens.push_back({std::string(1, c), i + 1});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' && raw[j] != '#' &&
             raw[j] != '{' && raw[j] != '}')
        ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

/// A machine file as written, before any name resolution.
struct MachineDocument {
  struct Entry {
    Token state;
    Token symbol;
    std::vector<Token> lower;
    std::vector<Token> upper;
    std::size_t line;
  };

  std::string name;
  std::vector<std::string> states;
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> inputs;
  std::vector<Entry> entries;
};

namespace detail {

[[noreturn]] inline void syntax(const Line& l, std::size_t col, const std::string& msg) {
  throw ParseError(ErrorKind::syntax, l.number, col, msg);
}

inline std::size_t end_column(const Line& l) {
  const auto& t = l.tokens.back();
  return t.column + t.text.size();
}

inline std::vector<std::string> names_after_keyword(const Line& l) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    if (l.tokens[i].text == "{" || l.tokens[i].text == "}")
      syntax(l, l.tokens[i].column, "unexpected brace");
    out.push_back(l.tokens[i].text);
  }
  if (out.empty()) syntax(l, end_column(l), "expected at least one name");
  return out;
}

// Reads `<keyword> { names }` starting at token i; returns the index after it.
inline std::size_t read_braced(const Line& l, std::size_t i, std::string_view keyword,
                               std::vector<Token>& out) {
  if (i >= l.tokens.size()) syntax(l, end_column(l), "expected '" + std::string(keyword) + "'");
  if (l.tokens[i].text != keyword)
    syntax(l, l.tokens[i].column, "expected '" + std::string(keyword) + "', found '" + l.tokens[i].text + "'");
  ++i;
  if (i >= l.tokens.size() || l.tokens[i].text != "{")
    syntax(l, i < l.tokens.size() ? l.tokens[i].column : end_column(l), "expected '{'");
  ++i;
  while (i < l.tokens.size() && l.tokens[i].text != "}") {
    if (l.tokens[i].text == "{") syntax(l, l.tokens[i].column, "nested '{'");
    out.push_back(l.tokens[i]);
    ++i;
  }
  if (i >= l.tokens.size()) syntax(l, end_column(l), "missing '}'");
  return i + 1;
}

}  // namespace detail

inline MachineDocument parse_document(std::string_view text) {
  MachineDocument doc;
  bool seen_machine = false, seen_states = false, seen_inputs = false;
  for (const auto& l : tokenize(text)) {
    const auto& kw = l.tokens[0];
    if (kw.text == "machine") {
      if (seen_machine) detail::syntax(l, kw.column, "second 'machine' line");
      if (l.tokens.size() != 2) detail::syntax(l, kw.column, "expected 'machine <name>'");
      doc.name = l.tokens[1].text;
      seen_machine = true;
    } else if (kw.text == "states") {
      if (seen_states) detail::syntax(l, kw.column, "second 'states' line");
      doc.states = detail::names_after_keyword(l);
      seen_states = true;
    } else if (kw.text == "block") {
      doc.blocks.push_back(detail::names_after_keyword(l));
    } else if (kw.text == "inputs") {
      if (seen_inputs) detail::syntax(l, kw.column, "second 'inputs' line");
      doc.inputs = detail::names_after_keyword(l);
      seen_inputs = true;
    } else if (kw.text == "trans") {
      if (l.tokens.size() < 3) detail::syntax(l, detail::end_column(l), "expected 'trans <state> <input>'");
      MachineDocument::Entry e{l.tokens[1], l.tokens[2], {}, {}, l.number};
      for (const auto* t : {&e.state, &e.symbol})
        if (t->text == "{" || t->text == "}") detail::syntax(l, t->column, "unexpected brace");
      auto i = detail::read_braced(l, 3, "lower", e.lower);
      i = detail::read_braced(l, i, "upper", e.upper);
      if (i != l.tokens.size()) detail::syntax(l, l.tokens[i].column, "trailing tokens");
      doc.entries.push_back(std::move(e));
    } else {
      detail::syntax(l, kw.column, "unknown keyword '" + kw.text + "'");
    }
  }
  if (!seen_machine) throw ParseError(ErrorKind::syntax, 0, 0, "missing 'machine' line");
  if (!seen_states) throw ParseError(ErrorKind::syntax, 0, 0, "missing 'states' line");
  if (!seen_inputs) throw ParseError(ErrorKind::syntax, 0, 0, "missing 'inputs' line");
  return doc;
}

namespace detail {

inline DefinableSet definable_from(const ApproximationSpace& space, const std::vector<Token>& names,
                                   std::size_t line) {
  StateSet a(space.size());
  for (const auto& t : names) {
    auto q = space.states().find(t.text);
    if (!q) throw ParseError(ErrorKind::unknown_state, line, t.column, "no state named '" + t.text + "'");
    a.insert(*q);
  }
  auto r = approximate(space, a);
  if (r.lower != r.upper) {
    std::size_t col = names.empty() ? 0 : names.front().column;
    throw ParseError(ErrorKind::non_definable_entry, line, col,
                     "the listed states are not a union of blocks");
  }
  return r.lower;
}

}  // namespace detail

/// Resolves names and builds a validated machine.
inline Machine to_machine(const MachineDocument& doc) {
  auto space = make_partition(doc.states, doc.blocks);
  NameTable inputs(doc.inputs, ErrorKind::duplicate_symbol);
  std::size_t k = inputs.size();
  std::vector<std::optional<RoughSet>> cells(space.size() * k);
  std::vector<std::string> problems;
  for (const auto& e : doc.entries) {
    auto q = space.states().find(e.state.text);
    if (!q)
      throw ParseError(ErrorKind::unknown_state, e.line, e.state.column,
                       "no state named '" + e.state.text + "'");
    auto a = inputs.find(e.symbol.text);
    if (!a)
      throw ParseError(ErrorKind::unknown_symbol, e.line, e.symbol.column,
                       "no input named '" + e.symbol.text + "'");
    auto& cell = cells[*q * k + *a];
    if (cell) {
      problems.push_back("line " + std::to_string(e.line) + ": duplicate entry for (" + e.state.text +
                         ", " + e.symbol.text + ")");
      continue;
    }
    cell = RoughSet{detail::definable_from(space, e.lower, e.line),
                    detail::definable_from(space, e.upper, e.line)};
  }
  std::vector<std::string> missing;
  for (StateId q = 0; q < space.size(); ++q)
    for (SymbolId a = 0; a < k; ++a)
      if (!cells[q * k + a]) missing.push_back("(" + space.name(q) + ", " + inputs.name(a) + ")");
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : " ") + m;
    problems.push_back("table not total, missing " + list);
  }
  if (!problems.empty()) throw SemanticError(std::move(problems));
  std::vector<RoughSet> table;
  table.reserve(cells.size());
  for (auto& c : cells) table.push_back(std::move(*c));
  return Machine(doc.name, std::move(space), std::move(inputs), std::move(table));
}

inline Machine parse_machine(std::string_view text) { return to_machine(parse_document(text)); }

namespace detail {

inline std::string braced(const Machine& m, const DefinableSet& d) {
  std::string out = "{";
  m.space().members(d).for_each([&](StateId q) { out += " " + m.state_name(q); });
  return out + " }";
}

inline std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

}  // namespace detail

/// Canonical form: states in order, blocks by id, entries by (state, input).
inline std::string serialize_machine(const Machine& m) {
  std::string out = "machine " + m.name() + "\n";
  out += "states" + detail::joined(m.space().states().names()) + "\n";
  for (BlockId b = 0; b < m.space().num_blocks(); ++b) {
    out += "block";
    for (auto q : m.space().block(b)) out += " " + m.state_name(q);
    out += "\n";
  }
  out += "inputs" + detail::joined(m.alphabet().names()) + "\n";
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (SymbolId a = 0; a < m.num_symbols(); ++a) {
      const auto& r = m.transition(q, a);
      out += "trans " + m.state_name(q) + " " + m.symbol_name(a) + " lower " +
             detail::braced(m, r.lower) + " upper " + detail::braced(m, r.upper) + "\n";
    }
  }
  return out;
}

namespace detail {

struct NamePair {
  Token from;
  Token to;
  std::size_t line;
};

inline void read_map_lines(std::string_view text, std::vector<NamePair>& states,
                           std::vector<NamePair>& inputs) {
  for (const auto& l : tokenize(text)) {
    const auto& kw = l.tokens[0];
    if (kw.text != "state" && kw.text != "input")
      syntax(l, kw.column, "expected 'state' or 'input', found '" + kw.text + "'");
    if (l.tokens.size() != 3) syntax(l, kw.column, "expected '" + kw.text + " <from> <to>'");
    (kw.text == "state" ? states : inputs).push_back({l.tokens[1], l.tokens[2], l.number});
  }
}

template <class Lookup>
std::vector<std::size_t> resolve_map(const std::vector<NamePair>& pairs, std::size_t domain_size,
                                     Lookup&& from, Lookup&& to, ErrorKind unknown,
                                     const char* what) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(domain_size, unset);
  for (const auto& p : pairs) {
    auto f = from(p.from.text);
    if (!f) throw ParseError(unknown, p.line, p.from.column, "unknown " + std::string(what) + " '" + p.from.text + "'");
    auto t = to(p.to.text);
    if (!t) throw ParseError(unknown, p.line, p.to.column, "unknown " + std::string(what) + " '" + p.to.text + "'");
    if (map[*f] != unset)
      throw ParseError(ErrorKind::syntax, p.line, p.from.column, "'" + p.from.text + "' is mapped twice");
    map[*f] = *t;
  }
  for (auto v : map)
    if (v == unset) throw Error(ErrorKind::totality, std::string(what) + " map is not total");
  return map;
}

inline auto state_lookup(const Machine& m) {
  return [&m](std::string_view n) { return m.space().states().find(n); };
}

inline auto input_lookup(const Machine& m) {
  return [&m](std::string_view n) { return m.alphabet().find(n); };
}

}  // namespace detail

/// `state <q1> <q2>` and `input <x1> <x2>` lines for f: Q1 -> Q2, g: X1 -> X2.
inline MorphismPair parse_morphism(std::string_view text, const Machine& m1, const Machine& m2) {
  std::vector<detail::NamePair> states, inputs;
  detail::read_map_lines(text, states, inputs);
  MorphismPair p;
  p.state_map = detail::resolve_map(states, m1.num_states(), detail::state_lookup(m1),
                                    detail::state_lookup(m2), ErrorKind::unknown_state, "state");
  p.input_map = detail::resolve_map(inputs, m1.num_symbols(), detail::input_lookup(m1),
                                    detail::input_lookup(m2), ErrorKind::unknown_symbol, "input");
  return p;
}

/// `state <q2> <q1>` lines for eta: Q2 -> Q1 and `input <x1> <x2>` lines
/// for xi: X1 -> X2, where M2 covers M1.
inline CoveringPair parse_covering(std::string_view text, const Machine& m1, const Machine& m2) {
  std::vector<detail::NamePair> states, inputs;
  detail::read_map_lines(text, states, inputs);
  CoveringPair p;
  p.state_map = detail::resolve_map(states, m2.num_states(), detail::state_lookup(m2),
                                    detail::state_lookup(m1), ErrorKind::unknown_state, "state");
  p.input_map = detail::resolve_map(inputs, m1.num_symbols(), detail::input_lookup(m1),
                                    detail::input_lookup(m2), ErrorKind::unknown_symbol, "input");
  return p;
}

inline std::string serialize_covering(const CoveringPair& p, const Machine& m1, const Machine& m2) {
  std::string out;
  for (StateId q2 = 0; q2 < p.state_map.size(); ++q2)
    out += "state " + m2.state_name(q2) + " " + m1.state_name(p.state_map[q2]) + "\n";
  for (SymbolId x1 = 0; x1 < p.input_map.size(); ++x1)
    out += "input " + m1.symbol_name(x1) + " " + m2.symbol_name(p.input_map[x1]) + "\n";
  return out;
}

inline std::string serialize_morphism(const MorphismPair& p, const Machine& m1, const Machine& m2) {
  std::string out;
  for (StateId q = 0; q < p.state_map.size(); ++q)
    out += "state " + m1.state_name(q) + " " + m2.state_name(p.state_map[q]) + "\n";
  for (SymbolId x = 0; x < p.input_map.size(); ++x)
    out += "input " + m1.symbol_name(x) + " " + m2.symbol_name(p.input_map[x]) + "\n";
  return out;
}

/// `<q2> <x2> <x1>` lines defining omega: Q2 x X2 -> X1 for cascade(m1, m2).
inline CascadeWiring parse_wiring(std::string_view text, const Machine& m1, const Machine& m2) {
  constexpr auto unset = static_cast<SymbolId>(-1);
  CascadeWiring w{std::vector<SymbolId>(m2.num_states() * m2.num_symbols(), unset)};
  for (const auto& l : tokenize(text)) {
    if (l.tokens.size() != 3) detail::syntax(l, l.tokens[0].column, "expected '<q2> <x2> <x1>'");
    const auto& [tq, tx2, tx1] = std::tie(l.tokens[0], l.tokens[1], l.tokens[2]);
    auto q2 = m2.space().states().find(tq.text);
    if (!q2) throw ParseError(ErrorKind::unknown_state, l.number, tq.column, "unknown state '" + tq.text + "'");
    auto x2 = m2.alphabet().find(tx2.text);
    if (!x2) throw ParseError(ErrorKind::unknown_symbol, l.number, tx2.column, "unknown input '" + tx2.text + "'");
    auto x1 = m1.alphabet().find(tx1.text);
    if (!x1) throw ParseError(ErrorKind::unknown_symbol, l.number, tx1.column, "unknown input '" + tx1.text + "'");
    auto& slot = w.omega[*q2 * m2.num_symbols() + *x2];
    if (slot != unset) detail::syntax(l, tq.column, "pair defined twice");
    slot = *x1;
  }
  for (auto v : w.omega)
    if (v == unset) throw Error(ErrorKind::wiring_totality, "wiring is not defined on every (state, input) pair");
  return w;
}

/// `<xbar> <x1> <x2>` lines; carrier symbols keep file order.
inline InputBridge parse_bridge(std::string_view text, const Machine& m1, const Machine& m2) {
  InputBridge b;
  for (const auto& l : tokenize(text)) {
    if (l.tokens.size() != 3) detail::syntax(l, l.tokens[0].column, "expected '<symbol> <x1> <x2>'");
    auto x1 = m1.alphabet().find(l.tokens[1].text);
    if (!x1)
      throw ParseError(ErrorKind::unknown_symbol, l.number, l.tokens[1].column,
                       "unknown input '" + l.tokens[1].text + "'");
    auto x2 = m2.alphabet().find(l.tokens[2].text);
    if (!x2)
      throw ParseError(ErrorKind::unknown_symbol, l.number, l.tokens[2].column,
                       "unknown input '" + l.tokens[2].text + "'");
    b.carrier.push_back(l.tokens[0].text);
    b.decode.emplace_back(*x1, *x2);
  }
  // Carrier names must be distinct and valid.
  NameTable check(b.carrier, ErrorKind::duplicate_symbol);
  return b;
}

/// Splits on commas outside parentheses and brackets, so tuple names such
/// as (q1,q2) stay whole.
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

}  // namespace rfsm
