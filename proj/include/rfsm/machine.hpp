#pragma once

// Rough finite state machines and their transition semantics.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "name_table.hpp"
#include "rough_set.hpp"

namespace rfsm {

using SymbolId = std::size_t;

/// A word over a machine's alphabet; the empty vector is the empty word.
using Word = std::vector<SymbolId>;

/// One problem found by validate_machine.
struct Violation {
  enum class Kind { space_mismatch, not_contained, unrealizable };

  std::string state;
  std::string symbol;
  Kind kind;
  std::string reason;
};

inline std::string to_string(const Violation& v) {
  return "(" + v.state + ", " + v.symbol + "): " + v.reason;
}

/// Raised when a machine or document fails validation.
class SemanticError : public Error {
 public:
  explicit SemanticError(std::vector<std::string> problems)
      : Error(ErrorKind::semantic, join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

/// A rough finite state machine: an approximation space, an input alphabet
/// and a total table mapping (state, symbol) to a rough set of states.
///
/// The table is stored row-major: entry (q, a) lives at q * |X| + a.
class Machine {
 public:
  /// Validates the table (containment and space consistency) and throws
  /// SemanticError on failure.
  Machine(std::string name, ApproximationSpace space, NameTable alphabet,
          std::vector<RoughSet> table);

  /// Builds a machine with only the shape checked, so that invalid tables
  /// can be inspected with validate_machine.
  static Machine unchecked(std::string name, ApproximationSpace space, NameTable alphabet,
                           std::vector<RoughSet> table) {
    return Machine(Unchecked{}, std::move(name), std::move(space), std::move(alphabet),
                   std::move(table));
  }

  const std::string& name() const noexcept { return name_; }
  const ApproximationSpace& space() const noexcept { return space_; }
  const NameTable& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return space_.size(); }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }
  const std::vector<RoughSet>& table() const noexcept { return table_; }

  const RoughSet& transition(StateId q, SymbolId a) const {
    return table_.at(q * alphabet_.size() + a);
  }

  SymbolId symbol_id(std::string_view name) const {
    auto id = alphabet_.find(name);
    if (!id) throw Error(ErrorKind::unknown_symbol, "no input named '" + std::string(name) + "'");
    return *id;
  }

  const std::string& symbol_name(SymbolId a) const { return alphabet_.name(a); }
  const std::string& state_name(StateId q) const { return space_.name(q); }

  /// Entry-for-entry equality including names and block structure.
  bool operator==(const Machine& other) const {
    return space_ == other.space_ && alphabet_ == other.alphabet_ && table_ == other.table_;
  }

 private:
  struct Unchecked {};

  Machine(Unchecked, std::string name, ApproximationSpace space, NameTable alphabet,
          std::vector<RoughSet> table)
      : name_(std::move(name)),
        space_(std::move(space)),
        alphabet_(std::move(alphabet)),
        table_(std::move(table)) {
    if (!is_valid_name(name_)) throw Error(ErrorKind::invalid_name, "bad machine name '" + name_ + "'");
    if (alphabet_.size() == 0) throw Error(ErrorKind::totality, "input alphabet is empty");
    if (table_.size() != space_.size() * alphabet_.size())
      throw Error(ErrorKind::totality, "table has " + std::to_string(table_.size()) +
                                           " entries, expected " +
                                           std::to_string(space_.size() * alphabet_.size()));
  }

  std::string name_;
  ApproximationSpace space_;
  NameTable alphabet_;
  std::vector<RoughSet> table_;
};

struct ValidationOptions {
  /// Also report entries that are not the approximation of any subset.
  bool require_realizable = false;
};

/// Lists every entry that breaks a machine invariant; empty means valid.
inline std::vector<Violation> validate_machine(const Machine& m, ValidationOptions options = {}) {
  std::vector<Violation> out;
  const auto& space = m.space();
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (SymbolId a = 0; a < m.num_symbols(); ++a) {
      const auto& r = m.transition(q, a);
      auto report = [&](Violation::Kind kind, std::string reason) {
        out.push_back({m.state_name(q), m.symbol_name(a), kind, std::move(reason)});
      };
      if (r.lower.universe() != space.num_blocks() || r.upper.universe() != space.num_blocks()) {
        report(Violation::Kind::space_mismatch, "rough set refers to a different space");
        continue;
      }
      if (!r.lower.is_subset_of(r.upper)) {
        report(Violation::Kind::not_contained, "lower approximation is not inside the upper one");
        continue;
      }
      if (options.require_realizable && !is_realizable(space, r))
        report(Violation::Kind::unrealizable,
               "a single-state block lies in the upper but not the lower approximation");
    }
  }
  return out;
}

/// Entries that are valid pairs but not the approximation of any subset.
inline std::vector<Violation> unrealizable_entries(const Machine& m) {
  std::vector<Violation> out;
  for (auto& v : validate_machine(m, {.require_realizable = true}))
    if (v.kind == Violation::Kind::unrealizable) out.push_back(std::move(v));
  return out;
}

inline Machine::Machine(std::string name, ApproximationSpace space, NameTable alphabet,
                        std::vector<RoughSet> table)
    : Machine(Unchecked{}, std::move(name), std::move(space), std::move(alphabet),
              std::move(table)) {
  auto violations = validate_machine(*this);
  if (!violations.empty()) {
    std::vector<std::string> problems;
    for (const auto& v : violations) problems.push_back(to_string(v));
    throw SemanticError(std::move(problems));
  }
}

namespace detail {

inline void check_symbol(const Machine& m, SymbolId a) {
  if (a >= m.num_symbols())
    throw Error(ErrorKind::unknown_symbol, "symbol id " + std::to_string(a) + " out of range");
}

inline void check_state(const Machine& m, StateId q) {
  if (q >= m.num_states())
    throw Error(ErrorKind::unknown_state, "state id " + std::to_string(q) + " out of range");
}

// Union of the lower (or upper) parts of delta(q, a) over all q in d.
inline DefinableSet step_part(const Machine& m, const DefinableSet& d, SymbolId a, bool upper) {
  auto out = m.space().no_blocks();
  d.for_each([&](BlockId b) {
    for (auto q : m.space().block(b)) {
      const auto& r = m.transition(q, a);
      out |= upper ? r.upper : r.lower;
    }
  });
  return out;
}

}  // namespace detail

/// Block transition: unions delta(q, a) over every state q of every block
/// inside d, componentwise. The empty set steps to (empty, empty).
inline RoughSet block_step(const Machine& m, const DefinableSet& d, SymbolId a) {
  m.space().check(d);
  detail::check_symbol(m, a);
  return {detail::step_part(m, d, a, false), detail::step_part(m, d, a, true)};
}

/// Word extension: the empty word gives ([q], [q]); a word xa steps the
/// lower part of the result for x through the lower side of the block
/// transition, and the upper part through the upper side.
inline RoughSet word_step(const Machine& m, StateId q, const Word& w) {
  detail::check_state(m, q);
  for (auto a : w) detail::check_symbol(m, a);
  auto cur = m.space().block_set_of(q);
  RoughSet r{cur, cur};
  for (auto a : w) {
    r.lower = detail::step_part(m, r.lower, a, false);
    r.upper = detail::step_part(m, r.upper, a, true);
  }
  return r;
}

/// Extended block map: unions word_step(q, w) over every state q in d.
inline RoughSet block_word_step(const Machine& m, const DefinableSet& d, const Word& w) {
  m.space().check(d);
  for (auto a : w) detail::check_symbol(m, a);
  RoughSet out{m.space().no_blocks(), m.space().no_blocks()};
  d.for_each([&](BlockId b) {
    for (auto q : m.space().block(b)) {
      auto r = word_step(m, q, w);
      out.lower |= r.lower;
      out.upper |= r.upper;
    }
  });
  return out;
}

namespace detail {

inline bool tokenize_word(const Machine& m, std::string_view text, Word& out) {
  if (text.empty()) return true;
  // Longest match first, backtracking on failure.
  for (std::size_t len = text.size(); len > 0; --len) {
    auto id = m.alphabet().find(text.substr(0, len));
    if (!id) continue;
    out.push_back(*id);
    if (tokenize_word(m, text.substr(len), out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace detail

/// Reads a word: whitespace-separated symbol names, or, without whitespace,
/// a concatenation of symbol names split by longest match.
inline Word parse_word(const Machine& m, std::string_view text) {
  Word w;
  bool spaced = text.find_first_of(" \t") != std::string_view::npos;
  if (spaced) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
      if (j > i) w.push_back(m.symbol_id(text.substr(i, j - i)));
      i = j;
    }
    return w;
  }
  if (!detail::tokenize_word(m, text, w))
    throw Error(ErrorKind::unknown_symbol, "cannot split '" + std::string(text) + "' into inputs");
  return w;
}

inline std::string format_word(const Machine& m, const Word& w) {
  if (w.empty()) return "e";
  bool single_chars = true;
  for (auto a : w) single_chars = single_chars && m.symbol_name(a).size() == 1;
  std::string out;
  for (auto a : w) {
    if (!single_chars && !out.empty()) out += ' ';
    out += m.symbol_name(a);
  }
  return out;
}

}  // namespace rfsm
