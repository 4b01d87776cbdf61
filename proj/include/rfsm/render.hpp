#pragma once

// Plain-text state and block transition tables.
//
// Cells read "(lower,upper)"; a definable set is written as its blocks in
// block-id order joined by "∪", and the empty set as "φ".

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "machine.hpp"
#include "text_format.hpp"

namespace rfsm {

inline std::string format_definable(const ApproximationSpace& space, const DefinableSet& d) {
  space.check(d);
  if (d.empty()) return "φ";
  std::string out;
  d.for_each([&](BlockId b) {
    if (!out.empty()) out += "∪";
    out += "{";
    bool first = true;
    for (auto q : space.block(b)) {
      if (!first) out += ",";
      out += space.name(q);
      first = false;
    }
    out += "}";
  });
  return out;
}

inline std::string format_rough_set(const ApproximationSpace& space, const RoughSet& r) {
  return "(" + format_definable(space, r.lower) + "," + format_definable(space, r.upper) + ")";
}

/// A reference value for one block-table cell.
struct ExpectedCell {
  DefinableSet row;
  SymbolId symbol;
  RoughSet value;
};

/// Lines `cell { <states> } <input> lower { <states> } upper { <states> }`.
inline std::vector<ExpectedCell> parse_expected_cells(std::string_view text, const Machine& m) {
  std::vector<ExpectedCell> out;
  for (const auto& l : tokenize(text)) {
    if (l.tokens[0].text != "cell")
      detail::syntax(l, l.tokens[0].column, "expected 'cell', found '" + l.tokens[0].text + "'");
    std::vector<Token> row, lower, upper;
    auto i = detail::read_braced(l, 0, "cell", row);
    if (i >= l.tokens.size()) detail::syntax(l, detail::end_column(l), "expected an input");
    const auto& sym = l.tokens[i];
    auto a = m.alphabet().find(sym.text);
    if (!a) throw ParseError(ErrorKind::unknown_symbol, l.number, sym.column, "unknown input '" + sym.text + "'");
    i = detail::read_braced(l, i + 1, "lower", lower);
    i = detail::read_braced(l, i, "upper", upper);
    if (i != l.tokens.size()) detail::syntax(l, l.tokens[i].column, "trailing tokens");
    const auto& s = m.space();
    out.push_back({detail::definable_from(s, row, l.number), *a,
                   {detail::definable_from(s, lower, l.number), detail::definable_from(s, upper, l.number)}});
  }
  return out;
}

/// Rows of the block table: every definable set occurring as a lower or
/// upper part of a table entry that consists of two or more blocks and is
/// not the whole state set, ordered by block ids. With `all`, every
/// non-empty definable set.
inline std::vector<DefinableSet> block_table_rows(const Machine& m, bool all = false) {
  const auto& s = m.space();
  std::vector<DefinableSet> rows;
  if (all) {
    std::size_t nb = s.num_blocks();
    // Enumerate subsets in order of their sorted block-id lists.
    std::vector<BlockId> cur;
    auto rec = [&](auto& self, BlockId from) -> void {
      for (BlockId b = from; b < nb; ++b) {
        cur.push_back(b);
        DefinableSet d(nb);
        for (auto x : cur) d.insert(x);
        rows.push_back(d);
        self(self, b + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return rows;
  }
  auto full = s.all_blocks();
  for (const auto& r : m.table()) {
    for (const auto* d : {&r.lower, &r.upper})
      if (d->count() >= 2 && *d != full) rows.push_back(*d);
  }
  std::sort(rows.begin(), rows.end(), [](const DefinableSet& a, const DefinableSet& b) {
    return a.ids() < b.ids();
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

namespace detail {

inline std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

inline std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
  }
  std::string out;
  auto rule = [&] {
    out += "+";
    for (auto w : width) out += std::string(w + 2, '-') + "+";
    out += "\n";
  };
  rule();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "|";
    for (std::size_t c = 0; c < width.size(); ++c) {
      std::string cell = c < rows[i].size() ? rows[i][c] : "";
      out += " " + cell + std::string(width[c] - display_width(cell), ' ') + " |";
    }
    out += "\n";
    if (i == 0) rule();
  }
  rule();
  return out;
}

}  // namespace detail

/// Cell texts of the state table, rows = states, columns = inputs, plus a
/// trailing word column when `word` is given.
inline std::vector<std::vector<std::string>> state_table_cells(const Machine& m,
                                                               const std::optional<Word>& word = std::nullopt) {
  std::vector<std::vector<std::string>> rows;
  for (StateId q = 0; q < m.num_states(); ++q) {
    std::vector<std::string> row;
    for (SymbolId a = 0; a < m.num_symbols(); ++a)
      row.push_back(format_rough_set(m.space(), m.transition(q, a)));
    if (word) row.push_back(format_rough_set(m.space(), word_step(m, q, *word)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_state_table(const Machine& m, const std::optional<Word>& word = std::nullopt) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"Q"};
  for (SymbolId a = 0; a < m.num_symbols(); ++a) head.push_back("δ(q," + m.symbol_name(a) + ")");
  if (word) head.push_back("δ*(q," + format_word(m, *word) + ")");
  grid.push_back(std::move(head));
  auto cells = state_table_cells(m, word);
  for (StateId q = 0; q < m.num_states(); ++q) {
    std::vector<std::string> row{m.state_name(q)};
    row.insert(row.end(), cells[q].begin(), cells[q].end());
    grid.push_back(std::move(row));
  }
  return detail::render_grid(grid);
}

struct BlockTableOptions {
  std::optional<Word> word;
  bool all_rows = false;
  /// Cells that differ from a reference value get a "†" marker and a
  /// footnote giving the reference value.
  std::vector<ExpectedCell> expected;
};

inline std::string render_block_table(const Machine& m, const BlockTableOptions& options = {}) {
  const auto& s = m.space();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"D"};
  for (SymbolId a = 0; a < m.num_symbols(); ++a) head.push_back("δ^D(D," + m.symbol_name(a) + ")");
  if (options.word) head.push_back("δ*D(D," + format_word(m, *options.word) + ")");
  grid.push_back(std::move(head));
  std::vector<std::string> notes;
  for (const auto& d : block_table_rows(m, options.all_rows)) {
    std::vector<std::string> row{format_definable(s, d)};
    for (SymbolId a = 0; a < m.num_symbols(); ++a) {
      auto value = block_step(m, d, a);
      auto cell = format_rough_set(s, value);
      for (const auto& e : options.expected) {
        if (e.row == d && e.symbol == a && e.value != value) {
          cell += "†";
          notes.push_back("† (" + row[0] + ", " + m.symbol_name(a) + "): reference table gives " +
                          format_rough_set(s, e.value) + ", the union over the row's states gives " +
                          format_rough_set(s, value));
        }
      }
      row.push_back(std::move(cell));
    }
    if (options.word) row.push_back(format_rough_set(s, block_word_step(m, d, *options.word)));
    grid.push_back(std::move(row));
  }
  auto out = detail::render_grid(grid);
  for (const auto& n : notes) out += n + "\n";
  return out;
}

}  // namespace rfsm
