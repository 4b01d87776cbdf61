#pragma once

// Direct (full, restricted, general), wreath and cascade products.
//
// Every product has state set Q1 x Q2 with the product partition, state
// (q1,q2) numbered q1 * |Q2| + q2. An entry built from factor entries
// (L1,U1) and (L2,U2) is (L1 x L2, U1 x U2).

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "machine.hpp"
#include "morphism.hpp"

namespace rfsm {

inline constexpr std::size_t default_wreath_budget = 4096;

/// A total map Q2 -> X1, listed in state order.
struct FunctionSymbol {
  std::vector<SymbolId> outputs;

  SymbolId operator()(StateId q2) const { return outputs.at(q2); }

  bool operator==(const FunctionSymbol&) const = default;
  auto operator<=>(const FunctionSymbol&) const = default;
};

/// Position of f among all maps Q2 -> X1 in lexicographic order (first
/// state most significant).
inline std::size_t function_index(const FunctionSymbol& f, std::size_t x1_count) {
  std::size_t idx = 0;
  for (auto v : f.outputs) idx = idx * x1_count + v;
  return idx;
}

inline FunctionSymbol function_at(std::size_t index, std::size_t q2_count, std::size_t x1_count) {
  FunctionSymbol f{std::vector<SymbolId>(q2_count, 0)};
  for (std::size_t i = q2_count; i-- > 0;) {
    f.outputs[i] = index % x1_count;
    index /= x1_count;
  }
  return f;
}

/// `f[<out1>,<out2>,...]` with outputs in state order.
inline std::string function_name(const FunctionSymbol& f, const Machine& m1) {
  std::string out = "f[";
  for (std::size_t i = 0; i < f.outputs.size(); ++i) {
    if (i) out += ',';
    out += m1.symbol_name(f.outputs[i]);
  }
  return out + "]";
}

/// Symbol id of (f, x2) in the wreath product alphabet.
inline SymbolId wreath_symbol(const Machine& m1, const Machine& m2, const FunctionSymbol& f,
                              SymbolId x2) {
  if (f.outputs.size() != m2.num_states())
    throw Error(ErrorKind::shape_mismatch, "function symbol has the wrong number of outputs");
  return function_index(f, m1.num_symbols()) * m2.num_symbols() + x2;
}

inline std::pair<FunctionSymbol, SymbolId> decode_wreath_symbol(const Machine& m1, const Machine& m2,
                                                               SymbolId s) {
  return {function_at(s / m2.num_symbols(), m2.num_states(), m1.num_symbols()), s % m2.num_symbols()};
}

/// The wreath product alphabet size |X1|^|Q2| * |X2|, saturating.
inline std::size_t wreath_alphabet_size(const Machine& m1, const Machine& m2) {
  return detail::saturating_mul(detail::saturating_pow(m1.num_symbols(), m2.num_states()),
                                m2.num_symbols());
}

/// A carrier set with a decoding map into X1 x X2.
struct InputBridge {
  std::vector<std::string> carrier;
  std::vector<std::pair<SymbolId, SymbolId>> decode;
};

/// omega: Q2 x X2 -> X1, stored at q2 * |X2| + x2.
struct CascadeWiring {
  std::vector<SymbolId> omega;

  SymbolId operator()(const Machine& m2, StateId q2, SymbolId x2) const {
    return omega.at(q2 * m2.num_symbols() + x2);
  }
};

namespace detail {

inline void check_bridge(const Machine& m1, const Machine& m2, const InputBridge& bridge) {
  if (bridge.carrier.empty()) throw Error(ErrorKind::bridge_totality, "bridge carrier is empty");
  if (bridge.decode.size() != bridge.carrier.size())
    throw Error(ErrorKind::bridge_totality, "bridge decodes " + std::to_string(bridge.decode.size()) +
                                                " of " + std::to_string(bridge.carrier.size()) +
                                                " carrier symbols");
  for (const auto& [x1, x2] : bridge.decode)
    if (x1 >= m1.num_symbols() || x2 >= m2.num_symbols())
      throw Error(ErrorKind::bridge_totality, "bridge decodes to an input out of range");
}

inline void check_wiring(const Machine& m1, const Machine& m2, const CascadeWiring& w) {
  if (w.omega.size() != m2.num_states() * m2.num_symbols())
    throw Error(ErrorKind::wiring_totality, "wiring defines " + std::to_string(w.omega.size()) +
                                                " of " +
                                                std::to_string(m2.num_states() * m2.num_symbols()) +
                                                " (state, input) pairs");
  for (auto x1 : w.omega)
    if (x1 >= m1.num_symbols())
      throw Error(ErrorKind::wiring_totality, "wiring produces an input out of range");
}

// Builds a product machine; `pick(symbol)` yields the factor inputs for
// (q1, q2) as a callable returning pair<x1, x2>.
template <class Pick>
Machine assemble(std::string name, const Machine& m1, const Machine& m2,
                 std::vector<std::string> symbols, Pick&& pick) {
  auto space = product_partition(m1.space(), m2.space());
  std::size_t k = symbols.size();
  std::vector<RoughSet> table;
  table.reserve(space.size() * k);
  for (StateId q1 = 0; q1 < m1.num_states(); ++q1) {
    for (StateId q2 = 0; q2 < m2.num_states(); ++q2) {
      for (SymbolId s = 0; s < k; ++s) {
        auto [x1, x2] = pick(q2, s);
        table.push_back(product_rough_set(m1.transition(q1, x1), m2.transition(q2, x2)));
      }
    }
  }
  return Machine::unchecked(std::move(name), std::move(space),
                            NameTable(std::move(symbols), ErrorKind::duplicate_symbol),
                            std::move(table));
}

inline std::string product_name(const char* kind, const Machine& m1, const Machine& m2) {
  return std::string(kind) + "(" + m1.name() + "," + m2.name() + ")";
}

}  // namespace detail

/// M1 x M2 over the alphabet X1 x X2, symbol (x1,x2) numbered x1 * |X2| + x2.
inline Machine full_direct(const Machine& m1, const Machine& m2) {
  std::vector<std::string> symbols;
  for (SymbolId x1 = 0; x1 < m1.num_symbols(); ++x1)
    for (SymbolId x2 = 0; x2 < m2.num_symbols(); ++x2)
      symbols.push_back(pair_name(m1.symbol_name(x1), m2.symbol_name(x2)));
  auto k2 = m2.num_symbols();
  return detail::assemble(detail::product_name("full", m1, m2), m1, m2, std::move(symbols),
                          [k2](StateId, SymbolId s) { return std::pair{s / k2, s % k2}; });
}

/// M1 ^ M2 over the shared alphabet (in M1's order). Both machines must have
/// the same input names.
inline Machine restricted_direct(const Machine& m1, const Machine& m2) {
  if (m1.num_symbols() != m2.num_symbols())
    throw Error(ErrorKind::alphabet_mismatch, "machines have different input alphabets");
  std::vector<SymbolId> to2;
  for (const auto& n : m1.alphabet().names()) {
    auto id = m2.alphabet().find(n);
    if (!id) throw Error(ErrorKind::alphabet_mismatch, "input '" + n + "' missing from " + m2.name());
    to2.push_back(*id);
  }
  return detail::assemble(detail::product_name("restricted", m1, m2), m1, m2,
                          m1.alphabet().names(),
                          [&to2](StateId, SymbolId s) { return std::pair{s, to2[s]}; });
}

/// M1 * M2 over the bridge carrier; symbol x feeds p1(f(x)) to M1 and
/// p2(f(x)) to M2.
inline Machine general_direct(const Machine& m1, const Machine& m2, const InputBridge& bridge) {
  detail::check_bridge(m1, m2, bridge);
  return detail::assemble(detail::product_name("general", m1, m2), m1, m2, bridge.carrier,
                          [&bridge](StateId, SymbolId s) { return bridge.decode[s]; });
}

/// The bridge over X1 x X2 with identity decoding.
inline InputBridge identity_bridge(const Machine& m1, const Machine& m2) {
  InputBridge b;
  for (SymbolId x1 = 0; x1 < m1.num_symbols(); ++x1) {
    for (SymbolId x2 = 0; x2 < m2.num_symbols(); ++x2) {
      b.carrier.push_back(pair_name(m1.symbol_name(x1), m2.symbol_name(x2)));
      b.decode.emplace_back(x1, x2);
    }
  }
  return b;
}

/// The bridge over a shared alphabet X decoding x to (x, x).
inline InputBridge diagonal_bridge(const Machine& m1, const Machine& m2) {
  InputBridge b;
  if (m1.num_symbols() != m2.num_symbols())
    throw Error(ErrorKind::alphabet_mismatch, "machines have different input alphabets");
  for (SymbolId x = 0; x < m1.num_symbols(); ++x) {
    b.carrier.push_back(m1.symbol_name(x));
    b.decode.emplace_back(x, m2.symbol_id(m1.symbol_name(x)));
  }
  return b;
}

/// M1 o M2 over X1^Q2 x X2. Symbols (f, x2) are ordered by f (lexicographic
/// on outputs) then x2 and named `(f[..],x2)`.
inline Machine wreath(const Machine& m1, const Machine& m2,
                      std::size_t budget = default_wreath_budget) {
  auto size = wreath_alphabet_size(m1, m2);
  if (size > budget)
    throw Error(ErrorKind::budget_exceeded, "wreath alphabet would have " + std::to_string(size) +
                                                " symbols, budget is " + std::to_string(budget));
  std::vector<std::string> symbols;
  std::vector<FunctionSymbol> functions;
  symbols.reserve(size);
  std::size_t nf = size / m2.num_symbols();
  functions.reserve(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    functions.push_back(function_at(i, m2.num_states(), m1.num_symbols()));
    for (SymbolId x2 = 0; x2 < m2.num_symbols(); ++x2)
      symbols.push_back(pair_name(function_name(functions.back(), m1), m2.symbol_name(x2)));
  }
  auto k2 = m2.num_symbols();
  return detail::assemble(detail::product_name("wreath", m1, m2), m1, m2, std::move(symbols),
                          [&functions, k2](StateId q2, SymbolId s) {
                            return std::pair{functions[s / k2](q2), s % k2};
                          });
}

/// M1 w M2 over X2; symbol x2 at (q1,q2) feeds omega(q2, x2) to M1.
inline Machine cascade(const Machine& m1, const Machine& m2, const CascadeWiring& w) {
  detail::check_wiring(m1, m2, w);
  return detail::assemble(detail::product_name("cascade", m1, m2), m1, m2, m2.alphabet().names(),
                          [&](StateId q2, SymbolId x2) { return std::pair{w(m2, q2, x2), x2}; });
}

/// The wiring omega(q2, x) = x for machines over one alphabet.
inline CascadeWiring passthrough_wiring(const Machine& m1, const Machine& m2) {
  if (m1.num_symbols() != m2.num_symbols())
    throw Error(ErrorKind::alphabet_mismatch, "machines have different input alphabets");
  CascadeWiring w;
  for (StateId q2 = 0; q2 < m2.num_states(); ++q2)
    for (SymbolId x = 0; x < m2.num_symbols(); ++x)
      w.omega.push_back(m1.symbol_id(m2.symbol_name(x)));
  return w;
}

/// An element of the monoid (X1*)^Q2 x X2* that wreath inputs generate:
/// one X1-word per state of Q2 plus an X2-word.
struct WreathInput {
  std::vector<Word> per_state;
  Word tail;

  bool operator==(const WreathInput&) const = default;
};

inline WreathInput wreath_identity(std::size_t q2_count) {
  return {std::vector<Word>(q2_count), {}};
}

/// The generator (f, x2) as a monoid element.
inline WreathInput wreath_letter(const FunctionSymbol& f, SymbolId x2) {
  WreathInput w;
  for (auto v : f.outputs) w.per_state.push_back({v});
  w.tail = {x2};
  return w;
}

/// (f, s) * (g, t) = (fg, st) with (fg)(q2) = f(q2) g(q2).
inline WreathInput compose_wreath_inputs(const WreathInput& p, const WreathInput& q) {
  if (p.per_state.size() != q.per_state.size())
    throw Error(ErrorKind::shape_mismatch, "wreath inputs range over different state sets");
  WreathInput out = p;
  for (std::size_t i = 0; i < q.per_state.size(); ++i)
    out.per_state[i].insert(out.per_state[i].end(), q.per_state[i].begin(), q.per_state[i].end());
  out.tail.insert(out.tail.end(), q.tail.begin(), q.tail.end());
  return out;
}

}  // namespace rfsm
