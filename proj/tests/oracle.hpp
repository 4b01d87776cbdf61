#pragma once

// Name-based reference model. Sets are std::set<std::string> of state
// names and every operation follows the definitions literally, without the
// library's block-id encoding.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rfsm/machine.hpp"
#include "rfsm/morphism.hpp"

namespace oracle {

using Names = std::set<std::string>;
using Pair = std::pair<Names, Names>;

struct Model {
  std::vector<std::string> states;
  std::vector<Names> blocks;
  std::vector<std::string> inputs;
  std::map<std::pair<std::string, std::string>, Pair> delta;

  const Names& block_of(const std::string& q) const {
    for (const auto& b : blocks)
      if (b.count(q)) return b;
    throw std::logic_error("state without block");
  }

  const Pair& at(const std::string& q, const std::string& a) const { return delta.at({q, a}); }
};

inline Names unite(const Names& a, const Names& b) {
  Names out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline bool subset(const Names& a, const Names& b) {
  for (const auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

inline Names names_of(const rfsm::Machine& m, const rfsm::DefinableSet& d) {
  Names out;
  m.space().members(d).for_each([&](rfsm::StateId q) { out.insert(m.state_name(q)); });
  return out;
}

inline Pair names_of(const rfsm::Machine& m, const rfsm::RoughSet& r) {
  return {names_of(m, r.lower), names_of(m, r.upper)};
}

/// Reads a library machine through its public accessors only.
inline Model from(const rfsm::Machine& m) {
  Model o;
  o.states = m.space().states().names();
  for (rfsm::BlockId b = 0; b < m.space().num_blocks(); ++b) {
    Names block;
    for (auto q : m.space().block(b)) block.insert(m.state_name(q));
    o.blocks.push_back(block);
  }
  o.inputs = m.alphabet().names();
  for (rfsm::StateId q = 0; q < m.num_states(); ++q)
    for (rfsm::SymbolId a = 0; a < m.num_symbols(); ++a)
      o.delta[{m.state_name(q), m.symbol_name(a)}] = names_of(m, m.transition(q, a));
  return o;
}

inline Pair approximate(const std::vector<Names>& blocks, const Names& a) {
  Pair r;
  for (const auto& b : blocks) {
    bool inside = subset(b, a);
    bool meets = false;
    for (const auto& x : b) meets = meets || a.count(x);
    if (inside) r.first.insert(b.begin(), b.end());
    if (meets) r.second.insert(b.begin(), b.end());
  }
  return r;
}

/// Union of delta(q, a) over every state q of the definable set d.
inline Pair block_step(const Model& m, const Names& d, const std::string& a) {
  Pair r;
  for (const auto& q : d) {
    const auto& e = m.at(q, a);
    r.first = unite(r.first, e.first);
    r.second = unite(r.second, e.second);
  }
  return r;
}

inline Pair word_step(const Model& m, const std::string& q, const std::vector<std::string>& w) {
  Pair r{m.block_of(q), m.block_of(q)};
  for (const auto& a : w) r = {block_step(m, r.first, a).first, block_step(m, r.second, a).second};
  return r;
}

inline Pair block_word_step(const Model& m, const Names& d, const std::vector<std::string>& w) {
  Pair r;
  for (const auto& q : d) {
    auto s = word_step(m, q, w);
    r.first = unite(r.first, s.first);
    r.second = unite(r.second, s.second);
  }
  return r;
}

inline std::vector<std::vector<std::string>> words_up_to(const std::vector<std::string>& inputs,
                                                         std::size_t max_len) {
  std::vector<std::vector<std::string>> out{{}};
  std::vector<std::vector<std::string>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& w : layer)
      for (const auto& a : inputs) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline Names image(const Names& a, const std::map<std::string, std::string>& f) {
  Names out;
  for (const auto& x : a) out.insert(f.at(x));
  return out;
}

/// Covering of m1 by m2 per the definition: eta onto and relation
/// preserving; delta1(eta q2, w) inside eta(delta2(q2, xi w)) for words of
/// length 1..depth (length 1 also on the raw table).
inline bool covers(const Model& m1, const Model& m2, const std::map<std::string, std::string>& eta,
                   const std::map<std::string, std::string>& xi, std::size_t depth) {
  Names hit;
  for (const auto& [q2, q1] : eta) hit.insert(q1);
  if (hit.size() != m1.states.size()) return false;
  for (const auto& p : m2.states)
    for (const auto& q : m2.block_of(p))
      if (!m1.block_of(eta.at(p)).count(eta.at(q))) return false;
  auto contained = [&](const Pair& r1, const Pair& r2) {
    return subset(r1.first, image(r2.first, eta)) && subset(r1.second, image(r2.second, eta));
  };
  for (const auto& q2 : m2.states)
    for (const auto& a : m1.inputs)
      if (!contained(m1.at(eta.at(q2), a), m2.at(q2, xi.at(a)))) return false;
  for (const auto& w : words_up_to(m1.inputs, depth)) {
    if (w.empty()) continue;
    std::vector<std::string> tw;
    for (const auto& a : w) tw.push_back(xi.at(a));
    for (const auto& q2 : m2.states)
      if (!contained(word_step(m1, eta.at(q2), w), word_step(m2, q2, tw))) return false;
  }
  return true;
}

inline std::map<std::string, std::string> state_map(const rfsm::Machine& from, const rfsm::Machine& to,
                                                    const std::vector<std::size_t>& map) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < map.size(); ++i) out[from.state_name(i)] = to.state_name(map[i]);
  return out;
}

inline std::map<std::string, std::string> input_map(const rfsm::Machine& from, const rfsm::Machine& to,
                                                    const std::vector<std::size_t>& map) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < map.size(); ++i) out[from.symbol_name(i)] = to.symbol_name(map[i]);
  return out;
}

inline bool covers(const rfsm::Machine& m1, const rfsm::Machine& m2, const rfsm::CoveringPair& p,
                   std::size_t depth) {
  return covers(from(m1), from(m2), state_map(m2, m1, p.state_map), input_map(m1, m2, p.input_map),
                depth);
}

/// {"(x,y)" : x in a, y in b}.
inline Names pair_names(const Names& a, const Names& b) {
  Names out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert("(" + x + "," + y + ")");
  return out;
}

inline Pair product_entry(const Pair& r1, const Pair& r2) {
  return {pair_names(r1.first, r2.first), pair_names(r1.second, r2.second)};
}

}  // namespace oracle
