#pragma once

// Seeded generators for machines, wirings and covering instances.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "machine.hpp"
#include "morphism.hpp"
#include "products.hpp"

namespace rfsm {

using Rng = std::mt19937_64;

struct MachineShape {
  std::size_t min_states = 1;
  std::size_t max_states = 4;
  std::size_t min_symbols = 1;
  std::size_t max_symbols = 2;
};

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace detail

/// Inputs named a, b, c, ...
inline NameTable letter_alphabet(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return NameTable(std::move(names), ErrorKind::duplicate_symbol);
}

/// States named <prefix>1..<prefix>n in a random partition.
inline ApproximationSpace random_space(Rng& rng, std::size_t n, const std::string& prefix = "q") {
  std::vector<std::string> names;
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(prefix + std::to_string(i + 1));
    labels.push_back(detail::uniform(rng, 0, n - 1));
  }
  return ApproximationSpace::from_labels(std::move(names), labels);
}

/// The approximation of a uniformly random subset, so always realizable.
inline RoughSet random_rough_set(Rng& rng, const ApproximationSpace& space) {
  StateSet a(space.size());
  for (StateId q = 0; q < space.size(); ++q)
    if (detail::uniform(rng, 0, 1)) a.insert(q);
  return approximate(space, a);
}

inline Machine random_machine(Rng& rng, const MachineShape& shape, const std::string& name = "M",
                              const std::string& prefix = "q") {
  auto n = detail::uniform(rng, shape.min_states, shape.max_states);
  auto k = detail::uniform(rng, shape.min_symbols, shape.max_symbols);
  auto space = random_space(rng, n, prefix);
  std::vector<RoughSet> table;
  for (std::size_t i = 0; i < n * k; ++i) table.push_back(random_rough_set(rng, space));
  return Machine(name, std::move(space), letter_alphabet(k), std::move(table));
}

/// Same states and partition, fresh random table over the given alphabet.
inline Machine random_machine_over(Rng& rng, std::size_t n, const NameTable& alphabet,
                                   const std::string& name = "M", const std::string& prefix = "q") {
  auto space = random_space(rng, n, prefix);
  std::vector<RoughSet> table;
  for (std::size_t i = 0; i < n * alphabet.size(); ++i) table.push_back(random_rough_set(rng, space));
  return Machine(name, std::move(space), alphabet, std::move(table));
}

/// A random omega: Q2 x X2 -> X1.
inline CascadeWiring random_wiring(Rng& rng, const Machine& m1, const Machine& m2) {
  CascadeWiring w;
  for (std::size_t i = 0; i < m2.num_states() * m2.num_symbols(); ++i)
    w.omega.push_back(detail::uniform(rng, 0, m1.num_symbols() - 1));
  return w;
}

/// Adds a copy s' of state s to its block, primed until the name is fresh.
/// Every state of the result steps to the same blocks as its original, so
/// the result covers m via eta(s') = s and the identity elsewhere.
struct SplitResult {
  Machine machine;
  CoveringPair covering;
};

inline SplitResult split_state(const Machine& m, StateId s, const std::string& name) {
  const auto& space = m.space();
  std::vector<std::string> names = space.states().names();
  std::vector<std::size_t> labels;
  for (StateId q = 0; q < space.size(); ++q) labels.push_back(space.block_of(q));
  auto copy = space.name(s) + "'";
  while (space.states().find(copy)) copy += "'";
  names.push_back(copy);
  labels.push_back(space.block_of(s));
  // The copy is listed last, so block ids keep their numbering.
  auto split = ApproximationSpace::from_labels(std::move(names), labels);
  auto table = m.table();
  for (SymbolId a = 0; a < m.num_symbols(); ++a) table.push_back(m.transition(s, a));
  CoveringPair pair = identity_covering(m);
  pair.state_map.push_back(s);
  return {Machine(name, std::move(split), m.alphabet(), std::move(table)), std::move(pair)};
}

}  // namespace rfsm
