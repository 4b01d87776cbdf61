#pragma once

// Approximation spaces, definable sets and lower/upper approximations.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "id_set.hpp"
#include "name_table.hpp"

namespace rfsm {

struct StateTag {};
struct BlockTag {};

using StateId = std::size_t;
using BlockId = std::size_t;

/// Arbitrary subset of the states of one space.
using StateSet = IdSet<StateTag>;

/// A union of blocks, stored as the set of its block ids.
using DefinableSet = IdSet<BlockTag>;

/// A finite state set together with a partition into blocks.
///
/// Block ids run 0..num_blocks()-1 in order of each block's first member in
/// the state list, so two spaces built from the same partition compare equal
/// no matter how the cells were listed.
class ApproximationSpace {
 public:
  /// `labels[i]` is an arbitrary cell label of state i; labels are
  /// renumbered canonically.
  static ApproximationSpace from_labels(std::vector<std::string> names,
                                        std::span<const std::size_t> labels) {
    if (names.size() != labels.size())
      throw Error(ErrorKind::non_partition, "one label per state required");
    if (names.empty()) throw Error(ErrorKind::non_partition, "state set is empty");
    ApproximationSpace s;
    s.states_ = NameTable(std::move(names), ErrorKind::duplicate_state);
    s.block_of_.resize(labels.size());
    std::vector<std::pair<std::size_t, BlockId>> seen;
    for (StateId q = 0; q < labels.size(); ++q) {
      BlockId id = s.blocks_.size();
      for (auto& [label, block] : seen) {
        if (label == labels[q]) {
          id = block;
          break;
        }
      }
      if (id == s.blocks_.size()) {
        seen.emplace_back(labels[q], id);
        s.blocks_.emplace_back();
      }
      s.block_of_[q] = id;
      s.blocks_[id].push_back(q);
    }
    return s;
  }

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }

  const NameTable& states() const noexcept { return states_; }
  const std::string& name(StateId q) const { return states_.name(q); }

  StateId state_id(std::string_view name) const {
    auto id = states_.find(name);
    if (!id) throw Error(ErrorKind::unknown_state, "no state named '" + std::string(name) + "'");
    return *id;
  }

  BlockId block_of(StateId q) const { return block_of_.at(q); }
  std::span<const StateId> block(BlockId b) const { return blocks_.at(b); }
  bool same_block(StateId p, StateId q) const { return block_of(p) == block_of(q); }

  DefinableSet no_blocks() const { return DefinableSet(num_blocks()); }
  DefinableSet all_blocks() const { return DefinableSet::all(num_blocks()); }

  /// [q] as a definable set.
  DefinableSet block_set_of(StateId q) const {
    DefinableSet d(num_blocks());
    d.insert(block_of(q));
    return d;
  }

  /// The states covered by a definable set.
  StateSet members(const DefinableSet& d) const {
    check(d);
    StateSet out(size());
    d.for_each([&](BlockId b) {
      for (auto q : blocks_[b]) out.insert(q);
    });
    return out;
  }

  StateSet subset(const std::vector<std::string>& names) const {
    StateSet out(size());
    for (const auto& n : names) out.insert(state_id(n));
    return out;
  }

  void check(const DefinableSet& d) const {
    if (d.universe() != num_blocks())
      throw Error(ErrorKind::mismatched_space, "definable set belongs to a space with " +
                                                   std::to_string(d.universe()) + " blocks, not " +
                                                   std::to_string(num_blocks()));
  }

  void check(const StateSet& a) const {
    if (a.universe() != size())
      throw Error(ErrorKind::mismatched_space, "state set belongs to a space with " +
                                                   std::to_string(a.universe()) + " states, not " +
                                                   std::to_string(size()));
  }

  bool operator==(const ApproximationSpace& other) const {
    return states_ == other.states_ && block_of_ == other.block_of_;
  }

 private:
  ApproximationSpace() = default;

  NameTable states_;
  std::vector<BlockId> block_of_;
  std::vector<std::vector<StateId>> blocks_;
};

/// Builds a space from a list of states and a list of cells naming them.
inline ApproximationSpace make_partition(std::vector<std::string> states,
                                         const std::vector<std::vector<std::string>>& cells) {
  NameTable table(states, ErrorKind::duplicate_state);
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(states.size(), unassigned);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw Error(ErrorKind::non_partition, "cell " + std::to_string(c) + " is empty");
    for (const auto& n : cells[c]) {
      auto q = table.find(n);
      if (!q) throw Error(ErrorKind::non_partition, "cell member '" + n + "' is not a state");
      if (labels[*q] != unassigned)
        throw Error(ErrorKind::non_partition, "state '" + n + "' lies in more than one cell");
      labels[*q] = c;
    }
  }
  for (std::size_t q = 0; q < labels.size(); ++q)
    if (labels[q] == unassigned)
      throw Error(ErrorKind::non_partition, "state '" + states[q] + "' lies in no cell");
  return ApproximationSpace::from_labels(std::move(states), labels);
}

/// A (lower, upper) pair of definable sets over one space.
///
/// Nothing here forces the pair to be the approximation of some subset;
/// use is_realizable for that.
struct RoughSet {
  DefinableSet lower;
  DefinableSet upper;

  bool operator==(const RoughSet&) const = default;
};

inline RoughSet approximate(const ApproximationSpace& space, const StateSet& a) {
  space.check(a);
  RoughSet r{space.no_blocks(), space.no_blocks()};
  for (BlockId b = 0; b < space.num_blocks(); ++b) {
    bool inside = true;
    bool meets = false;
    for (auto q : space.block(b)) {
      if (a.contains(q))
        meets = true;
      else
        inside = false;
    }
    if (inside) r.lower.insert(b);
    if (meets) r.upper.insert(b);
  }
  return r;
}

inline bool is_definable(const ApproximationSpace& space, const StateSet& a) {
  auto r = approximate(space, a);
  return r.lower == r.upper;
}

/// True iff some subset A has approximate(A) == (lower, upper): the lower
/// part sits inside the upper part and every boundary block has at least
/// two states (so A can meet it without containing it).
inline bool is_realizable(const ApproximationSpace& space, const DefinableSet& lower,
                          const DefinableSet& upper) {
  space.check(lower);
  space.check(upper);
  if (!lower.is_subset_of(upper)) return false;
  bool ok = true;
  (upper - lower).for_each([&](BlockId b) {
    if (space.block(b).size() < 2) ok = false;
  });
  return ok;
}

inline bool is_realizable(const ApproximationSpace& space, const RoughSet& r) {
  return is_realizable(space, r.lower, r.upper);
}

inline std::string pair_name(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

/// States are pairs (q1,q2) numbered q1 * |Q2| + q2; blocks are the
/// products B1 x B2, numbered b1 * #blocks2 + b2.
inline ApproximationSpace product_partition(const ApproximationSpace& s1,
                                            const ApproximationSpace& s2) {
  std::vector<std::string> names;
  std::vector<std::size_t> labels;
  names.reserve(s1.size() * s2.size());
  labels.reserve(s1.size() * s2.size());
  for (StateId p = 0; p < s1.size(); ++p) {
    for (StateId q = 0; q < s2.size(); ++q) {
      names.push_back(pair_name(s1.name(p), s2.name(q)));
      labels.push_back(s1.block_of(p) * s2.num_blocks() + s2.block_of(q));
    }
  }
  return ApproximationSpace::from_labels(std::move(names), labels);
}

/// D1 x D2 as a definable set of the product space.
inline DefinableSet product_blocks(const DefinableSet& d1, const DefinableSet& d2) {
  DefinableSet out(d1.universe() * d2.universe());
  d1.for_each([&](BlockId b1) {
    d2.for_each([&](BlockId b2) { out.insert(b1 * d2.universe() + b2); });
  });
  return out;
}

/// (L1 x L2, U1 x U2).
inline RoughSet product_rough_set(const RoughSet& r1, const RoughSet& r2) {
  return {product_blocks(r1.lower, r2.lower), product_blocks(r1.upper, r2.upper)};
}

}  // namespace rfsm
