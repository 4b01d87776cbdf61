#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rfsm {

/// Dense set of ids drawn from a fixed universe [0, universe).
///
/// The tag parameter keeps sets of states and sets of blocks apart at
/// compile time; both share the same word-packed representation.
template <class Tag>
class IdSet {
 public:
  IdSet() = default;

  explicit IdSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  IdSet(std::size_t universe, std::initializer_list<std::size_t> ids)
      : IdSet(universe) {
    for (auto id : ids) insert(id);
  }

  static IdSet all(std::size_t universe) {
    IdSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t id) const {
    assert(id < universe_);
    return (words_[id / 64] >> (id % 64)) & 1u;
  }

  void insert(std::size_t id) {
    assert(id < universe_);
    words_[id / 64] |= std::uint64_t{1} << (id % 64);
  }

  void erase(std::size_t id) {
    assert(id < universe_);
    words_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const IdSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const IdSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  IdSet& operator|=(const IdSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  IdSet& operator&=(const IdSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  IdSet& operator-=(const IdSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }

  /// Calls f(id) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t id) { out.push_back(id); });
    return out;
  }

  bool operator==(const IdSet&) const = default;

  // Lexicographic on the sorted member list; used for deterministic ordering.
  friend std::strong_ordering operator<=>(const IdSet& a, const IdSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    auto x = a.ids();
    auto y = b.ids();
    return x <=> y;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rfsm
