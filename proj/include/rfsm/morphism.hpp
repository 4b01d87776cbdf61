#pragma once

// Homomorphisms, isomorphisms and coverings between machines.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "machine.hpp"

namespace rfsm {

/// f: Q1 -> Q2 and g: X1 -> X2.
struct MorphismPair {
  std::vector<StateId> state_map;
  std::vector<SymbolId> input_map;

  bool operator==(const MorphismPair&) const = default;
};

/// A covering of M1 by M2: eta: Q2 -> Q1 (onto) and xi: X1 -> X2, with xi
/// extended to words symbol by symbol.
struct CoveringPair {
  std::vector<StateId> state_map;
  std::vector<SymbolId> input_map;

  bool operator==(const CoveringPair&) const = default;
  auto operator<=>(const CoveringPair&) const = default;
};

struct Counterexample {
  enum class Kind {
    relation,  // two related states whose images are unrelated
    lower,     // lower approximation not contained
    upper,     // upper approximation not contained
  };

  Kind kind;
  StateId state;      // the state the transition starts from (or first related state)
  StateId other = 0;  // second related state, relation failures only
  Word word;          // input in the domain alphabet; one letter = table-level failure
  bool via_table = false;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const noexcept { return holds; }

  static Verdict ok() { return {}; }
  static Verdict fail(Counterexample c) { return {false, std::move(c)}; }
};

/// `states_of` names the states in the counterexample, `inputs_of` its word.
inline std::string describe(const Counterexample& c, const Machine& states_of,
                            const Machine& inputs_of) {
  using K = Counterexample::Kind;
  if (c.kind == K::relation)
    return "related states " + states_of.state_name(c.state) + " and " +
           states_of.state_name(c.other) + " are mapped to unrelated states";
  std::string part = c.kind == K::lower ? "lower" : "upper";
  std::string where = c.via_table ? "transition table" : "word extension";
  return part + " approximation not contained at state " + states_of.state_name(c.state) +
         ", input " + format_word(inputs_of, c.word) + " (" + where + ")";
}

namespace detail {

inline StateSet image(const StateSet& a, const std::vector<StateId>& map, std::size_t target_size) {
  StateSet out(target_size);
  a.for_each([&](StateId q) { out.insert(map[q]); });
  return out;
}

inline void check_map(const std::vector<std::size_t>& map, std::size_t domain, std::size_t codomain,
                      const char* what) {
  if (map.size() != domain)
    throw Error(ErrorKind::totality, std::string(what) + " map has " + std::to_string(map.size()) +
                                         " entries, expected " + std::to_string(domain));
  for (auto v : map)
    if (v >= codomain)
      throw Error(ErrorKind::totality, std::string(what) + " map sends an element out of range");
}

// Relation preservation: states sharing a block in `from` land in one block of `to`.
inline std::optional<Counterexample> relation_failure(const ApproximationSpace& from,
                                                      const ApproximationSpace& to,
                                                      const std::vector<StateId>& map) {
  for (BlockId b = 0; b < from.num_blocks(); ++b) {
    auto members = from.block(b);
    for (std::size_t i = 1; i < members.size(); ++i)
      if (!to.same_block(map[members[0]], map[members[i]]))
        return Counterexample{Counterexample::Kind::relation, members[0], members[i], {}, false};
  }
  return std::nullopt;
}

inline RoughSet extend(const Machine& m, const RoughSet& r, SymbolId a) {
  return {step_part(m, r.lower, a, false), step_part(m, r.upper, a, true)};
}

// Depth-first walk over all words of length 1..depth over `dom`'s alphabet,
// stepping `dom` from `start_dom` on the word and `cod` from `start_cod` on
// its translation. `fails(r_dom, r_cod)` returns the failing component.
template <class Fails>
std::optional<Counterexample> walk_words(const Machine& dom, const Machine& cod, StateId start_dom,
                                         StateId start_cod, StateId reported_state,
                                         const std::vector<SymbolId>& translate, std::size_t depth,
                                         Fails&& fails) {
  if (depth == 0) return std::nullopt;
  Word word;
  std::optional<Counterexample> found;
  auto rec = [&](auto& self, const RoughSet& r_dom, const RoughSet& r_cod) -> void {
    for (SymbolId a = 0; a < dom.num_symbols() && !found; ++a) {
      auto n_dom = extend(dom, r_dom, a);
      auto n_cod = extend(cod, r_cod, translate[a]);
      word.push_back(a);
      if (auto kind = fails(n_dom, n_cod)) {
        found = Counterexample{*kind, reported_state, 0, word, false};
      } else if (word.size() < depth) {
        self(self, n_dom, n_cod);
      }
      word.pop_back();
    }
  };
  auto d0 = dom.space().block_set_of(start_dom);
  auto c0 = cod.space().block_set_of(start_cod);
  rec(rec, RoughSet{d0, d0}, RoughSet{c0, c0});
  return found;
}

}  // namespace detail

/// Checks relation preservation and f(delta1(q, x)) within
/// delta2(f(q), g(x)) componentwise, first on the transition table and then
/// on the word extension for every word of length 1..depth.
inline Verdict check_homomorphism(const Machine& m1, const Machine& m2, const MorphismPair& pair,
                                  std::size_t depth = 2) {
  detail::check_map(pair.state_map, m1.num_states(), m2.num_states(), "state");
  detail::check_map(pair.input_map, m1.num_symbols(), m2.num_symbols(), "input");
  if (auto c = detail::relation_failure(m1.space(), m2.space(), pair.state_map))
    return Verdict::fail(*c);

  const auto& s1 = m1.space();
  const auto& s2 = m2.space();
  auto fails = [&](const RoughSet& r1, const RoughSet& r2) -> std::optional<Counterexample::Kind> {
    if (!detail::image(s1.members(r1.lower), pair.state_map, s2.size()).is_subset_of(s2.members(r2.lower)))
      return Counterexample::Kind::lower;
    if (!detail::image(s1.members(r1.upper), pair.state_map, s2.size()).is_subset_of(s2.members(r2.upper)))
      return Counterexample::Kind::upper;
    return std::nullopt;
  };

  for (StateId q = 0; q < m1.num_states(); ++q) {
    for (SymbolId x = 0; x < m1.num_symbols(); ++x) {
      if (auto kind = fails(m1.transition(q, x), m2.transition(pair.state_map[q], pair.input_map[x])))
        return Verdict::fail({*kind, q, 0, {x}, true});
    }
  }
  for (StateId q = 0; q < m1.num_states(); ++q) {
    if (auto c = detail::walk_words(m1, m2, q, pair.state_map[q], q, pair.input_map, depth, fails))
      return Verdict::fail(*c);
  }
  return Verdict::ok();
}

struct IsomorphismVerdict {
  bool holds = false;
  Verdict homomorphism;
  bool states_bijective = false;
  bool inputs_bijective = false;
  /// Every block of M1 is carried onto a whole block of M2.
  bool maps_blocks_onto_blocks = false;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

inline bool is_bijection(const std::vector<std::size_t>& map, std::size_t codomain) {
  if (map.size() != codomain) return false;
  std::vector<bool> hit(codomain, false);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace detail

inline IsomorphismVerdict check_isomorphism(const Machine& m1, const Machine& m2,
                                            const MorphismPair& pair, std::size_t depth = 2) {
  IsomorphismVerdict v;
  v.homomorphism = check_homomorphism(m1, m2, pair, depth);
  v.states_bijective = detail::is_bijection(pair.state_map, m2.num_states());
  v.inputs_bijective = detail::is_bijection(pair.input_map, m2.num_symbols());
  v.maps_blocks_onto_blocks = true;
  const auto& s1 = m1.space();
  const auto& s2 = m2.space();
  for (BlockId b = 0; b < s1.num_blocks() && v.maps_blocks_onto_blocks; ++b) {
    auto members = s1.block(b);
    StateSet img(s2.size());
    for (auto q : members) img.insert(pair.state_map[q]);
    v.maps_blocks_onto_blocks = img == s2.members(s2.block_set_of(pair.state_map[members[0]]));
  }
  v.holds = v.homomorphism.holds && v.states_bijective && v.inputs_bijective;
  return v;
}

/// Checks that (eta, xi) covers m1 by m2: eta is onto and preserves the
/// relation, and delta1(eta(q2), x) lies within eta(delta2(q2, xi(x)))
/// componentwise. Single letters are checked on the transition table; the
/// word extension is then checked for every word of length 1..depth.
inline Verdict check_covering(const Machine& m1, const Machine& m2, const CoveringPair& pair,
                              std::size_t depth = 2) {
  detail::check_map(pair.state_map, m2.num_states(), m1.num_states(), "state");
  detail::check_map(pair.input_map, m1.num_symbols(), m2.num_symbols(), "input");
  {
    std::vector<bool> hit(m1.num_states(), false);
    for (auto q : pair.state_map) hit[q] = true;
    for (StateId q = 0; q < hit.size(); ++q)
      if (!hit[q]) throw Error(ErrorKind::not_onto, "state " + m1.state_name(q) + " has no preimage");
  }
  if (auto c = detail::relation_failure(m2.space(), m1.space(), pair.state_map))
    return Verdict::fail(*c);

  const auto& s1 = m1.space();
  const auto& s2 = m2.space();
  auto fails = [&](const RoughSet& r1, const RoughSet& r2) -> std::optional<Counterexample::Kind> {
    if (!s1.members(r1.lower).is_subset_of(detail::image(s2.members(r2.lower), pair.state_map, s1.size())))
      return Counterexample::Kind::lower;
    if (!s1.members(r1.upper).is_subset_of(detail::image(s2.members(r2.upper), pair.state_map, s1.size())))
      return Counterexample::Kind::upper;
    return std::nullopt;
  };

  for (StateId q2 = 0; q2 < m2.num_states(); ++q2) {
    for (SymbolId x = 0; x < m1.num_symbols(); ++x) {
      if (auto kind = fails(m1.transition(pair.state_map[q2], x), m2.transition(q2, pair.input_map[x])))
        return Verdict::fail({*kind, q2, 0, {x}, true});
    }
  }
  for (StateId q2 = 0; q2 < m2.num_states(); ++q2) {
    if (auto c = detail::walk_words(m1, m2, pair.state_map[q2], q2, q2, pair.input_map, depth, fails))
      return Verdict::fail(*c);
  }
  return Verdict::ok();
}

inline CoveringPair identity_covering(const Machine& m) {
  CoveringPair p;
  for (StateId q = 0; q < m.num_states(); ++q) p.state_map.push_back(q);
  for (SymbolId a = 0; a < m.num_symbols(); ++a) p.input_map.push_back(a);
  return p;
}

inline MorphismPair identity_morphism(const Machine& m) {
  auto c = identity_covering(m);
  return {std::move(c.state_map), std::move(c.input_map)};
}

/// Given (eta1, xi1) covering M1 by M2 and (eta2, xi2) covering M2 by M3,
/// returns (eta1 . eta2, xi2 . xi1) covering M1 by M3.
inline CoveringPair compose(const CoveringPair& inner, const CoveringPair& outer) {
  CoveringPair out;
  for (auto q3 : outer.state_map) out.state_map.push_back(inner.state_map.at(q3));
  for (auto x2 : inner.input_map) out.input_map.push_back(outer.input_map.at(x2));
  return out;
}

namespace detail {

inline std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap;
    r *= base;
  }
  return r;
}

inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  if (a != 0 && b > cap / a) return cap;
  return a * b;
}

// Advances `digits` as an odometer, last position fastest. False on wrap.
inline bool next_tuple(std::vector<std::size_t>& digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t default_search_budget = 1'000'000;

/// Every (eta, xi) that passes check_covering at `depth`, in lexicographic
/// order of eta then xi. Throws budget_exceeded if the nominal search space
/// |Q1|^|Q2| * |X2|^|X1| exceeds `budget`.
inline std::vector<CoveringPair> search_coverings(const Machine& m1, const Machine& m2,
                                                  std::size_t depth = 2,
                                                  std::size_t budget = default_search_budget) {
  std::vector<CoveringPair> found;
  std::size_t n1 = m1.num_states();
  std::size_t n2 = m2.num_states();
  if (n1 > n2) return found;
  auto space_size = detail::saturating_mul(detail::saturating_pow(n1, n2),
                                           detail::saturating_pow(m2.num_symbols(), m1.num_symbols()));
  if (space_size > budget)
    throw Error(ErrorKind::budget_exceeded, "search space has " + std::to_string(space_size) +
                                                " candidates, budget is " + std::to_string(budget));

  const auto& s1 = m1.space();
  const auto& s2 = m2.space();
  std::vector<StateId> eta(n2, 0);
  do {
    std::vector<bool> hit(n1, false);
    for (auto q : eta) hit[q] = true;
    bool onto = true;
    for (bool h : hit) onto = onto && h;
    if (!onto || detail::relation_failure(s2, s1, eta)) continue;

    // Table-level condition decomposes per input letter.
    std::vector<std::vector<SymbolId>> allowed(m1.num_symbols());
    bool any_empty = false;
    for (SymbolId x = 0; x < m1.num_symbols(); ++x) {
      for (SymbolId y = 0; y < m2.num_symbols(); ++y) {
        bool ok = true;
        for (StateId q2 = 0; q2 < n2 && ok; ++q2) {
          const auto& r1 = m1.transition(eta[q2], x);
          const auto& r2 = m2.transition(q2, y);
          ok = s1.members(r1.lower).is_subset_of(detail::image(s2.members(r2.lower), eta, n1)) &&
               s1.members(r1.upper).is_subset_of(detail::image(s2.members(r2.upper), eta, n1));
        }
        if (ok) allowed[x].push_back(y);
      }
      any_empty = any_empty || allowed[x].empty();
    }
    if (any_empty) continue;

    std::vector<std::size_t> choice(m1.num_symbols(), 0);
    for (;;) {
      CoveringPair candidate{eta, {}};
      for (SymbolId x = 0; x < m1.num_symbols(); ++x) candidate.input_map.push_back(allowed[x][choice[x]]);
      if (check_covering(m1, m2, candidate, depth)) found.push_back(std::move(candidate));
      bool advanced = false;
      for (std::size_t i = choice.size(); i-- > 0 && !advanced;) {
        if (++choice[i] < allowed[i].size())
          advanced = true;
        else
          choice[i] = 0;
      }
      if (!advanced) break;
    }
  } while (detail::next_tuple(eta, n1));
  return found;
}

}  // namespace rfsm
