#pragma once

// Constructive witnesses for the covering and isomorphism relations between
// products. Each builder constructs the product machines and the maps
// between them, then re-checks the claim with the generic checkers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "machine.hpp"
#include "morphism.hpp"
#include "products.hpp"

namespace rfsm {

enum class ProductKind { full, restricted, wreath, cascade };
enum class Side { left, right };

inline std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::full: return "full";
    case ProductKind::restricted: return "restricted";
    case ProductKind::wreath: return "wreath";
    case ProductKind::cascade: return "cascade";
  }
  return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view s) {
  if (s == "full") return ProductKind::full;
  if (s == "restricted") return ProductKind::restricted;
  if (s == "wreath") return ProductKind::wreath;
  if (s == "cascade") return ProductKind::cascade;
  return std::nullopt;
}

inline std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Outcome of one witness construction. `counterexample` is empty whenever
/// `holds` is true.
struct WitnessReport {
  std::string claim;
  std::string covered;   // domain machine (covered, or isomorphism source)
  std::string covering;  // codomain machine
  std::optional<CoveringPair> covering_pair;
  std::optional<MorphismPair> morphism;
  bool holds = false;
  std::string counterexample;
  std::vector<std::string> notes;
};

namespace detail {

inline WitnessReport covering_report(std::string claim, const Machine& covered,
                                     const Machine& covering, CoveringPair pair,
                                     std::size_t depth) {
  WitnessReport r;
  r.claim = std::move(claim);
  r.covered = covered.name();
  r.covering = covering.name();
  auto v = check_covering(covered, covering, pair, depth);
  r.holds = v.holds;
  if (!v.holds) r.counterexample = describe(*v.counterexample, covering, covered);
  r.covering_pair = std::move(pair);
  return r;
}

inline WitnessReport isomorphism_report(std::string claim, const Machine& from, const Machine& to,
                                        MorphismPair pair, std::size_t depth) {
  WitnessReport r;
  r.claim = std::move(claim);
  r.covered = from.name();
  r.covering = to.name();
  auto v = check_isomorphism(from, to, pair, depth);
  r.holds = v.holds;
  if (!v.homomorphism.holds)
    r.counterexample = describe(*v.homomorphism.counterexample, from, from);
  else if (!v.states_bijective)
    r.counterexample = "state map is not a bijection";
  else if (!v.inputs_bijective)
    r.counterexample = "input map is not a bijection";
  r.morphism = std::move(pair);
  return r;
}

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

inline void require_same_alphabet(const Machine& a, const Machine& b) {
  if (a.num_symbols() != b.num_symbols())
    throw Error(ErrorKind::alphabet_mismatch, a.name() + " and " + b.name() + " have different inputs");
  for (const auto& n : a.alphabet().names())
    if (!b.alphabet().find(n))
      throw Error(ErrorKind::alphabet_mismatch, "input '" + n + "' missing from " + b.name());
}

}  // namespace detail

/// restricted(M1, M2) is covered by full(M1, M2) via the identity on states
/// and x -> (x, x).
inline WitnessReport witness_restricted_in_full(const Machine& m1, const Machine& m2,
                                                std::size_t depth = 2) {
  auto covered = restricted_direct(m1, m2);
  auto covering = full_direct(m1, m2);
  CoveringPair pair{detail::iota(covered.num_states()), {}};
  for (SymbolId x = 0; x < m1.num_symbols(); ++x)
    pair.input_map.push_back(x * m2.num_symbols() + m2.symbol_id(m1.symbol_name(x)));
  return detail::covering_report("restricted direct product is covered by full direct product",
                                 covered, covering, std::move(pair), depth);
}

/// cascade(M1, M2, w) is covered by wreath(M1, M2) via the identity on
/// states and x2 -> (f, x2) with f(q2) = w(q2, x2).
inline WitnessReport witness_cascade_in_wreath(const Machine& m1, const Machine& m2,
                                               const CascadeWiring& w, std::size_t depth = 2,
                                               std::size_t budget = default_wreath_budget) {
  auto covered = cascade(m1, m2, w);
  auto covering = wreath(m1, m2, budget);
  CoveringPair pair{detail::iota(covered.num_states()), {}};
  for (SymbolId x2 = 0; x2 < m2.num_symbols(); ++x2) {
    FunctionSymbol f;
    for (StateId q2 = 0; q2 < m2.num_states(); ++q2) f.outputs.push_back(w(m2, q2, x2));
    pair.input_map.push_back(wreath_symbol(m1, m2, f, x2));
  }
  return detail::covering_report("cascade product is covered by wreath product", covered, covering,
                                 std::move(pair), depth);
}

/// full(wreath(M1,M2), wreath(M3,M4)) is covered by
/// wreath(full(M1,M3), full(M2,M4)) via ((q1,q3),(q2,q4)) -> ((q1,q2),(q3,q4))
/// and ((f,x2),(g,x4)) -> (f x g, (x2,x4)).
inline WitnessReport witness_wreath_exchange(const Machine& m1, const Machine& m2, const Machine& m3,
                                             const Machine& m4, std::size_t depth = 2,
                                             std::size_t budget = default_wreath_budget) {
  auto w12 = wreath(m1, m2, budget);
  auto w34 = wreath(m3, m4, budget);
  auto covered = full_direct(w12, w34);
  auto m13 = full_direct(m1, m3);
  auto m24 = full_direct(m2, m4);
  auto covering = wreath(m13, m24, budget);

  std::size_t n1 = m1.num_states(), n2 = m2.num_states(), n3 = m3.num_states(), n4 = m4.num_states();
  CoveringPair pair;
  pair.state_map.resize(covering.num_states());
  for (StateId q1 = 0; q1 < n1; ++q1)
    for (StateId q3 = 0; q3 < n3; ++q3)
      for (StateId q2 = 0; q2 < n2; ++q2)
        for (StateId q4 = 0; q4 < n4; ++q4)
          pair.state_map[(q1 * n3 + q3) * (n2 * n4) + (q2 * n4 + q4)] =
              (q1 * n2 + q2) * (n3 * n4) + (q3 * n4 + q4);

  for (SymbolId s = 0; s < covered.num_symbols(); ++s) {
    auto [f, x2] = decode_wreath_symbol(m1, m2, s / w34.num_symbols());
    auto [g, x4] = decode_wreath_symbol(m3, m4, s % w34.num_symbols());
    FunctionSymbol fg;
    for (StateId q2 = 0; q2 < n2; ++q2)
      for (StateId q4 = 0; q4 < n4; ++q4) fg.outputs.push_back(f(q2) * m3.num_symbols() + g(q4));
    pair.input_map.push_back(wreath_symbol(m13, m24, fg, x2 * m4.num_symbols() + x4));
  }
  return detail::covering_report("product of wreath products is covered by wreath of products",
                                 covered, covering, std::move(pair), depth);
}

/// Wirings for the cascade regrouping: `inner` is omega1: Q2 x X2 -> X1 and
/// `outer` is omega2: Q3 x X3 -> X2.
struct CascadePair {
  CascadeWiring inner;
  CascadeWiring outer;
};

/// ((M1 M2) M3) is isomorphic to (M1 (M2 M3)) for the given product kind,
/// via the regrouping ((q1,q2),q3) <-> (q1,(q2,q3)) and the matching input
/// bijection. For cascades the right-hand wirings are synthesized as
/// omega4 = omega2 and omega3((q2,q3),x3) = omega1(q2, omega2(q3,x3)).
inline WitnessReport assoc_isomorphism(ProductKind kind, const Machine& m1, const Machine& m2,
                                       const Machine& m3,
                                       const std::optional<CascadePair>& wirings = std::nullopt,
                                       std::size_t depth = 2,
                                       std::size_t budget = default_wreath_budget) {
  std::string claim = std::string(to_string(kind)) + " product is associative up to isomorphism";
  switch (kind) {
    case ProductKind::full: {
      auto a = full_direct(full_direct(m1, m2), m3);
      auto b = full_direct(m1, full_direct(m2, m3));
      MorphismPair p{detail::iota(a.num_states()), detail::iota(a.num_symbols())};
      return detail::isomorphism_report(claim, a, b, std::move(p), depth);
    }
    case ProductKind::restricted: {
      detail::require_same_alphabet(m1, m2);
      detail::require_same_alphabet(m1, m3);
      auto a = restricted_direct(restricted_direct(m1, m2), m3);
      auto b = restricted_direct(m1, restricted_direct(m2, m3));
      MorphismPair p{detail::iota(a.num_states()), detail::iota(a.num_symbols())};
      return detail::isomorphism_report(claim, a, b, std::move(p), depth);
    }
    case ProductKind::wreath: {
      auto w12 = wreath(m1, m2, budget);
      auto a = wreath(w12, m3, budget);
      auto w23 = wreath(m2, m3, budget);
      auto b = wreath(m1, w23, budget);
      std::size_t n2 = m2.num_states(), n3 = m3.num_states();
      MorphismPair p{detail::iota(a.num_states()), {}};
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        // s = (F, x3) with F(q3) = (f_q3, x2_q3) in the alphabet of w12.
        auto [F, x3] = decode_wreath_symbol(w12, m3, s);
        FunctionSymbol G{std::vector<SymbolId>(n2 * n3)};
        FunctionSymbol h{std::vector<SymbolId>(n3)};
        for (StateId q3 = 0; q3 < n3; ++q3) {
          auto [f, x2] = decode_wreath_symbol(m1, m2, F(q3));
          for (StateId q2 = 0; q2 < n2; ++q2) G.outputs[q2 * n3 + q3] = f(q2);
          h.outputs[q3] = x2;
        }
        p.input_map.push_back(wreath_symbol(m1, w23, G, wreath_symbol(m2, m3, h, x3)));
      }
      return detail::isomorphism_report(claim, a, b, std::move(p), depth);
    }
    case ProductKind::cascade: {
      if (!wirings)
        throw Error(ErrorKind::precondition_failed, "cascade associativity needs two wirings");
      const auto& w1 = wirings->inner;
      const auto& w2 = wirings->outer;
      auto c12 = cascade(m1, m2, w1);
      auto a = cascade(c12, m3, w2);
      const auto& w4 = w2;
      auto c23 = cascade(m2, m3, w4);
      CascadeWiring w3;
      for (StateId q2 = 0; q2 < m2.num_states(); ++q2)
        for (StateId q3 = 0; q3 < m3.num_states(); ++q3)
          for (SymbolId x3 = 0; x3 < m3.num_symbols(); ++x3)
            w3.omega.push_back(w1(m2, q2, w2(m3, q3, x3)));
      auto b = cascade(m1, c23, w3);
      MorphismPair p{detail::iota(a.num_states()), detail::iota(a.num_symbols())};
      auto r = detail::isomorphism_report(claim, a, b, std::move(p), depth);
      r.notes.push_back("right-hand wirings: omega4 = omega2, omega3((q2,q3),x3) = omega1(q2, omega2(q3,x3))");
      return r;
    }
  }
  throw Error(ErrorKind::precondition_failed, "unknown product kind");
}

/// Lifts a covering (eta, xi) of M1 by M2 to a covering of the product of
/// M1 with M3 by the product of M2 with M3 (side = left, M3 on the right)
/// or of M3 with M1 by M3 with M2 (side = right).
///
/// `omega` is needed for cascades: on the left it wires M3 into M1
/// (Q3 x X3 -> X1); on the right it wires M1 into M3 (Q1 x X1 -> X3).
inline WitnessReport lift_covering(ProductKind kind, Side side, const CoveringPair& pair,
                                   const Machine& m1, const Machine& m2, const Machine& m3,
                                   const std::optional<CascadeWiring>& omega = std::nullopt,
                                   std::size_t depth = 2,
                                   std::size_t budget = default_wreath_budget) {
  if (!check_covering(m1, m2, pair, depth))
    throw Error(ErrorKind::precondition_failed, "the given pair does not cover " + m1.name() +
                                                    " by " + m2.name());
  const auto& eta = pair.state_map;
  const auto& xi = pair.input_map;
  std::size_t n1 = m1.num_states(), n2 = m2.num_states(), n3 = m3.num_states();
  std::string claim = "covering lifts through " + std::string(to_string(kind)) + " product (" +
                      std::string(to_string(side)) + ")";

  // State maps: left (q2,q3) -> (eta q2, q3); right (q3,q2) -> (q3, eta q2).
  std::vector<StateId> lifted_eta(n2 * n3);
  for (StateId q2 = 0; q2 < n2; ++q2)
    for (StateId q3 = 0; q3 < n3; ++q3) {
      if (side == Side::left)
        lifted_eta[q2 * n3 + q3] = eta[q2] * n3 + q3;
      else
        lifted_eta[q3 * n2 + q2] = q3 * n1 + eta[q2];
    }

  switch (kind) {
    case ProductKind::full: {
      auto a = side == Side::left ? full_direct(m1, m3) : full_direct(m3, m1);
      auto b = side == Side::left ? full_direct(m2, m3) : full_direct(m3, m2);
      CoveringPair lifted{lifted_eta, {}};
      std::size_t k1 = m1.num_symbols(), k2 = m2.num_symbols(), k3 = m3.num_symbols();
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        if (side == Side::left)
          lifted.input_map.push_back(xi[s / k3] * k3 + s % k3);
        else
          lifted.input_map.push_back((s / k1) * k2 + xi[s % k1]);
      }
      return detail::covering_report(claim, a, b, std::move(lifted), depth);
    }
    case ProductKind::restricted: {
      detail::require_same_alphabet(m1, m2);
      detail::require_same_alphabet(m1, m3);
      auto a = side == Side::left ? restricted_direct(m1, m3) : restricted_direct(m3, m1);
      auto b = side == Side::left ? restricted_direct(m2, m3) : restricted_direct(m3, m2);
      // xi acts on the shared alphabet by name.
      CoveringPair lifted{lifted_eta, {}};
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        auto x1 = m1.symbol_id(a.symbol_name(s));
        lifted.input_map.push_back(b.symbol_id(m2.symbol_name(xi[x1])));
      }
      auto r = detail::covering_report(claim, a, b, std::move(lifted), depth);
      bool identity = true;
      for (SymbolId x = 0; x < m1.num_symbols(); ++x)
        identity = identity && m1.symbol_name(x) == m2.symbol_name(xi[x]);
      if (!identity) r.notes.push_back("input map is not the identity on the shared alphabet");
      return r;
    }
    case ProductKind::wreath: {
      CoveringPair lifted{lifted_eta, {}};
      if (side == Side::left) {
        auto a = wreath(m1, m3, budget);
        auto b = wreath(m2, m3, budget);
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
          auto [f, x3] = decode_wreath_symbol(m1, m3, s);
          FunctionSymbol g;
          for (auto v : f.outputs) g.outputs.push_back(xi[v]);
          lifted.input_map.push_back(wreath_symbol(m2, m3, g, x3));
        }
        return detail::covering_report(claim, a, b, std::move(lifted), depth);
      }
      auto a = wreath(m3, m1, budget);
      auto b = wreath(m3, m2, budget);
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        auto [f, x1] = decode_wreath_symbol(m3, m1, s);
        FunctionSymbol g;
        for (StateId q2 = 0; q2 < n2; ++q2) g.outputs.push_back(f(eta[q2]));
        lifted.input_map.push_back(wreath_symbol(m3, m2, g, xi[x1]));
      }
      return detail::covering_report(claim, a, b, std::move(lifted), depth);
    }
    case ProductKind::cascade: {
      if (!omega) throw Error(ErrorKind::precondition_failed, "cascade lift needs a wiring");
      if (side == Side::left) {
        // omega2 = xi . omega1 so that M2 sees the translated input.
        auto a = cascade(m1, m3, *omega);
        CascadeWiring omega2;
        for (auto x1 : omega->omega) omega2.omega.push_back(xi.at(x1));
        auto b = cascade(m2, m3, omega2);
        CoveringPair lifted{lifted_eta, detail::iota(m3.num_symbols())};
        auto r = detail::covering_report(claim, a, b, std::move(lifted), depth);
        r.notes.push_back("omega2 = xi . omega1, input map is the identity on X3");
        return r;
      }
      // omega2(q2, xi(x1)) = omega1(eta(q2), x1); pairs outside the image of
      // xi take the first input of M3.
      auto a = cascade(m3, m1, *omega);
      std::size_t k2 = m2.num_symbols();
      std::vector<std::optional<SymbolId>> defined(n2 * k2);
      for (StateId q2 = 0; q2 < n2; ++q2) {
        for (SymbolId x1 = 0; x1 < m1.num_symbols(); ++x1) {
          auto value = (*omega)(m1, eta[q2], x1);
          auto& slot = defined[q2 * k2 + xi[x1]];
          if (slot && *slot != value)
            throw Error(ErrorKind::precondition_failed,
                        "no wiring exists: inputs identified by xi need different outputs at state " +
                            m2.state_name(q2));
          slot = value;
        }
      }
      CascadeWiring omega2;
      std::size_t defaulted = 0;
      for (auto& slot : defined) {
        if (!slot) ++defaulted;
        omega2.omega.push_back(slot.value_or(0));
      }
      auto b = cascade(m3, m2, omega2);
      CoveringPair lifted{lifted_eta, xi};
      auto r = detail::covering_report(claim, a, b, std::move(lifted), depth);
      r.notes.push_back("omega2 defaulted on " + std::to_string(defaulted) + " (state, input) pairs");
      return r;
    }
  }
  throw Error(ErrorKind::precondition_failed, "unknown product kind");
}

}  // namespace rfsm
