#pragma once

// Seeded randomized runs of the witness builders.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propositions.hpp"
#include "random.hpp"

namespace rfsm {

enum class Claim {
  restricted_in_full,
  wreath_exchange,
  cascade_in_wreath,
  associativity,
  covering_lift,
};

/// The CLI identifiers 3.1 .. 3.5.
inline std::optional<Claim> parse_claim(std::string_view id) {
  if (id == "3.1") return Claim::restricted_in_full;
  if (id == "3.2") return Claim::wreath_exchange;
  if (id == "3.3") return Claim::cascade_in_wreath;
  if (id == "3.4") return Claim::associativity;
  if (id == "3.5") return Claim::covering_lift;
  return std::nullopt;
}

inline std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::restricted_in_full: return "restricted-in-full";
    case Claim::wreath_exchange: return "wreath-exchange";
    case Claim::cascade_in_wreath: return "cascade-in-wreath";
    case Claim::associativity: return "associativity";
    case Claim::covering_lift: return "covering-lift";
  }
  return "?";
}

/// held + failed + gaps + skipped == trials.
///
/// A gap is a failing restricted-product lift whose input map is not the
/// identity: the construction is run as stated and the failure is reported
/// separately from artifact failures. A skip is a trial whose instance has
/// no valid construction (a cascade lift whose wiring cannot be defined).
struct TrialSummary {
  std::size_t trials = 0;
  std::size_t held = 0;
  std::size_t failed = 0;
  std::size_t gaps = 0;
  std::size_t skipped = 0;
  std::vector<WitnessReport> failures;
  std::vector<std::string> skip_reasons;

  TrialSummary& operator+=(const TrialSummary& o) {
    trials += o.trials;
    held += o.held;
    failed += o.failed;
    gaps += o.gaps;
    skipped += o.skipped;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    skip_reasons.insert(skip_reasons.end(), o.skip_reasons.begin(), o.skip_reasons.end());
    return *this;
  }
};

namespace detail {

inline constexpr ProductKind all_kinds[] = {ProductKind::full, ProductKind::restricted,
                                            ProductKind::wreath, ProductKind::cascade};

inline void record(TrialSummary& s, WitnessReport r, bool gap_allowed) {
  ++s.trials;
  if (r.holds) {
    ++s.held;
    return;
  }
  if (gap_allowed) ++s.gaps;
  else ++s.failed;
  s.failures.push_back(std::move(r));
}

inline WitnessReport run_lift(Rng& rng, ProductKind kind, Side side, std::size_t depth) {
  MachineShape two{2, 2, 1, 2};
  auto m1 = random_machine(rng, two, "A", "p");
  auto split = split_state(m1, uniform(rng, 0, 1), "B");
  auto found = search_coverings(m1, split.machine, depth);
  // The split construction guarantees at least one covering.
  const auto& pair = found.at(uniform(rng, 0, found.size() - 1));
  const auto& m2 = split.machine;
  std::size_t n3 = kind == ProductKind::wreath ? 2 : 3;
  auto m3 = kind == ProductKind::restricted
                ? random_machine_over(rng, uniform(rng, 1, n3), m1.alphabet(), "C", "r")
                : random_machine(rng, {1, n3, 1, 2}, "C", "r");
  std::optional<CascadeWiring> omega;
  if (kind == ProductKind::cascade)
    omega = side == Side::left ? random_wiring(rng, m1, m3) : random_wiring(rng, m3, m1);
  return lift_covering(kind, side, pair, m1, m2, m3, omega, depth);
}

}  // namespace detail

/// Runs `trials` seeded instances of one claim. When `kind` is empty the
/// kind-indexed claims cycle through all four product kinds; covering lifts
/// also alternate sides.
inline TrialSummary run_trials(Claim claim, std::optional<ProductKind> kind, std::uint64_t seed,
                               std::size_t trials, std::size_t depth = 2) {
  Rng rng(seed);
  TrialSummary s;
  for (std::size_t i = 0; i < trials; ++i) {
    auto k = kind.value_or(detail::all_kinds[i % 4]);
    switch (claim) {
      case Claim::restricted_in_full: {
        auto m1 = random_machine(rng, {1, 4, 1, 2}, "A", "p");
        auto m2 = random_machine_over(rng, detail::uniform(rng, 1, 4), m1.alphabet(), "B", "r");
        detail::record(s, witness_restricted_in_full(m1, m2, depth), false);
        break;
      }
      case Claim::wreath_exchange: {
        MachineShape small{1, 2, 1, 2};
        auto m1 = random_machine(rng, small, "A", "p");
        auto m2 = random_machine(rng, small, "B", "r");
        auto m3 = random_machine(rng, small, "C", "s");
        auto m4 = random_machine(rng, small, "D", "t");
        detail::record(s, witness_wreath_exchange(m1, m2, m3, m4, depth), false);
        break;
      }
      case Claim::cascade_in_wreath: {
        auto m1 = random_machine(rng, {1, 4, 1, 2}, "A", "p");
        auto m2 = random_machine(rng, {1, 4, 1, 2}, "B", "r");
        auto w = random_wiring(rng, m1, m2);
        detail::record(s, witness_cascade_in_wreath(m1, m2, w, depth), false);
        break;
      }
      case Claim::associativity: {
        MachineShape shape = k == ProductKind::wreath ? MachineShape{1, 2, 1, 2} : MachineShape{1, 3, 1, 2};
        auto m1 = random_machine(rng, shape, "A", "p");
        auto m2 = k == ProductKind::restricted
                      ? random_machine_over(rng, detail::uniform(rng, 1, 3), m1.alphabet(), "B", "r")
                      : random_machine(rng, shape, "B", "r");
        auto m3 = k == ProductKind::restricted
                      ? random_machine_over(rng, detail::uniform(rng, 1, 3), m1.alphabet(), "C", "s")
                      : random_machine(rng, shape, "C", "s");
        std::optional<CascadePair> wirings;
        if (k == ProductKind::cascade)
          wirings = CascadePair{random_wiring(rng, m1, m2), random_wiring(rng, m2, m3)};
        detail::record(s, assoc_isomorphism(k, m1, m2, m3, wirings, depth), false);
        break;
      }
      case Claim::covering_lift: {
        auto side = (kind ? i : i / 4) % 2 == 0 ? Side::left : Side::right;
        try {
          auto r = detail::run_lift(rng, k, side, depth);
          bool gap = k == ProductKind::restricted && !r.notes.empty();
          detail::record(s, std::move(r), gap);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::precondition_failed) throw;
          ++s.trials;
          ++s.skipped;
          s.skip_reasons.push_back(e.what());
        }
        break;
      }
    }
  }
  return s;
}

}  // namespace rfsm
