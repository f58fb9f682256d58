#pragma once

// Law predicates over finite lattices. Every predicate is an exhaustive scan
// in index order with early exit, so a returned counterexample is the
// lexicographically first one.

#include <array>
#include <optional>

#include "latcheck/core.hpp"

namespace latcheck {

struct WhitmanResult {
  bool holds = true;
  /// (a, b, c, d) with a∧b <= c∨d and none of the four alternatives.
  std::optional<std::array<Elem, 4>> counterexample;
};

struct SemidistributiveResult {
  bool sd_join = true;
  bool sd_meet = true;
  /// (a, b, c) with a∨b = a∨c but a∨(b∧c) differs.
  std::optional<std::array<Elem, 3>> join_counterexample;
  /// (a, b, c) with a∧b = a∧c but a∧(b∨c) differs.
  std::optional<std::array<Elem, 3>> meet_counterexample;
  bool holds() const noexcept { return sd_join && sd_meet; }
};

struct LawProfile {
  bool whitman = false;
  bool sd_join = false;
  bool sd_meet = false;
  bool distributive = false;
  bool modular = false;
  ElemSet doubly_reducible;
  int length = 0;
  bool free_sublattice_finite = false;
  bool dilworth_bound = false;
};

WhitmanResult whitman(const FiniteLattice& lattice);
SemidistributiveResult semidistributive(const FiniteLattice& lattice);
bool distributive(const FiniteLattice& lattice);
bool modular(const FiniteLattice& lattice);
ElemSet doubly_reducible_elements(const FiniteLattice& lattice);
bool has_doubly_reducible_element(const FiniteLattice& lattice);

/// Cardinality of the longest chain (chain(k) has length k).
int length(const FiniteLattice& lattice);
/// Non-semidistributive lattices pass vacuously; otherwise |L| <= 2^(length-1).
bool dilworth_bound_holds(const FiniteLattice& lattice);

/// Whitman's condition together with both semidistributive laws, which for a
/// finite lattice characterises embeddability into a free lattice.
bool is_finite_free_sublattice(const FiniteLattice& lattice);

LawProfile law_profile(const FiniteLattice& lattice);

}  // namespace latcheck
