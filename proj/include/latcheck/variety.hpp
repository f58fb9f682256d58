#pragma once

// Congruences, quotients, subdirect irreducibility and membership in the
// variety generated by the pentagon.

#include <optional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck {

/// A partition of the elements; block_of[x] numbers blocks by their least
/// element index, so equal partitions compare equal.
struct Congruence {
  std::vector<int> block_of;

  std::size_t block_count() const;
  std::vector<ElemSet> blocks() const;
  bool same(Elem a, Elem b) const { return block_of[static_cast<std::size_t>(a)] == block_of[static_cast<std::size_t>(b)]; }
  /// Every pair identified here is identified in `other`.
  bool refines(const Congruence& other) const;
  bool is_identity() const { return block_count() == block_of.size(); }
  bool is_total() const { return block_count() <= 1; }
  auto operator<=>(const Congruence&) const = default;
};

inline constexpr std::size_t kDefaultCongruenceCap = 16;
inline constexpr std::size_t kDefaultVarietyCap = 64;

Congruence identity_congruence(const FiniteLattice& lattice);
Congruence total_congruence(const FiniteLattice& lattice);
/// Normalises an arbitrary block labelling; throws NotAPartition on bad input.
Congruence congruence_from_blocks(const FiniteLattice& lattice, const std::vector<ElemSet>& blocks);
/// Compatibility with meet and join.
bool is_congruence(const FiniteLattice& lattice, const Congruence& c);

Congruence principal_congruence(const FiniteLattice& lattice, Elem a, Elem b);
Congruence join_congruences(const Congruence& a, const Congruence& b);
Congruence meet_congruences(const Congruence& a, const Congruence& b);

/// Distinct congruences Con(a, b) over covering pairs a < b, sorted.
std::vector<Congruence> cover_congruences(const FiniteLattice& lattice);
/// The whole congruence lattice, sorted. Throws SizeLimit above `cap`.
std::vector<Congruence> all_congruences(const FiniteLattice& lattice,
                                        std::size_t cap = kDefaultCongruenceCap);

FiniteLattice quotient(const FiniteLattice& lattice, const Congruence& c);

bool is_subdirectly_irreducible(const FiniteLattice& lattice);

/// Meet-irreducible congruences computed as the largest congruence avoiding
/// each join-irreducible one. Sorted.
std::vector<Congruence> meet_irreducible_congruences(const FiniteLattice& lattice,
                                                     std::size_t cap = kDefaultVarietyCap);
/// Same set, found by scanning all_congruences for elements with one upper cover.
std::vector<Congruence> meet_irreducible_congruences_by_scan(
    const FiniteLattice& lattice, std::size_t cap = kDefaultCongruenceCap);

/// Quotients by meet-irreducible congruences, one per isomorphism type,
/// ordered by canonical form.
std::vector<FiniteLattice> si_factors(const FiniteLattice& lattice,
                                      std::size_t cap = kDefaultVarietyCap);

struct VarietyCertificate {
  bool member = false;
  std::vector<FiniteLattice> factors;
  std::optional<FiniteLattice> offending;
};

VarietyCertificate n5_variety_certificate(const FiniteLattice& lattice,
                                          std::size_t cap = kDefaultVarietyCap);
bool in_n5_variety(const FiniteLattice& lattice, std::size_t cap = kDefaultVarietyCap);

}  // namespace latcheck
