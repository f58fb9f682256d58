#pragma once

// Distributive partitions, the Dec invariant, and the linear-sum shape
// classifier for finite distributive lattices.

#include <optional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck {

/// Blocks sorted internally; blocks ordered by least element.
struct DistributivePartition {
  std::vector<ElemSet> blocks;
  auto operator<=>(const DistributivePartition&) const = default;
};

struct PartitionCheck {
  bool ok = true;
  /// "block" (a block is not a convex distributive sublattice) or "pair".
  std::string clause;
  std::size_t first = 0, second = 0;
};

/// Throws NotAPartition when `blocks` does not partition the elements.
PartitionCheck check_distributive_partition(const FiniteLattice& lattice,
                                            const std::vector<ElemSet>& blocks);
bool is_distributive_partition(const FiniteLattice& lattice, const std::vector<ElemSet>& blocks);

inline constexpr std::size_t kDefaultDecCap = 32;

struct DecResult {
  int value = 0;
  DistributivePartition witness;
};

DecResult dec(const FiniteLattice& lattice, std::size_t cap = kDefaultDecCap);
/// Every partition attaining dec(lattice), sorted.
std::vector<DistributivePartition> minimum_distributive_partitions(
    const FiniteLattice& lattice, std::size_t cap = kDefaultDecCap);

enum class BlockShape { chain, two_times_chain, boolean3 };
std::string to_string(BlockShape s);

struct GJBlock {
  ElemSet elements;
  BlockShape shape;
};

/// Blocks listed bottom to top; every element of an earlier block lies below
/// every element of a later one.
struct GJDecomposition {
  std::vector<GJBlock> blocks;
};

/// Throws NotDistributive on a non-distributive input.
std::optional<GJDecomposition> gj_classify(const FiniteLattice& lattice);

}  // namespace latcheck
