#pragma once

// Sublattice embedding search and forbidden-sublattice profiles.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck {

/// Node budget used when a caller does not pass one. LATCHECK_BUDGET in the
/// environment overrides the built-in value.
std::uint64_t default_node_budget();

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 means default_node_budget()
};

/// One embedding of `pattern` as a sublattice of `host`, or nullopt when none
/// exists. Throws SearchBudgetExceeded if the search is cut short.
std::optional<EmbeddingWitness> find_embedding(const FiniteLattice& pattern,
                                               const FiniteLattice& host,
                                               SearchOptions opts = {});

/// Visits every embedding in search order; the visitor returns false to stop.
/// Returns the number of embeddings visited.
std::size_t for_each_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                               const std::function<bool(const EmbeddingWitness&)>& visit,
                               SearchOptions opts = {});

struct ForbiddenProfile {
  std::string name;
  std::vector<std::string> patterns;
};

/// Built-in profiles: N (M3, L1..L15), cor62, cor63, cor64, cor65, cor66.
ForbiddenProfile forbidden_profile(const std::string& name);
std::vector<std::string> forbidden_profile_names();
/// Catalog name of the dual lattice (L7 -> L8, N5 -> N5, ...).
std::string catalog_dual_name(const std::string& name);

struct ForbiddenHit {
  std::string pattern;
  EmbeddingWitness witness;
};

std::vector<ForbiddenHit> contains_forbidden(const FiniteLattice& host,
                                             const ForbiddenProfile& profile,
                                             SearchOptions opts = {});

}  // namespace latcheck
