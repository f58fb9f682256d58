#pragma once

// All lattices of a given size up to isomorphism.

#include <functional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck {

inline constexpr int kDefaultEnumerationCap = 9;

/// One representative per isomorphism class, ordered by canonical form. The
/// elements of each representative are in canonical order, labelled e0, e1, ...
/// Throws SizeLimit when n exceeds `cap` and BadParameter when n < 1.
const std::vector<FiniteLattice>& all_lattices(int n, int cap = kDefaultEnumerationCap);

struct LatticeFilter {
  std::string name;
  std::function<bool(const FiniteLattice&)> accepts;
};

/// Parses a comma-separated list drawn from sd, whitman, distributive,
/// in_n5 and profile(NAME). The profile filter keeps lattices containing no
/// pattern of the named forbidden profile.
std::vector<LatticeFilter> parse_filters(const std::string& spec);

std::vector<FiniteLattice> filtered(int n, const std::vector<LatticeFilter>& filters,
                                    int cap = kDefaultEnumerationCap);

}  // namespace latcheck
