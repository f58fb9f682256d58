#pragma once

// Built-in lattices: the diamond and pentagon, McKenzie's fifteen lattices
// L1..L15, Boolean cube, chains, 2×k grids and a few composite shapes.

#include <optional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck::catalog {

struct Expected {
  std::size_t size = 0;
  std::optional<bool> semidistributive;
  std::optional<bool> subdirectly_irreducible;
};

struct CatalogEntry {
  std::string name;
  CoverDiagram diagram;
  Expected expected;
};

/// Names accepted by get(): M3, N5, L1..L15, B3, stacked_n5, shape_2x5_plus,
/// and the families chain(k), grid(2,k), ninf(k).
FiniteLattice get(const std::string& name);
CatalogEntry entry(const std::string& name);

/// The seventeen entries of the M3/N5 + McKenzie table, in order M3, N5, L1..L15.
std::vector<std::string> mckenzie_table();
/// All fixed (non-parametrised) names.
std::vector<std::string> fixed_names();

struct SdSplit {
  std::vector<std::string> non_sd;
  std::vector<std::string> sd;
};
SdSplit mckenzie_semidistributive_split();

FiniteLattice chain(int k);
FiniteLattice grid(int rows, int k);
FiniteLattice ninf(int k);
FiniteLattice boolean_cube();

}  // namespace latcheck::catalog
