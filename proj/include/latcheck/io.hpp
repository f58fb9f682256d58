#pragma once

// Lattice file format: {"name": ..., "elements": [...], "covers": [[lo, hi], ...]}
// where [lo, hi] means hi covers lo. Element order is index order.

#include <filesystem>
#include <string>

#include "latcheck/core.hpp"

namespace latcheck::io {

/// Parses the document; structural problems raise ParseError with the line
/// and column of the offending token.
CoverDiagram parse_diagram(const std::string& text);
/// parse_diagram followed by build_lattice.
FiniteLattice parse_lattice(const std::string& text);
FiniteLattice read_lattice_file(const std::filesystem::path& path);

/// Canonical text: two-space indentation, covers sorted, trailing newline.
std::string write_lattice(const FiniteLattice& lattice);
void write_lattice_file(const FiniteLattice& lattice, const std::filesystem::path& path);

}  // namespace latcheck::io
