#pragma once

// Executable forms of the structure theorems: each check scans a lattice for
// hypothesis instances and records any instance whose conclusion fails.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck {

enum class ReportStatus { pass, violated, skipped, vacuous };
std::string to_string(ReportStatus s);

struct Violation {
  ElemSet witness;
  std::vector<std::string> labels;  // of the witness elements
  std::string note;
};

struct TheoremReport {
  std::string theorem;
  std::string lattice;
  std::string hash;
  ReportStatus status = ReportStatus::vacuous;
  std::size_t hypothesis_instances = 0;
  std::vector<Violation> violations;
  bool vacuous = true;
  std::string skip_reason;
  double elapsed_seconds = 0;
};

/// Facts the gates consult, computed once per lattice.
struct Premises {
  bool whitman = false;
  bool semidistributive = false;
  bool no_doubly_reducible = false;
  bool in_n5 = false;
  std::string doubly_reducible_label;
  std::string variety_reason;
};
Premises compute_premises(const FiniteLattice& lattice);

struct CheckOptions {
  const Premises* premises = nullptr;  // computed on demand when null
  bool ignore_gate = false;            // the caller has established the hypotheses
  std::size_t max_violations = 16;     // stored witnesses; counting continues
  std::uint64_t node_budget = 0;       // embedding searches; 0 means default
};

enum class Side { meet, join };

/// Six elements a1<a2<a3, b1<b2<b3 with the crossing conditions; requires
/// no doubly reducible elements. Conclusion: L15 embeds.
TheoremReport lemma_l15_check(const FiniteLattice& lattice, const CheckOptions& opts = {});
/// tuple = (a1, a2, a3, b1, b2, b3). Builds the ten elements of the proof and
/// returns the map from L15 (catalog order). Throws HypothesisViolated.
EmbeddingWitness lemma_l15_witness(const FiniteLattice& lattice, const std::array<Elem, 6>& tuple);

/// Antichains with constant pairwise meet (join side: join) d have at most
/// three elements, at least |Y| - 2 of which cover d (are covered by d).
/// Requires Whitman's condition and membership in N.
TheoremReport cube_theorem_check(const FiniteLattice& lattice, Side side = Side::meet,
                                 const CheckOptions& opts = {});
/// The eight-element cube spanned by (a∨b)∧(c∨a), (a∨b)∧(b∨c), (c∨a)∧(b∨c)
/// over d; map from the catalog B3. Throws HypothesisViolated.
EmbeddingWitness boolean_cube_witness(const FiniteLattice& lattice, const std::array<Elem, 3>& y,
                                      Elem d);

/// Only the three-element case with the cover count, no size bound; used by
/// the one-sided corollary profiles.
TheoremReport three_antichain_cover_check(const FiniteLattice& lattice, Side side,
                                          const CheckOptions& opts = {});

/// For every sublattice K and every a incomparable to all of K:
/// dec(K) <= |{a∨b}| * |{a∧b}|. Requires Whitman and membership in N.
TheoremReport dec_bound_check(const FiniteLattice& lattice, const CheckOptions& opts = {});

/// For every convex sublattice K and a incomparable to all of K: one of the
/// fibres {a∨b}, {a∧b} has at least three elements, or K is distributive.
TheoremReport degeneracy_lemma_check(const FiniteLattice& lattice, const CheckOptions& opts = {});

/// No 2x5 grid sublattice admits the extra elements c (a < c < b) and
/// s (a < s < y) in the depicted twelve-element configuration. Requires
/// membership in N and no doubly reducible elements.
TheoremReport twelve_element_lemma_check(const FiniteLattice& lattice, const CheckOptions& opts = {});

/// a incomparable to b1 < ... < b5 with a∨b1 < ... < a∨b5: if
/// (a∨b4)∧b5 != b4 then (a∨b3)∧b5 is covered by a∨b3. The join side checks
/// the dual statement. Requires membership in N and no doubly reducible
/// elements.
TheoremReport staircase_cover_check(const FiniteLattice& lattice, Side side = Side::meet,
                                    const CheckOptions& opts = {});

/// Ids accepted by run_theorem.
std::vector<std::string> theorem_ids();
TheoremReport run_theorem(const std::string& id, const FiniteLattice& lattice,
                          const CheckOptions& opts = {});

/// N-full, cor62, cor63, cor64, cor65, cor66.
std::vector<std::string> profile_ids();
/// Theorem ids a profile runs.
std::vector<std::string> profile_theorems(const std::string& profile);
/// Runs the profile's theorems. N-full gates each theorem on its own
/// hypotheses; the corollary profiles gate on Whitman, semidistributivity and
/// absence of the profile's forbidden sublattices.
std::vector<TheoremReport> run_profile(const FiniteLattice& lattice, const std::string& profile,
                                       const CheckOptions& opts = {});

struct HarnessRow {
  std::string theorem;
  std::size_t lattices = 0;
  std::size_t passed = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;
  std::size_t violated = 0;
  std::size_t hypothesis_instances = 0;
  /// Smallest lattice size with a hypothesis instance, if any.
  std::optional<int> smallest_nonvacuous;
  std::vector<TheoremReport> violations;
};

struct HarnessOptions {
  std::vector<int> sizes;
  std::vector<std::string> theorems;  // empty: the profile's list
  std::string profile = "N-full";
  std::uint64_t node_budget = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs theorems over every enumerated lattice of the given sizes. Rows
/// follow the theorem order; per-lattice work may run concurrently but the
/// result does not depend on scheduling.
std::vector<HarnessRow> run_harness(const HarnessOptions& opts);

}  // namespace latcheck
