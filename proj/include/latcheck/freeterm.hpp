#pragma once

// Words of the free lattice over named generators: Whitman's solution of the
// word problem, canonical forms, evaluation and bounded embedding search.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace latcheck::free {

enum class Kind : std::uint8_t { generator, join, meet };

/// Handle to a hash-consed term. Structurally equal terms share one id, so
/// canonical terms are equal iff their ids are.
class FreeTerm {
 public:
  FreeTerm() = default;

  std::uint32_t id() const noexcept { return id_; }
  Kind kind() const;
  /// Generator name; empty for joins and meets.
  const std::string& name() const;
  std::vector<FreeTerm> args() const;
  /// Generators have depth 0.
  int depth() const;

  bool operator==(const FreeTerm& o) const noexcept { return id_ == o.id_; }
  bool operator<(const FreeTerm& o) const noexcept { return id_ < o.id_; }

  static FreeTerm from_id(std::uint32_t id) {
    FreeTerm t;
    t.id_ = id;
    return t;
  }

 private:
  std::uint32_t id_ = 0;
};

FreeTerm generator(const std::string& name);
/// Builds the raw term; a single argument is returned unchanged.
FreeTerm join(const std::vector<FreeTerm>& args);
FreeTerm meet(const std::vector<FreeTerm>& args);
inline FreeTerm operator|(FreeTerm a, FreeTerm b) { return join({a, b}); }
inline FreeTerm operator&(FreeTerm a, FreeTerm b) { return meet({a, b}); }

bool leq(FreeTerm s, FreeTerm t);
bool term_equal(FreeTerm s, FreeTerm t);
FreeTerm canonicalize(FreeTerm t);
bool is_canonical(FreeTerm t);

/// The fixed total order used to sort arguments of canonical terms.
bool term_order_less(FreeTerm a, FreeTerm b);

/// `|` is join, `&` is meet and binds tighter; whitespace is ignored.
FreeTerm parse_term(const std::string& text);
std::string to_string(FreeTerm t);

Elem evaluate(FreeTerm t, const FiniteLattice& lattice,
              const std::map<std::string, Elem>& assignment);

/// True iff terms[x] (one per element) is an order embedding that sends the
/// lattice's meets and joins to meets and joins in the free lattice.
bool verify_free_embedding(const FiniteLattice& lattice, const std::vector<FreeTerm>& terms);

inline constexpr int kDefaultSearchGenerators = 3;
inline constexpr int kDefaultSearchDepth = 4;
inline constexpr std::size_t kDefaultPoolCap = 6000;

struct FreeSearchOptions {
  int generators = kDefaultSearchGenerators;
  int depth = kDefaultSearchDepth;
  std::size_t pool_cap = kDefaultPoolCap;
  std::uint64_t node_budget = 0;  // 0 means default_node_budget()
};

enum class FreeSearchStatus {
  found,
  /// Whitman's condition or semidistributivity fails, so no embedding exists.
  impossible,
  /// The bounded search space was exhausted without a witness.
  exhausted,
  /// The term pool hit its cap before reaching the requested depth.
  truncated,
};
std::string to_string(FreeSearchStatus s);

struct FreeSearchResult {
  FreeSearchStatus status = FreeSearchStatus::exhausted;
  std::vector<FreeTerm> terms;
  int depth_reached = -1;
  std::size_t pool_size = 0;
};

/// Iterative deepening over pools of canonical terms of growing depth. The
/// lattice laws are checked first; `search_even_if_impossible` skips that
/// shortcut. Throws SearchBudgetExceeded when the node budget runs out.
FreeSearchResult find_free_embedding(const FiniteLattice& lattice, FreeSearchOptions opts = {},
                                     bool search_even_if_impossible = false);

/// All distinct canonical terms of depth <= `depth` over the generators,
/// built level by level from binary joins and meets; stops once `cap` terms
/// exist (the flag reports whether that happened).
std::vector<FreeTerm> term_pool(const std::vector<FreeTerm>& generators, int depth,
                                std::size_t cap, bool* truncated = nullptr);

}  // namespace latcheck::free
