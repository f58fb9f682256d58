#pragma once

// Finite lattices: construction from cover data, order/meet/join tables and
// the structural operations everything else is built on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcheck/errors.hpp"

namespace latcheck {

using Elem = int;
using ElemSet = std::vector<Elem>;

/// Hasse-diagram description of a finite poset; `covers` holds (a, b) with b
/// covering a.
struct CoverDiagram {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

/// An immutable finite lattice with dense order and operation tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  std::size_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::optional<Elem> find(const std::string& label) const;
  Elem index_of(const std::string& label) const;

  bool leq(Elem a, Elem b) const noexcept { return leq_[idx(a, b)] != 0; }
  bool lt(Elem a, Elem b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const noexcept { return leq(a, b) || leq(b, a); }
  bool parallel(Elem a, Elem b) const noexcept { return !comparable(a, b); }
  Elem meet(Elem a, Elem b) const noexcept { return meet_[idx(a, b)]; }
  Elem join(Elem a, Elem b) const noexcept { return join_[idx(a, b)]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Elements covering `a` (its upper covers), ascending index order.
  const ElemSet& upper_covers(Elem a) const { return up_[static_cast<std::size_t>(a)]; }
  /// Elements covered by `a`.
  const ElemSet& lower_covers(Elem a) const { return down_[static_cast<std::size_t>(a)]; }
  bool covers(Elem lower, Elem upper) const;

  Elem meet_all(const ElemSet& xs) const;
  Elem join_all(const ElemSet& xs) const;

  /// Builds a lattice from a reflexive, antisymmetric, transitive relation
  /// given as a row-major n*n 0/1 matrix. Throws NotALattice when some pair
  /// has no glb or lub.
  static FiniteLattice from_order(std::string name, std::vector<std::string> labels,
                                  std::vector<std::uint8_t> leq);

  FiniteLattice renamed(std::string name) const {
    FiniteLattice copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  std::size_t idx(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
  }

  std::size_t n_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_;
  std::vector<ElemSet> up_, down_;
  Elem bottom_ = 0, top_ = 0;
};

/// Injective lattice homomorphism from `source` into `target`; map[i] is the
/// image of source element i.
struct EmbeddingWitness {
  std::vector<Elem> map;
};

/// True iff `w.map` is an injective meet/join homomorphism.
bool is_embedding(const FiniteLattice& source, const FiniteLattice& target,
                  const EmbeddingWitness& w);

FiniteLattice build_lattice(const CoverDiagram& d);
CoverDiagram to_diagram(const FiniteLattice& lattice);

FiniteLattice dual(const FiniteLattice& lattice);

inline constexpr std::size_t kDefaultProductCap = 1024;
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b,
                             std::size_t cap = kDefaultProductCap);

/// Closure of `seeds` under meet and join, sorted ascending.
ElemSet generated_sublattice(const FiniteLattice& lattice, const ElemSet& seeds);
bool is_sublattice(const FiniteLattice& lattice, const ElemSet& subset);
bool is_convex(const FiniteLattice& lattice, const ElemSet& subset);
/// The induced lattice on a meet/join-closed subset (labels are kept).
FiniteLattice induced_sublattice(const FiniteLattice& lattice, const ElemSet& subset,
                                 std::string name = {});
/// Elements x with a <= x <= b.
ElemSet interval(const FiniteLattice& lattice, Elem a, Elem b);

/// Isomorphism-invariant string: equal iff the lattices are isomorphic.
std::string canonical_form(const FiniteLattice& lattice);
/// Canonical form together with the relabeling that produced it:
/// order[k] is the element placed at canonical position k.
std::pair<std::string, std::vector<Elem>> canonical_labeling(const FiniteLattice& lattice);
bool isomorphic(const FiniteLattice& a, const FiniteLattice& b);
/// Short stable hex digest of the canonical form.
std::string canonical_hash(const FiniteLattice& lattice);

ElemSet atoms(const FiniteLattice& lattice);
ElemSet coatoms(const FiniteLattice& lattice);
/// Visits every maximal antichain (sorted ascending). Return false from the
/// visitor to stop early.
void for_each_maximal_antichain(const FiniteLattice& lattice,
                                const std::function<bool(const ElemSet&)>& visit);
std::vector<ElemSet> maximal_antichains(const FiniteLattice& lattice);

/// Longest chain ending at each element (bottom has height 0).
std::vector<int> heights(const FiniteLattice& lattice);
/// Longest chain starting at each element (top has depth 0).
std::vector<int> depths(const FiniteLattice& lattice);

}  // namespace latcheck
