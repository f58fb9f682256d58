#include "latcheck/variety.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "latcheck/catalog.hpp"

namespace latcheck {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

Congruence normalise(UnionFind& uf, std::size_t n) {
  Congruence c;
  c.block_of.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  int next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    int r = uf.find(static_cast<int>(x));
    auto& id = id_of_root[static_cast<std::size_t>(r)];
    if (id < 0) id = next++;
    c.block_of[x] = id;
  }
  return c;
}

// Merges until every pair (x, representative) is compatible with all c.
void close_under_operations(const FiniteLattice& L, UnionFind& uf) {
  const Elem n = static_cast<Elem>(L.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      Elem r = uf.find(x);
      if (r == x) continue;
      for (Elem c = 0; c < n; ++c) {
        changed |= uf.unite(L.join(x, c), L.join(r, c));
        changed |= uf.unite(L.meet(x, c), L.meet(r, c));
      }
    }
  }
}

void unite_congruence(UnionFind& uf, const Congruence& c) {
  std::vector<int> first(c.block_of.size(), -1);
  for (std::size_t x = 0; x < c.block_of.size(); ++x) {
    auto& f = first[static_cast<std::size_t>(c.block_of[x])];
    if (f < 0) f = static_cast<int>(x);
    else uf.unite(f, static_cast<int>(x));
  }
}

}  // namespace

std::size_t Congruence::block_count() const {
  int m = -1;
  for (int b : block_of) m = std::max(m, b);
  return static_cast<std::size_t>(m + 1);
}

std::vector<ElemSet> Congruence::blocks() const {
  std::vector<ElemSet> out(block_count());
  for (std::size_t x = 0; x < block_of.size(); ++x)
    out[static_cast<std::size_t>(block_of[x])].push_back(static_cast<Elem>(x));
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  std::vector<int> image(block_count(), -1);
  for (std::size_t x = 0; x < block_of.size(); ++x) {
    int& img = image[static_cast<std::size_t>(block_of[x])];
    if (img < 0) img = other.block_of[x];
    else if (img != other.block_of[x]) return false;
  }
  return true;
}

Congruence identity_congruence(const FiniteLattice& L) {
  Congruence c;
  c.block_of.resize(L.size());
  std::iota(c.block_of.begin(), c.block_of.end(), 0);
  return c;
}

Congruence total_congruence(const FiniteLattice& L) {
  Congruence c;
  c.block_of.assign(L.size(), 0);
  return c;
}

Congruence congruence_from_blocks(const FiniteLattice& L, const std::vector<ElemSet>& blocks) {
  const std::size_t n = L.size();
  std::vector<int> seen(n, 0);
  UnionFind uf(n);
  for (const auto& b : blocks) {
    if (b.empty()) throw NotAPartition("empty block");
    for (Elem x : b) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw NotAPartition("element out of range");
      if (seen[static_cast<std::size_t>(x)]++) throw NotAPartition("element " + L.label(x) + " in two blocks");
      uf.unite(b.front(), x);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!seen[x]) throw NotAPartition("element " + L.label(static_cast<Elem>(x)) + " not covered");
  return normalise(uf, n);
}

bool is_congruence(const FiniteLattice& L, const Congruence& c) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (!c.same(a, b)) continue;
      for (Elem x = 0; x < n; ++x)
        if (!c.same(L.join(a, x), L.join(b, x)) || !c.same(L.meet(a, x), L.meet(b, x)))
          return false;
    }
  return true;
}

Congruence principal_congruence(const FiniteLattice& L, Elem a, Elem b) {
  UnionFind uf(L.size());
  uf.unite(a, b);
  close_under_operations(L, uf);
  return normalise(uf, L.size());
}

Congruence join_congruences(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.block_of.size());
  unite_congruence(uf, a);
  unite_congruence(uf, b);
  return normalise(uf, a.block_of.size());
}

Congruence meet_congruences(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.block_of.size();
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (a.block_of[x] == a.block_of[y] && b.block_of[x] == b.block_of[y])
        uf.unite(static_cast<int>(x), static_cast<int>(y));
  return normalise(uf, n);
}

std::vector<Congruence> cover_congruences(const FiniteLattice& L) {
  std::set<Congruence> out;
  for (Elem a = 0; a < static_cast<Elem>(L.size()); ++a)
    for (Elem b : L.upper_covers(a)) out.insert(principal_congruence(L, a, b));
  return {out.begin(), out.end()};
}

std::vector<Congruence> all_congruences(const FiniteLattice& L, std::size_t cap) {
  if (L.size() > cap) throw SizeLimit("all_congruences", L.size(), cap);
  auto gens = cover_congruences(L);
  std::set<Congruence> seen{identity_congruence(L)};
  std::vector<Congruence> frontier{identity_congruence(L)};
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier)
      for (const auto& g : gens) {
        auto j = join_congruences(c, g);
        if (seen.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

FiniteLattice quotient(const FiniteLattice& L, const Congruence& c) {
  auto blocks = c.blocks();
  const std::size_t m = blocks.size();
  std::vector<std::string> labels;
  for (const auto& b : blocks) labels.push_back(L.label(L.meet_all(b)));
  std::vector<std::uint8_t> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem x = blocks[i].front(), y = blocks[j].front();
      leq[i * m + j] = c.same(L.join(x, y), y) ? 1 : 0;
    }
  return FiniteLattice::from_order(L.name() + "/theta", std::move(labels), std::move(leq));
}

bool is_subdirectly_irreducible(const FiniteLattice& L) {
  if (L.size() < 2) return false;
  auto gens = cover_congruences(L);
  std::size_t minimal = 0;
  for (const auto& g : gens) {
    bool is_min = true;
    for (const auto& h : gens)
      if (h != g && h.refines(g)) {
        is_min = false;
        break;
      }
    if (is_min) ++minimal;
  }
  return minimal == 1;
}

std::vector<Congruence> meet_irreducible_congruences(const FiniteLattice& L, std::size_t cap) {
  if (L.size() > cap) throw SizeLimit("meet_irreducible_congruences", L.size(), cap);
  auto gens = cover_congruences(L);
  std::set<Congruence> out;
  for (const auto& alpha : gens) {
    Congruence k = identity_congruence(L);
    for (const auto& beta : gens)
      if (!alpha.refines(beta)) k = join_congruences(k, beta);
    out.insert(k);
  }
  return {out.begin(), out.end()};
}

std::vector<Congruence> meet_irreducible_congruences_by_scan(const FiniteLattice& L,
                                                             std::size_t cap) {
  auto all = all_congruences(L, cap);
  std::vector<Congruence> out;
  for (const auto& c : all) {
    if (c.is_total()) continue;
    std::vector<const Congruence*> above;
    for (const auto& d : all)
      if (d != c && c.refines(d)) above.push_back(&d);
    std::size_t minimal = 0;
    for (const auto* d : above) {
      bool is_min = true;
      for (const auto* e : above)
        if (e != d && e->refines(*d)) {
          is_min = false;
          break;
        }
      if (is_min) ++minimal;
    }
    if (minimal == 1) out.push_back(c);
  }
  return out;
}

std::vector<FiniteLattice> si_factors(const FiniteLattice& L, std::size_t cap) {
  std::vector<std::pair<std::string, FiniteLattice>> keyed;
  std::set<std::string> seen;
  for (const auto& c : meet_irreducible_congruences(L, cap)) {
    auto q = quotient(L, c);
    auto form = canonical_form(q);
    if (seen.insert(form).second) keyed.emplace_back(std::move(form), std::move(q));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FiniteLattice> out;
  for (auto& [form, q] : keyed) out.push_back(std::move(q));
  return out;
}

VarietyCertificate n5_variety_certificate(const FiniteLattice& L, std::size_t cap) {
  static const std::string two = canonical_form(catalog::chain(2));
  static const std::string one = canonical_form(catalog::chain(1));
  static const std::string n5 = canonical_form(catalog::get("N5"));
  VarietyCertificate cert;
  cert.factors = si_factors(L, cap);
  cert.member = true;
  for (const auto& f : cert.factors) {
    auto form = canonical_form(f);
    if (form != one && form != two && form != n5) {
      cert.member = false;
      cert.offending = f;
      break;
    }
  }
  return cert;
}

bool in_n5_variety(const FiniteLattice& L, std::size_t cap) {
  return n5_variety_certificate(L, cap).member;
}

}  // namespace latcheck
