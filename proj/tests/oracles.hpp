#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw order matrices and share no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace oracle {

using latcheck::Elem;
using latcheck::ElemSet;
using latcheck::FiniteLattice;

using Order = std::vector<std::vector<bool>>;

inline Order order_of(const FiniteLattice& L) {
  Order o(L.size(), std::vector<bool>(L.size()));
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b) o[a][b] = L.leq(static_cast<Elem>(a), static_cast<Elem>(b));
  return o;
}

inline Order restrict(const Order& o, const std::vector<int>& subset) {
  Order r(subset.size(), std::vector<bool>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) r[i][j] = o[static_cast<std::size_t>(subset[i])][static_cast<std::size_t>(subset[j])];
  return r;
}

inline bool orders_isomorphic(const Order& a, const Order& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j)
        ok = a[i][j] == b[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return orders_isomorphic(order_of(a), order_of(b));
}

// Greatest lower bound computed from the order matrix alone; -1 if none.
inline int glb(const Order& o, int a, int b) {
  const int n = static_cast<int>(o.size());
  int best = -1;
  for (int x = 0; x < n; ++x) {
    if (!o[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] || !o[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)]) continue;
    bool greatest = true;
    for (int y = 0; y < n && greatest; ++y)
      if (o[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)] && o[static_cast<std::size_t>(y)][static_cast<std::size_t>(b)] && !o[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) greatest = false;
    if (greatest) best = x;
  }
  return best;
}

inline int lub(const Order& o, int a, int b) {
  const int n = static_cast<int>(o.size());
  int best = -1;
  for (int x = 0; x < n; ++x) {
    if (!o[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] || !o[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)]) continue;
    bool least = true;
    for (int y = 0; y < n && least; ++y)
      if (o[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)] && o[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)] && !o[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) least = false;
    if (least) best = x;
  }
  return best;
}

inline bool is_lattice_order(const Order& o) {
  const int n = static_cast<int>(o.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (glb(o, a, b) < 0 || lub(o, a, b) < 0) return false;
  return n > 0;
}

inline bool subset_closed(const FiniteLattice& L, const std::vector<int>& s) {
  std::vector<bool> in(L.size());
  for (int x : s) in[static_cast<std::size_t>(x)] = true;
  for (int a : s)
    for (int b : s)
      if (!in[static_cast<std::size_t>(L.meet(a, b))] || !in[static_cast<std::size_t>(L.join(a, b))]) return false;
  return true;
}

inline bool subset_convex(const FiniteLattice& L, const std::vector<int>& s) {
  std::vector<bool> in(L.size());
  for (int x : s) in[static_cast<std::size_t>(x)] = true;
  for (int a : s)
    for (int b : s)
      for (int c = 0; c < static_cast<int>(L.size()); ++c)
        if (L.leq(a, c) && L.leq(c, b) && !in[static_cast<std::size_t>(c)]) return false;
  return true;
}

inline bool subset_distributive(const FiniteLattice& L, const std::vector<int>& s) {
  for (int a : s)
    for (int b : s)
      for (int c : s)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

inline void for_each_subset(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(static_cast<int>(i));
    f(s);
  }
}

// Does P embed as a sublattice of H? Subset scan plus permutation isomorphism.
inline bool embeds(const FiniteLattice& P, const FiniteLattice& H) {
  const Order op = order_of(P), oh = order_of(H);
  bool found = false;
  for_each_subset(H.size(), [&](const std::vector<int>& s) {
    if (found || s.size() != P.size() || !subset_closed(H, s)) return;
    found = orders_isomorphic(op, restrict(oh, s));
  });
  return found;
}

// Every set partition of {0..n-1} as a block-label vector (restricted growth).
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> rg(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxb) {
    if (i == n) {
      f(rg);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rg[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 0) f(rg);
  else {
    rg[0] = 0;
    rec(1, 0);
  }
}

inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& rg) {
  int m = *std::max_element(rg.begin(), rg.end());
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m + 1));
  for (std::size_t i = 0; i < rg.size(); ++i) out[static_cast<std::size_t>(rg[i])].push_back(static_cast<int>(i));
  return out;
}

inline bool partition_is_congruence(const FiniteLattice& L, const std::vector<int>& rg) {
  const int n = static_cast<int>(L.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (rg[static_cast<std::size_t>(a)] != rg[static_cast<std::size_t>(b)]) continue;
      for (int c = 0; c < n; ++c)
        if (rg[static_cast<std::size_t>(L.join(a, c))] != rg[static_cast<std::size_t>(L.join(b, c))] ||
            rg[static_cast<std::size_t>(L.meet(a, c))] != rg[static_cast<std::size_t>(L.meet(b, c))])
          return false;
    }
  return true;
}

inline std::vector<std::vector<int>> congruences(const FiniteLattice& L) {
  std::vector<std::vector<int>> out;
  for_each_partition(L.size(), [&](const std::vector<int>& rg) {
    if (partition_is_congruence(L, rg)) out.push_back(rg);
  });
  return out;
}

// A distributive partition read straight off the definition: every block a
// convex distributive sublattice, and for two blocks whose union is a convex
// sublattice, that union is distributive.
inline bool is_distributive_partition(const FiniteLattice& L, const std::vector<std::vector<int>>& blocks) {
  for (const auto& b : blocks)
    if (!subset_closed(L, b) || !subset_convex(L, b) || !subset_distributive(L, b)) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<int> u = blocks[i];
      u.insert(u.end(), blocks[j].begin(), blocks[j].end());
      if (subset_closed(L, u) && subset_convex(L, u) && !subset_distributive(L, u)) return false;
    }
  return true;
}

inline int dec(const FiniteLattice& L) {
  int best = static_cast<int>(L.size());
  for_each_partition(L.size(), [&](const std::vector<int>& rg) {
    int count = *std::max_element(rg.begin(), rg.end()) + 1;
    if (count >= best) return;
    if (oracle::is_distributive_partition(L, blocks_of(rg))) best = count;
  });
  return best;
}

inline std::set<std::set<std::set<int>>> minimum_distributive_partitions(const FiniteLattice& L) {
  int best = oracle::dec(L);
  std::set<std::set<std::set<int>>> out;
  for_each_partition(L.size(), [&](const std::vector<int>& rg) {
    if (*std::max_element(rg.begin(), rg.end()) + 1 != best) return;
    auto blocks = blocks_of(rg);
    if (!oracle::is_distributive_partition(L, blocks)) return;
    std::set<std::set<int>> p;
    for (const auto& b : blocks) p.insert(std::set<int>(b.begin(), b.end()));
    out.insert(p);
  });
  return out;
}

// Isomorphism classes of lattices on n points: naturally labelled orders
// (i <= j only if i <= j as integers) with 0 the bottom and n-1 the top,
// filtered by the lattice axioms and deduplicated by brute-force isomorphism
// on the inner points.
inline std::vector<Order> lattices_of_size(int n) {
  std::vector<Order> reps;
  if (n <= 0) return reps;
  if (n == 1) return {Order{{true}}};
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) slots.emplace_back(i, j);
  std::vector<std::string> seen_keys;
  const std::size_t m = slots.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Order o(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) {
      o[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
      o[0][static_cast<std::size_t>(i)] = true;
      o[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] = true;
    }
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1u) o[static_cast<std::size_t>(slots[k].first)][static_cast<std::size_t>(slots[k].second)] = true;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        if (o[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          for (int c = 0; c < n && transitive; ++c)
            if (o[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] && !o[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) transitive = false;
    if (!transitive || !is_lattice_order(o)) continue;
    // Minimum relation string over permutations of inner points.
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
      std::string s;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.push_back(o[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])][static_cast<std::size_t>(p[static_cast<std::size_t>(b)])] ? '1' : '0');
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin() + 1, p.end() - 1));
    if (std::find(seen_keys.begin(), seen_keys.end(), best) == seen_keys.end()) {
      seen_keys.push_back(best);
      reps.push_back(o);
    }
  }
  return reps;
}

inline FiniteLattice lattice_from_order(const Order& o, const std::string& name = "oracle") {
  const std::size_t n = o.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = o[i][j] ? 1 : 0;
  }
  return FiniteLattice::from_order(name, labels, leq);
}

}  // namespace oracle
