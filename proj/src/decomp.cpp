#include "latcheck/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "latcheck/catalog.hpp"
#include "latcheck/laws.hpp"

namespace latcheck {

namespace {

using Mask = std::uint64_t;

bool subset_distributive(const FiniteLattice& L, const ElemSet& s) {
  for (Elem a : s)
    for (Elem b : s)
      for (Elem c : s)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

bool convex_sublattice(const FiniteLattice& L, const ElemSet& s) {
  return is_sublattice(L, s) && is_convex(L, s);
}

ElemSet sorted_union(const ElemSet& a, const ElemSet& b) {
  ElemSet u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  return u;
}

// Convex sublattices of a finite lattice are exactly its intervals; the search
// works over intervals encoded as bit masks.
class DecSearch {
 public:
  DecSearch(const FiniteLattice& L) : L_(L), n_(L.size()) {
    const auto h = heights(L);
    for (Elem x = 0; x < static_cast<Elem>(n_); ++x) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Elem a, Elem b) { return h[static_cast<std::size_t>(a)] < h[static_cast<std::size_t>(b)]; });
    iv_.assign(n_ * n_, 0);
    dist_.assign(n_ * n_, 0);
    for (Elem a = 0; a < static_cast<Elem>(n_); ++a)
      for (Elem b = 0; b < static_cast<Elem>(n_); ++b) {
        if (!L.leq(a, b)) continue;
        auto s = interval(L, a, b);
        Mask m = 0;
        for (Elem x : s) m |= Mask{1} << x;
        iv_[at(a, b)] = m;
        dist_[at(a, b)] = subset_distributive(L, s) ? 1 : 0;
      }
    for (Elem x = 0; x < static_cast<Elem>(n_); ++x) {
      std::vector<Elem> tops;
      for (Elem y = 0; y < static_cast<Elem>(n_); ++y)
        if (L.leq(x, y) && dist_[at(x, y)]) tops.push_back(y);
      std::stable_sort(tops.begin(), tops.end(), [&](Elem a, Elem b) {
        return std::popcount(iv_[at(x, a)]) > std::popcount(iv_[at(x, b)]);
      });
      candidates_.push_back(std::move(tops));
    }
  }

  // Visits partitions with fewer than `bound()` blocks, or at most `bound()`
  // when `inclusive`.
  void run(const std::function<int()>& bound, bool inclusive,
           const std::function<void(const std::vector<std::pair<Elem, Elem>>&)>& found) {
    bound_ = &bound;
    inclusive_ = inclusive;
    found_ = &found;
    blocks_.clear();
    rec(0);
  }

 private:
  std::size_t at(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b); }

  bool pair_ok(std::pair<Elem, Elem> p, std::pair<Elem, Elem> q) const {
    Elem lo = L_.meet(p.first, q.first), hi = L_.join(p.second, q.second);
    Mask u = iv_[at(p.first, p.second)] | iv_[at(q.first, q.second)];
    if (iv_[at(lo, hi)] != u) return true;  // union is not a convex sublattice
    return dist_[at(lo, hi)] != 0;
  }

  bool within_bound(std::size_t count) const {
    int b = (*bound_)();
    return inclusive_ ? static_cast<int>(count) <= b : static_cast<int>(count) < b;
  }

  void rec(Mask assigned) {
    std::size_t next = 0;
    while (next < n_ && (assigned >> order_[next] & 1u)) ++next;
    if (next == n_) {
      (*found_)(blocks_);
      return;
    }
    if (!within_bound(blocks_.size() + 1)) return;
    Elem x = order_[next];
    for (Elem y : candidates_[static_cast<std::size_t>(x)]) {
      Mask m = iv_[at(x, y)];
      if (m & assigned) continue;
      std::pair<Elem, Elem> blk{x, y};
      bool ok = true;
      for (const auto& other : blocks_)
        if (!pair_ok(other, blk)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      blocks_.push_back(blk);
      rec(assigned | m);
      blocks_.pop_back();
      if (!within_bound(blocks_.size() + 1)) return;
    }
  }

  const FiniteLattice& L_;
  std::size_t n_;
  std::vector<Elem> order_;
  std::vector<Mask> iv_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<std::pair<Elem, Elem>> blocks_;
  const std::function<int()>* bound_ = nullptr;
  bool inclusive_ = false;
  const std::function<void(const std::vector<std::pair<Elem, Elem>>&)>* found_ = nullptr;
};

DistributivePartition to_partition(const FiniteLattice& L,
                                   const std::vector<std::pair<Elem, Elem>>& ivs) {
  DistributivePartition p;
  for (const auto& [a, b] : ivs) p.blocks.push_back(interval(L, a, b));
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

void check_cap(const FiniteLattice& L, std::size_t cap, const char* what) {
  std::size_t limit = std::min<std::size_t>(cap, 64);
  if (L.size() > limit) throw SizeLimit(what, L.size(), limit);
}

}  // namespace

PartitionCheck check_distributive_partition(const FiniteLattice& L,
                                            const std::vector<ElemSet>& blocks) {
  std::vector<int> seen(L.size(), 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw NotAPartition("empty block");
    for (Elem x : b) {
      if (x < 0 || static_cast<std::size_t>(x) >= L.size()) throw NotAPartition("element out of range");
      if (seen[static_cast<std::size_t>(x)]++) throw NotAPartition("element " + L.label(x) + " repeated");
    }
  }
  for (std::size_t x = 0; x < L.size(); ++x)
    if (!seen[x]) throw NotAPartition("element " + L.label(static_cast<Elem>(x)) + " missing");

  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (!convex_sublattice(L, blocks[i]) || !subset_distributive(L, blocks[i]))
      return {false, "block", i, i};
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      auto u = sorted_union(blocks[i], blocks[j]);
      if (convex_sublattice(L, u) && !subset_distributive(L, u)) return {false, "pair", i, j};
    }
  return {};
}

bool is_distributive_partition(const FiniteLattice& L, const std::vector<ElemSet>& blocks) {
  return check_distributive_partition(L, blocks).ok;
}

DecResult dec(const FiniteLattice& L, std::size_t cap) {
  check_cap(L, cap, "dec");
  DecSearch search(L);
  int best = static_cast<int>(L.size()) + 1;
  std::vector<std::pair<Elem, Elem>> best_blocks;
  search.run([&] { return best; }, false, [&](const auto& blocks) {
    best = static_cast<int>(blocks.size());
    best_blocks = blocks;
  });
  return {best, to_partition(L, best_blocks)};
}

std::vector<DistributivePartition> minimum_distributive_partitions(const FiniteLattice& L,
                                                                   std::size_t cap) {
  const int best = dec(L, cap).value;
  DecSearch search(L);
  std::vector<DistributivePartition> out;
  search.run([&] { return best; }, true,
             [&](const auto& blocks) { out.push_back(to_partition(L, blocks)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(BlockShape s) {
  switch (s) {
    case BlockShape::chain: return "chain";
    case BlockShape::two_times_chain: return "two_times_chain";
    case BlockShape::boolean3: return "boolean3";
  }
  return "?";
}

std::optional<GJDecomposition> gj_classify(const FiniteLattice& L) {
  if (!distributive(L)) throw NotDistributive();
  const Elem n = static_cast<Elem>(L.size());
  const auto h = heights(L);

  std::vector<Elem> cuts;
  for (Elem x = 0; x < n; ++x) {
    bool cut = true;
    for (Elem y = 0; y < n && cut; ++y) cut = L.comparable(x, y);
    if (cut) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end(), [&](Elem a, Elem b) { return h[static_cast<std::size_t>(a)] < h[static_cast<std::size_t>(b)]; });

  static const std::string b3 = canonical_form(catalog::boolean_cube());
  GJDecomposition out;
  ElemSet run;  // pending chain elements
  std::vector<std::uint8_t> taken(L.size(), 0);
  auto flush = [&] {
    if (!run.empty()) out.blocks.push_back({run, BlockShape::chain});
    run.clear();
  };

  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Elem c = cuts[i];
    if (!taken[static_cast<std::size_t>(c)]) run.push_back(c);
    if (i + 1 == cuts.size()) break;
    Elem d = cuts[i + 1];
    auto iv = interval(L, c, d);
    if (iv.size() == 2) continue;
    // Non-chain segment: it must be a whole block containing both cuts.
    if (taken[static_cast<std::size_t>(c)]) return std::nullopt;
    run.pop_back();
    flush();
    std::sort(iv.begin(), iv.end());
    auto sub = induced_sublattice(L, iv);
    auto form = canonical_form(sub);
    BlockShape shape;
    if (form == b3) {
      shape = BlockShape::boolean3;
    } else if (iv.size() % 2 == 0 && iv.size() >= 4 &&
               form == canonical_form(catalog::grid(2, static_cast<int>(iv.size() / 2)))) {
      shape = BlockShape::two_times_chain;
    } else {
      return std::nullopt;
    }
    out.blocks.push_back({iv, shape});
    taken[static_cast<std::size_t>(c)] = taken[static_cast<std::size_t>(d)] = 1;
  }
  flush();
  return out;
}

}  // namespace latcheck
