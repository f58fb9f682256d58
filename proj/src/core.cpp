#include "latcheck/core.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace latcheck {

std::optional<Elem> FiniteLattice::find(const std::string& label) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem FiniteLattice::index_of(const std::string& label) const {
  if (auto e = find(label)) return *e;
  throw UnknownName(label);
}

bool FiniteLattice::covers(Elem lower, Elem upper) const {
  const auto& up = upper_covers(lower);
  return std::find(up.begin(), up.end(), upper) != up.end();
}

Elem FiniteLattice::meet_all(const ElemSet& xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_all(const ElemSet& xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

FiniteLattice FiniteLattice::from_order(std::string name, std::vector<std::string> labels,
                                        std::vector<std::uint8_t> leq) {
  FiniteLattice L;
  L.n_ = labels.size();
  if (L.n_ == 0) throw InvalidDiagram("a lattice needs at least one element");
  if (leq.size() != L.n_ * L.n_) throw InvalidDiagram("order matrix has wrong size");
  L.name_ = std::move(name);
  L.labels_ = std::move(labels);
  L.leq_ = std::move(leq);
  const auto n = static_cast<Elem>(L.n_);

  L.meet_.assign(L.n_ * L.n_, 0);
  L.join_.assign(L.n_ * L.n_, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      // glb: the lower bound that sits above every other lower bound
      std::optional<Elem> glb, lub;
      for (Elem c = 0; c < n; ++c) {
        if (L.leq(c, a) && L.leq(c, b) && (!glb || L.leq(*glb, c))) glb = c;
        if (L.leq(a, c) && L.leq(b, c) && (!lub || L.leq(c, *lub))) lub = c;
      }
      auto check = [&](std::optional<Elem> cand, bool lower, const char* op) {
        if (!cand) throw NotALattice(L.labels_[a], L.labels_[b], op);
        for (Elem c = 0; c < n; ++c) {
          bool bound = lower ? (L.leq(c, a) && L.leq(c, b)) : (L.leq(a, c) && L.leq(b, c));
          if (bound && !(lower ? L.leq(c, *cand) : L.leq(*cand, c)))
            throw NotALattice(L.labels_[a], L.labels_[b], op);
        }
      };
      check(glb, true, "meet");
      check(lub, false, "join");
      L.meet_[L.idx(a, b)] = L.meet_[L.idx(b, a)] = *glb;
      L.join_[L.idx(a, b)] = L.join_[L.idx(b, a)] = *lub;
    }
  }

  L.bottom_ = L.meet_all([&] {
    ElemSet all(L.n_);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  L.top_ = 0;
  for (Elem a = 0; a < n; ++a) L.top_ = L.join(L.top_, a);

  L.up_.assign(L.n_, {});
  L.down_.assign(L.n_, {});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!L.lt(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c) {
        if (L.lt(a, c) && L.lt(c, b)) cover = false;
      }
      if (cover) {
        L.up_[a].push_back(b);
        L.down_[b].push_back(a);
      }
    }
  }
  return L;
}

FiniteLattice build_lattice(const CoverDiagram& d) {
  const std::size_t n = d.elements.size();
  if (n == 0) throw InvalidDiagram("diagram has no elements");
  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(d.elements[i], static_cast<Elem>(i)).second)
      throw DuplicateLabel(d.elements[i]);
  }
  std::vector<std::uint8_t> rel(n * n, 0);
  std::set<std::pair<Elem, Elem>> seen;
  for (const auto& [lo, hi] : d.covers) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end()) throw InvalidDiagram("cover mentions unknown element '" + lo + "'");
    if (h == index.end()) throw InvalidDiagram("cover mentions unknown element '" + hi + "'");
    if (l->second == h->second) throw CyclicCovers(lo);
    if (!seen.emplace(l->second, h->second).second)
      throw InvalidDiagram("cover (" + lo + ", " + hi + ") listed twice");
    rel[static_cast<std::size_t>(l->second) * n + static_cast<std::size_t>(h->second)] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i]) throw CyclicCovers(d.elements[i]);
  return FiniteLattice::from_order(d.name, d.elements, std::move(rel));
}

CoverDiagram to_diagram(const FiniteLattice& L) {
  CoverDiagram d;
  d.name = L.name();
  d.elements = L.labels();
  for (Elem a = 0; a < static_cast<Elem>(L.size()); ++a)
    for (Elem b : L.upper_covers(a)) d.covers.emplace_back(L.label(a), L.label(b));
  std::sort(d.covers.begin(), d.covers.end());
  return d;
}

bool is_embedding(const FiniteLattice& s, const FiniteLattice& t, const EmbeddingWitness& w) {
  const auto n = static_cast<Elem>(s.size());
  if (w.map.size() != s.size()) return false;
  std::set<Elem> image;
  for (Elem x : w.map) {
    if (x < 0 || x >= static_cast<Elem>(t.size())) return false;
    if (!image.insert(x).second) return false;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (w.map[s.meet(a, b)] != t.meet(w.map[a], w.map[b])) return false;
      if (w.map[s.join(a, b)] != t.join(w.map[a], w.map[b])) return false;
    }
  return true;
}

FiniteLattice dual(const FiniteLattice& L) {
  const std::size_t n = L.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i * n + j] = L.leq(static_cast<Elem>(j), static_cast<Elem>(i)) ? 1 : 0;
  return FiniteLattice::from_order(L.name().empty() ? "" : "dual(" + L.name() + ")", L.labels(),
                                   std::move(rel));
}

FiniteLattice direct_product(const FiniteLattice& A, const FiniteLattice& B, std::size_t cap) {
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  if (n > cap) throw SizeLimit("direct product", n, cap);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels.push_back(A.label(static_cast<Elem>(i)) + "." + B.label(static_cast<Elem>(j)));
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto ai = static_cast<Elem>(p / nb), bi = static_cast<Elem>(p % nb);
      auto aj = static_cast<Elem>(q / nb), bj = static_cast<Elem>(q % nb);
      rel[p * n + q] = (A.leq(ai, aj) && B.leq(bi, bj)) ? 1 : 0;
    }
  return FiniteLattice::from_order(A.name() + "x" + B.name(), std::move(labels), std::move(rel));
}

ElemSet generated_sublattice(const FiniteLattice& L, const ElemSet& seeds) {
  if (seeds.empty()) throw EmptySeeds();
  std::vector<char> in(L.size(), 0);
  ElemSet members;
  for (Elem s : seeds) {
    if (s < 0 || s >= static_cast<Elem>(L.size())) throw BadParameter("seed index out of range");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem c : {L.meet(members[i], members[j]), L.join(members[i], members[j])}) {
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_sublattice(const FiniteLattice& L, const ElemSet& subset) {
  if (subset.empty()) return false;
  std::vector<char> in(L.size(), 0);
  for (Elem x : subset) in[x] = 1;
  for (Elem a : subset)
    for (Elem b : subset)
      if (!in[L.meet(a, b)] || !in[L.join(a, b)]) return false;
  return true;
}

bool is_convex(const FiniteLattice& L, const ElemSet& subset) {
  std::vector<char> in(L.size(), 0);
  for (Elem x : subset) in[x] = 1;
  for (Elem a : subset)
    for (Elem b : subset) {
      if (!L.leq(a, b)) continue;
      for (Elem c = 0; c < static_cast<Elem>(L.size()); ++c)
        if (!in[c] && L.leq(a, c) && L.leq(c, b)) return false;
    }
  return true;
}

FiniteLattice induced_sublattice(const FiniteLattice& L, const ElemSet& subset, std::string name) {
  ElemSet sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  std::vector<std::string> labels;
  for (Elem x : sorted) labels.push_back(L.label(x));
  std::vector<std::uint8_t> rel(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = L.leq(sorted[i], sorted[j]) ? 1 : 0;
  return FiniteLattice::from_order(std::move(name), std::move(labels), std::move(rel));
}

ElemSet interval(const FiniteLattice& L, Elem a, Elem b) {
  ElemSet out;
  for (Elem c = 0; c < static_cast<Elem>(L.size()); ++c)
    if (L.leq(a, c) && L.leq(c, b)) out.push_back(c);
  return out;
}

std::vector<int> heights(const FiniteLattice& L) {
  const auto n = static_cast<Elem>(L.size());
  std::vector<Elem> order(L.size());
  std::iota(order.begin(), order.end(), 0);
  // count of elements below is a linear extension
  std::vector<int> below(L.size(), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) below[a] += L.leq(b, a) ? 1 : 0;
  std::sort(order.begin(), order.end(), [&](Elem x, Elem y) { return below[x] < below[y]; });
  std::vector<int> h(L.size(), 0);
  for (Elem x : order)
    for (Elem y : L.lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

std::vector<int> depths(const FiniteLattice& L) {
  return heights(dual(L));
}

ElemSet atoms(const FiniteLattice& L) { return L.upper_covers(L.bottom()); }
ElemSet coatoms(const FiniteLattice& L) { return L.lower_covers(L.top()); }

namespace {

void bron_kerbosch(const FiniteLattice& L, ElemSet& r, ElemSet p, ElemSet x,
                   const std::function<bool(const ElemSet&)>& visit, bool& stop) {
  if (stop) return;
  if (p.empty() && x.empty()) {
    ElemSet out = r;
    std::sort(out.begin(), out.end());
    if (!visit(out)) stop = true;
    return;
  }
  // pivot with the most incomparable neighbours in p
  Elem pivot = -1;
  std::size_t best = 0;
  for (const ElemSet* s : {&p, &x})
    for (Elem u : *s) {
      std::size_t cnt = 0;
      for (Elem v : p) cnt += L.parallel(u, v) ? 1 : 0;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  ElemSet candidates;
  for (Elem v : p)
    if (!L.parallel(pivot, v)) candidates.push_back(v);
  for (Elem v : candidates) {
    ElemSet np, nx;
    for (Elem u : p)
      if (L.parallel(u, v)) np.push_back(u);
    for (Elem u : x)
      if (L.parallel(u, v)) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(L, r, std::move(np), std::move(nx), visit, stop);
    r.pop_back();
    if (stop) return;
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

void for_each_maximal_antichain(const FiniteLattice& L,
                                const std::function<bool(const ElemSet&)>& visit) {
  ElemSet r, p(L.size());
  std::iota(p.begin(), p.end(), 0);
  bool stop = false;
  bron_kerbosch(L, r, std::move(p), {}, visit, stop);
}

std::vector<ElemSet> maximal_antichains(const FiniteLattice& L) {
  std::vector<ElemSet> out;
  for_each_maximal_antichain(L, [&](const ElemSet& a) {
    out.push_back(a);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: colour refinement on the order relation followed by
// individualisation of the first non-singleton cell; the canonical string is
// the lexicographically least order matrix over all leaves.

namespace {

using Colors = std::vector<int>;

int count_cells(const Colors& c) {
  std::set<int> s(c.begin(), c.end());
  return static_cast<int>(s.size());
}

Colors refine(const FiniteLattice& L, Colors colors) {
  const auto n = static_cast<Elem>(L.size());
  int cells = count_cells(colors);
  for (;;) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>, std::vector<int>,
                           std::vector<int>>;
    std::vector<Sig> sig(L.size());
    for (Elem x = 0; x < n; ++x) {
      std::vector<int> upc, downc, above, below;
      for (Elem y : L.upper_covers(x)) upc.push_back(colors[y]);
      for (Elem y : L.lower_covers(x)) downc.push_back(colors[y]);
      for (Elem y = 0; y < n; ++y) {
        if (L.lt(x, y)) above.push_back(colors[y]);
        if (L.lt(y, x)) below.push_back(colors[y]);
      }
      for (auto* v : {&upc, &downc, &above, &below}) std::sort(v->begin(), v->end());
      sig[x] = Sig{colors[x], std::move(upc), std::move(downc), std::move(above),
                   std::move(below)};
    }
    std::vector<Sig> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Colors next(L.size());
    for (Elem x = 0; x < n; ++x)
      next[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[x]) -
                                 distinct.begin());
    const int next_cells = static_cast<int>(distinct.size());
    colors = std::move(next);
    if (next_cells == cells) return colors;
    cells = next_cells;
  }
}

std::string matrix_string(const FiniteLattice& L, const std::vector<Elem>& order) {
  const std::size_t n = order.size();
  std::string s = std::to_string(n) + ":";
  s.reserve(s.size() + n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.push_back(L.leq(order[i], order[j]) ? '1' : '0');
  return s;
}

void search_leaves(const FiniteLattice& L, const Colors& colors, std::string& best,
                   std::vector<Elem>& best_order) {
  const auto n = static_cast<Elem>(L.size());
  // first non-singleton cell, by colour value
  std::map<int, ElemSet> cells;
  for (Elem x = 0; x < n; ++x) cells[colors[x]].push_back(x);
  const ElemSet* target = nullptr;
  for (const auto& [c, members] : cells)
    if (members.size() > 1) {
      target = &members;
      break;
    }
  if (!target) {
    std::vector<Elem> order(L.size());
    for (Elem x = 0; x < n; ++x) order[colors[x]] = x;
    std::string s = matrix_string(L, order);
    if (best.empty() || s < best) {
      best = std::move(s);
      best_order = std::move(order);
    }
    return;
  }
  const ElemSet cell = *target;
  for (Elem v : cell) {
    Colors next(L.size());
    for (Elem x = 0; x < n; ++x) {
      bool in_cell = colors[x] == colors[v];
      next[x] = 2 * colors[x] + ((in_cell && x != v) ? 1 : 0);
    }
    search_leaves(L, refine(L, std::move(next)), best, best_order);
  }
}

}  // namespace

std::pair<std::string, std::vector<Elem>> canonical_labeling(const FiniteLattice& L) {
  const auto n = static_cast<Elem>(L.size());
  auto h = heights(L);
  auto d = depths(L);
  using Key = std::tuple<int, int, std::size_t, std::size_t>;
  std::vector<Key> keys(L.size());
  for (Elem x = 0; x < n; ++x)
    keys[x] = Key{h[x], d[x], L.upper_covers(x).size(), L.lower_covers(x).size()};
  std::vector<Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colors colors(L.size());
  for (Elem x = 0; x < n; ++x)
    colors[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[x]) -
                                 distinct.begin());
  std::string best;
  std::vector<Elem> order;
  search_leaves(L, refine(L, std::move(colors)), best, order);
  return {best, order};
}

std::string canonical_form(const FiniteLattice& L) { return canonical_labeling(L).first; }

bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::string canonical_hash(const FiniteLattice& L) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_form(L)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace latcheck
