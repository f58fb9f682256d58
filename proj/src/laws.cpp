#include "latcheck/laws.hpp"

namespace latcheck {

namespace {
Elem count(const FiniteLattice& L) { return static_cast<Elem>(L.size()); }
}  // namespace

WhitmanResult whitman(const FiniteLattice& L) {
  const Elem n = count(L);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem m = L.meet(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (L.leq(m, c)) continue;
        for (Elem d = 0; d < n; ++d) {
          const Elem j = L.join(c, d);
          if (!L.leq(m, j)) continue;
          if (L.leq(a, j) || L.leq(b, j) || L.leq(m, d)) continue;
          return {false, std::array<Elem, 4>{a, b, c, d}};
        }
      }
    }
  return {};
}

SemidistributiveResult semidistributive(const FiniteLattice& L) {
  const Elem n = count(L);
  SemidistributiveResult r;
  for (Elem a = 0; a < n && r.sd_join; ++a)
    for (Elem b = 0; b < n && r.sd_join; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem d = L.join(a, b);
        if (L.join(a, c) == d && L.join(a, L.meet(b, c)) != d) {
          r.sd_join = false;
          r.join_counterexample = std::array<Elem, 3>{a, b, c};
          break;
        }
      }
  for (Elem a = 0; a < n && r.sd_meet; ++a)
    for (Elem b = 0; b < n && r.sd_meet; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem d = L.meet(a, b);
        if (L.meet(a, c) == d && L.meet(a, L.join(b, c)) != d) {
          r.sd_meet = false;
          r.meet_counterexample = std::array<Elem, 3>{a, b, c};
          break;
        }
      }
  return r;
}

bool distributive(const FiniteLattice& L) {
  const Elem n = count(L);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) return false;
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
      }
  return true;
}

bool modular(const FiniteLattice& L) {
  const Elem n = count(L);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      if (!L.leq(a, c)) continue;
      for (Elem b = 0; b < n; ++b)
        if (L.meet(L.join(a, b), c) != L.join(a, L.meet(b, c))) return false;
    }
  return true;
}

ElemSet doubly_reducible_elements(const FiniteLattice& L) {
  const Elem n = count(L);
  std::vector<char> join_red(L.size(), 0), meet_red(L.size(), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (L.parallel(a, b)) {
        join_red[L.join(a, b)] = 1;
        meet_red[L.meet(a, b)] = 1;
      }
  ElemSet out;
  for (Elem x = 0; x < n; ++x)
    if (join_red[x] && meet_red[x]) out.push_back(x);
  return out;
}

bool has_doubly_reducible_element(const FiniteLattice& L) {
  return !doubly_reducible_elements(L).empty();
}

int length(const FiniteLattice& L) { return heights(L)[L.top()] + 1; }

bool dilworth_bound_holds(const FiniteLattice& L) {
  if (!semidistributive(L).holds()) return true;
  const int len = length(L);
  if (len - 1 >= 63) return true;
  return L.size() <= (std::size_t{1} << (len - 1));
}

bool is_finite_free_sublattice(const FiniteLattice& L) {
  return semidistributive(L).holds() && whitman(L).holds;
}

LawProfile law_profile(const FiniteLattice& L) {
  LawProfile p;
  p.whitman = whitman(L).holds;
  auto sd = semidistributive(L);
  p.sd_join = sd.sd_join;
  p.sd_meet = sd.sd_meet;
  p.distributive = distributive(L);
  p.modular = modular(L);
  p.doubly_reducible = doubly_reducible_elements(L);
  p.length = length(L);
  p.free_sublattice_finite = p.whitman && p.sd_join && p.sd_meet;
  p.dilworth_bound = dilworth_bound_holds(L);
  return p;
}

}  // namespace latcheck
