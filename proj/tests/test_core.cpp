#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latcheck/catalog.hpp"
#include "latcheck/core.hpp"
#include "oracles.hpp"

using namespace latcheck;
using testing_helpers::elems;

namespace {

void check_axioms(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a) {
    CHECK(L.leq(L.bottom(), a));
    CHECK(L.leq(a, L.top()));
    CHECK(L.meet(a, a) == a);
    CHECK(L.join(a, a) == a);
    for (Elem b = 0; b < n; ++b) {
      CHECK(L.meet(a, b) == L.meet(b, a));
      CHECK(L.join(a, b) == L.join(b, a));
      CHECK(L.join(a, L.meet(a, b)) == a);
      CHECK(L.meet(a, L.join(a, b)) == a);
      CHECK(L.leq(a, b) == (L.meet(a, b) == a));
      CHECK(L.leq(a, b) == (L.join(a, b) == b));
      for (Elem c = 0; c < n; ++c) {
        CHECK(L.meet(a, L.meet(b, c)) == L.meet(L.meet(a, b), c));
        CHECK(L.join(a, L.join(b, c)) == L.join(L.join(a, b), c));
      }
    }
  }
}

// Shuffle the element order of a lattice's diagram.
FiniteLattice shuffled(const FiniteLattice& L, std::mt19937& rng) {
  auto d = to_diagram(L);
  std::shuffle(d.elements.begin(), d.elements.end(), rng);
  std::shuffle(d.covers.begin(), d.covers.end(), rng);
  return build_lattice(d);
}

}  // namespace

TEST_CASE("pentagon from covers") {
  auto L = catalog::get("N5");
  REQUIRE(L.size() == 5);
  auto x = [&](const char* s) { return L.index_of(s); };
  CHECK(L.meet(x("x2"), x("x3")) == x("x5"));
  CHECK(L.join(x("x2"), x("x4")) == x("x1"));
  CHECK(L.bottom() == x("x5"));
  CHECK(L.top() == x("x1"));
  auto up = L.upper_covers(x("x5"));
  std::sort(up.begin(), up.end());
  CHECK(up == (ElemSet{x("x2"), x("x4")}));
}

TEST_CASE("chain tables are min and max") {
  auto L = build_lattice({"c", {"c0", "c1", "c2"}, {{"c0", "c1"}, {"c1", "c2"}}});
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      CHECK(L.meet(a, b) == std::min(a, b));
      CHECK(L.join(a, b) == std::max(a, b));
    }
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(build_lattice({"v", {"b", "x", "y"}, {{"b", "x"}, {"b", "y"}}}), NotALattice);
  CHECK_THROWS_AS(build_lattice({"cyc", {"a", "b"}, {{"a", "b"}, {"b", "a"}}}), CyclicCovers);
  CHECK_THROWS_AS(build_lattice({"dup", {"a", "a"}, {}}), DuplicateLabel);
  CHECK_THROWS_AS(build_lattice({"self", {"a"}, {{"a", "a"}}}), CyclicCovers);
  CHECK_THROWS_AS(build_lattice({"twice", {"a", "b"}, {{"a", "b"}, {"a", "b"}}}), InvalidDiagram);
  CHECK_THROWS_AS(build_lattice({"unk", {"a"}, {{"a", "z"}}}), InvalidDiagram);
  // Two maximal elements above a common bottom and a common upper bound
  // pair with two minimal upper bounds.
  CHECK_THROWS_AS(build_lattice({"bowtie",
                                 {"0", "a", "b", "c", "d", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
                                  {"b", "d"}, {"c", "1"}, {"d", "1"}}}),
                  NotALattice);
  try {
    build_lattice({"v", {"b", "x", "y"}, {{"b", "x"}, {"b", "y"}}});
  } catch (const NotALattice& e) {
    CHECK(e.kind() == "NotALattice");
  }
}

TEST_CASE("lattice axioms on the catalog") {
  for (const auto& name : catalog::fixed_names()) {
    CAPTURE(name);
    check_axioms(catalog::get(name));
  }
  check_axioms(catalog::ninf(3));
  check_axioms(direct_product(catalog::get("N5"), catalog::chain(2)));
}

TEST_CASE("dual") {
  auto n5 = catalog::get("N5");
  CHECK(oracle::isomorphic(dual(n5), n5));
  CHECK(isomorphic(dual(n5), n5));
  CHECK(isomorphic(dual(catalog::chain(3)), catalog::chain(3)));
  auto l7 = catalog::get("L7"), l8 = catalog::get("L8");
  CHECK(oracle::isomorphic(dual(l7), l8));
  CHECK(isomorphic(dual(l7), l8));
  CHECK(isomorphic(dual(dual(l7)), l7));
  auto d = dual(n5);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) {
      CHECK(d.leq(a, b) == n5.leq(b, a));
      CHECK(d.meet(a, b) == n5.join(a, b));
    }
}

TEST_CASE("direct product") {
  auto sq = direct_product(catalog::chain(2), catalog::chain(2));
  CHECK(sq.size() == 4);
  CHECK(atoms(sq).size() == 2);
  CHECK(isomorphic(direct_product(catalog::chain(2), catalog::chain(5)), catalog::grid(2, 5)));
  auto nn = direct_product(catalog::get("N5"), catalog::get("N5"));
  CHECK(nn.size() == 25);
  CHECK(nn.find("x2.x4").has_value());
  CHECK_THROWS_AS(direct_product(nn, nn, 100), SizeLimit);
}

TEST_CASE("generated sublattice") {
  auto L = catalog::get("N5");
  auto g = generated_sublattice(L, elems(L, {"x2", "x4"}));
  auto want = elems(L, {"x1", "x2", "x4", "x5"});
  std::sort(want.begin(), want.end());
  CHECK(g == want);
  ElemSet all(L.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(generated_sublattice(L, all) == all);
  CHECK(generated_sublattice(L, g) == g);
  CHECK_THROWS_AS(generated_sublattice(L, {}), EmptySeeds);

  auto b3 = catalog::boolean_cube();
  CHECK(generated_sublattice(b3, atoms(b3)).size() == 8);
  CHECK(is_sublattice(L, g));
  CHECK_FALSE(is_sublattice(L, elems(L, {"x2", "x4"})));
}

TEST_CASE("convexity and intervals") {
  auto L = catalog::get("N5");
  CHECK(is_convex(L, elems(L, {"x3", "x4"})));
  CHECK_FALSE(is_convex(L, elems(L, {"x5", "x3"})));
  CHECK(interval(L, L.index_of("x5"), L.index_of("x3")).size() == 3);
}

TEST_CASE("canonical form") {
  auto n5 = catalog::get("N5");
  CHECK(canonical_form(n5) == canonical_form(dual(n5)));
  CHECK(canonical_form(catalog::chain(4)) !=
        canonical_form(direct_product(catalog::chain(2), catalog::chain(2))));
  std::mt19937 rng(7);
  for (const auto& name : catalog::fixed_names()) {
    CAPTURE(name);
    auto L = catalog::get(name);
    for (int i = 0; i < 5; ++i) CHECK(canonical_form(shuffled(L, rng)) == canonical_form(L));
  }
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  std::vector<FiniteLattice> ls;
  for (const auto& name : catalog::mckenzie_table()) ls.push_back(catalog::get(name));
  ls.push_back(catalog::boolean_cube());
  for (const auto& name : catalog::mckenzie_table()) ls.push_back(dual(catalog::get(name)));
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i; j < ls.size(); ++j) {
      if (ls[i].size() != ls[j].size()) continue;
      CAPTURE(ls[i].name());
      CAPTURE(ls[j].name());
      CHECK((canonical_form(ls[i]) == canonical_form(ls[j])) == oracle::isomorphic(ls[i], ls[j]));
    }
}

TEST_CASE("canonical labeling is an isomorphism onto the canonical order") {
  std::mt19937 rng(11);
  auto L = catalog::get("L15");
  auto M = shuffled(L, rng);
  auto [fl, ol] = canonical_labeling(L);
  auto [fm, om] = canonical_labeling(M);
  REQUIRE(fl == fm);
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j) CHECK(L.leq(ol[i], ol[j]) == M.leq(om[i], om[j]));
}

TEST_CASE("atoms, coatoms, antichains") {
  auto b3 = catalog::boolean_cube();
  auto at = atoms(b3);
  CHECK(at.size() == 3);
  for (Elem a : at) CHECK(b3.covers(b3.bottom(), a));
  CHECK(coatoms(b3).size() == 3);
  auto ch = maximal_antichains(catalog::chain(4));
  CHECK(ch.size() == 4);
  for (const auto& a : ch) CHECK(a.size() == 1);
  // Maximal antichains of N5: {x2,x3}, {x2,x4}, {x1}, {x5}.
  CHECK(maximal_antichains(catalog::get("N5")).size() == 4);
}

TEST_CASE("embedding witness check") {
  auto n5 = catalog::get("N5");
  EmbeddingWitness id{{0, 1, 2, 3, 4}};
  CHECK(is_embedding(n5, n5, id));
  EmbeddingWitness bad{{0, 0, 2, 3, 4}};
  CHECK_FALSE(is_embedding(n5, n5, bad));
}
