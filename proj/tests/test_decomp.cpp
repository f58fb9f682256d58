#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latcheck/catalog.hpp"
#include "latcheck/decomp.hpp"
#include "latcheck/laws.hpp"
#include "oracles.hpp"

using namespace latcheck;
using testing_helpers::elems;

namespace {

using LabelPartition = std::set<std::set<std::string>>;

LabelPartition labelled(const FiniteLattice& L, const DistributivePartition& p) {
  LabelPartition out;
  for (const auto& b : p.blocks) {
    std::set<std::string> s;
    for (Elem x : b) s.insert(L.label(x));
    out.insert(s);
  }
  return out;
}

std::set<std::set<std::set<int>>> as_index_sets(const std::vector<DistributivePartition>& ps) {
  std::set<std::set<std::set<int>>> out;
  for (const auto& p : ps) {
    std::set<std::set<int>> q;
    for (const auto& b : p.blocks) q.insert(std::set<int>(b.begin(), b.end()));
    out.insert(q);
  }
  return out;
}

}  // namespace

TEST_CASE("distributive partition predicate") {
  auto L = catalog::get("N5");
  std::vector<ElemSet> singletons;
  for (Elem x = 0; x < 5; ++x) singletons.push_back({x});
  CHECK(is_distributive_partition(L, singletons));
  CHECK(is_distributive_partition(L, {elems(L, {"x1", "x2"}), elems(L, {"x3"}), elems(L, {"x4", "x5"})}));
  auto whole = check_distributive_partition(L, {elems(L, {"x1", "x2", "x3", "x4", "x5"})});
  CHECK_FALSE(whole.ok);
  CHECK(whole.clause == "block");
  // Blocks fine individually, but {x3,x4} ∪ {x1,x2}... union is N5 minus x5,
  // not a sublattice; {x2,x5} ∪ {x1,x3,x4} is all of N5 and not distributive.
  auto pair = check_distributive_partition(L, {elems(L, {"x2", "x5"}), elems(L, {"x1", "x3", "x4"})});
  CHECK_FALSE(pair.ok);
  CHECK(pair.clause == "pair");
  CHECK_THROWS_AS(check_distributive_partition(L, {elems(L, {"x1"})}), NotAPartition);
  CHECK_THROWS_AS(check_distributive_partition(L, {elems(L, {"x1", "x2", "x3", "x4", "x5"}), elems(L, {"x1"})}),
                  NotAPartition);
}

TEST_CASE("Dec of the pentagon and its six minimum partitions") {
  auto L = catalog::get("N5");
  auto r = dec(L);
  CHECK(r.value == 3);
  CHECK(is_distributive_partition(L, r.witness.blocks));
  std::set<LabelPartition> want = {
      {{"x1", "x2"}, {"x3"}, {"x4", "x5"}}, {{"x1", "x3"}, {"x4"}, {"x2", "x5"}},
      {{"x1", "x2"}, {"x3", "x4"}, {"x5"}}, {{"x1"}, {"x2", "x5"}, {"x3", "x4"}},
      {{"x1", "x3", "x4"}, {"x2"}, {"x5"}}, {{"x1"}, {"x2"}, {"x3", "x4", "x5"}}};
  std::set<LabelPartition> got;
  for (const auto& p : minimum_distributive_partitions(L)) got.insert(labelled(L, p));
  for (const auto& p : want) CHECK(got.count(p) == 1);
  // The listed six are not all of them: this partition also satisfies every
  // clause ({x1,x3} ∪ {x4,x5} is a chain but not convex, x2 lies between).
  LabelPartition seventh = {{"x1", "x3"}, {"x2"}, {"x4", "x5"}};
  CHECK(is_distributive_partition(L, {elems(L, {"x1", "x3"}), elems(L, {"x2"}), elems(L, {"x4", "x5"})}));
  want.insert(seventh);
  CHECK(got == want);
  CHECK(got.size() == 7);
}

TEST_CASE("Dec examples") {
  CHECK(dec(catalog::get("stacked_n5")).value == 5);
  CHECK(dec(catalog::boolean_cube()).value == 1);
  CHECK(minimum_distributive_partitions(catalog::chain(5)).size() == 1);
  auto m3 = minimum_distributive_partitions(catalog::get("M3"));
  for (const auto& p : m3) CHECK(p.blocks.size() >= 3);
  CHECK_THROWS_AS(dec(catalog::chain(40), 32), SizeLimit);
}

TEST_CASE("Dec against the Bell-number oracle") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& o : oracle::lattices_of_size(n)) {
      auto L = oracle::lattice_from_order(o);
      auto r = dec(L);
      CHECK(r.value == oracle::dec(L));
      CHECK(oracle::is_distributive_partition(L, [&] {
        std::vector<std::vector<int>> b;
        for (const auto& blk : r.witness.blocks) b.emplace_back(blk.begin(), blk.end());
        return b;
      }()));
      CHECK(as_index_sets(minimum_distributive_partitions(L)) == oracle::minimum_distributive_partitions(L));
      CHECK(dec(dual(L)).value == r.value);
      CHECK((r.value == 1) == distributive(L));
      CHECK(r.value != 2);
    }
  for (const auto& name : {"N5", "M3", "L4", "L5", "L1"}) {
    auto L = catalog::get(name);
    CHECK(dec(L).value == oracle::dec(L));
  }
}

TEST_CASE("Dec is self-dual on the catalog") {
  for (const auto& name : catalog::fixed_names()) {
    CAPTURE(name);
    auto L = catalog::get(name);
    CHECK(dec(L).value == dec(dual(L)).value);
  }
}

TEST_CASE("linear-sum shape classifier") {
  auto b3 = gj_classify(catalog::boolean_cube());
  REQUIRE(b3);
  REQUIRE(b3->blocks.size() == 1);
  CHECK(b3->blocks[0].shape == BlockShape::boolean3);

  auto g = gj_classify(catalog::grid(2, 4));
  REQUIRE(g);
  REQUIRE(g->blocks.size() == 1);
  CHECK(g->blocks[0].shape == BlockShape::two_times_chain);

  auto b4 = direct_product(catalog::boolean_cube(), catalog::chain(2));
  CHECK_FALSE(gj_classify(b4));

  auto ch = gj_classify(catalog::chain(4));
  REQUIRE(ch);
  REQUIRE(ch->blocks.size() == 1);
  CHECK(ch->blocks[0].shape == BlockShape::chain);
  CHECK(ch->blocks[0].elements.size() == 4);

  CHECK_THROWS_AS(gj_classify(catalog::get("N5")), NotDistributive);

  // chain, square, chain: 0 < 1 < [square 1..] < top
  auto mixed = build_lattice({"mixed",
                              {"0", "1", "a", "b", "2", "3"},
                              {{"0", "1"}, {"1", "a"}, {"1", "b"}, {"a", "2"}, {"b", "2"}, {"2", "3"}}});
  auto m = gj_classify(mixed);
  REQUIRE(m);
  REQUIRE(m->blocks.size() == 3);
  CHECK(m->blocks[0].shape == BlockShape::chain);
  CHECK(m->blocks[1].shape == BlockShape::two_times_chain);
  CHECK(m->blocks[2].shape == BlockShape::chain);
  CHECK(m->blocks[0].elements == elems(mixed, {"0"}));

  // Two squares glued at a point cannot be split into blocks.
  auto glued = build_lattice({"glued",
                              {"0", "a", "b", "m", "c", "d", "1"},
                              {{"0", "a"}, {"0", "b"}, {"a", "m"}, {"b", "m"}, {"m", "c"}, {"m", "d"},
                               {"c", "1"}, {"d", "1"}}});
  CHECK_FALSE(gj_classify(glued));
}

TEST_CASE("blocks of a decomposition are ordered and partition the lattice") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& o : oracle::lattices_of_size(n)) {
      auto L = oracle::lattice_from_order(o);
      if (!distributive(L)) continue;
      auto d = gj_classify(L);
      CHECK(d.has_value() == whitman(L).holds);
      if (!d) continue;
      std::size_t total = 0;
      for (std::size_t i = 0; i < d->blocks.size(); ++i) {
        total += d->blocks[i].elements.size();
        for (std::size_t j = i + 1; j < d->blocks.size(); ++j)
          for (Elem a : d->blocks[i].elements)
            for (Elem b : d->blocks[j].elements) CHECK(L.lt(a, b));
      }
      CHECK(total == L.size());
    }
}
