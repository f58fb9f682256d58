#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latcheck/catalog.hpp"
#include "latcheck/embed.hpp"
#include "latcheck/laws.hpp"
#include "latcheck/variety.hpp"
#include "oracles.hpp"

using namespace latcheck;

namespace {

std::set<std::vector<int>> as_set(const std::vector<Congruence>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.block_of);
  return out;
}

std::set<std::vector<int>> oracle_set(const FiniteLattice& L) {
  auto cs = oracle::congruences(L);
  return {cs.begin(), cs.end()};
}

}  // namespace

TEST_CASE("principal congruences") {
  auto L = catalog::get("N5");
  auto id = principal_congruence(L, 2, 2);
  CHECK(id.is_identity());
  auto c = principal_congruence(L, L.index_of("x3"), L.index_of("x4"));
  CHECK(c.block_count() == 4);
  CHECK(c.same(L.index_of("x3"), L.index_of("x4")));
  CHECK(oracle::partition_is_congruence(L, c.block_of));
  auto ch = catalog::chain(3);
  CHECK(principal_congruence(ch, 0, 1).block_count() == 2);
}

TEST_CASE("all congruences against the partition oracle") {
  CHECK(all_congruences(catalog::chain(3)).size() == 4);
  CHECK(all_congruences(catalog::get("M3")).size() == 2);
  auto sq = direct_product(catalog::chain(2), catalog::chain(2));
  CHECK(all_congruences(sq).size() == 4);
  for (int n = 1; n <= 6; ++n)
    for (const auto& o : oracle::lattices_of_size(n)) {
      auto L = oracle::lattice_from_order(o);
      CHECK(as_set(all_congruences(L)) == oracle_set(L));
      for (const auto& c : all_congruences(L)) {
        CHECK(is_congruence(L, c));
        for (const auto& b : c.blocks()) CHECK(is_convex(L, b));
      }
    }
  for (const auto& name : {"N5", "L4", "L1", "L6"}) {
    auto L = catalog::get(name);
    CHECK(as_set(all_congruences(L)) == oracle_set(L));
  }
  CHECK_THROWS_AS(all_congruences(catalog::chain(17)), SizeLimit);
}

TEST_CASE("quotients and subdirect irreducibility") {
  auto L = catalog::get("N5");
  CHECK(quotient(L, total_congruence(L)).size() == 1);
  CHECK(quotient(L, identity_congruence(L)).size() == 5);
  CHECK(is_subdirectly_irreducible(L));
  CHECK_FALSE(is_subdirectly_irreducible(direct_product(catalog::chain(2), catalog::chain(2))));
  CHECK_FALSE(is_subdirectly_irreducible(catalog::chain(3)));
  CHECK(is_subdirectly_irreducible(catalog::chain(2)));
}

TEST_CASE("meet-irreducible congruences: both methods agree") {
  std::vector<FiniteLattice> ls;
  for (const auto& n : catalog::fixed_names()) ls.push_back(catalog::get(n));
  ls.push_back(catalog::ninf(3));
  ls.push_back(catalog::chain(6));
  for (int n = 1; n <= 7; ++n)
    for (const auto& o : oracle::lattices_of_size(n)) ls.push_back(oracle::lattice_from_order(o));
  for (const auto& L : ls) {
    CAPTURE(L.name());
    CHECK(meet_irreducible_congruences(L) == meet_irreducible_congruences_by_scan(L));
    for (const auto& f : si_factors(L)) CHECK(is_subdirectly_irreducible(f));
  }
}

TEST_CASE("variety decisions") {
  CHECK(in_n5_variety(catalog::get("N5")));
  CHECK(in_n5_variety(catalog::chain(4)));
  CHECK(in_n5_variety(catalog::boolean_cube()));
  CHECK(in_n5_variety(catalog::ninf(2)));
  CHECK(in_n5_variety(catalog::get("stacked_n5")));
  CHECK_FALSE(in_n5_variety(catalog::get("M3")));
  for (int i = 1; i <= 15; ++i) {
    auto name = "L" + std::to_string(i);
    CAPTURE(name);
    auto cert = n5_variety_certificate(catalog::get(name));
    CHECK_FALSE(cert.member);
    REQUIRE(cert.offending);
    CHECK(isomorphic(*cert.offending, catalog::get(name)));
  }
  auto cert = n5_variety_certificate(catalog::get("stacked_n5"));
  for (const auto& f : cert.factors) CHECK((f.size() == 2 || isomorphic(f, catalog::get("N5"))));
  CHECK(in_n5_variety(catalog::chain(1)));
}

TEST_CASE("variety membership is invariant under dual and products") {
  std::vector<FiniteLattice> ls = {catalog::get("N5"), catalog::get("M3"), catalog::chain(3),
                                   catalog::get("L6"), catalog::ninf(2)};
  for (const auto& a : ls) {
    CHECK(in_n5_variety(a) == in_n5_variety(dual(a)));
    for (const auto& b : ls) {
      if (a.size() * b.size() > 40) continue;
      CHECK(in_n5_variety(direct_product(a, b)) == (in_n5_variety(a) && in_n5_variety(b)));
    }
  }
}

TEST_CASE("members are semidistributive and avoid the N profile") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& o : oracle::lattices_of_size(n)) {
      auto L = oracle::lattice_from_order(o);
      if (!in_n5_variety(L)) continue;
      CHECK(semidistributive(L).holds());
      CHECK(contains_forbidden(L, forbidden_profile("N")).empty());
    }
}
