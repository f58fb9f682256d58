#include "doctest.h"
#include "helpers.hpp"
#include "latcheck/catalog.hpp"
#include "latcheck/laws.hpp"

using namespace latcheck;

namespace {

// m = a∨b = c∧d with a∥b and c∥d.
FiniteLattice doubly_reducible_middle() {
  return build_lattice({"dr7",
                        {"c", "d", "a", "b", "m", "bot", "top"},
                        {{"bot", "a"}, {"bot", "b"}, {"a", "m"}, {"b", "m"}, {"m", "c"}, {"m", "d"},
                         {"c", "top"}, {"d", "top"}}});
}

bool brute_whitman(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          Elem m = L.meet(a, b), j = L.join(c, d);
          if (!L.leq(m, j)) continue;
          if (!(L.leq(a, j) || L.leq(b, j) || L.leq(m, c) || L.leq(m, d))) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("whitman") {
  CHECK(whitman(catalog::chain(5)).holds);
  CHECK(whitman(catalog::get("M3")).holds);
  CHECK(brute_whitman(catalog::get("M3")));
  auto L = doubly_reducible_middle();
  auto w = whitman(L);
  REQUIRE_FALSE(w.holds);
  REQUIRE(w.counterexample.has_value());
  auto e = *w.counterexample;
  CHECK(testing_helpers::labels_of(L, {e[0], e[1], e[2], e[3]}) ==
        std::vector<std::string>{"c", "d", "a", "b"});
  for (const auto& name : catalog::fixed_names()) {
    CAPTURE(name);
    auto M = catalog::get(name);
    CHECK(whitman(M).holds == brute_whitman(M));
    CHECK(whitman(M).holds == whitman(dual(M)).holds);
  }
}

TEST_CASE("semidistributivity") {
  auto m3 = semidistributive(catalog::get("M3"));
  CHECK_FALSE(m3.sd_join);
  CHECK_FALSE(m3.sd_meet);
  CHECK(m3.join_counterexample.has_value());
  CHECK(semidistributive(catalog::get("N5")).holds());
  CHECK_FALSE(semidistributive(catalog::get("L2")).holds());
  for (const auto& name : catalog::fixed_names()) {
    auto L = catalog::get(name);
    auto s = semidistributive(L), d = semidistributive(dual(L));
    CHECK(s.sd_join == d.sd_meet);
    CHECK(s.sd_meet == d.sd_join);
  }
}

TEST_CASE("distributive and modular") {
  CHECK(distributive(catalog::boolean_cube()));
  CHECK_FALSE(modular(catalog::get("N5")));
  CHECK(modular(catalog::get("M3")));
  CHECK_FALSE(distributive(catalog::get("M3")));
  CHECK(distributive(catalog::grid(2, 4)));
}

TEST_CASE("doubly reducible elements") {
  CHECK(doubly_reducible_elements(catalog::get("N5")).empty());
  CHECK(doubly_reducible_elements(catalog::chain(6)).empty());
  auto b4 = direct_product(catalog::boolean_cube(), catalog::chain(2));
  auto dr = doubly_reducible_elements(b4);
  CHECK(dr.size() == 6);
  auto h = heights(b4);
  for (Elem x : dr) CHECK(h[static_cast<std::size_t>(x)] == 2);
  auto L = doubly_reducible_middle();
  CHECK(doubly_reducible_elements(L) == ElemSet{L.index_of("m")});
}

TEST_CASE("length and the Dilworth bound") {
  CHECK(length(catalog::chain(6)) == 6);
  CHECK(length(catalog::get("N5")) == 4);
  CHECK(dilworth_bound_holds(catalog::get("N5")));
  CHECK(length(catalog::boolean_cube()) == 4);
  CHECK(dilworth_bound_holds(catalog::boolean_cube()));
  CHECK(length(catalog::chain(1)) == 1);
}

TEST_CASE("free sublattice test") {
  CHECK(is_finite_free_sublattice(catalog::get("N5")));
  CHECK_FALSE(is_finite_free_sublattice(catalog::get("M3")));
  CHECK(is_finite_free_sublattice(catalog::boolean_cube()));
  auto p = law_profile(catalog::get("N5"));
  CHECK(p.free_sublattice_finite == (p.whitman && p.sd_join && p.sd_meet));
  CHECK(p.length == 4);
}
