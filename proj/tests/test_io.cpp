#include <string>

#include "doctest.h"
#include "latcheck/catalog.hpp"
#include "latcheck/enumerate.hpp"
#include "latcheck/io.hpp"

using namespace latcheck;

TEST_CASE("catalog exports round-trip byte for byte") {
  for (const auto& name : catalog::fixed_names()) {
    INFO(name);
    const std::string text = io::write_lattice(catalog::get(name));
    auto back = io::parse_lattice(text);
    CHECK(io::write_lattice(back) == text);
    CHECK(isomorphic(back, catalog::get(name)));
  }
  for (const auto& L : all_lattices(6)) CHECK(io::write_lattice(io::parse_lattice(io::write_lattice(L))) == io::write_lattice(L));
}

TEST_CASE("writer layout") {
  const std::string text = io::write_lattice(catalog::chain(2));
  CHECK(text ==
        "{\n  \"name\": \"chain(2)\",\n  \"elements\": [\n    \"c0\",\n    \"c1\"\n  ],\n"
        "  \"covers\": [\n    [\n      \"c0\",\n      \"c1\"\n    ]\n  ]\n}\n");
}

TEST_CASE("parse errors carry positions") {
  try {
    io::parse_diagram("{\n  \"name\": \"x\",\n  \"elements\": [\"a\" \"b\"]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  try {
    io::parse_diagram("{\"name\": \"x\",\n \"elements\": [\"a\", \"b\"],\n \"covers\": [[\"a\", \"q\"]]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 19);
  }
  CHECK_THROWS_AS(io::parse_diagram("{\"name\": 3, \"elements\": [], \"covers\": []}"), ParseError);
  CHECK_THROWS_AS(io::parse_diagram("[1, 2]"), ParseError);
  CHECK_THROWS_AS(io::parse_diagram("{\"name\": \"x\", \"elements\": [\"a\"], \"covers\": [], \"extra\": 1}"),
                  ParseError);
}

TEST_CASE("lattice errors from files") {
  CHECK_THROWS_AS(
      io::parse_lattice("{\"name\": \"c\", \"elements\": [\"a\", \"b\"], \"covers\": [[\"a\", \"b\"], [\"b\", \"a\"]]}"),
      CyclicCovers);
  try {
    io::parse_lattice("{\"name\": \"v\", \"elements\": [\"0\", \"a\", \"b\"], \"covers\": [[\"0\", \"a\"], [\"0\", \"b\"]]}");
    FAIL("expected NotALattice");
  } catch (const NotALattice& e) {
    CHECK(((e.first == "a" && e.second == "b") || (e.first == "b" && e.second == "a")));
  }
}
