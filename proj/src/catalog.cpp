#include "latcheck/catalog.hpp"

#include <map>
#include <regex>

namespace latcheck::catalog {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

CoverDiagram letters(const std::string& name, const std::string& elems, Covers covers) {
  CoverDiagram d;
  d.name = name;
  for (char c : elems) d.elements.emplace_back(1, c);
  d.covers = std::move(covers);
  return d;
}

const std::map<std::string, CatalogEntry>& table() {
  static const std::map<std::string, CatalogEntry> entries = [] {
    std::map<std::string, CatalogEntry> m;
    auto add = [&](CoverDiagram d, std::size_t size, std::optional<bool> sd,
                   std::optional<bool> si) {
      std::string name = d.name;
      m.emplace(name, CatalogEntry{name, std::move(d), Expected{size, sd, si}});
    };

    add(CoverDiagram{"M3", {"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}},
        5, false, true);
    add(CoverDiagram{"N5", {"x1", "x2", "x3", "x4", "x5"},
                     {{"x5", "x2"}, {"x2", "x1"}, {"x5", "x4"}, {"x4", "x3"}, {"x3", "x1"}}},
        5, true, true);

    add(letters("L1", "abcdefg",
                {{"c", "a"}, {"f", "c"}, {"g", "f"}, {"g", "e"}, {"e", "b"}, {"b", "a"},
                 {"d", "b"}, {"d", "c"}, {"g", "d"}}),
        7, false, true);
    add(letters("L2", "abcdefg",
                {{"a", "c"}, {"c", "f"}, {"f", "g"}, {"e", "g"}, {"b", "e"}, {"a", "b"},
                 {"b", "d"}, {"c", "d"}, {"d", "g"}}),
        7, false, true);
    add(letters("L3", "abcdefg",
                {{"e", "a"}, {"d", "e"}, {"g", "d"}, {"g", "f"}, {"f", "b"}, {"b", "a"},
                 {"c", "b"}, {"d", "c"}}),
        7, false, true);
    add(letters("L4", "abcdef",
                {{"b", "a"}, {"c", "b"}, {"f", "c"}, {"f", "d"}, {"d", "b"}, {"e", "a"},
                 {"f", "e"}}),
        6, false, true);
    add(letters("L5", "abcdef",
                {{"a", "b"}, {"b", "c"}, {"c", "f"}, {"b", "d"}, {"d", "f"}, {"a", "e"},
                 {"e", "f"}}),
        6, false, true);
    add(letters("L6", "abcdefgh",
                {{"b", "a"}, {"c", "b"}, {"e", "c"}, {"f", "e"}, {"g", "f"}, {"g", "h"},
                 {"h", "a"}, {"d", "b"}, {"f", "d"}}),
        8, true, true);
    add(letters("L7", "abcdefghi",
                {{"e", "b"}, {"e", "c"}, {"f", "c"}, {"i", "f"}, {"i", "h"}, {"h", "g"},
                 {"g", "e"}, {"h", "d"}, {"d", "b"}, {"b", "a"}, {"c", "a"}}),
        9, true, true);
    add(letters("L8", "abcdefghi",
                {{"b", "e"}, {"c", "e"}, {"c", "f"}, {"f", "i"}, {"h", "i"}, {"g", "h"},
                 {"e", "g"}, {"d", "h"}, {"b", "d"}, {"a", "b"}, {"a", "c"}}),
        9, true, true);
    add(letters("L9", "abcdefghi",
                {{"b", "a"}, {"d", "b"}, {"f", "d"}, {"g", "f"}, {"i", "g"}, {"i", "h"},
                 {"h", "c"}, {"c", "a"}, {"e", "b"}, {"e", "c"}, {"g", "e"}}),
        9, true, true);
    add(letters("L10", "abcdefghi",
                {{"a", "b"}, {"b", "d"}, {"d", "f"}, {"f", "g"}, {"g", "i"}, {"h", "i"},
                 {"c", "h"}, {"a", "c"}, {"b", "e"}, {"c", "e"}, {"e", "g"}}),
        9, true, true);
    add(letters("L11", "abcdefghij",
                {{"f", "d"}, {"j", "f"}, {"j", "i"}, {"i", "g"}, {"g", "d"}, {"d", "b"},
                 {"b", "a"}, {"c", "a"}, {"h", "c"}, {"i", "h"}, {"e", "b"}, {"g", "e"},
                 {"e", "c"}}),
        10, true, true);
    add(letters("L12", "abcdefghij",
                {{"d", "f"}, {"f", "j"}, {"i", "j"}, {"g", "i"}, {"d", "g"}, {"b", "d"},
                 {"a", "b"}, {"a", "c"}, {"c", "h"}, {"h", "i"}, {"b", "e"}, {"e", "g"},
                 {"c", "e"}}),
        10, true, true);
    {
      CoverDiagram d = letters("L13", "abcdefgh",
                               {{"d", "a"}, {"g", "d"}, {"h", "g"}, {"h", "hh"}, {"hh", "e"},
                                {"e", "b"}, {"b", "a"}, {"f", "b"}, {"f", "d"}, {"e", "c"},
                                {"g", "c"}, {"c", "a"}, {"h", "f"}});
      d.elements.push_back("hh");
      add(std::move(d), 9, true, true);
    }
    {
      CoverDiagram d = letters("L14", "abcdefgh",
                               {{"aa", "a"}, {"d", "aa"}, {"g", "d"}, {"h", "g"}, {"h", "e"},
                                {"e", "b"}, {"b", "a"}, {"f", "b"}, {"f", "d"}, {"e", "c"},
                                {"g", "c"}, {"c", "a"}, {"h", "f"}});
      d.elements.insert(d.elements.begin() + 1, "aa");
      add(std::move(d), 9, true, true);
    }
    add(letters("L15", "abcdefghij",
                {{"c", "a"}, {"g", "c"}, {"i", "g"}, {"j", "i"}, {"j", "h"}, {"h", "e"},
                 {"e", "b"}, {"b", "a"}, {"d", "b"}, {"d", "c"}, {"h", "f"}, {"i", "f"},
                 {"f", "d"}}),
        10, true, true);

    {
      CoverDiagram d{"B3", {"000", "100", "010", "001", "110", "101", "011", "111"}, {}};
      for (const auto& lo : d.elements)
        for (std::size_t bit = 0; bit < 3; ++bit)
          if (lo[bit] == '0') {
            std::string hi = lo;
            hi[bit] = '1';
            d.covers.emplace_back(lo, hi);
          }
      add(std::move(d), 8, true, false);
    }
    {
      CoverDiagram d{"stacked_n5",
                     {"x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5"},
                     {}};
      for (const char* p : {"x", "y"}) {
        auto e = [&](int i) { return std::string(p) + std::to_string(i); };
        d.covers.insert(d.covers.end(),
                        {{e(5), e(2)}, {e(2), e(1)}, {e(5), e(4)}, {e(4), e(3)}, {e(3), e(1)}});
      }
      d.covers.emplace_back("y1", "x5");
      add(std::move(d), 10, true, false);
    }
    add(CoverDiagram{"shape_2x5_plus",
                     {"x'", "x", "b", "z", "z'", "w'", "w", "a", "s", "y", "y'", "c"},
                     {{"x'", "x"}, {"x", "b"}, {"b", "z"}, {"z", "z'"}, {"y'", "z'"},
                      {"y", "y'"}, {"s", "y"}, {"a", "s"}, {"w", "a"}, {"w'", "w"},
                      {"w'", "x'"}, {"w", "x"}, {"c", "b"}, {"a", "c"}, {"y", "z"}}},
        12, std::nullopt, std::nullopt);
    return m;
  }();
  return entries;
}

CoverDiagram chain_diagram(int k) {
  if (k < 1) throw BadParameter("chain length must be >= 1");
  CoverDiagram d;
  d.name = "chain(" + std::to_string(k) + ")";
  for (int i = 0; i < k; ++i) d.elements.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) d.covers.emplace_back(d.elements[i], d.elements[i + 1]);
  return d;
}

CoverDiagram grid_diagram(int rows, int k) {
  if (rows < 1 || k < 1) throw BadParameter("grid dimensions must be >= 1");
  CoverDiagram d;
  d.name = "grid(" + std::to_string(rows) + "," + std::to_string(k) + ")";
  auto lab = [](int i, int j) { return std::to_string(i) + "." + std::to_string(j); };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < k; ++j) d.elements.push_back(lab(i, j));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < k; ++j) {
      if (i + 1 < rows) d.covers.emplace_back(lab(i, j), lab(i + 1, j));
      if (j + 1 < k) d.covers.emplace_back(lab(i, j), lab(i, j + 1));
    }
  return d;
}

// Pentagon whose long side is a chain of k+1 elements r1 < ... < r(k+1).
CoverDiagram ninf_diagram(int k) {
  if (k < 1) throw BadParameter("ninf depth must be >= 1");
  CoverDiagram d;
  d.name = "ninf(" + std::to_string(k) + ")";
  d.elements = {"top", "left"};
  for (int i = k + 1; i >= 1; --i) d.elements.push_back("r" + std::to_string(i));
  d.elements.push_back("bot");
  d.covers = {{"bot", "left"}, {"left", "top"}, {"bot", "r1"}};
  for (int i = 1; i <= k; ++i)
    d.covers.emplace_back("r" + std::to_string(i), "r" + std::to_string(i + 1));
  d.covers.emplace_back("r" + std::to_string(k + 1), "top");
  return d;
}

std::optional<std::pair<std::string, std::vector<int>>> parse_family(const std::string& name) {
  static const std::regex re(R"(^\s*(chain|grid|ninf)\s*\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)\s*$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  std::vector<int> args{std::stoi(m[2].str())};
  if (m[3].matched) args.push_back(std::stoi(m[3].str()));
  return std::make_pair(m[1].str(), args);
}

}  // namespace

CatalogEntry entry(const std::string& name) {
  if (auto fam = parse_family(name)) {
    const auto& [family, args] = *fam;
    if (family == "chain" && args.size() == 1) {
      return {name, chain_diagram(args[0]),
              Expected{static_cast<std::size_t>(args[0]), true, args[0] <= 2}};
    }
    if (family == "grid" && args.size() == 2) {
      if (args[0] != 2) throw BadParameter("only grid(2,k) is provided");
      if (args[1] < 1) throw BadParameter("grid length must be >= 1");
      return {name, grid_diagram(2, args[1]),
              Expected{static_cast<std::size_t>(2 * args[1]), true, std::nullopt}};
    }
    if (family == "ninf" && args.size() == 1) {
      if (args[0] < 1) throw BadParameter("ninf depth must be >= 1");
      return {name, ninf_diagram(args[0]),
              Expected{static_cast<std::size_t>(args[0] + 4), true, std::nullopt}};
    }
    throw UnknownName(name);
  }
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) throw UnknownName(name);
  return it->second;
}

FiniteLattice get(const std::string& name) {
  auto e = entry(name);
  return build_lattice(e.diagram).renamed(e.name);
}

std::vector<std::string> mckenzie_table() {
  std::vector<std::string> names{"M3", "N5"};
  for (int i = 1; i <= 15; ++i) names.push_back("L" + std::to_string(i));
  return names;
}

std::vector<std::string> fixed_names() {
  auto names = mckenzie_table();
  names.insert(names.end(), {"B3", "stacked_n5", "shape_2x5_plus"});
  return names;
}

SdSplit mckenzie_semidistributive_split() {
  SdSplit s;
  s.non_sd = {"M3", "L1", "L2", "L3", "L4", "L5"};
  for (int i = 6; i <= 15; ++i) s.sd.push_back("L" + std::to_string(i));
  return s;
}

FiniteLattice chain(int k) { return get("chain(" + std::to_string(k) + ")"); }
FiniteLattice grid(int rows, int k) {
  if (rows != 2) throw BadParameter("only grid(2,k) is provided");
  return get("grid(2," + std::to_string(k) + ")");
}
FiniteLattice ninf(int k) { return get("ninf(" + std::to_string(k) + ")"); }
FiniteLattice boolean_cube() { return get("B3"); }

}  // namespace latcheck::catalog
