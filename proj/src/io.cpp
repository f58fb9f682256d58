#include "latcheck/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latcheck::io {

namespace {

using json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// The DOM carries no positions, so schema errors point at the first textual
// occurrence of the offending token after `from`.
struct Locator {
  const std::string& text;

  std::size_t find(const std::string& needle, std::size_t from = 0) const {
    auto p = text.find(needle, from);
    return p == std::string::npos ? from : p;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    auto [l, c] = line_col(text, offset);
    throw ParseError(what, l, c);
  }
};

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

CoverDiagram parse_diagram(const std::string& text) {
  Locator at{text};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    at.fail(e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) at.fail("document must be an object", 0);
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "elements" && key != "covers")
      at.fail("unknown field " + quoted(key), at.find(quoted(key)));

  CoverDiagram d;
  if (!doc.contains("name") || !doc["name"].is_string())
    at.fail("\"name\" must be a string", at.find("\"name\""));
  d.name = doc["name"].get<std::string>();

  const std::size_t elements_at = at.find("\"elements\"");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    at.fail("\"elements\" must be an array of strings", elements_at);
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) at.fail("element labels must be strings", at.find(e.dump(), elements_at));
    d.elements.push_back(e.get<std::string>());
  }

  const std::size_t covers_at = at.find("\"covers\"");
  if (!doc.contains("covers") || !doc["covers"].is_array())
    at.fail("\"covers\" must be an array of pairs", covers_at);
  std::size_t cursor = covers_at;
  for (const auto& c : doc["covers"]) {
    cursor = at.find("[", cursor + 1);
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      at.fail("each cover must be a pair of element labels", cursor);
    for (const auto& end : c) {
      const auto lab = end.get<std::string>();
      if (std::find(d.elements.begin(), d.elements.end(), lab) == d.elements.end())
        at.fail("cover mentions unknown element " + quoted(lab), at.find(quoted(lab), cursor));
    }
    d.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return d;
}

FiniteLattice parse_lattice(const std::string& text) { return build_lattice(parse_diagram(text)); }

FiniteLattice read_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadParameter("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string write_lattice(const FiniteLattice& L) {
  CoverDiagram d = to_diagram(L);
  std::sort(d.covers.begin(), d.covers.end());
  json doc;
  doc["name"] = d.name;
  doc["elements"] = d.elements;
  json covers = json::array();
  for (const auto& [lo, hi] : d.covers) covers.push_back(json::array({lo, hi}));
  doc["covers"] = std::move(covers);
  return doc.dump(2) + "\n";
}

void write_lattice_file(const FiniteLattice& L, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParameter("cannot write " + path.string());
  out << write_lattice(L);
}

}  // namespace latcheck::io
