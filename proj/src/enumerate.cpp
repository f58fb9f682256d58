#include "latcheck/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <unordered_set>

#include "latcheck/embed.hpp"
#include "latcheck/laws.hpp"
#include "latcheck/variety.hpp"

namespace latcheck {

namespace {

FiniteLattice relabel_canonical(const FiniteLattice& L, int n, std::size_t index) {
  auto [form, order] = canonical_labeling(L);
  const std::size_t m = L.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("e" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = L.leq(order[i], order[j]) ? 1 : 0;
  }
  return FiniteLattice::from_order("lat" + std::to_string(n) + "_" + std::to_string(index),
                                   std::move(labels), std::move(leq));
}

// Every lattice with a coatom c arises from L \ {c} by adding c above the
// down-set of its strict lower bounds; removing a coatom keeps all meets, so
// L \ {c} is again a lattice.
std::vector<FiniteLattice> extend(const std::vector<FiniteLattice>& smaller, int n) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, FiniteLattice>> found;
  for (const auto& B : smaller) {
    const std::size_t m = B.size();
    const Elem top = B.top();
    std::vector<Elem> rest;
    for (Elem x = 0; x < static_cast<Elem>(m); ++x)
      if (x != top) rest.push_back(x);
    const std::size_t r = rest.size();
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
      std::vector<std::uint8_t> in(m, 0);
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1u) in[static_cast<std::size_t>(rest[i])] = 1;
      bool down_closed = true;
      for (Elem x = 0; x < static_cast<Elem>(m) && down_closed; ++x)
        if (in[static_cast<std::size_t>(x)])
          for (Elem y = 0; y < static_cast<Elem>(m) && down_closed; ++y)
            if (B.leq(y, x) && !in[static_cast<std::size_t>(y)]) down_closed = false;
      if (!down_closed) continue;

      const std::size_t k = m + 1;
      std::vector<std::uint8_t> leq(k * k, 0);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(B.label(static_cast<Elem>(i)));
        for (std::size_t j = 0; j < m; ++j) leq[i * k + j] = B.leq(static_cast<Elem>(i), static_cast<Elem>(j)) ? 1 : 0;
        leq[i * k + m] = in[i];
      }
      labels.push_back("new");
      leq[m * k + m] = 1;
      leq[m * k + static_cast<std::size_t>(top)] = 1;
      try {
        auto L = FiniteLattice::from_order("", std::move(labels), std::move(leq));
        auto form = canonical_form(L);
        if (seen.insert(form).second) found.emplace_back(std::move(form), std::move(L));
      } catch (const NotALattice&) {
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FiniteLattice> out;
  for (std::size_t i = 0; i < found.size(); ++i) out.push_back(relabel_canonical(found[i].second, n, i));
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<FiniteLattice>>& cache() {
  static std::map<int, std::vector<FiniteLattice>> c;
  return c;
}

}  // namespace

const std::vector<FiniteLattice>& all_lattices(int n, int cap) {
  if (n < 1) throw BadParameter("lattice size must be >= 1");
  if (n > cap) throw SizeLimit("all_lattices", static_cast<std::size_t>(n), static_cast<std::size_t>(cap));
  std::lock_guard lock(cache_mutex());
  auto& c = cache();
  if (c.empty()) {
    c[1] = {FiniteLattice::from_order("lat1_0", {"e0"}, {1})};
    c[2] = {FiniteLattice::from_order("lat2_0", {"e0", "e1"}, {1, 1, 0, 1})};
  }
  for (int k = 3; k <= n; ++k)
    if (!c.count(k)) c[k] = extend(c[k - 1], k);
  return c.at(n);
}

std::vector<LatticeFilter> parse_filters(const std::string& spec) {
  std::vector<LatticeFilter> out;
  static const std::regex profile_re(R"(^profile\((.+)\)$)");
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::smatch m;
    if (item.empty()) {
    } else if (item == "sd") {
      out.push_back({item, [](const FiniteLattice& L) { return semidistributive(L).holds(); }});
    } else if (item == "whitman") {
      out.push_back({item, [](const FiniteLattice& L) { return whitman(L).holds; }});
    } else if (item == "distributive") {
      out.push_back({item, [](const FiniteLattice& L) { return distributive(L); }});
    } else if (item == "in_n5") {
      out.push_back({item, [](const FiniteLattice& L) { return in_n5_variety(L); }});
    } else if (std::regex_match(item, m, profile_re)) {
      auto profile = forbidden_profile(m[1].str());
      out.push_back({item, [profile](const FiniteLattice& L) {
                       return contains_forbidden(L, profile).empty();
                     }});
    } else {
      throw BadParameter("unknown filter '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<FiniteLattice> filtered(int n, const std::vector<LatticeFilter>& filters, int cap) {
  std::vector<FiniteLattice> out;
  for (const auto& L : all_lattices(n, cap)) {
    bool ok = true;
    for (const auto& f : filters)
      if (!f.accepts(L)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(L);
  }
  return out;
}

}  // namespace latcheck
