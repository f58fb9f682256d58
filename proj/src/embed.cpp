#include "latcheck/embed.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "latcheck/catalog.hpp"

namespace latcheck {

namespace {

constexpr std::uint64_t kBuiltinBudget = 200'000'000;

struct Check {
  Elem p, q, r;  // r must map to op(map[p], map[q])
  bool is_meet;
};

struct Plan {
  std::vector<Elem> order;
  std::vector<std::optional<Check>> forced;  // how order[k] is determined
  std::vector<std::vector<Check>> checks;     // checks that become decidable at k
};

Plan make_plan(const FiniteLattice& P) {
  const std::size_t n = P.size();
  const auto h = heights(P);
  Plan plan;
  std::vector<int> pos(n, -1);
  auto placed = [&](Elem x) { return pos[static_cast<std::size_t>(x)] >= 0; };

  while (plan.order.size() < n) {
    std::optional<Check> force;
    for (Elem p : plan.order) {
      for (Elem q : plan.order) {
        if (q <= p) continue;
        Elem m = P.meet(p, q), j = P.join(p, q);
        if (!placed(m)) { force = Check{p, q, m, true}; break; }
        if (!placed(j)) { force = Check{p, q, j, false}; break; }
      }
      if (force) break;
    }
    Elem next;
    if (force) {
      next = force->r;
    } else {
      next = -1;
      int best_comp = -1;
      for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
        if (placed(x)) continue;
        int comp = 0;
        for (Elem y : plan.order) comp += P.comparable(x, y) ? 1 : 0;
        if (next < 0 || comp > best_comp ||
            (comp == best_comp && h[static_cast<std::size_t>(x)] < h[static_cast<std::size_t>(next)])) {
          next = x;
          best_comp = comp;
        }
      }
    }
    pos[static_cast<std::size_t>(next)] = static_cast<int>(plan.order.size());
    plan.order.push_back(next);
    plan.forced.push_back(force);
  }

  plan.checks.resize(n);
  for (Elem p = 0; p < static_cast<Elem>(n); ++p)
    for (Elem q = p + 1; q < static_cast<Elem>(n); ++q) {
      if (P.comparable(p, q)) continue;
      for (bool is_meet : {true, false}) {
        Elem r = is_meet ? P.meet(p, q) : P.join(p, q);
        int k = std::max({pos[static_cast<std::size_t>(p)], pos[static_cast<std::size_t>(q)],
                          pos[static_cast<std::size_t>(r)]});
        plan.checks[static_cast<std::size_t>(k)].push_back(Check{p, q, r, is_meet});
      }
    }
  return plan;
}

class Search {
 public:
  Search(const FiniteLattice& P, const FiniteLattice& H, std::uint64_t budget,
         const std::function<bool(const EmbeddingWitness&)>& visit)
      : P_(P), H_(H), budget_(budget), visit_(visit), plan_(make_plan(P)) {
    hp_ = heights(P);
    dp_ = depths(P);
    hh_ = heights(H);
    dh_ = depths(H);
    map_.assign(P.size(), -1);
    used_.assign(H.size(), 0);
  }

  std::size_t run() {
    if (P_.size() > H_.size() || P_.size() == 0) return 0;
    rec(0);
    return found_;
  }

 private:
  bool feasible(Elem p, Elem h) const {
    auto ps = static_cast<std::size_t>(p);
    auto hs = static_cast<std::size_t>(h);
    return hp_[ps] <= hh_[hs] && dp_[ps] <= dh_[hs];
  }

  bool consistent(std::size_t k, Elem p, Elem h) const {
    for (std::size_t i = 0; i < k; ++i) {
      Elem q = plan_.order[i];
      Elem g = map_[static_cast<std::size_t>(q)];
      if (P_.leq(p, q) != H_.leq(h, g) || P_.leq(q, p) != H_.leq(g, h)) return false;
    }
    return true;
  }

  bool checks_hold(std::size_t k) const {
    for (const Check& c : plan_.checks[k]) {
      Elem a = map_[static_cast<std::size_t>(c.p)], b = map_[static_cast<std::size_t>(c.q)];
      Elem want = c.is_meet ? H_.meet(a, b) : H_.join(a, b);
      if (map_[static_cast<std::size_t>(c.r)] != want) return false;
    }
    return true;
  }

  bool tick() {
    if (++nodes_ > budget_)
      throw SearchBudgetExceeded("embedding search for " + P_.name() + " in " + H_.name() +
                                 " exceeded " + std::to_string(budget_) + " nodes");
    return true;
  }

  bool place(std::size_t k, Elem h) {
    Elem p = plan_.order[k];
    tick();
    if (used_[static_cast<std::size_t>(h)] || !feasible(p, h) || !consistent(k, p, h)) return true;
    map_[static_cast<std::size_t>(p)] = h;
    used_[static_cast<std::size_t>(h)] = 1;
    bool go_on = checks_hold(k) ? rec(k + 1) : true;
    used_[static_cast<std::size_t>(h)] = 0;
    map_[static_cast<std::size_t>(p)] = -1;
    return go_on;
  }

  // Returns false when the visitor asked to stop.
  bool rec(std::size_t k) {
    if (k == plan_.order.size()) {
      ++found_;
      return visit_(EmbeddingWitness{map_});
    }
    if (const auto& f = plan_.forced[k]) {
      Elem a = map_[static_cast<std::size_t>(f->p)], b = map_[static_cast<std::size_t>(f->q)];
      return place(k, f->is_meet ? H_.meet(a, b) : H_.join(a, b));
    }
    for (Elem h = 0; h < static_cast<Elem>(H_.size()); ++h)
      if (!place(k, h)) return false;
    return true;
  }

  const FiniteLattice& P_;
  const FiniteLattice& H_;
  std::uint64_t budget_;
  const std::function<bool(const EmbeddingWitness&)>& visit_;
  Plan plan_;
  std::vector<int> hp_, dp_, hh_, dh_;
  std::vector<Elem> map_;
  std::vector<std::uint8_t> used_;
  std::uint64_t nodes_ = 0;
  std::size_t found_ = 0;
};

std::uint64_t resolve(SearchOptions opts) {
  return opts.node_budget ? opts.node_budget : default_node_budget();
}

}  // namespace

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("LATCHECK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kBuiltinBudget;
}

std::size_t for_each_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                               const std::function<bool(const EmbeddingWitness&)>& visit,
                               SearchOptions opts) {
  Search s(pattern, host, resolve(opts), visit);
  return s.run();
}

std::optional<EmbeddingWitness> find_embedding(const FiniteLattice& pattern,
                                               const FiniteLattice& host, SearchOptions opts) {
  std::optional<EmbeddingWitness> out;
  for_each_embedding(
      pattern, host,
      [&](const EmbeddingWitness& w) {
        out = w;
        return false;
      },
      opts);
  return out;
}

std::string catalog_dual_name(const std::string& name) {
  static const std::map<std::string, std::string> pairs = {
      {"L1", "L2"}, {"L2", "L1"}, {"L4", "L5"},   {"L5", "L4"},   {"L7", "L8"},
      {"L8", "L7"}, {"L9", "L10"}, {"L10", "L9"}, {"L11", "L12"}, {"L12", "L11"},
      {"L13", "L14"}, {"L14", "L13"}};
  auto it = pairs.find(name);
  return it == pairs.end() ? name : it->second;
}

std::vector<std::string> forbidden_profile_names() {
  return {"N", "cor62", "cor63", "cor64", "cor65", "cor66"};
}

ForbiddenProfile forbidden_profile(const std::string& name) {
  auto range = [](int lo, int hi) {
    std::vector<std::string> v;
    for (int i = lo; i <= hi; ++i) v.push_back("L" + std::to_string(i));
    return v;
  };
  auto dualize = [](std::vector<std::string> v) {
    for (auto& s : v) s = catalog_dual_name(s);
    std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) {
      return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
    });
    return v;
  };
  if (name == "N" || name == "N-full") {
    auto v = range(1, 15);
    v.insert(v.begin(), "M3");
    return {"N", v};
  }
  if (name == "cor62") return {name, range(9, 15)};
  if (name == "cor63") return {name, range(10, 15)};
  if (name == "cor64") return {name, dualize(range(10, 15))};
  auto cor65 = range(6, 12);
  cor65.push_back("L14");
  cor65.push_back("L15");
  if (name == "cor65") return {name, cor65};
  if (name == "cor66") return {name, dualize(cor65)};
  throw UnknownProfile(name);
}

std::vector<ForbiddenHit> contains_forbidden(const FiniteLattice& host,
                                             const ForbiddenProfile& profile,
                                             SearchOptions opts) {
  std::vector<ForbiddenHit> hits;
  for (const auto& name : profile.patterns) {
    auto pattern = catalog::get(name);
    if (auto w = find_embedding(pattern, host, opts)) hits.push_back({name, *w});
  }
  return hits;
}

}  // namespace latcheck
