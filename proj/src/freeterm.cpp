#include "latcheck/freeterm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "latcheck/embed.hpp"
#include "latcheck/laws.hpp"

namespace latcheck::free {

namespace {

struct Node {
  Kind kind;
  std::string name;
  std::vector<std::uint32_t> args;
  int depth;
  std::string enc;
};

// Shared term store. Nodes never move (deque) and never change after
// insertion, so a reference obtained under the lock stays usable.
class Store {
 public:
  const Node& node(std::uint32_t id) const {
    std::shared_lock lock(mu_);
    return nodes_[id];
  }

  std::uint32_t intern(Kind kind, std::string name, std::vector<std::uint32_t> args) {
    std::string enc;
    int depth = 0;
    if (kind == Kind::generator) {
      enc = name;
    } else {
      enc = kind == Kind::join ? "J(" : "M(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        const Node& a = node(args[i]);
        if (i) enc += ',';
        enc += a.enc;
        depth = std::max(depth, a.depth + 1);
      }
      enc += ')';
    }
    {
      std::shared_lock lock(mu_);
      auto it = index_.find(enc);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = index_.find(enc);
    if (it != index_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{kind, std::move(name), std::move(args), depth, enc});
    index_.emplace(std::move(enc), id);
    return id;
  }

  std::optional<bool> cached_leq(std::uint32_t s, std::uint32_t t) const {
    std::shared_lock lock(mu_);
    auto it = leq_.find(key(s, t));
    if (it == leq_.end()) return std::nullopt;
    return it->second;
  }
  void store_leq(std::uint32_t s, std::uint32_t t, bool v) {
    std::unique_lock lock(mu_);
    leq_.emplace(key(s, t), v);
  }
  std::optional<std::uint32_t> cached_canon(std::uint32_t t) const {
    std::shared_lock lock(mu_);
    auto it = canon_.find(t);
    if (it == canon_.end()) return std::nullopt;
    return it->second;
  }
  void store_canon(std::uint32_t t, std::uint32_t c) {
    std::unique_lock lock(mu_);
    canon_.emplace(t, c);
    canon_.emplace(c, c);
  }

 private:
  static std::uint64_t key(std::uint32_t s, std::uint32_t t) {
    return (std::uint64_t{s} << 32) | t;
  }

  mutable std::shared_mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::unordered_map<std::uint64_t, bool> leq_;
  std::unordered_map<std::uint32_t, std::uint32_t> canon_;
};

Store& store() {
  static Store s;
  return s;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

bool leq_ids(std::uint32_t s, std::uint32_t t) {
  if (s == t) return true;
  auto& st = store();
  if (auto c = st.cached_leq(s, t)) return *c;
  const Node& a = st.node(s);
  const Node& b = st.node(t);
  bool r;
  if (a.kind == Kind::join) {
    r = std::all_of(a.args.begin(), a.args.end(), [&](auto x) { return leq_ids(x, t); });
  } else if (b.kind == Kind::meet) {
    r = std::all_of(b.args.begin(), b.args.end(), [&](auto y) { return leq_ids(s, y); });
  } else if (a.kind == Kind::generator && b.kind == Kind::generator) {
    r = a.name == b.name;
  } else if (a.kind == Kind::generator) {  // b is a join
    r = std::any_of(b.args.begin(), b.args.end(), [&](auto y) { return leq_ids(s, y); });
  } else if (b.kind == Kind::generator) {  // a is a meet
    r = std::any_of(a.args.begin(), a.args.end(), [&](auto x) { return leq_ids(x, t); });
  } else {  // meet below join
    r = std::any_of(a.args.begin(), a.args.end(), [&](auto x) { return leq_ids(x, t); }) ||
        std::any_of(b.args.begin(), b.args.end(), [&](auto y) { return leq_ids(s, y); });
  }
  st.store_leq(s, t, r);
  return r;
}

int rank(Kind k) { return k == Kind::generator ? 0 : k == Kind::meet ? 1 : 2; }

bool order_less(std::uint32_t x, std::uint32_t y) {
  if (x == y) return false;
  const Node& a = store().node(x);
  const Node& b = store().node(y);
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
  if (a.kind == Kind::generator) return a.name < b.name;
  if (a.enc.size() != b.enc.size()) return a.enc.size() < b.enc.size();
  return a.enc < b.enc;
}

std::uint32_t canon(std::uint32_t t);

// Canonical join (or, with `is_join` false, meet) of canonical arguments.
std::uint32_t canon_op(bool is_join, std::vector<std::uint32_t> args) {
  auto& st = store();
  const Kind self = is_join ? Kind::join : Kind::meet;
  const Kind other = is_join ? Kind::meet : Kind::join;
  auto splice = [&](std::vector<std::uint32_t> in) {
    std::vector<std::uint32_t> out;
    for (auto a : in) {
      const Node& n = st.node(a);
      if (n.kind == self) out.insert(out.end(), n.args.begin(), n.args.end());
      else out.push_back(a);
    }
    return out;
  };
  args = splice(std::move(args));
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    if (args.size() == 1) return args[0];
    auto whole = st.intern(self, "", args);
    for (std::size_t i = 0; i < args.size() && !changed; ++i) {
      const Node& n = st.node(args[i]);
      if (n.kind != other) continue;
      for (auto c : n.args)
        if (is_join ? leq_ids(c, whole) : leq_ids(whole, c)) {
          args[i] = c;
          args = splice(std::move(args));
          changed = true;
          break;
        }
    }
  }
  std::vector<std::uint32_t> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < args.size() && !dominated; ++j)
      if (i != j) dominated = is_join ? leq_ids(args[i], args[j]) : leq_ids(args[j], args[i]);
    if (!dominated) kept.push_back(args[i]);
  }
  if (kept.size() == 1) return kept[0];
  std::sort(kept.begin(), kept.end(), order_less);
  return st.intern(self, "", kept);
}

std::uint32_t canon(std::uint32_t t) {
  auto& st = store();
  if (auto c = st.cached_canon(t)) return *c;
  const Node& n = st.node(t);
  std::uint32_t r = t;
  if (n.kind != Kind::generator) {
    std::vector<std::uint32_t> args;
    for (auto a : n.args) args.push_back(canon(a));
    r = canon_op(n.kind == Kind::join, std::move(args));
  }
  st.store_canon(t, r);
  return r;
}

FreeTerm make(Kind kind, const std::vector<FreeTerm>& args) {
  if (args.empty()) throw BadParameter("join or meet needs at least one argument");
  if (args.size() == 1) return args[0];
  std::vector<std::uint32_t> ids;
  for (const auto& a : args) ids.push_back(a.id());
  return FreeTerm::from_id(store().intern(kind, "", std::move(ids)));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  FreeTerm run() {
    FreeTerm t = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line_, col_); }

  FreeTerm expr() {
    std::vector<FreeTerm> parts{term()};
    for (skip(); pos_ < s_.size() && s_[pos_] == '|'; skip()) {
      advance();
      parts.push_back(term());
    }
    return join(parts);
  }
  FreeTerm term() {
    std::vector<FreeTerm> parts{atom()};
    for (skip(); pos_ < s_.size() && s_[pos_] == '&'; skip()) {
      advance();
      parts.push_back(atom());
    }
    return meet(parts);
  }
  FreeTerm atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      advance();
      FreeTerm t = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      advance();
      return t;
    }
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) {
      name += s_[pos_];
      advance();
    }
    if (!valid_name(name)) fail(name.empty() ? "expected a generator or '('" : "bad generator name '" + name + "'");
    return generator(name);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

std::string print(std::uint32_t id) {
  const Node& n = store().node(id);
  if (n.kind == Kind::generator) return n.name;
  std::string out;
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i) out += n.kind == Kind::join ? " | " : " & ";
    const Node& c = store().node(n.args[i]);
    bool paren = c.kind != Kind::generator && (n.kind == Kind::meet || c.kind == Kind::join);
    out += paren ? "(" + print(n.args[i]) + ")" : print(n.args[i]);
  }
  return out;
}

}  // namespace

Kind FreeTerm::kind() const { return store().node(id_).kind; }
const std::string& FreeTerm::name() const { return store().node(id_).name; }
int FreeTerm::depth() const { return store().node(id_).depth; }
std::vector<FreeTerm> FreeTerm::args() const {
  std::vector<FreeTerm> out;
  for (auto a : store().node(id_).args) out.push_back(FreeTerm::from_id(a));
  return out;
}

FreeTerm generator(const std::string& name) {
  if (!valid_name(name)) throw BadParameter("bad generator name '" + name + "'");
  return FreeTerm::from_id(store().intern(Kind::generator, name, {}));
}
FreeTerm join(const std::vector<FreeTerm>& args) { return make(Kind::join, args); }
FreeTerm meet(const std::vector<FreeTerm>& args) { return make(Kind::meet, args); }

bool leq(FreeTerm s, FreeTerm t) { return leq_ids(s.id(), t.id()); }
bool term_equal(FreeTerm s, FreeTerm t) { return leq(s, t) && leq(t, s); }
FreeTerm canonicalize(FreeTerm t) { return FreeTerm::from_id(canon(t.id())); }
bool is_canonical(FreeTerm t) { return canon(t.id()) == t.id(); }
bool term_order_less(FreeTerm a, FreeTerm b) { return order_less(a.id(), b.id()); }

FreeTerm parse_term(const std::string& text) { return Parser(text).run(); }
std::string to_string(FreeTerm t) { return print(t.id()); }

Elem evaluate(FreeTerm t, const FiniteLattice& L, const std::map<std::string, Elem>& assignment) {
  const Node& n = store().node(t.id());
  if (n.kind == Kind::generator) {
    auto it = assignment.find(n.name);
    if (it == assignment.end()) throw UnassignedGenerator(n.name);
    return it->second;
  }
  Elem acc = evaluate(FreeTerm::from_id(n.args[0]), L, assignment);
  for (std::size_t i = 1; i < n.args.size(); ++i) {
    Elem v = evaluate(FreeTerm::from_id(n.args[i]), L, assignment);
    acc = n.kind == Kind::join ? L.join(acc, v) : L.meet(acc, v);
  }
  return acc;
}

bool verify_free_embedding(const FiniteLattice& L, const std::vector<FreeTerm>& terms) {
  if (terms.size() != L.size()) return false;
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto ta = terms[static_cast<std::size_t>(a)], tb = terms[static_cast<std::size_t>(b)];
      if (L.leq(a, b) != leq(ta, tb)) return false;
      if (a < b) {
        if (!term_equal(terms[static_cast<std::size_t>(L.meet(a, b))], ta & tb)) return false;
        if (!term_equal(terms[static_cast<std::size_t>(L.join(a, b))], ta | tb)) return false;
      }
    }
  return true;
}

std::string to_string(FreeSearchStatus s) {
  switch (s) {
    case FreeSearchStatus::found: return "found";
    case FreeSearchStatus::impossible: return "impossible";
    case FreeSearchStatus::exhausted: return "exhausted";
    case FreeSearchStatus::truncated: return "truncated";
  }
  return "?";
}

std::vector<FreeTerm> term_pool(const std::vector<FreeTerm>& generators, int depth,
                                std::size_t cap, bool* truncated) {
  std::vector<std::uint32_t> all;
  std::unordered_set<std::uint32_t> seen;
  for (const auto& g : generators)
    if (seen.insert(g.id()).second) all.push_back(g.id());
  std::vector<std::uint32_t> level = all;
  bool cut = false;
  for (int k = 1; k <= depth && !cut; ++k) {
    std::vector<std::uint32_t> next;
    const std::size_t before = all.size();
    for (auto s : level) {
      for (std::size_t j = 0; j < before && !cut; ++j) {
        auto t = all[j];
        if (s == t) continue;
        for (bool is_join : {false, true}) {
          auto c = canon_op(is_join, {s, t});
          if (seen.insert(c).second) {
            all.push_back(c);
            next.push_back(c);
            if (all.size() >= cap) {
              cut = true;
              break;
            }
          }
        }
      }
      if (cut) break;
    }
    level = std::move(next);
  }
  if (truncated) *truncated = cut;
  std::vector<FreeTerm> out;
  for (auto id : all) out.push_back(FreeTerm::from_id(id));
  return out;
}

namespace {

struct PairCheck {
  Elem p, q, r;
  bool is_meet;
};

class FreeSearch {
 public:
  FreeSearch(const FiniteLattice& L, const std::vector<FreeTerm>& pool, std::uint64_t budget)
      : L_(L), pool_(pool), budget_(budget) {
    const std::size_t n = L.size();
    std::vector<int> pos(n, -1);
    auto placed = [&](Elem x) { return pos[static_cast<std::size_t>(x)] >= 0; };
    const auto h = heights(L);
    while (order_.size() < n) {
      std::optional<PairCheck> force;
      for (Elem p : order_) {
        for (Elem q : order_) {
          if (q <= p) continue;
          if (!placed(L.meet(p, q))) { force = PairCheck{p, q, L.meet(p, q), true}; break; }
          if (!placed(L.join(p, q))) { force = PairCheck{p, q, L.join(p, q), false}; break; }
        }
        if (force) break;
      }
      Elem next = -1;
      if (force) {
        next = force->r;
      } else {
        int best = -1;
        for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
          if (placed(x)) continue;
          int comp = 0;
          for (Elem y : order_) comp += L.comparable(x, y) ? 1 : 0;
          if (next < 0 || comp > best || (comp == best && h[static_cast<std::size_t>(x)] < h[static_cast<std::size_t>(next)])) {
            next = x;
            best = comp;
          }
        }
      }
      pos[static_cast<std::size_t>(next)] = static_cast<int>(order_.size());
      order_.push_back(next);
      forced_.push_back(force);
    }
    checks_.resize(n);
    for (Elem p = 0; p < static_cast<Elem>(n); ++p)
      for (Elem q = p + 1; q < static_cast<Elem>(n); ++q) {
        if (L.comparable(p, q)) continue;
        for (bool m : {true, false}) {
          Elem r = m ? L.meet(p, q) : L.join(p, q);
          int k = std::max({pos[static_cast<std::size_t>(p)], pos[static_cast<std::size_t>(q)], pos[static_cast<std::size_t>(r)]});
          checks_[static_cast<std::size_t>(k)].push_back({p, q, r, m});
        }
      }
    map_.assign(n, 0);
  }

  std::optional<std::vector<FreeTerm>> run() {
    if (rec(0)) {
      std::vector<FreeTerm> out;
      for (auto id : map_) out.push_back(FreeTerm::from_id(id));
      return out;
    }
    return std::nullopt;
  }

 private:
  bool place(std::size_t k, std::uint32_t t) {
    if (++nodes_ > budget_)
      throw SearchBudgetExceeded("free embedding search exceeded " + std::to_string(budget_) + " nodes");
    Elem p = order_[k];
    for (std::size_t i = 0; i < k; ++i) {
      Elem q = order_[i];
      auto u = map_[static_cast<std::size_t>(q)];
      if (u == t) return false;
      if (L_.leq(p, q) != leq_ids(t, u) || L_.leq(q, p) != leq_ids(u, t)) return false;
    }
    map_[static_cast<std::size_t>(p)] = t;
    for (const auto& c : checks_[k]) {
      auto a = map_[static_cast<std::size_t>(c.p)], b = map_[static_cast<std::size_t>(c.q)];
      if (map_[static_cast<std::size_t>(c.r)] != canon_op(!c.is_meet, {a, b})) return false;
    }
    return rec(k + 1);
  }

  bool rec(std::size_t k) {
    if (k == order_.size()) return true;
    if (const auto& f = forced_[k]) {
      auto a = map_[static_cast<std::size_t>(f->p)], b = map_[static_cast<std::size_t>(f->q)];
      return place(k, canon_op(!f->is_meet, {a, b}));
    }
    for (const auto& t : pool_)
      if (place(k, t.id())) return true;
    return false;
  }

  const FiniteLattice& L_;
  const std::vector<FreeTerm>& pool_;
  std::uint64_t budget_;
  std::vector<Elem> order_;
  std::vector<std::optional<PairCheck>> forced_;
  std::vector<std::vector<PairCheck>> checks_;
  std::vector<std::uint32_t> map_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

FreeSearchResult find_free_embedding(const FiniteLattice& L, FreeSearchOptions opts,
                                     bool search_even_if_impossible) {
  if (opts.generators < 1 || opts.generators > 26) throw BadParameter("generators must be in 1..26");
  if (opts.depth < 0) throw BadParameter("depth must be >= 0");
  FreeSearchResult res;
  if (!search_even_if_impossible && !is_finite_free_sublattice(L)) {
    res.status = FreeSearchStatus::impossible;
    return res;
  }
  std::vector<FreeTerm> gens;
  for (int i = 0; i < opts.generators; ++i) {
    std::string name = opts.generators <= 3 ? std::string(1, static_cast<char>('x' + i))
                                            : std::string(1, static_cast<char>('a' + i));
    gens.push_back(generator(name));
  }
  const std::uint64_t budget = opts.node_budget ? opts.node_budget : default_node_budget();
  for (int d = 0; d <= opts.depth; ++d) {
    bool truncated = false;
    auto pool = term_pool(gens, d, opts.pool_cap, &truncated);
    res.depth_reached = d;
    res.pool_size = pool.size();
    FreeSearch search(L, pool, budget);
    if (auto w = search.run()) {
      res.status = FreeSearchStatus::found;
      res.terms = std::move(*w);
      return res;
    }
    if (truncated) {
      res.status = FreeSearchStatus::truncated;
      return res;
    }
  }
  res.status = FreeSearchStatus::exhausted;
  return res;
}

}  // namespace latcheck::free
