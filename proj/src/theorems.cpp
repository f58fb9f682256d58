#include "latcheck/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "latcheck/catalog.hpp"
#include "latcheck/decomp.hpp"
#include "latcheck/embed.hpp"
#include "latcheck/enumerate.hpp"
#include "latcheck/laws.hpp"
#include "latcheck/variety.hpp"

namespace latcheck {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::violated: return "violated";
    case ReportStatus::skipped: return "skipped";
    case ReportStatus::vacuous: return "vacuous";
  }
  return "?";
}

Premises compute_premises(const FiniteLattice& L) {
  Premises p;
  p.whitman = whitman(L).holds;
  p.semidistributive = semidistributive(L).holds();
  ElemSet dr = doubly_reducible_elements(L);
  p.no_doubly_reducible = dr.empty();
  if (!dr.empty()) p.doubly_reducible_label = L.label(dr.front());
  VarietyCertificate cert = n5_variety_certificate(L);
  p.in_n5 = cert.member;
  if (cert.offending) p.variety_reason = "subdirectly irreducible factor " + cert.offending->name();
  return p;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Gate {
  bool whitman = false;
  bool in_n5 = false;
  bool no_dr = false;
};

constexpr Gate kWhitmanN{true, true, false};
constexpr Gate kNoDrN{false, true, true};
constexpr Gate kNoDr{false, false, true};

// Shared scaffolding: gate, timing, status.
class Run {
 public:
  Run(std::string id, const FiniteLattice& L, const CheckOptions& opts)
      : opts_(opts), lattice_(&L), start_(Clock::now()) {
    r_.theorem = std::move(id);
    r_.lattice = L.name();
    r_.hash = canonical_hash(L);
    if (!opts.ignore_gate && !opts.premises) {
      owned_ = compute_premises(L);
      prem_ = &owned_;
    } else {
      prem_ = opts.premises;
    }
  }

  // False when the lattice fails the gate; the report is then final.
  bool admit(Gate g) {
    if (opts_.ignore_gate) return true;
    const Premises& p = *prem_;
    if (g.whitman && !p.whitman) return skip("fails Whitman's condition");
    if (g.no_dr && !p.no_doubly_reducible)
      return skip("doubly reducible element " + p.doubly_reducible_label);
    if (g.in_n5 && !p.in_n5)
      return skip("not in the variety generated by N5 (" + p.variety_reason + ")");
    return true;
  }

  void instance() { ++r_.hypothesis_instances; }

  void violation(ElemSet witness, std::string note) {
    if (r_.violations.size() < opts_.max_violations) {
      std::vector<std::string> labels;
      for (Elem x : witness) labels.push_back(lattice_->label(x));
      r_.violations.push_back({std::move(witness), std::move(labels), std::move(note)});
    }
    ++violation_count_;
  }

  TheoremReport finish() {
    r_.vacuous = r_.hypothesis_instances == 0;
    if (r_.status != ReportStatus::skipped) {
      if (violation_count_ > 0)
        r_.status = ReportStatus::violated;
      else
        r_.status = r_.vacuous ? ReportStatus::vacuous : ReportStatus::pass;
    }
    r_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(r_);
  }

  const CheckOptions& opts() const { return opts_; }

 private:
  bool skip(std::string reason) {
    r_.status = ReportStatus::skipped;
    r_.skip_reason = std::move(reason);
    return false;
  }

  CheckOptions opts_;
  const FiniteLattice* lattice_;
  Premises owned_;
  const Premises* prem_ = nullptr;
  Clock::time_point start_;
  TheoremReport r_;
  std::size_t violation_count_ = 0;
};

SearchOptions search_opts(const CheckOptions& o) { return SearchOptions{o.node_budget}; }

std::string set_labels(const FiniteLattice& L, const ElemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + L.label(s[i]);
  return out + "}";
}

// The join-side statements are the meet-side statements on the dual.
TheoremReport on_dual(const std::string& id, const FiniteLattice& L,
                      const std::function<TheoremReport(const FiniteLattice&)>& meet_side) {
  TheoremReport r = meet_side(dual(L));
  r.theorem = id;
  r.lattice = L.name();
  r.hash = canonical_hash(L);
  return r;
}

CheckOptions for_dual(const CheckOptions& opts, const Premises& p) {
  // Every gate in use is self-dual, so the premises carry over.
  CheckOptions o = opts;
  o.premises = &p;
  return o;
}

}  // namespace

// ---------------------------------------------------------------------------
// L15

EmbeddingWitness lemma_l15_witness(const FiniteLattice& L, const std::array<Elem, 6>& t) {
  const auto [a1, a2, a3, b1, b2, b3] = t;
  for (Elem e : t)
    if (e < 0 || static_cast<std::size_t>(e) >= L.size()) throw HypothesisViolated("element index");
  std::set<Elem> distinct(t.begin(), t.end());
  if (distinct.size() != 6) throw HypothesisViolated("six distinct elements");
  if (!(L.lt(a1, a2) && L.lt(a2, a3))) throw HypothesisViolated("a1 < a2 < a3");
  if (!(L.lt(b1, b2) && L.lt(b2, b3))) throw HypothesisViolated("b1 < b2 < b3");
  if (!L.lt(a1, b3)) throw HypothesisViolated("a1 < b3");
  if (!L.lt(b1, a3)) throw HypothesisViolated("b1 < a3");
  for (Elem b : {b1, b2, b3})
    if (!L.parallel(a2, b)) throw HypothesisViolated("a2 || bi");
  for (Elem a : {a1, a2, a3})
    if (!L.parallel(a, b2)) throw HypothesisViolated("ai || b2");
  if (L.join(a2, b2) != L.join(a3, b3)) throw HypothesisViolated("a2 v b2 = a3 v b3");
  if (L.meet(a2, b2) != L.meet(a1, b1)) throw HypothesisViolated("a2 ^ b2 = a1 ^ b1");
  if (has_doubly_reducible_element(L)) throw HypothesisViolated("no doubly reducible elements");

  const Elem a1p = L.meet(a2, b3);
  const Elem b1p = L.meet(a3, b2);
  const Elem a3pp = L.join(a2, b1p);
  const Elem b3pp = L.join(a1p, b2);

  static const FiniteLattice l15 = catalog::get("L15");
  const std::map<std::string, Elem> image{
      {"a", L.join(a2, b2)}, {"b", a3pp}, {"c", b3pp}, {"d", L.meet(a3pp, b3pp)},
      {"e", a2},             {"f", L.join(a1p, b1p)}, {"g", b2}, {"h", a1p},
      {"i", b1p},            {"j", L.meet(a2, b2)}};
  EmbeddingWitness w;
  for (const auto& lab : l15.labels()) w.map.push_back(image.at(lab));
  if (!is_embedding(l15, L, w))
    throw std::logic_error("L15 construction does not yield a copy of L15 on " + set_labels(L, w.map));
  return w;
}

TheoremReport lemma_l15_check(const FiniteLattice& L, const CheckOptions& opts) {
  Run run("lemma-l15", L, opts);
  if (!run.admit(kNoDr)) return run.finish();
  const Elem n = static_cast<Elem>(L.size());
  std::optional<bool> embeds;
  for (Elem a1 = 0; a1 < n; ++a1)
    for (Elem a2 = 0; a2 < n; ++a2) {
      if (!L.lt(a1, a2)) continue;
      for (Elem a3 = 0; a3 < n; ++a3) {
        if (!L.lt(a2, a3)) continue;
        for (Elem b1 = 0; b1 < n; ++b1) {
          if (!L.lt(b1, a3) || !L.parallel(a2, b1)) continue;
          for (Elem b2 = 0; b2 < n; ++b2) {
            if (!L.lt(b1, b2) || !L.parallel(a1, b2) || !L.parallel(a2, b2) ||
                !L.parallel(a3, b2) || L.meet(a2, b2) != L.meet(a1, b1))
              continue;
            for (Elem b3 = 0; b3 < n; ++b3) {
              if (!L.lt(b2, b3) || !L.lt(a1, b3) || !L.parallel(a2, b3) ||
                  L.join(a2, b2) != L.join(a3, b3))
                continue;
              std::set<Elem> six{a1, a2, a3, b1, b2, b3};
              if (six.size() != 6) continue;
              run.instance();
              if (!embeds)
                embeds = find_embedding(catalog::get("L15"), L, search_opts(opts)).has_value();
              ElemSet tuple{a1, a2, a3, b1, b2, b3};
              if (!*embeds) run.violation(tuple, "no sublattice isomorphic to L15");
              try {
                lemma_l15_witness(L, {a1, a2, a3, b1, b2, b3});
              } catch (const HypothesisViolated&) {
                // only reachable with the gate lifted on a lattice with doubly reducible elements
              } catch (const std::logic_error& e) {
                run.violation(tuple, std::string("construction: ") + e.what());
              }
            }
          }
        }
      }
    }
  return run.finish();
}

// ---------------------------------------------------------------------------
// Cube theorem

EmbeddingWitness boolean_cube_witness(const FiniteLattice& L, const std::array<Elem, 3>& y, Elem d) {
  const auto [a, b, c] = y;
  if (!(L.parallel(a, b) && L.parallel(b, c) && L.parallel(a, c)))
    throw HypothesisViolated("{a,b,c} is an antichain");
  if (L.meet(a, b) != d || L.meet(b, c) != d || L.meet(a, c) != d)
    throw HypothesisViolated("pairwise meets equal d");
  const Elem ab = L.join(a, b), bc = L.join(b, c), ca = L.join(c, a);
  if (ab == bc || bc == ca || ab == ca) throw HypothesisViolated("pairwise joins distinct");

  static const FiniteLattice b3 = catalog::boolean_cube();
  const std::map<std::string, Elem> image{
      {"000", d},           {"100", L.meet(ab, ca)}, {"010", L.meet(ab, bc)},
      {"001", L.meet(ca, bc)}, {"110", ab},          {"101", ca},
      {"011", bc},          {"111", L.join(ab, c)}};
  EmbeddingWitness w;
  for (const auto& lab : b3.labels()) w.map.push_back(image.at(lab));
  if (!is_embedding(b3, L, w))
    throw std::logic_error("cube construction does not yield 2x2x2 on " + set_labels(L, w.map));
  return w;
}

namespace {

// Antichains of size >= 3 with constant pairwise meet, in lexicographic order.
void for_each_meet_antichain(const FiniteLattice& L,
                             const std::function<void(const ElemSet&, Elem)>& visit) {
  const Elem n = static_cast<Elem>(L.size());
  ElemSet cur;
  std::function<void(Elem, Elem)> grow = [&](Elem from, Elem d) {
    for (Elem x = from; x < n; ++x) {
      bool ok = true;
      for (Elem y : cur)
        if (!L.parallel(x, y) || L.meet(x, y) != d) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(x);
      visit(cur, d);
      grow(x + 1, d);
      cur.pop_back();
    }
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (!L.parallel(a, b)) continue;
      cur = {a, b};
      grow(b + 1, L.meet(a, b));
    }
}

TheoremReport cube_meet_side(const std::string& id, const FiniteLattice& L, const CheckOptions& opts,
                             bool three_only) {
  Run run(id, L, opts);
  if (!run.admit(kWhitmanN)) return run.finish();
  for_each_meet_antichain(L, [&](const ElemSet& y, Elem d) {
    if (y.size() < 3 || (three_only && y.size() > 3)) return;
    run.instance();
    ElemSet witness = y;
    witness.push_back(d);
    if (y.size() > 3) {
      run.violation(witness, "antichain of size " + std::to_string(y.size()) + " with constant meet");
      return;
    }
    std::size_t covering = 0;
    for (Elem x : y) covering += L.covers(d, x) ? 1 : 0;
    if (covering < 1) run.violation(witness, "no element covers the common meet");
    if (three_only) return;
    try {
      boolean_cube_witness(L, {y[0], y[1], y[2]}, d);
    } catch (const HypothesisViolated& e) {
      run.violation(witness, std::string("construction: ") + e.what());
    } catch (const std::logic_error& e) {
      run.violation(witness, std::string("construction: ") + e.what());
    }
  });
  return run.finish();
}

}  // namespace

TheoremReport cube_theorem_check(const FiniteLattice& L, Side side, const CheckOptions& opts) {
  if (side == Side::meet) return cube_meet_side("cube-meet", L, opts, false);
  Premises p = opts.premises ? *opts.premises : Premises{};
  if (!opts.premises && !opts.ignore_gate) p = compute_premises(L);
  CheckOptions o = for_dual(opts, p);
  return on_dual("cube-join", L,
                 [&](const FiniteLattice& D) { return cube_meet_side("cube-join", D, o, false); });
}

TheoremReport three_antichain_cover_check(const FiniteLattice& L, Side side, const CheckOptions& opts) {
  if (side == Side::meet) return cube_meet_side("cover3-meet", L, opts, true);
  Premises p = opts.premises ? *opts.premises : Premises{};
  if (!opts.premises && !opts.ignore_gate) p = compute_premises(L);
  CheckOptions o = for_dual(opts, p);
  return on_dual("cover3-join", L,
                 [&](const FiniteLattice& D) { return cube_meet_side("cover3-join", D, o, true); });
}

// ---------------------------------------------------------------------------
// Dec bound and degeneracy

namespace {

inline constexpr std::size_t kSublatticeScanCap = 16;

struct Fibres {
  std::size_t joins = 0, meets = 0;
};

Fibres fibres(const FiniteLattice& L, Elem a, const ElemSet& K) {
  std::set<Elem> j, m;
  for (Elem b : K) {
    j.insert(L.join(a, b));
    m.insert(L.meet(a, b));
  }
  return {j.size(), m.size()};
}

ElemSet parallel_to_all(const FiniteLattice& L, const ElemSet& K) {
  ElemSet out;
  for (Elem a = 0; a < static_cast<Elem>(L.size()); ++a)
    if (std::all_of(K.begin(), K.end(), [&](Elem b) { return L.parallel(a, b); })) out.push_back(a);
  return out;
}

}  // namespace

TheoremReport dec_bound_check(const FiniteLattice& L, const CheckOptions& opts) {
  Run run("dec-bound", L, opts);
  if (!run.admit(kWhitmanN)) return run.finish();
  const std::size_t n = L.size();
  if (n > kSublatticeScanCap) throw SizeLimit("sublattice enumeration", n, kSublatticeScanCap);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ElemSet K;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) K.push_back(static_cast<Elem>(i));
    bool closed = true;
    for (std::size_t i = 0; i < K.size() && closed; ++i)
      for (std::size_t j = i + 1; j < K.size(); ++j)
        if (!(mask >> L.meet(K[i], K[j]) & 1u) || !(mask >> L.join(K[i], K[j]) & 1u)) {
          closed = false;
          break;
        }
    if (!closed) continue;
    ElemSet as = parallel_to_all(L, K);
    if (as.empty()) continue;
    const int d = dec(induced_sublattice(L, K)).value;
    for (Elem a : as) {
      run.instance();
      Fibres f = fibres(L, a, K);
      const std::size_t bound = f.joins * f.meets;
      if (static_cast<std::size_t>(d) > bound) {
        ElemSet w = K;
        w.push_back(a);
        run.violation(w, "K=" + set_labels(L, K) + " a=" + L.label(a) + " dec=" + std::to_string(d) +
                             " bound=" + std::to_string(bound));
      }
    }
  }
  return run.finish();
}

TheoremReport degeneracy_lemma_check(const FiniteLattice& L, const CheckOptions& opts) {
  Run run("degeneracy", L, opts);
  if (!run.admit(kWhitmanN)) return run.finish();
  const Elem n = static_cast<Elem>(L.size());
  // A convex sublattice of a finite lattice is an interval.
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      if (!L.leq(u, v)) continue;
      ElemSet K = interval(L, u, v);
      ElemSet as = parallel_to_all(L, K);
      if (as.empty()) continue;
      std::optional<bool> dist;
      for (Elem a : as) {
        run.instance();
        Fibres f = fibres(L, a, K);
        if (f.joins >= 3 || f.meets >= 3) continue;
        if (!dist) dist = distributive(induced_sublattice(L, K));
        if (!*dist) {
          ElemSet w = K;
          w.push_back(a);
          run.violation(w, "K=[" + L.label(u) + "," + L.label(v) + "] a=" + L.label(a) +
                               " fibres " + std::to_string(f.joins) + "x" + std::to_string(f.meets) +
                               ", K not distributive");
        }
      }
    }
  return run.finish();
}

// ---------------------------------------------------------------------------
// Twelve-element configuration

TheoremReport twelve_element_lemma_check(const FiniteLattice& L, const CheckOptions& opts) {
  Run run("twelve-element", L, opts);
  if (!run.admit(kNoDrN)) return run.finish();
  static const FiniteLattice g = catalog::grid(2, 5);
  // Grid index i*5+j: row 0 is w', w, a, y, y'; row 1 is x', x, b, z, z'.
  enum : int { wp = 0, w = 1, a = 2, y = 3, yp = 4, xp = 5, x = 6, b = 7, z = 8, zp = 9 };
  const std::array<int, 5> c_below{a, w, wp}, s_below{a, w, wp};
  const std::array<int, 3> c_above{b, z, zp};
  const std::array<int, 4> s_above{y, yp, z, zp};
  const Elem n = static_cast<Elem>(L.size());

  auto placed = [&](const EmbeddingWitness& e, Elem t, auto const& below, auto const& above) {
    std::vector<bool> lo(10, false), hi(10, false);
    for (int i : below) lo[static_cast<std::size_t>(i)] = true;
    for (int i : above) hi[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < 10; ++i) {
      const Elem gi = e.map[static_cast<std::size_t>(i)];
      if (gi == t) return false;
      const bool le = L.leq(gi, t), ge = L.leq(t, gi);
      if (le != lo[static_cast<std::size_t>(i)] || ge != hi[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  };

  for_each_embedding(
      g, L,
      [&](const EmbeddingWitness& e) {
        run.instance();
        for (Elem c = 0; c < n; ++c) {
          if (!placed(e, c, c_below, c_above)) continue;
          for (Elem s = 0; s < n; ++s) {
            if (!placed(e, s, s_below, s_above) || !L.parallel(c, s)) continue;
            ElemSet wit = e.map;
            wit.push_back(c);
            wit.push_back(s);
            run.violation(wit, "twelve-element configuration with c=" + L.label(c) + " s=" + L.label(s));
          }
        }
        return true;
      },
      search_opts(opts));
  return run.finish();
}

// ---------------------------------------------------------------------------
// Staircase cover theorem

namespace {

TheoremReport staircase_meet_side(const std::string& id, const FiniteLattice& L, const CheckOptions& opts) {
  Run run(id, L, opts);
  if (!run.admit(kNoDrN)) return run.finish();
  const Elem n = static_cast<Elem>(L.size());
  std::array<Elem, 5> bs{};
  std::function<void(Elem, int)> grow = [&](Elem a, int k) {
    if (k == 5) {
      run.instance();
      const Elem j3 = L.join(a, bs[2]), j4 = L.join(a, bs[3]);
      if (L.meet(j4, bs[4]) == bs[3]) return;
      const Elem m = L.meet(j3, bs[4]);
      if (!L.covers(m, j3)) {
        ElemSet w{a};
        w.insert(w.end(), bs.begin(), bs.end());
        run.violation(w, "(a v b3) ^ b5 = " + L.label(m) + " is not covered by a v b3 = " + L.label(j3));
      }
      return;
    }
    for (Elem b = 0; b < n; ++b) {
      if (!L.parallel(a, b)) continue;
      if (k > 0 && (!L.lt(bs[static_cast<std::size_t>(k - 1)], b) ||
                    !L.lt(L.join(a, bs[static_cast<std::size_t>(k - 1)]), L.join(a, b))))
        continue;
      bs[static_cast<std::size_t>(k)] = b;
      grow(a, k + 1);
    }
  };
  for (Elem a = 0; a < n; ++a) grow(a, 0);
  return run.finish();
}

}  // namespace

TheoremReport staircase_cover_check(const FiniteLattice& L, Side side, const CheckOptions& opts) {
  if (side == Side::meet) return staircase_meet_side("staircase", L, opts);
  Premises p = opts.premises ? *opts.premises : Premises{};
  if (!opts.premises && !opts.ignore_gate) p = compute_premises(L);
  CheckOptions o = for_dual(opts, p);
  return on_dual("staircase-dual", L,
                 [&](const FiniteLattice& D) { return staircase_meet_side("staircase-dual", D, o); });
}

// ---------------------------------------------------------------------------
// Dispatch, profiles, harness

std::vector<std::string> theorem_ids() {
  return {"lemma-l15",  "cube-meet",      "cube-join",      "dec-bound",   "degeneracy",
          "twelve-element", "staircase", "staircase-dual", "cover3-meet", "cover3-join"};
}

TheoremReport run_theorem(const std::string& id, const FiniteLattice& L, const CheckOptions& opts) {
  if (id == "lemma-l15") return lemma_l15_check(L, opts);
  if (id == "cube-meet") return cube_theorem_check(L, Side::meet, opts);
  if (id == "cube-join") return cube_theorem_check(L, Side::join, opts);
  if (id == "dec-bound") return dec_bound_check(L, opts);
  if (id == "degeneracy") return degeneracy_lemma_check(L, opts);
  if (id == "twelve-element") return twelve_element_lemma_check(L, opts);
  if (id == "staircase") return staircase_cover_check(L, Side::meet, opts);
  if (id == "staircase-dual") return staircase_cover_check(L, Side::join, opts);
  if (id == "cover3-meet") return three_antichain_cover_check(L, Side::meet, opts);
  if (id == "cover3-join") return three_antichain_cover_check(L, Side::join, opts);
  throw UnknownName(id);
}

std::vector<std::string> profile_ids() { return {"N-full", "cor62", "cor63", "cor64", "cor65", "cor66"}; }

std::vector<std::string> profile_theorems(const std::string& profile) {
  if (profile == "N-full")
    return {"lemma-l15", "cube-meet", "cube-join", "dec-bound", "degeneracy",
            "twelve-element", "staircase", "staircase-dual"};
  if (profile == "cor62") return {"cube-meet", "cube-join", "staircase", "staircase-dual"};
  if (profile == "cor63") return {"cube-meet", "cube-join", "staircase-dual"};
  if (profile == "cor64") return {"cube-meet", "cube-join", "staircase"};
  if (profile == "cor65") return {"dec-bound", "staircase", "staircase-dual", "cover3-join"};
  if (profile == "cor66") return {"dec-bound", "staircase", "staircase-dual", "cover3-meet"};
  throw UnknownProfile(profile);
}

std::vector<TheoremReport> run_profile(const FiniteLattice& L, const std::string& profile,
                                       const CheckOptions& opts) {
  const std::vector<std::string> ids = profile_theorems(profile);
  std::vector<TheoremReport> out;
  if (profile == "N-full") {
    Premises p = opts.premises ? *opts.premises : compute_premises(L);
    CheckOptions o = opts;
    o.premises = &p;
    for (const auto& id : ids) out.push_back(run_theorem(id, L, o));
    return out;
  }

  std::string reason;
  if (!opts.ignore_gate) {
    if (!whitman(L).holds)
      reason = "fails Whitman's condition";
    else if (!semidistributive(L).holds())
      reason = "not semidistributive";
    else {
      auto hits = contains_forbidden(L, forbidden_profile(profile), search_opts(opts));
      if (!hits.empty()) reason = "contains " + hits.front().pattern;
    }
  }
  CheckOptions o = opts;
  o.ignore_gate = true;
  for (const auto& id : ids) {
    if (reason.empty()) {
      out.push_back(run_theorem(id, L, o));
      continue;
    }
    TheoremReport r;
    r.theorem = id;
    r.lattice = L.name();
    r.hash = canonical_hash(L);
    r.status = ReportStatus::skipped;
    r.skip_reason = reason;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<HarnessRow> run_harness(const HarnessOptions& opts) {
  const std::vector<std::string> ids =
      opts.theorems.empty() ? profile_theorems(opts.profile) : opts.theorems;
  if (opts.profile != "N-full") {
    auto allowed = profile_theorems(opts.profile);
    for (const auto& id : ids)
      if (std::find(allowed.begin(), allowed.end(), id) == allowed.end())
        throw BadParameter("theorem " + id + " is not part of profile " + opts.profile);
  } else {
    auto known = theorem_ids();
    for (const auto& id : ids)
      if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownName(id);
  }

  std::vector<const FiniteLattice*> work;
  for (int n : opts.sizes)
    for (const auto& L : all_lattices(n)) work.push_back(&L);

  std::vector<std::vector<TheoremReport>> results(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  CheckOptions base;
  base.node_budget = opts.node_budget;

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
      try {
        const FiniteLattice& L = *work[i];
        if (opts.profile == "N-full") {
          Premises p = compute_premises(L);
          CheckOptions o = base;
          o.premises = &p;
          for (const auto& id : ids) results[i].push_back(run_theorem(id, L, o));
        } else {
          for (auto& r : run_profile(L, opts.profile, base))
            if (std::find(ids.begin(), ids.end(), r.theorem) != ids.end())
              results[i].push_back(std::move(r));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<HarnessRow> rows;
  for (const auto& id : ids) rows.push_back(HarnessRow{id, 0, 0, 0, 0, 0, 0, std::nullopt, {}});
  for (std::size_t i = 0; i < work.size(); ++i)
    for (auto& r : results[i]) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const HarnessRow& h) { return h.theorem == r.theorem; });
      HarnessRow& row = *it;
      ++row.lattices;
      row.hypothesis_instances += r.hypothesis_instances;
      const int size = static_cast<int>(work[i]->size());
      if (r.hypothesis_instances > 0 && (!row.smallest_nonvacuous || size < *row.smallest_nonvacuous))
        row.smallest_nonvacuous = size;
      switch (r.status) {
        case ReportStatus::pass: ++row.passed; break;
        case ReportStatus::vacuous: ++row.vacuous; break;
        case ReportStatus::skipped: ++row.skipped; break;
        case ReportStatus::violated:
          ++row.violated;
          row.violations.push_back(std::move(r));
          break;
      }
    }
  return rows;
}

}  // namespace latcheck
