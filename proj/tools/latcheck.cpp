// latcheck: command-line front end. Every command prints one report document.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latcheck/catalog.hpp"
#include "latcheck/decomp.hpp"
#include "latcheck/embed.hpp"
#include "latcheck/enumerate.hpp"
#include "latcheck/freeterm.hpp"
#include "latcheck/io.hpp"
#include "latcheck/laws.hpp"
#include "latcheck/theorems.hpp"
#include "latcheck/variety.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace latcheck;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit : int { kPass = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  bool pretty = false;
  bool timing = false;
  std::optional<std::uint64_t> seed;
};

struct Report {
  std::string command;
  json input = json::object();
  json results = json::object();
  json violations = json::array();
  std::optional<json> error;
};

json labels(const FiniteLattice& L, const ElemSet& xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(L.label(x));
  return out;
}

json blocks_json(const FiniteLattice& L, const std::vector<ElemSet>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(labels(L, b));
  return out;
}

json lattice_summary(const FiniteLattice& L) {
  return {{"name", L.name()}, {"size", L.size()}, {"hash", canonical_hash(L)}};
}

json witness_map(const FiniteLattice& pattern, const FiniteLattice& host, const EmbeddingWitness& w) {
  json m = json::object();
  for (std::size_t i = 0; i < w.map.size(); ++i)
    m[pattern.label(static_cast<Elem>(i))] = host.label(w.map[i]);
  return m;
}

void render_pretty(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        os << pad << k << ":\n";
        render_pretty(os, x, indent + 2);
      } else {
        os << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
    if (flat) {
      os << pad << v.dump() << "\n";
      return;
    }
    for (const auto& x : v) {
      const bool leaf = !x.is_structured() ||
                        (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) {
                           return !y.is_structured();
                         }));
      if (leaf) {
        os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
        continue;
      }
      os << pad << "-\n";
      render_pretty(os, x, indent + 2);
    }
  } else {
    os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void emit(const Globals& g, const Report& r, double seconds) {
  json doc;
  doc["command"] = r.command;
  doc["input"] = r.input;
  if (g.seed) doc["input"]["seed"] = *g.seed;
  doc["results"] = r.results;
  doc["violations"] = r.violations;
  doc["timing"] = g.timing ? json{{"elapsed_seconds", seconds}} : json(nullptr);
  doc["version"] = kVersion;
  if (r.error) doc["error"] = *r.error;
  if (g.pretty)
    render_pretty(std::cout, doc, 0);
  else
    std::cout << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_check(Report& r, const std::string& file) {
  auto L = io::read_lattice_file(file);
  r.input = {{"file", file}, {"lattice", lattice_summary(L)}};
  auto w = whitman(L);
  auto sd = semidistributive(L);
  auto prof = law_profile(L);
  json res;
  res["whitman"] = w.holds;
  if (w.counterexample)
    res["whitman_counterexample"] =
        labels(L, ElemSet(w.counterexample->begin(), w.counterexample->end()));
  res["sd_join"] = sd.sd_join;
  if (sd.join_counterexample)
    res["sd_join_counterexample"] =
        labels(L, ElemSet(sd.join_counterexample->begin(), sd.join_counterexample->end()));
  res["sd_meet"] = sd.sd_meet;
  if (sd.meet_counterexample)
    res["sd_meet_counterexample"] =
        labels(L, ElemSet(sd.meet_counterexample->begin(), sd.meet_counterexample->end()));
  res["distributive"] = prof.distributive;
  res["modular"] = prof.modular;
  res["doubly_reducible"] = labels(L, prof.doubly_reducible);
  res["length"] = prof.length;
  res["free_sublattice_finite"] = prof.free_sublattice_finite;
  res["dilworth_bound"] = prof.dilworth_bound;
  r.results = res;
  return kPass;
}

int cmd_dec(Report& r, const std::string& file, bool all) {
  auto L = io::read_lattice_file(file);
  r.input = {{"file", file}, {"lattice", lattice_summary(L)}, {"all_witnesses", all}};
  auto d = dec(L);
  r.results["dec"] = d.value;
  r.results["witness"] = blocks_json(L, d.witness.blocks);
  if (all) {
    json ws = json::array();
    for (const auto& p : minimum_distributive_partitions(L)) ws.push_back(blocks_json(L, p.blocks));
    r.results["minimum_partitions"] = ws;
  }
  if (distributive(L)) {
    auto gj = gj_classify(L);
    if (gj) {
      json blocks = json::array();
      for (const auto& b : gj->blocks)
        blocks.push_back({{"shape", to_string(b.shape)}, {"elements", labels(L, b.elements)}});
      r.results["galvin_jonsson"] = blocks;
    } else {
      r.results["galvin_jonsson"] = nullptr;
    }
  }
  return kPass;
}

int cmd_variety(Report& r, const std::string& file, std::uint64_t budget) {
  auto L = io::read_lattice_file(file);
  r.input = {{"file", file}, {"lattice", lattice_summary(L)}};
  auto cert = n5_variety_certificate(L);
  const bool sd = semidistributive(L).holds();
  auto hits = contains_forbidden(L, forbidden_profile("N"), SearchOptions{budget});
  json factors = json::array();
  for (const auto& f : cert.factors) factors.push_back({{"size", f.size()}, {"hash", canonical_hash(f)}});
  r.results["member"] = cert.member;
  r.results["subdirectly_irreducible"] = is_subdirectly_irreducible(L);
  r.results["si_factors"] = factors;
  if (cert.offending)
    r.results["offending_factor"] = json::parse(io::write_lattice(*cert.offending));
  r.results["semidistributive"] = sd;
  json jh = json::array();
  for (const auto& h : hits)
    jh.push_back({{"pattern", h.pattern}, {"witness", witness_map(catalog::get(h.pattern), L, h.witness)}});
  r.results["forbidden_hits"] = jh;
  // Membership forces semidistributivity and excludes every N-profile pattern.
  if (cert.member && (!sd || !hits.empty())) {
    r.violations.push_back({{"kind", "membership disagrees with necessary conditions"},
                            {"semidistributive", sd},
                            {"forbidden_hits", jh}});
    return kViolation;
  }
  return kPass;
}

int cmd_find_forbidden(Report& r, const std::string& file, const std::string& profile,
                       std::uint64_t budget) {
  auto L = io::read_lattice_file(file);
  auto prof = forbidden_profile(profile);
  r.input = {{"file", file}, {"lattice", lattice_summary(L)}, {"profile", profile}};
  auto hits = contains_forbidden(L, prof, SearchOptions{budget});
  r.results["patterns"] = prof.patterns;
  r.results["hits"] = hits.size();
  for (const auto& h : hits)
    r.violations.push_back(
        {{"pattern", h.pattern}, {"witness", witness_map(catalog::get(h.pattern), L, h.witness)}});
  return hits.empty() ? kPass : kViolation;
}

int cmd_verify(Report& r, int size, const std::vector<std::string>& theorems,
               const std::string& profile, std::uint64_t budget, unsigned threads) {
  HarnessOptions h;
  for (int n = 1; n <= size; ++n) h.sizes.push_back(n);
  h.theorems = theorems;
  h.profile = profile;
  h.node_budget = budget;
  h.threads = threads;
  r.input = {{"size", size}, {"sizes", h.sizes}, {"profile", profile}, {"theorems", theorems},
             {"budget", budget ? json(budget) : json(nullptr)}};
  auto rows = run_harness(h);
  json jr = json::array();
  bool any = false;
  for (const auto& row : rows) {
    jr.push_back({{"theorem", row.theorem},
                  {"lattices", row.lattices},
                  {"passed", row.passed},
                  {"vacuous", row.vacuous},
                  {"skipped", row.skipped},
                  {"violated", row.violated},
                  {"hypothesis_instances", row.hypothesis_instances},
                  {"entirely_vacuous", row.hypothesis_instances == 0},
                  {"smallest_nonvacuous_size",
                   row.smallest_nonvacuous ? json(*row.smallest_nonvacuous) : json(nullptr)}});
    for (const auto& rep : row.violations) {
      any = true;
      json ws = json::array();
      for (const auto& v : rep.violations) ws.push_back({{"elements", v.labels}, {"note", v.note}});
      r.violations.push_back({{"theorem", rep.theorem}, {"lattice", rep.lattice}, {"hash", rep.hash},
                              {"witnesses", ws}});
    }
  }
  r.results["theorems"] = jr;
  return any ? kViolation : kPass;
}

int cmd_enumerate(Report& r, int size, const std::string& filter, const std::string& dir) {
  auto filters = parse_filters(filter);
  r.input = {{"size", size}, {"filter", filter}};
  auto ls = filtered(size, filters);
  r.results["count"] = ls.size();
  json items = json::array();
  for (const auto& L : ls) items.push_back(lattice_summary(L));
  r.results["lattices"] = items;
  if (!dir.empty()) {
    fs::create_directories(dir);
    for (const auto& L : ls) io::write_lattice_file(L, fs::path(dir) / (L.name() + ".json"));
    r.results["emitted"] = ls.size();
  }
  return kPass;
}

int cmd_catalog(Report& r, const std::string& name, const std::string& dir) {
  r.input = {{"name", name.empty() ? json(nullptr) : json(name)}};
  std::vector<std::string> names = name.empty() ? catalog::fixed_names() : std::vector<std::string>{name};
  json items = json::array();
  for (const auto& n : names) {
    auto L = catalog::get(n);
    json item = lattice_summary(L);
    auto e = catalog::entry(n);
    if (e.expected.semidistributive) item["semidistributive"] = *e.expected.semidistributive;
    if (e.expected.subdirectly_irreducible)
      item["subdirectly_irreducible"] = *e.expected.subdirectly_irreducible;
    if (!name.empty()) item["lattice"] = json::parse(io::write_lattice(L));
    items.push_back(item);
    if (!dir.empty()) {
      fs::create_directories(dir);
      io::write_lattice_file(L, fs::path(dir) / (n + ".json"));
    }
  }
  r.results["entries"] = items;
  if (name.empty()) r.results["families"] = {"chain(k)", "grid(2,k)", "ninf(k)"};
  return kPass;
}

int cmd_free_leq(Report& r, const std::string& a, const std::string& b) {
  r.input = {{"left", a}, {"right", b}};
  auto s = free::parse_term(a), t = free::parse_term(b);
  r.results["leq"] = free::leq(s, t);
  r.results["geq"] = free::leq(t, s);
  r.results["left_canonical"] = free::to_string(free::canonicalize(s));
  r.results["right_canonical"] = free::to_string(free::canonicalize(t));
  return kPass;
}

int cmd_free_canon(Report& r, const std::string& a) {
  r.input = {{"term", a}};
  auto t = free::canonicalize(free::parse_term(a));
  r.results["canonical"] = free::to_string(t);
  r.results["depth"] = t.depth();
  return kPass;
}

int cmd_free_embed(Report& r, const std::string& file, int gens, int depth, std::uint64_t budget) {
  auto L = io::read_lattice_file(file);
  r.input = {{"file", file}, {"lattice", lattice_summary(L)}, {"gens", gens}, {"depth", depth}};
  free::FreeSearchOptions o;
  o.generators = gens;
  o.depth = depth;
  o.node_budget = budget;
  auto res = free::find_free_embedding(L, o);
  r.results["status"] = free::to_string(res.status);
  r.results["depth_reached"] = res.depth_reached;
  r.results["pool_size"] = res.pool_size;
  if (res.status == free::FreeSearchStatus::found) {
    json terms = json::object();
    for (std::size_t i = 0; i < res.terms.size(); ++i)
      terms[L.label(static_cast<Elem>(i))] = free::to_string(res.terms[i]);
    r.results["terms"] = terms;
    r.results["verified"] = free::verify_free_embedding(L, res.terms);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice checks: laws, forbidden sublattices, variety membership, Dec, "
               "theorem harnesses and free-lattice words."};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  app.add_flag("--pretty", g.pretty, "human-readable rendering");
  app.add_flag("--timing", g.timing, "include wall-clock timing");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomised sampling");
  app.fallthrough();

  std::string file, profile = "N", thm_profile = "N-full", filter, dir, name, t1, t2;
  bool all_witnesses = false;
  int size = 7, gens = free::kDefaultSearchGenerators, depth = free::kDefaultSearchDepth;
  std::vector<std::string> theorems;
  std::uint64_t budget = 0;
  unsigned threads = 0;

  auto* check = app.add_subcommand("check", "law profile of a lattice file");
  check->add_option("FILE", file)->required();
  auto* decc = app.add_subcommand("dec", "Dec value and witness partition");
  decc->add_option("FILE", file)->required();
  decc->add_flag("--all-witnesses", all_witnesses, "list every minimum distributive partition");
  auto* var = app.add_subcommand("variety", "membership in the variety generated by N5");
  var->add_option("FILE", file)->required();
  var->add_option("--budget", budget, "embedding search node budget");
  auto* ff = app.add_subcommand("find-forbidden", "embeddings of a forbidden profile");
  ff->add_option("FILE", file)->required();
  ff->add_option("--profile", profile, "N, N-full, cor62 .. cor66")->required();
  ff->add_option("--budget", budget, "embedding search node budget");
  auto* vt = app.add_subcommand("verify-theorems", "theorem harness over enumerated lattices");
  vt->add_option("--size", size, "largest lattice size (all sizes 1..N are run)");
  vt->add_option("--theorem", theorems, "theorem id (repeatable)");
  vt->add_option("--profile", thm_profile, "N-full, cor62 .. cor66");
  vt->add_option("--budget", budget, "embedding search node budget");
  vt->add_option("--threads", threads, "worker threads (0: hardware)");
  auto* en = app.add_subcommand("enumerate", "all lattices of one size");
  en->add_option("--size", size)->required();
  en->add_option("--filter", filter, "comma list of sd, whitman, distributive, in_n5, profile(NAME)");
  en->add_option("--emit", dir, "write each lattice into this directory");
  auto* cat = app.add_subcommand("catalog", "built-in lattices");
  cat->add_option("--name", name);
  cat->add_option("--emit", dir, "write lattices into this directory");
  auto* fl = app.add_subcommand("freelat", "free-lattice words");
  fl->require_subcommand(1);
  auto* fleq = fl->add_subcommand("leq", "decide s <= t");
  fleq->add_option("S", t1)->required();
  fleq->add_option("T", t2)->required();
  auto* fcanon = fl->add_subcommand("canon", "canonical form");
  fcanon->add_option("T", t1)->required();
  auto* fembed = fl->add_subcommand("embed", "search for an embedding into a free lattice");
  fembed->add_option("FILE", file)->required();
  fembed->add_option("--gens", gens);
  fembed->add_option("--depth", depth);
  fembed->add_option("--budget", budget, "node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  if (seed_opt->count() > 0) g.seed = seed;

  Report r;
  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (check->parsed()) {
      r.command = "check";
      code = cmd_check(r, file);
    } else if (decc->parsed()) {
      r.command = "dec";
      code = cmd_dec(r, file, all_witnesses);
    } else if (var->parsed()) {
      r.command = "variety";
      code = cmd_variety(r, file, budget);
    } else if (ff->parsed()) {
      r.command = "find-forbidden";
      code = cmd_find_forbidden(r, file, profile, budget);
    } else if (vt->parsed()) {
      r.command = "verify-theorems";
      code = cmd_verify(r, size, theorems, thm_profile, budget, threads);
    } else if (en->parsed()) {
      r.command = "enumerate";
      code = cmd_enumerate(r, size, filter, dir);
    } else if (cat->parsed()) {
      r.command = "catalog";
      code = cmd_catalog(r, name, dir);
    } else if (fleq->parsed()) {
      r.command = "freelat leq";
      code = cmd_free_leq(r, t1, t2);
    } else if (fcanon->parsed()) {
      r.command = "freelat canon";
      code = cmd_free_canon(r, t1);
    } else if (fembed->parsed()) {
      r.command = "freelat embed";
      code = cmd_free_embed(r, file, gens, depth, budget);
    }
  } catch (const SearchBudgetExceeded& e) {
    r.error = json{{"kind", e.kind()}, {"message", e.what()}};
    code = kBudget;
  } catch (const LatticeError& e) {
    r.error = json{{"kind", e.kind()}, {"message", e.what()}};
    code = kUsage;
  } catch (const std::exception& e) {
    r.error = json{{"kind", "Error"}, {"message", e.what()}};
    code = kUsage;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(g, r, secs);
  if (r.error) std::cerr << "latcheck: " << (*r.error)["message"].get<std::string>() << "\n";
  return code;
}
