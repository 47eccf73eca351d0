#include "pd/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace pd {

namespace {

using Task = std::function<CheckResult()>;
using Gen = std::function<void(const Subject&, std::size_t, std::vector<Task>&)>;

// Per-subject suites in report order, each with its parameter grid.
const std::vector<std::pair<std::string, Gen>>& power_suites() {
  static const std::vector<std::pair<std::string, Gen>> t{
      {"rank_formula",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t k = 0; k <= G; ++k) out.push_back([s, k] { return check_rank_formula(s, k); });
       }},
      {"dual_pair",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t k = 0; k <= G; ++k) out.push_back([s, k] { return check_dual_pair(s, k); });
       }},
      {"graded_algebra",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t i = 0; i <= G; ++i)
           for (std::size_t j = 0; i + j <= G; ++j)
             for (std::size_t k = 0; i + j + k <= G; ++k)
               out.push_back([s, i, j, k] { return check_graded_algebra(s, i, j, k); });
       }},
      {"iota_methods",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t j = 0; j <= G; ++j)
           for (std::size_t i = 0; i <= j; ++i)
             out.push_back([s, i, j] { return check_iota_methods(s, i, j); });
       }},
      {"algebra_adjunction",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t j = 0; j <= G; ++j)
           for (std::size_t i = 0; i <= j; ++i)
             out.push_back([s, i, j] { return check_algebra_adjunction(s, i, j); });
       }},
      {"algebra_composition",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t k = 0; k <= G; ++k)
           for (std::size_t i = 0; i <= k; ++i)
             for (std::size_t j = 0; i + j <= k; ++j)
               out.push_back([s, i, j, k] { return check_algebra_composition(s, i, j, k); });
       }},
      {"antiderivation",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t j = 1; j < G; ++j)
           for (std::size_t l = 1; j + l <= G; ++l)
             out.push_back([s, j, l] { return check_antiderivation(s, j, l); });
       }},
      {"mixed_pinned",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t m = 0; m <= G; ++m) out.push_back([s, m] { return check_mixed_pinned(s, m); });
       }},
      {"mixed_antiderivation",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         std::size_t H = std::min<std::size_t>(G, 3);
         for (std::size_t i = 0; i <= H; ++i)
           for (std::size_t k = 0; i + k <= H; ++k)
             for (std::size_t j = 0; j <= H; ++j)
               for (std::size_t l = 0; j + l <= H; ++l)
                 if ((j >= 1 && l >= 1) || (i >= 1 && k >= 1))
                   out.push_back([s, i, j, k, l] { return check_mixed_antiderivation(s, i, j, k, l); });
       }},
      {"mixed_adjunction",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         std::size_t H = std::min<std::size_t>(G, 3);
         for (std::size_t k = 0; k <= H; ++k)
           for (std::size_t l = 0; l <= H; ++l)
             for (std::size_t i = 0; i <= l; ++i)
               for (std::size_t j = 0; j <= k; ++j)
                 out.push_back([s, i, j, k, l] { return check_mixed_adjunction(s, i, j, k, l); });
       }},
      {"mixed_composition",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         std::size_t H = std::min<std::size_t>(G, 3);
         for (std::size_t m = 0; m <= H; ++m)
           for (std::size_t n = 0; m + n <= std::max<std::size_t>(H, 4) && n <= H; ++n)
             for (std::size_t i = 0; i <= n; ++i)
               for (std::size_t k = 0; i + k <= n; ++k)
                 for (std::size_t j = 0; j <= m; ++j)
                   for (std::size_t l = 0; j + l <= m; ++l)
                     out.push_back([s, i, j, k, l, m, n] {
                       return check_mixed_composition(s, i, j, k, l, m, n);
                     });
       }},
      {"key_lemma",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t g = 0; g <= G; ++g)
           for (std::size_t i = 0; i <= g; ++i)
             out.push_back([s, i, g] { return check_key_lemma(s, i, g); });
       }},
      {"key_steps",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t m = 1; m <= G; ++m) out.push_back([s, m] { return check_key_steps(s, m); });
       }},
      {"formal_hypotheses",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t g = 0; g <= G; ++g)
           for (std::size_t i = 0; i <= g; ++i)
             out.push_back([s, g, i] { return check_formal_hypotheses(s, g, i); });
       }},
      {"fdp_corollaries",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t g = 0; g <= G; ++g)
           for (std::size_t i = 0; i <= g; ++i)
             out.push_back([s, g, i] { return check_fdp_corollaries(s, g, i); });
       }},
      {"theorem",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t g = 0; g <= G; ++g)
           for (std::size_t i = 0; i <= g; ++i)
             for (int part = 1; part <= 4; ++part)
               out.push_back([s, g, i, part] { return check_theorem(s, g, i, part); });
       }},
      {"corollary_ct",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t g = 1; g <= G; ++g) out.push_back([s, g] { return check_corollary_ct(s, g); });
       }},
      {"p2",
       [](const Subject& s, std::size_t G, std::vector<Task>& out) {
         for (std::size_t g = 2; g <= G; ++g)
           for (std::size_t i = 1; i < g; ++i) out.push_back([s, g, i] { return check_p2(s, g, i); });
       }},
  };
  return t;
}

std::set<std::string> expand_suites(const std::vector<std::string>& suites) {
  std::set<std::string> out;
  for (const auto& s : suites) {
    if (s == "all" || s == "power")
      for (const auto& [k, v] : power_suites()) out.insert(k);
    if (s == "all" || s == "structural")
      for (const auto& k : structural_families()) out.insert(k);
    if (s != "all" && s != "power" && s != "structural") out.insert(s);
  }
  return out;
}

std::vector<Subject> subjects(const RunConfig& cfg) {
  std::vector<Subject> out;
  for (std::size_t e = cfg.even_lo; e <= cfg.even_hi; ++e)
    for (std::size_t o = cfg.odd_lo; o <= cfg.odd_hi; ++o) {
      if (e + o == 0) continue;
      for (Flavor f : cfg.flavors) {
        std::optional<std::uint64_t> conj;
        if (cfg.conjugate) conj = cfg.seed * 1000003ull + e * 131ull + o;
        out.push_back(make_subject(cfg.model, e, o, f, conj));
      }
    }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> n{"all", "power", "structural"};
  for (const auto& [k, v] : power_suites()) n.push_back(k);
  for (const auto& k : structural_families()) n.push_back(k);
  return n;
}

std::size_t effective_g_max(const RunConfig& cfg) {
  if (cfg.g_max) return *cfg.g_max;
  return std::min(cfg.cap, cfg.even_hi + cfg.odd_hi);
}

void validate(const RunConfig& cfg) {
  if (cfg.even_lo > cfg.even_hi) throw ConfigError("even-dim range is empty");
  if (cfg.odd_lo > cfg.odd_hi) throw ConfigError("odd-dim range is empty");
  if (cfg.model == Model::plain && cfg.odd_hi > 0)
    throw ConfigError("the plain model has no odd dimensions");
  if (cfg.flavors.empty()) throw ConfigError("no flavor selected");
  if (cfg.jobs == 0) throw ConfigError("jobs must be positive");
  if (effective_g_max(cfg) > cfg.cap)
    throw ConfigError("g-max " + std::to_string(effective_g_max(cfg)) + " exceeds the degree cap " +
                      std::to_string(cfg.cap));
  auto names = suite_names();
  for (const auto& s : cfg.suites)
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw ConfigError("unknown suite: " + s);
}

RunReport run(const RunConfig& cfg) {
  validate(cfg);
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.config = cfg;
  rep.g_max = effective_g_max(cfg);
  std::set<std::string> wanted = expand_suites(cfg.suites);

  std::vector<Task> tasks;
  auto subs = subjects(cfg);
  for (const auto& [name, gen] : power_suites())
    if (wanted.count(name))
      for (const auto& s : subs) gen(s, rep.g_max, tasks);
  for (const auto& fam : structural_families())
    if (wanted.count(fam))
      for (std::size_t k = 0; k < cfg.samples; ++k) {
        Model m = cfg.model;
        std::uint64_t seed = cfg.seed;
        tasks.push_back([fam, m, seed, k] { return check_structural(fam, m, seed, k); });
      }
  if (cfg.self_test) tasks.push_back([] { return check_self_test(); });

  rep.results.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ScopedDegreeCap cap(cfg.cap);
    for (std::size_t t; (t = next++) < tasks.size();) rep.results[t] = tasks[t]();
  };
  std::size_t n = std::min(cfg.jobs, std::max<std::size_t>(tasks.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& r : rep.results) {
    if (!cfg.timings) r.ms = 0;
    (r.status == Status::pass ? rep.pass : r.status == Status::fail ? rep.fail : rep.skip)++;
  }
  rep.elapsed_ms = cfg.timings
                       ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()
                       : 0;
  return rep;
}

std::string render_json(const RunReport& r) {
  using nlohmann::ordered_json;
  const RunConfig& c = r.config;
  ordered_json cfg;
  cfg["model"] = c.model == Model::plain ? "plain" : "super";
  cfg["even_dim"] = {c.even_lo, c.even_hi};
  cfg["odd_dim"] = {c.odd_lo, c.odd_hi};
  ordered_json fl = ordered_json::array();
  for (Flavor f : c.flavors) fl.push_back(flavor_name(f));
  cfg["flavors"] = fl;
  cfg["g_max"] = r.g_max;
  cfg["suites"] = c.suites;
  cfg["seed"] = c.seed;
  cfg["cap"] = c.cap;
  cfg["samples"] = c.samples;
  cfg["pairing"] = c.conjugate ? "conjugated" : "standard";
  cfg["self_test"] = c.self_test;

  ordered_json results = ordered_json::array();
  for (const auto& x : r.results) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : x.params) params[k] = v;
    ordered_json wit = ordered_json::object();
    for (const auto& [k, v] : x.witnesses) wit[k] = to_string(v);
    ordered_json e;
    e["id"] = x.id;
    e["params"] = params;
    e["status"] = status_name(x.status);
    e["witnesses"] = wit;
    e["residual"] = x.residual;
    if (!x.reason.empty()) e["reason"] = x.reason;
    e["ms"] = x.ms;
    results.push_back(e);
  }
  ordered_json out;
  out["config"] = cfg;
  out["results"] = results;
  out["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"skip", r.skip}};
  out["elapsed_ms"] = r.elapsed_ms;
  return out.dump(2) + "\n";
}

std::string render_text(const RunReport& r) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"STATUS", "CHECK", "PARAMS", "WITNESSES", "RESIDUAL"});
  for (const auto& x : r.results) {
    std::string params, wit, res = x.residual;
    for (const auto& [k, v] : x.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    for (const auto& [k, v] : x.witnesses) wit += (wit.empty() ? "" : " ") + k + "=" + to_string(v);
    if (!x.reason.empty()) res += " (" + x.reason + ")";
    if (r.config.timings) res += " " + std::to_string(x.ms) + "ms";
    std::string st = x.status == Status::pass ? "PASS" : x.status == Status::fail ? "FAIL" : "SKIP";
    rows.push_back({st, x.id, params, wit.empty() ? "-" : wit, res});
  }
  std::array<std::size_t, 5> w{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) w[c] = std::max(w[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) os << row[c] << std::string(w[c] - row[c].size() + 2, ' ');
    os << row[4] << '\n';
  }
  os << "summary: " << r.pass << " pass, " << r.fail << " fail, " << r.skip << " skip";
  if (r.config.timings) os << " in " << r.elapsed_ms << " ms";
  os << '\n';
  return os.str();
}

}  // namespace pd
