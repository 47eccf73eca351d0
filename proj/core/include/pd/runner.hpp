#pragma once
// Grid runner: expands a configuration into individual checks, runs them
// (optionally in parallel), and renders a deterministic report.

#include "pd/checks.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pd {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Model model = Model::plain;
  std::size_t even_lo = 1, even_hi = 3;
  std::size_t odd_lo = 0, odd_hi = 0;
  std::vector<Flavor> flavors{Flavor::alt, Flavor::sym};
  std::optional<std::size_t> g_max;  // default: largest dimension, at most the cap
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 1;
  std::size_t cap = 5;
  std::size_t jobs = 1;
  std::size_t samples = 20;  // random instances per structural family
  bool conjugate = false;    // give V a random (seeded) even pairing
  bool self_test = false;    // append the deliberately corrupted identity
  bool timings = false;      // report wall-clock times (non-deterministic)
};

struct RunReport {
  RunConfig config;
  std::size_t g_max = 0;
  std::vector<CheckResult> results;
  std::size_t pass = 0, fail = 0, skip = 0;
  double elapsed_ms = 0;
  int exit_code() const { return fail == 0 ? 0 : 1; }
};

// Suite names accepted in RunConfig::suites ("all", "structural", "power",
// or any single check id).
std::vector<std::string> suite_names();

// Throws ConfigError on an inconsistent configuration.
void validate(const RunConfig& cfg);
std::size_t effective_g_max(const RunConfig& cfg);

RunReport run(const RunConfig& cfg);

std::string render_json(const RunReport& r);
std::string render_text(const RunReport& r);

}  // namespace pd
