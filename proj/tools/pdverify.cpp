// pdverify: run exact duality checks over a parameter grid.
//
// Exit status: 0 when every check passes (or is skipped), 1 when any check
// fails, 2 on a usage or configuration error.

#include "pd/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <regex>

namespace {

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw pd::ConfigError("bad range '" + s + "' (expected A..B)");
  std::size_t a = std::stoul(m[1]);
  std::size_t b = m[2].matched ? std::stoul(m[2]) : a;
  return {a, b};
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& it : items) {
    std::size_t start = 0;
    while (start <= it.size()) {
      std::size_t end = it.find(',', start);
      if (end == std::string::npos) end = it.size();
      if (end > start) out.push_back(it.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Poincare duality for alternating and symmetric powers"};
  std::string model = "plain", even = "1..3", odd = "0..0", flavor = "both", format = "text";
  std::optional<std::size_t> g_max;
  std::vector<std::string> suites{"all"};
  pd::RunConfig cfg;
  app.add_option("--model", model, "Category model")->check(CLI::IsMember({"plain", "super"}));
  app.add_option("--even-dim", even, "Even dimension range A..B");
  app.add_option("--odd-dim", odd, "Odd dimension range A..B (super model only)");
  app.add_option("--flavor", flavor, "Power flavor")->check(CLI::IsMember({"alt", "sym", "both"}));
  app.add_option("--g-max", g_max, "Largest degree g (default: largest dimension, at most the cap)");
  app.add_option("--suite", suites, "Comma-separated suites or check ids (default: all)")
      ->delimiter(',');
  app.add_option("--seed", cfg.seed, "Seed for randomized structural checks");
  app.add_option("--cap", cfg.cap, "Tensor-degree cap");
  app.add_option("--jobs", cfg.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Random instances per structural family");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--conjugate", cfg.conjugate, "Give V a random even pairing (change of basis)");
  app.add_flag("--self-test", cfg.self_test, "Append a deliberately corrupted identity");
  app.add_flag("--timings", cfg.timings, "Report wall-clock timings (breaks byte determinism)");
  app.add_flag_callback(
      "--list-suites",
      [] {
        for (const auto& s : pd::suite_names()) std::cout << s << '\n';
        throw CLI::Success();
      },
      "List suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.model = model == "plain" ? pd::Model::plain : pd::Model::super;
    std::tie(cfg.even_lo, cfg.even_hi) = parse_range(even);
    std::tie(cfg.odd_lo, cfg.odd_hi) = parse_range(odd);
    if (flavor == "alt") cfg.flavors = {pd::Flavor::alt};
    else if (flavor == "sym") cfg.flavors = {pd::Flavor::sym};
    else cfg.flavors = {pd::Flavor::alt, pd::Flavor::sym};
    cfg.g_max = g_max;
    cfg.suites = split_list(suites);
    pd::validate(cfg);
  } catch (const pd::ConfigError& e) {
    std::cerr << "pdverify: " << e.what() << '\n';
    return 2;
  }

  pd::RunReport rep = pd::run(cfg);
  std::cout << (format == "json" ? pd::render_json(rep) : pd::render_text(rep));
  return rep.exit_code();
}
