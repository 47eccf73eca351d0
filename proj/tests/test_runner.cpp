#include "pd/runner.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace pd;

namespace {

RunConfig small() {
  RunConfig c;
  c.even_lo = 1;
  c.even_hi = 2;
  c.suites = {"rank_formula", "key_lemma"};
  return c;
}

}  // namespace

TEST_CASE("json report layout") {
  auto rep = run(small());
  auto j = nlohmann::json::parse(render_json(rep));
  // nlohmann::json sorts keys on parse, so check the order on the raw text.
  std::string text = render_json(rep);
  CHECK(text.find("\"config\"") < text.find("\"results\""));
  CHECK(text.find("\"results\"") < text.find("\"summary\""));
  CHECK(text.find("\"summary\"") < text.find("\"elapsed_ms\""));
  REQUIRE(j["results"].is_array());
  REQUIRE_FALSE(j["results"].empty());
  for (const auto& r : j["results"]) {
    for (const char* k : {"id", "params", "status", "witnesses", "residual", "ms"}) CHECK(r.contains(k));
    CHECK(r["params"].is_object());
    for (auto& [name, value] : r["witnesses"].items()) {
      CHECK(value.is_string());
      CHECK(value.get<std::string>().find('/') != std::string::npos);
    }
  }
  CHECK(j["summary"]["pass"].get<std::size_t>() == rep.pass);
  CHECK(j["summary"]["fail"].get<std::size_t>() == 0);
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("reports are deterministic across runs and job counts") {
  auto a = render_json(run(small()));
  auto cfg = small();
  cfg.jobs = 3;
  CHECK(render_json(run(cfg)) == a);
  CHECK(render_text(run(small())) == render_text(run(small())));
}

TEST_CASE("self test adds exactly one failure") {
  auto cfg = small();
  cfg.self_test = true;
  auto rep = run(cfg);
  CHECK(rep.fail == 1);
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("empty report renders") {
  RunReport rep;
  auto j = nlohmann::json::parse(render_json(rep));
  CHECK(j["results"].empty());
  std::string t = render_text(rep);
  CHECK(t.find("STATUS") != std::string::npos);
  CHECK(t.find("PASS ") == std::string::npos);
}

TEST_CASE("text table has one aligned row per check") {
  auto rep = run(small());
  std::string t = render_text(rep);
  std::size_t rows = 0, col = std::string::npos;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t nl = t.find('\n', pos);
    std::string line = t.substr(pos, nl - pos);
    if (line.rfind("PASS", 0) == 0) {
      ++rows;
      std::size_t c = line.find("rank_formula") != std::string::npos ? line.find("rank_formula") : line.find("key_lemma");
      if (col == std::string::npos) col = c;
      CHECK(c == col);
    }
    pos = nl == std::string::npos ? t.size() : nl + 1;
  }
  CHECK(rows == rep.results.size());
}

TEST_CASE("invalid configurations are rejected") {
  auto c = small();
  c.even_lo = 3;
  c.even_hi = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small();
  c.suites = {"no_such_suite"};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small();
  c.jobs = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small();
  c.model = Model::plain;
  c.odd_hi = 2;
  CHECK_THROWS_AS(validate(c), ConfigError);
}
