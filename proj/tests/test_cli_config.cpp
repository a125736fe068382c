#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>

#include "doctest.h"

#include "caystir/cli_config.hpp"

using caystir::CliConfig;

namespace {

namespace fs = std::filesystem;

CliConfig::EnvLookup fake_env(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const char* name) -> const char* {
    const auto it = vars.find(name);
    if (it == vars.end()) return nullptr;
    return it->second.c_str();
  };
}

struct TempCwd {
  fs::path dir;
  fs::path previous;
  TempCwd() {
    std::random_device rd;
    dir = fs::temp_directory_path() /
          ("caystir-config-test-" + std::to_string(rd()));
    fs::create_directories(dir);
    previous = fs::current_path();
    fs::current_path(dir);
  }
  ~TempCwd() {
    fs::current_path(previous);
    fs::remove_all(dir);
  }
};

}  // namespace

TEST_CASE("defaults") {
  const CliConfig cfg;
  CHECK(cfg.oracle_element_cap == 2'000'000);
  CHECK(cfg.oracle_class_budget == 400'000'000);
  CHECK(cfg.threads == 1);
  CHECK(cfg.cache_dir.empty());
  CHECK(cfg.output_format == "table");
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("json layer") {
  CliConfig cfg;
  cfg.apply_json(nlohmann::json{{"oracle_element_cap", 5000},
                                {"threads", 4},
                                {"cache_dir", "/tmp/rows"},
                                {"output_format", "csv"},
                                {"seed", 99}});
  CHECK(cfg.oracle_element_cap == 5000);
  CHECK(cfg.oracle_class_budget == 400'000'000);  // untouched
  CHECK(cfg.threads == 4);
  CHECK(cfg.cache_dir == fs::path("/tmp/rows"));
  CHECK(cfg.output_format == "csv");
  CHECK(cfg.seed == 99);

  CHECK_THROWS_AS(cfg.apply_json(nlohmann::json{{"orcale_element_cap", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cfg.apply_json(nlohmann::json::array()),
                  std::invalid_argument);
}

TEST_CASE("environment layer") {
  CliConfig cfg;
  cfg.apply_env(fake_env({{"CAYSTIR_CACHE_DIR", "/tmp/envrows"},
                          {"CAYSTIR_THREADS", "7"}}));
  CHECK(cfg.cache_dir == fs::path("/tmp/envrows"));
  CHECK(cfg.threads == 7);

  CliConfig untouched;
  untouched.apply_env(fake_env({}));
  CHECK(untouched.cache_dir.empty());
  CHECK(untouched.threads == 1);

  CHECK_THROWS_AS(cfg.apply_env(fake_env({{"CAYSTIR_THREADS", "many"}})),
                  std::invalid_argument);
}

TEST_CASE("file layer") {
  const TempCwd tmp;
  {
    std::ofstream out("good.json");
    out << R"({"threads": 3, "output_format": "json"})";
  }
  CliConfig cfg;
  cfg.apply_file("good.json");
  CHECK(cfg.threads == 3);
  CHECK(cfg.output_format == "json");

  CHECK_NOTHROW(cfg.apply_file("no-such-file.json"));  // optional layer

  {
    std::ofstream out("bad.json");
    out << "{not json";
  }
  CHECK_THROWS_AS(cfg.apply_file("bad.json"), std::invalid_argument);
}

TEST_CASE("validation and limit mapping") {
  CliConfig cfg;
  cfg.oracle_element_cap = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = CliConfig{};
  cfg.threads = -2;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = CliConfig{};
  cfg.output_format = "xml";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg = CliConfig{};
  cfg.oracle_element_cap = 123;
  cfg.oracle_class_budget = 456;
  const caystir::OracleLimits limits = cfg.limits();
  CHECK(limits.element_cap == 123);
  CHECK(limits.class_budget == 456);
}

TEST_CASE("precedence: environment over file over defaults") {
  const TempCwd tmp;
  {
    std::ofstream out("caystir.json");
    out << R"({"threads": 3, "cache_dir": "from-file"})";
  }
  const CliConfig file_only = CliConfig::load(fake_env({}));
  CHECK(file_only.threads == 3);
  CHECK(file_only.cache_dir == fs::path("from-file"));

  const CliConfig env_wins =
      CliConfig::load(fake_env({{"CAYSTIR_THREADS", "9"}}));
  CHECK(env_wins.threads == 9);                        // env beats file
  CHECK(env_wins.cache_dir == fs::path("from-file"));  // file beats default

  const CliConfig both = CliConfig::load(
      fake_env({{"CAYSTIR_CACHE_DIR", "from-env"}, {"CAYSTIR_THREADS", "9"}}));
  CHECK(both.cache_dir == fs::path("from-env"));
}
