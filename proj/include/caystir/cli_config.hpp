#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "caystir/oracle.hpp"

namespace caystir {

/// Runtime configuration of the command-line tool. Resolution order is
/// flags > environment > config file > the defaults below; the tool applies
/// the three override layers in reverse, so later layers simply overwrite.
///
/// The config file is JSON with the field names below as keys, looked up at
/// ./caystir.json and then $HOME/.config/caystir/config.json (first hit
/// wins). Environment overrides are CAYSTIR_CACHE_DIR and CAYSTIR_THREADS.
struct CliConfig {
  std::int64_t oracle_element_cap = 2'000'000;
  std::int64_t oracle_class_budget = 400'000'000;
  int threads = 1;
  /// Empty means "let the seed cache pick its own default directory".
  std::filesystem::path cache_dir;
  std::string output_format = "table";  // table | csv | json
  std::uint64_t seed = 20260816;

  /// Throws std::invalid_argument on nonpositive caps, nonpositive thread
  /// counts, or an unknown output format.
  void validate() const {
    if (oracle_element_cap <= 0 || oracle_class_budget <= 0)
      throw std::invalid_argument("config: oracle caps must be positive");
    if (threads <= 0)
      throw std::invalid_argument("config: threads must be positive");
    if (output_format != "table" && output_format != "csv" &&
        output_format != "json")
      throw std::invalid_argument("config: output format must be one of "
                                  "table, csv, json — got '" +
                                  output_format + "'");
  }

  OracleLimits limits() const {
    OracleLimits l;
    l.element_cap = static_cast<std::uint64_t>(oracle_element_cap);
    l.class_budget = static_cast<std::uint64_t>(oracle_class_budget);
    return l;
  }

  /// Overwrites fields present in `doc`; unknown keys are an error so that
  /// a typo in a config file cannot silently do nothing.
  void apply_json(const nlohmann::json& doc) {
    if (!doc.is_object())
      throw std::invalid_argument("config: document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "oracle_element_cap") {
        oracle_element_cap = value.get<std::int64_t>();
      } else if (key == "oracle_class_budget") {
        oracle_class_budget = value.get<std::int64_t>();
      } else if (key == "threads") {
        threads = value.get<int>();
      } else if (key == "cache_dir") {
        cache_dir = value.get<std::string>();
      } else if (key == "output_format") {
        output_format = value.get<std::string>();
      } else if (key == "seed") {
        seed = value.get<std::uint64_t>();
      } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  }

  /// Reads and applies a JSON config file. A missing file is a no-op (the
  /// file layer is optional); an unreadable or malformed one is an error.
  void apply_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
      if (!std::filesystem::exists(path)) return;
      throw std::invalid_argument("config: cannot read " + path.string());
    }
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config: " + path.string() + ": " +
                                  e.what());
    }
    apply_json(doc);
  }

  /// Environment lookup, injectable for tests.
  using EnvLookup = std::function<const char*(const char*)>;

  void apply_env(const EnvLookup& getenv_fn = default_env()) {
    if (const char* dir = getenv_fn("CAYSTIR_CACHE_DIR")) cache_dir = dir;
    if (const char* t = getenv_fn("CAYSTIR_THREADS")) {
      try {
        threads = std::stoi(t);
      } catch (const std::exception&) {
        throw std::invalid_argument(
            "config: CAYSTIR_THREADS must be an integer, got '" +
            std::string(t) + "'");
      }
    }
  }

  static EnvLookup default_env() {
    return [](const char* name) -> const char* { return std::getenv(name); };
  }

  /// The config file the tool would read, if any: ./caystir.json first,
  /// then $HOME/.config/caystir/config.json.
  static std::filesystem::path find_file() {
    const std::filesystem::path local = "caystir.json";
    if (std::filesystem::exists(local)) return local;
    if (const char* home = std::getenv("HOME")) {
      const std::filesystem::path user =
          std::filesystem::path(home) / ".config" / "caystir" / "config.json";
      if (std::filesystem::exists(user)) return user;
    }
    return {};
  }

  /// Defaults, then config file, then environment. Flag overrides are the
  /// caller's job (they arrive after argv parsing).
  static CliConfig load(const EnvLookup& getenv_fn = default_env()) {
    CliConfig cfg;
    const std::filesystem::path file = find_file();
    if (!file.empty()) cfg.apply_file(file);
    cfg.apply_env(getenv_fn);
    return cfg;
  }
};

}  // namespace caystir
