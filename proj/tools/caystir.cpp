// caystir — exact metric structure of k-transposition Cayley graphs.
//
// Subcommands: distance, spheres, ball, diameter, phi, phi-table,
// n-reconstruction, factor, stirling, verify, cache. Global flags select
// output format, oracle caps, cache directory, and RNG seed; configuration
// precedence is flags > environment > config file > built-in defaults.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "caystir/class_enum.hpp"
#include "caystir/cli_config.hpp"
#include "caystir/metric.hpp"
#include "caystir/phi.hpp"
#include "caystir/seed_cache.hpp"
#include "caystir/verify.hpp"

namespace {

using caystir::BigInt;
using caystir::CliConfig;
using caystir::CycleType;
using caystir::GraphSpec;
using caystir::Permutation;
using caystir::PhiCell;
using caystir::PhiEngine;
using caystir::SeedCache;
using caystir::SeedKind;
using caystir::StirlingFunction;

using Json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

/// The class a command operates on: an explicit --type wins, otherwise the
/// positional permutation is parsed at degree n and reduced to its type.
CycleType resolve_type(int n, const std::string& g_text,
                       const std::string& type_text) {
  if (!type_text.empty()) {
    const CycleType parsed = CycleType::parse(type_text);
    if (parsed.degree() > n)
      throw std::invalid_argument("--type " + parsed.str() + " has degree " +
                                  std::to_string(parsed.degree()) +
                                  ", larger than n = " + std::to_string(n));
    return parsed.embedded(n);
  }
  if (g_text.empty())
    throw std::invalid_argument(
        "give a permutation argument or --type \"1^a 2^b ...\"");
  return Permutation::parse(g_text, n).cycle_type();
}

struct Cli {
  CliConfig cfg;
  bool oracle = false;

  SeedCache make_cache() const {
    const std::filesystem::path dir =
        cfg.cache_dir.empty() ? SeedCache::default_dir() : cfg.cache_dir;
    return SeedCache(dir, cfg.limits());
  }

  void emit(const Json& doc, const std::string& table,
            const std::string& csv) const {
    if (cfg.output_format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else if (cfg.output_format == "csv") {
      std::cout << csv;
    } else {
      std::cout << table;
    }
  }
};

int cmd_distance(const Cli& cli, int k, int n, const std::string& g_text) {
  const GraphSpec spec(k, n);
  const Permutation g = Permutation::parse(g_text, n);

  std::optional<int> radius;
  std::string clause;
  if (cli.oracle) {
    const caystir::RadiusResult vertex_check = caystir::sphere_radius(spec, g);
    if (vertex_check.is_vertex()) {
      const caystir::ElementBfs bfs(spec, cli.cfg.limits());
      radius = bfs.distance_of(g);
      clause = "brute-force breadth-first search";
    } else {
      clause = vertex_check.clause;
    }
  } else {
    if (!spec.analytic_valid())
      throw std::invalid_argument(
          "no analytic distance formula covers " + spec.str() +
          " (needs n >= 4k); rerun with --oracle to use the BFS");
    const caystir::RadiusResult rr = caystir::sphere_radius(spec, g);
    radius = rr.radius;
    clause = rr.clause;
  }

  const std::string shown = radius ? std::to_string(*radius) : "not-a-vertex";
  Json doc;
  doc["radius"] = radius ? Json(*radius) : Json(nullptr);
  doc["clause"] = clause;
  cli.emit(doc, shown + "\nclause: " + clause + "\n",
           "radius,clause\n" + shown + "," + csv_escape(clause) + "\n");
  return 0;
}

int cmd_spheres(const Cli& cli, int k, int n) {
  const GraphSpec spec(k, n);
  std::vector<std::pair<int, BigInt>> rows;
  if (cli.oracle) {
    const caystir::ElementBfs bfs(spec, cli.cfg.limits());
    const auto hist = bfs.sphere_histogram();
    for (std::size_t r = 0; r < hist.size(); ++r)
      rows.emplace_back(static_cast<int>(r), BigInt(hist[r]));
  } else {
    const int diam = caystir::diameter(spec);
    for (int r = 0; r <= diam; ++r)
      rows.emplace_back(r, caystir::sphere_size(spec, r));
  }

  std::string table = "{";
  std::string csv = "r,size\n";
  Json doc = Json::object();
  for (const auto& [r, size] : rows) {
    if (r > 0) table += ", ";
    table += std::to_string(r) + ":" + size.str();
    csv += std::to_string(r) + "," + size.str() + "\n";
    doc[std::to_string(r)] = size.str();
  }
  table += "}\n";
  cli.emit(doc, table, csv);
  return 0;
}

int cmd_ball(const Cli& cli, int k, int n, int r) {
  const GraphSpec spec(k, n);
  BigInt size = 0;
  if (cli.oracle) {
    const caystir::ElementBfs bfs(spec, cli.cfg.limits());
    const auto hist = bfs.sphere_histogram();
    for (std::size_t i = 0; i < hist.size() && static_cast<int>(i) <= r; ++i)
      size += BigInt(hist[i]);
  } else {
    size = caystir::ball_size(spec, r);
  }
  Json doc;
  doc["value"] = size.str();
  cli.emit(doc, size.str() + "\n", "value\n" + size.str() + "\n");
  return 0;
}

int cmd_diameter(const Cli& cli, int k, int n) {
  const GraphSpec spec(k, n);
  const int diam = cli.oracle
                       ? caystir::class_bfs(spec, cli.cfg.limits()).diameter
                       : caystir::diameter(spec);
  Json doc;
  doc["diameter"] = diam;
  cli.emit(doc, std::to_string(diam) + "\n",
           "diameter\n" + std::to_string(diam) + "\n");
  return 0;
}

int cmd_phi(const Cli& cli, int k, int n, int r, const std::string& g_text,
            const std::string& type_text) {
  const GraphSpec spec(k, n);
  const CycleType type = resolve_type(n, g_text, type_text);

  BigInt value;
  std::string regime;
  if (cli.oracle) {
    value = caystir::phi_direct(spec, r, type.canonical_rep(),
                                cli.cfg.limits());
    regime = "oracle";
  } else {
    SeedCache cache = cli.make_cache();
    PhiEngine engine(spec, &cache, cli.cfg.limits());
    const caystir::PhiResult res = engine.phi(r, type);
    value = res.value;
    regime = res.regime;
  }

  Json doc;
  doc["phi"] = value.str();
  doc["regime"] = regime;
  cli.emit(doc, value.str() + "\nregime: " + regime + "\n",
           "phi,regime-tag\n" + value.str() + "," + regime + "\n");
  return 0;
}

int cmd_phi_table(const Cli& cli, int k, int n, const std::string& g_text,
                  const std::string& type_text) {
  const GraphSpec spec(k, n);
  const CycleType type = resolve_type(n, g_text, type_text);

  std::vector<PhiCell> cells;
  if (cli.oracle) {
    const int diam = caystir::diameter(spec);
    const Permutation rep = type.canonical_rep();
    for (int r = 0; r <= diam; ++r) {
      PhiCell cell;
      cell.r = r;
      try {
        cell.value = caystir::phi_direct(spec, r, rep, cli.cfg.limits());
        cell.regime = "oracle";
      } catch (const std::domain_error& e) {
        cell.regime = "unsupported";
        cell.note = e.what();
      }
      cells.push_back(std::move(cell));
    }
  } else {
    SeedCache cache = cli.make_cache();
    PhiEngine engine(spec, &cache, cli.cfg.limits());
    cells = engine.phi_table(type);
  }

  std::string table;
  std::string csv = "r,phi,regime-tag\n";
  Json doc = Json::array();
  for (const PhiCell& cell : cells) {
    const std::string value = cell.value ? cell.value->str() : "";
    table += std::to_string(cell.r) + "  " + (value.empty() ? "-" : value) +
             "  " + cell.regime;
    if (!cell.note.empty()) table += "  (" + cell.note + ")";
    table += "\n";
    csv += std::to_string(cell.r) + "," + value + "," + cell.regime + "\n";
    Json row;
    row["r"] = cell.r;
    row["phi"] = cell.value ? Json(value) : Json(nullptr);
    row["regime"] = cell.regime;
    row["note"] = cell.note;
    doc.push_back(std::move(row));
  }
  cli.emit(doc, table, csv);
  return 0;
}

int cmd_n_reconstruction(const Cli& cli, int k, int n, int r) {
  const GraphSpec spec(k, n);

  BigInt best = -1;
  std::vector<CycleType> argmax;
  if (cli.oracle) {
    for (const CycleType& type : caystir::partitions_of(n)) {
      if (type.is_identity()) continue;
      if (spec.group() == caystir::Group::Alt && !type.is_even()) continue;
      const BigInt value =
          caystir::phi_direct(spec, r, type.canonical_rep(), cli.cfg.limits());
      if (value > best) {
        best = value;
        argmax.clear();
      }
      if (value == best) argmax.push_back(type);
    }
  } else {
    SeedCache cache = cli.make_cache();
    PhiEngine engine(spec, &cache, cli.cfg.limits());
    const caystir::ReconstructionResult res = engine.reconstruction_number(r);
    best = res.value;
    argmax = res.argmax;
  }

  std::string joined;
  Json names = Json::array();
  for (const CycleType& type : argmax) {
    if (!joined.empty()) joined += "; ";
    joined += type.str();
    names.push_back(type.str());
  }
  Json doc;
  doc["value"] = best.str();
  doc["argmax"] = names;
  cli.emit(doc, best.str() + "\nargmax: " + joined + "\n",
           "value,argmax\n" + best.str() + "," + csv_escape(joined) + "\n");
  return 0;
}

int cmd_factor(const Cli& cli, int k, int n, const std::string& g_text) {
  const GraphSpec spec(k, n);
  const Permutation g = Permutation::parse(g_text, n);
  const caystir::RadiusResult rr = caystir::sphere_radius(spec, g);
  if (!rr.is_vertex())
    throw std::invalid_argument("factor: " + g.str() + " is not a vertex of " +
                                spec.str() + " (" + rr.clause + ")");

  const std::vector<Permutation> factors =
      caystir::geodesic_factorization(spec, g);

  std::string joined;
  Json names = Json::array();
  for (const Permutation& f : factors) {
    if (!joined.empty()) joined += ", ";
    joined += f.str();
    names.push_back(f.str());
  }
  const std::string tail = "length: " + std::to_string(factors.size()) +
                           ", distance: " + std::to_string(*rr.radius) + "\n";
  Json doc;
  doc["factors"] = names;
  doc["length"] = factors.size();
  doc["distance"] = *rr.radius;
  cli.emit(doc, joined + "\n" + tail,
           "factors,length,distance\n" + csv_escape(joined) + "," +
               std::to_string(factors.size()) + "," +
               std::to_string(*rr.radius) + "\n");
  return 0;
}

int cmd_stirling(const Cli& cli, const std::string& kind_name,
                 const std::string& type_text, int offset, int n,
                 std::optional<int> m, std::optional<int> r) {
  if (m.has_value() == r.has_value())
    throw std::invalid_argument("stirling: give exactly one of -m and -r");

  StirlingFunction f = StirlingFunction::classical();
  if (kind_name != "classical") {
    SeedKind kind;
    if (kind_name == "phi-k1") {
      kind = SeedKind::PhiK1;
    } else if (kind_name == "i-row") {
      kind = SeedKind::IRow;
    } else if (kind_name == "cross-row") {
      kind = SeedKind::CrossRow;
      if (offset <= 0)
        throw std::invalid_argument(
            "stirling: cross-row needs a positive offset (-k)");
    } else {
      throw std::invalid_argument("stirling: unknown kind '" + kind_name +
                                  "'");
    }
    if (kind != SeedKind::CrossRow) offset = 0;
    const CycleType type =
        type_text.empty() ? CycleType(std::vector<int>{})
                          : CycleType::parse(type_text).reduced();
    SeedCache cache = cli.make_cache();
    f = cache.get(kind, type, offset).to_stirling();
  } else if (!type_text.empty()) {
    throw std::invalid_argument("stirling: the classical kind takes no --type");
  }

  const BigInt value = m ? f.eval(n, *m) : f.eval_r(n, *r);
  Json doc;
  doc["value"] = value.str();
  cli.emit(doc, value.str() + "\n", "value\n" + value.str() + "\n");
  return 0;
}

int cmd_verify(const Cli& cli, const std::string& name, bool list) {
  if (list) {
    for (const std::string& suite : caystir::verify_suite_names())
      std::cout << suite << "\n";
    return 0;
  }

  std::vector<std::string> names;
  if (name == "all") {
    names = caystir::verify_suite_names();
  } else {
    names.push_back(name);
  }

  caystir::VerifyOptions options;
  options.limits = cli.cfg.limits();
  options.seed = cli.cfg.seed;

  bool all_passed = true;
  std::string csv = "suite,passed,checks,millis,summary\n";
  Json doc = Json::array();
  for (const std::string& suite : names) {
    const caystir::VerifyReport rep = caystir::run_verify_suite(suite, options);
    all_passed = all_passed && rep.passed;
    if (cli.cfg.output_format == "table") {
      std::cout << (rep.passed ? "PASS, " : "FAIL, ") << rep.summary << "\n";
      if (names.size() > 1 || !rep.passed)
        std::cout << "  suite: " << rep.suite << ", checks: " << rep.checks
                  << ", time: " << rep.millis << " ms\n";
      for (const std::string& line : rep.failures)
        std::cout << "  - " << line << "\n";
    }
    csv += rep.suite + "," + (rep.passed ? "true" : "false") + "," +
           std::to_string(rep.checks) + "," + std::to_string(rep.millis) +
           "," + csv_escape(rep.summary) + "\n";
    Json entry;
    entry["suite"] = rep.suite;
    entry["passed"] = rep.passed;
    entry["checks"] = rep.checks;
    entry["millis"] = rep.millis;
    entry["summary"] = rep.summary;
    entry["failures"] = rep.failures;
    doc.push_back(std::move(entry));
  }
  if (cli.cfg.output_format == "csv") std::cout << csv;
  if (cli.cfg.output_format == "json")
    std::cout << (doc.size() == 1 ? doc[0] : doc).dump(2) << "\n";
  return all_passed ? 0 : 1;
}

int cmd_cache(const Cli& cli, bool clear) {
  SeedCache cache = cli.make_cache();
  if (clear) {
    const int removed = cache.clear();
    std::cout << "removed " << removed << " seed row"
              << (removed == 1 ? "" : "s") << " from "
              << cache.dir().string() << "\n";
    return 0;
  }
  std::cout << "cache directory: " << cache.dir().string() << "\n";
  for (const std::string& row : cache.list_disk()) std::cout << row << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  try {
    cli.cfg = CliConfig::load();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{
      "exact distances, spheres, diameters, and metric intersection numbers "
      "of the k-transposition Cayley graphs"};
  app.require_subcommand(1);

  std::string cache_dir_flag;
  app.add_option("--format", cli.cfg.output_format,
                 "output format: table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--threads", cli.cfg.threads,
                 "worker threads for the engines");
  app.add_option("--cap", cli.cfg.oracle_element_cap,
                 "largest group order the brute-force oracles may enumerate");
  app.add_option("--seed", cli.cfg.seed, "seed for randomized verification");
  app.add_option("--cache-dir", cache_dir_flag,
                 "directory for persisted seed rows");
  app.add_flag("--oracle", cli.oracle,
               "force brute-force computation even where formulas apply");

  int k = 0, n = 0, r = 0;
  std::string g_text, type_text;

  auto* distance = app.add_subcommand(
      "distance", "distance from the identity to a permutation");
  distance->add_option("-k", k, "transpositions per generator")->required();
  distance->add_option("-n", n, "degree of the permutation group")->required();
  distance->add_option("g", g_text, "permutation in cycle notation")
      ->required();

  auto* spheres =
      app.add_subcommand("spheres", "sphere sizes at every radius");
  spheres->add_option("-k", k, "transpositions per generator")->required();
  spheres->add_option("-n", n, "degree of the permutation group")->required();

  auto* ball = app.add_subcommand("ball", "number of vertices within radius r");
  ball->add_option("-k", k, "transpositions per generator")->required();
  ball->add_option("-n", n, "degree of the permutation group")->required();
  ball->add_option("-r", r, "radius")->required();

  auto* diameter = app.add_subcommand("diameter", "diameter of the graph");
  diameter->add_option("-k", k, "transpositions per generator")->required();
  diameter->add_option("-n", n, "degree of the permutation group")->required();

  auto* phi = app.add_subcommand(
      "phi", "metric intersection number phi(r, g) = |B_r ∩ B_r g|");
  phi->add_option("-k", k, "transpositions per generator")->required();
  phi->add_option("-n", n, "degree of the permutation group")->required();
  phi->add_option("-r", r, "radius")->required();
  phi->add_option("g", g_text, "permutation in cycle notation");
  phi->add_option("--type", type_text, "cycle type, e.g. \"1^6 2^3\"");

  auto* phi_table = app.add_subcommand(
      "phi-table", "phi at every radius from 0 to the diameter");
  phi_table->add_option("-k", k, "transpositions per generator")->required();
  phi_table->add_option("-n", n, "degree of the permutation group")
      ->required();
  phi_table->add_option("g", g_text, "permutation in cycle notation");
  phi_table->add_option("--type", type_text, "cycle type, e.g. \"1^6 2^3\"");

  auto* nrec = app.add_subcommand(
      "n-reconstruction",
      "reconstruction number N = max phi over non-identity classes");
  nrec->add_option("-k", k, "transpositions per generator")->required();
  nrec->add_option("-n", n, "degree of the permutation group")->required();
  nrec->add_option("-r", r, "radius")->required();

  auto* factor = app.add_subcommand(
      "factor", "geodesic factorization into k-transpositions");
  factor->add_option("-k", k, "transpositions per generator")->required();
  factor->add_option("-n", n, "degree of the permutation group")->required();
  factor->add_option("g", g_text, "permutation in cycle notation")
      ->required();

  std::string kind_name = "classical";
  std::optional<int> m_arg, r_arg;
  auto* stirling = app.add_subcommand(
      "stirling", "raw evaluation of a seeded recursion function");
  stirling->add_option("--kind", kind_name,
                       "classical, phi-k1, i-row, or cross-row");
  stirling->add_option("--type", type_text,
                       "reduced cycle type seeding the row, e.g. \"2^2 3\"");
  stirling->add_option("-k", k, "radius offset for the cross-row kind");
  stirling->add_option("-n", n, "first argument of the function")->required();
  stirling->add_option("-m", m_arg, "second argument m (evaluates f(n, m))");
  stirling->add_option("-r", r_arg, "radius form (evaluates f(n, n - r))");

  std::string suite_name;
  bool list_suites = false;
  auto* verify =
      app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite_name,
                     "suite name, or 'all' to run every suite");
  verify->add_flag("--list", list_suites, "list the available suites");

  bool cache_clear = false;
  auto* cache = app.add_subcommand("cache", "inspect the seed-row cache");
  auto* cache_list =
      cache->add_subcommand("list", "list persisted seed rows");
  auto* cache_clear_cmd =
      cache->add_subcommand("clear", "remove every persisted seed row");
  cache->require_subcommand(1);

  for (CLI::App* sub : {distance, spheres, ball, diameter, phi, phi_table,
                        nrec, factor, stirling, verify, cache, cache_list,
                        cache_clear_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (!cache_dir_flag.empty()) cli.cfg.cache_dir = cache_dir_flag;
  cache_clear = cache_clear_cmd->parsed();

  try {
    cli.cfg.validate();
    if (*distance) return cmd_distance(cli, k, n, g_text);
    if (*spheres) return cmd_spheres(cli, k, n);
    if (*ball) return cmd_ball(cli, k, n, r);
    if (*diameter) return cmd_diameter(cli, k, n);
    if (*phi) return cmd_phi(cli, k, n, r, g_text, type_text);
    if (*phi_table) return cmd_phi_table(cli, k, n, g_text, type_text);
    if (*nrec) return cmd_n_reconstruction(cli, k, n, r);
    if (*factor) return cmd_factor(cli, k, n, g_text);
    if (*stirling)
      return cmd_stirling(cli, kind_name, type_text, k, n, m_arg, r_arg);
    if (*verify) {
      if (!list_suites && suite_name.empty())
        throw std::invalid_argument(
            "verify: give a suite name, 'all', or --list");
      return cmd_verify(cli, suite_name, list_suites);
    }
    if (*cache) return cmd_cache(cli, cache_clear);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
