// Command line front end: analyze a parameter/characteristic cell, verify the
// closed forms against the brute-force oracle, or sweep a parameter grid.
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdta/oracle.hpp"
#include "gdta/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

gdta::GDParams make_params(const std::string& text, std::uint64_t characteristic) {
  return gdta::GDParams(gdta::parse_factors(text), characteristic);
}

int write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return kExitOk;
  }
  std::ofstream os(path);
  if (!os) {
    std::cerr << "error: cannot write to '" << path << "'\n";
    return kExitUsage;
  }
  os << body;
  if (!body.empty() && body.back() != '\n') os << '\n';
  return os ? kExitOk : kExitUsage;
}

int run_analyze(const std::string& params_text, std::uint64_t characteristic,
                const std::string& format, const std::string& out, bool timing) {
  gdta::GDParams params = make_params(params_text, characteristic);
  gdta::AnalysisReport report = gdta::analyze(params);
  std::string body;
  if (format == "json")
    body = gdta::report_json(report, timing);
  else if (format == "csv")
    body = gdta::report_csv_header() + "\n" + gdta::report_csv_row(report);
  else
    body = gdta::report_text(report);
  return write_output(out, body);
}

int run_verify(const std::string& params_text, std::uint64_t characteristic,
               std::size_t max_vertices, std::uint64_t seed, const std::string& dump_dir) {
  gdta::GDParams params = make_params(params_text, characteristic);
  gdta::VertexSpace sp(params, max_vertices);
  const std::size_t n = sp.vertex_count();
  bool exhaustive = n <= 64;
  mpz_class dim = gdta::dim_T(params);
  bool small_algebra = dim <= 200;

  std::vector<std::pair<std::string, gdta::CheckResult>> checks;
  checks.emplace_back("scheme-axioms", gdta::verify_axioms(sp, exhaustive, seed));
  checks.emplace_back("triple-regularity",
                      gdta::verify_triple_regularity(sp, exhaustive && params.n() <= 2, seed));
  checks.emplace_back("generated-dimension", gdta::verify_dimension(sp));
  if (small_algebra) {
    checks.emplace_back("basis-rank", gdta::verify_basis_rank(sp));
    std::size_t pairs = dim <= 20 ? 0 : 4000;  // zero means every pair
    checks.emplace_back("structure-constants", gdta::verify_products(sp, pairs, seed));
    checks.emplace_back("center", gdta::verify_center(sp));
    checks.emplace_back("radical-ideal", gdta::verify_ideal(sp));
    checks.emplace_back("radical-nilpotency", gdta::verify_nilpotency(sp));
    checks.emplace_back("corners", gdta::verify_corners(sp));
    checks.emplace_back("matrix-units", gdta::verify_matrix_units(sp));
  }

  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (std::size_t ci = 0; ci < sp.color_count(); ++ci) {
      std::ofstream os(std::filesystem::path(dump_dir) /
                       ("A_" + std::to_string(ci) + ".csv"));
      gdta::dump_matrix_csv(os, sp, gdta::adjacency_matrix(sp, sp.color_at(ci)),
                            "A_" + std::to_string(ci));
      std::ofstream es(std::filesystem::path(dump_dir) /
                       ("E_" + std::to_string(ci) + ".csv"));
      gdta::dump_matrix_csv(es, sp, gdta::dual_idempotent(sp, sp.color_at(ci)),
                            "E_" + std::to_string(ci));
    }
  }

  bool all_ok = true;
  for (const auto& [name, result] : checks) {
    if (result.ok)
      std::cout << "[ok]   " << name << "\n";
    else
      std::cout << "[FAIL] " << name << ": " << result.detail << "\n";
    all_ok = all_ok && result.ok;
  }
  if (!small_algebra)
    std::cout << "[note] symbolic cross-checks skipped, dimension " << dim.get_str()
              << " exceeds the per-run bound\n";
  std::cout << (all_ok ? "verification passed" : "verification FAILED") << "\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

std::string cache_name(const std::string& params_text, std::uint64_t characteristic) {
  std::string s = params_text;
  for (char& c : s)
    if (c == ',') c = '_';
  return s + "__p" + std::to_string(characteristic) + ".json";
}

// Flattens one stored JSON report into a CSV row; the dataset may come from
// the resume cache, so rows are derived from the stored record, not recomputed.
std::string csv_row_from_json(const std::string& body) {
  nlohmann::json j = nlohmann::json::parse(body);
  auto field = [&](const char* name) {
    const nlohmann::json& v = j.at(name);
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  std::string params = j.at("params").get<std::string>();
  if (params.find(',') != std::string::npos) params = '"' + params + '"';
  std::string blocks;
  for (const auto& b : j.at("wedderburn").at("blocks")) {
    if (!blocks.empty()) blocks += ';';
    blocks += b.at("size").dump() + "x" + b.at("multiplicity").dump();
  }
  std::ostringstream os;
  os << params << ',' << field("char") << ',' << field("n") << ',' << field("vertex_count")
     << ',' << field("dim_T") << ',' << field("center_dim") << ','
     << field("center_radical_dim") << ',' << (j.at("is_semisimple").get<bool>() ? "true" : "false")
     << ',' << field("radical_dim") << ',' << field("nilpotency_index") << ','
     << j.at("wedderburn").at("n_classes").dump() << ',' << blocks << ','
     << field("irreducible_module_count");
  return os.str();
}

int run_sweep(const std::string& grid_path, const std::string& out_path,
              const std::string& format, const std::string& cache_dir_flag, unsigned jobs) {
  std::ifstream is(grid_path);
  if (!is) {
    std::cerr << "error: cannot read grid file '" << grid_path << "'\n";
    return kExitUsage;
  }
  nlohmann::json grid;
  try {
    is >> grid;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: malformed grid file: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!grid.contains("params") || !grid.contains("chars")) {
    std::cerr << "error: grid file needs \"params\" and \"chars\" arrays\n";
    return kExitUsage;
  }

  std::string cache_dir = cache_dir_flag;
  if (cache_dir.empty())
    if (const char* env = std::getenv("GDTA_CACHE_DIR")) cache_dir = env;

  struct Cell {
    std::string params;
    std::uint64_t characteristic;
  };
  std::vector<Cell> cells;
  for (const auto& ptext : grid["params"])
    for (const auto& ch : grid["chars"])
      cells.push_back(Cell{ptext.get<std::string>(), ch.get<std::uint64_t>()});

  // validate everything up front so a bad cell cannot waste a partial run
  for (const Cell& c : cells) make_params(c.params, c.characteristic);

  std::vector<std::string> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> capped{false};
  std::mutex io_mutex;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      std::filesystem::path cache_file;
      if (!cache_dir.empty()) {
        cache_file = std::filesystem::path(cache_dir) /
                     cache_name(cell.params, cell.characteristic);
        std::ifstream cache(cache_file);
        if (cache) {
          std::string body((std::istreambuf_iterator<char>(cache)),
                           std::istreambuf_iterator<char>());
          if (!body.empty()) {
            results[i] = body;
            continue;
          }
        }
      }
      try {
        gdta::GDParams params = make_params(cell.params, cell.characteristic);
        gdta::AnalysisReport report = gdta::analyze(params);
        results[i] = gdta::report_json(report, false);
      } catch (const gdta::ResourceLimitError& e) {
        capped = true;
        std::lock_guard<std::mutex> lock(io_mutex);
        std::cerr << "resource cap at " << cell.params << " char " << cell.characteristic
                  << ": " << e.what() << "\n";
        return;
      }
      if (!cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir, ec);
        // write-then-rename so a concurrent reader never sees a partial file
        std::filesystem::path tmp = cache_file;
        tmp += "." + std::to_string(i) + ".tmp";
        {
          std::ofstream cache(tmp);
          cache << results[i];
        }
        std::filesystem::rename(tmp, cache_file, ec);
      }
    }
  };

  if (jobs == 0) jobs = 1;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (capped) return kExitResourceCap;

  std::string body;
  if (format == "csv") {
    body = gdta::report_csv_header();
    for (const std::string& r : results) body += "\n" + csv_row_from_json(r);
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const std::string& r : results) arr.push_back(nlohmann::ordered_json::parse(r));
    body = arr.dump(2);
  }
  return write_output(out_path, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terwilliger algebras of products of group divisible schemes"};
  app.require_subcommand(1);

  std::string params_text, format = "text", out_path, dump_dir;
  std::uint64_t characteristic = 0, seed = 1;
  std::size_t max_vertices = 256;
  bool timing = false;

  CLI::App* analyze = app.add_subcommand("analyze", "closed-form structure report");
  analyze->add_option("--params", params_text, "factor list, e.g. 2x3,3x3")->required();
  analyze->add_option("--char", characteristic, "field characteristic, 0 or a prime")
      ->default_val(0);
  analyze->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  analyze->add_option("--out", out_path, "output file (default stdout)");
  analyze->add_flag("--timing", timing, "include the timing in JSON output");

  CLI::App* verify = app.add_subcommand("verify", "check the closed forms against the oracle");
  verify->add_option("--params", params_text, "factor list")->required();
  verify->add_option("--char", characteristic, "field characteristic")->default_val(0);
  verify->add_option("--max-vertices", max_vertices, "vertex cap for the oracle")
      ->default_val(256);
  verify->add_option("--seed", seed, "seed for the sampled checks")->default_val(1);
  verify->add_option("--dump", dump_dir, "dump generator matrices to this directory");

  std::string grid_path, sweep_out, sweep_format = "json", cache_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand("sweep", "analyze every cell of a parameter grid");
  sweep->add_option("--grid", grid_path, "JSON file with \"params\" and \"chars\"")->required();
  sweep->add_option("--out", sweep_out, "output file (default stdout)");
  sweep->add_option("--format", sweep_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--cache-dir", cache_dir,
                    "resume cache directory (default: GDTA_CACHE_DIR)");
  sweep->add_option("--jobs", jobs, "worker pool size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(params_text, characteristic, format, out_path, timing);
    if (app.got_subcommand(verify))
      return run_verify(params_text, characteristic, max_vertices, seed, dump_dir);
    return run_sweep(grid_path, sweep_out, sweep_format, cache_dir, jobs);
  } catch (const gdta::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
