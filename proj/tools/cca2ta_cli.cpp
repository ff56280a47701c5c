/*
 * Copyright 2026 The cca2ta Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: runs experiment suites and calibrates fixed-time
// budgets.
//
//   cca2ta run <config.json> [--format json|csv|text] [--out-dir DIR] [--threads N]
//   cca2ta list-schemes
//   cca2ta list-adversaries
//   cca2ta calibrate <scheme-config.json>
//
// Exit codes: 0 every run executed, 1 configuration error, 2 at least one run
// failed at runtime.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cca2ta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cca2ta::ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_command(const std::string& config_path, const std::string& format,
                const std::string& out_dir, unsigned threads) {
  cca2ta::SuiteConfig cfg;
  cca2ta::ReportFormat report_format;
  try {
    report_format = cca2ta::parse_report_format(format);
    cfg = cca2ta::parse_config(read_file(config_path));
  } catch (const cca2ta::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  cca2ta::SuiteOptions options;
  if (!out_dir.empty()) options.out_dir = std::filesystem::path(out_dir);
  options.threads = threads;
  const cca2ta::SuiteReport report = cca2ta::run_suite(cfg, options);
  const std::string document = cca2ta::emit_report(report, report_format);
  if (options.out_dir) {
    std::filesystem::create_directories(*options.out_dir);
    const char* ext = report_format == cca2ta::ReportFormat::kJson  ? "json"
                      : report_format == cca2ta::ReportFormat::kCsv ? "csv"
                                                                    : "txt";
    std::ofstream(*options.out_dir / (std::string("report.") + ext), std::ios::binary) << document;
  }
  std::cout << document;
  for (const cca2ta::RunReport& r : report.runs) {
    if (!r.executed) std::cerr << "run '" << r.name << "' failed: " << r.error << '\n';
  }
  return report.any_failed() ? kExitRuntime : kExitOk;
}

int calibrate_command(const std::string& path) {
  cca2ta::SchemeSpec spec;
  std::uint64_t seed = 0;
  try {
    spec = cca2ta::parse_scheme_spec(read_file(path), &seed);
  } catch (const cca2ta::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    std::cout << cca2ta::calibrate_scheme(spec, seed).dump(2) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "calibration failed: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

void list(std::span<const cca2ta::CatalogEntry> entries) {
  for (const cca2ta::CatalogEntry& e : entries) {
    std::cout << e.id << std::string(e.id.size() < 22 ? 22 - e.id.size() : 1, ' ') << e.description
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indistinguishability experiments with a timing side channel"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "text";
  std::string out_dir;
  unsigned threads = 1;
  CLI::App* run = app.add_subcommand("run", "run an experiment suite");
  run->add_option("config", config_path, "suite configuration (JSON)")->required();
  run->add_option("--format", format, "report format: json, csv or text");
  run->add_option("--out-dir", out_dir, "directory for transcripts and the report");
  run->add_option("--threads", threads, "worker threads per run")->check(CLI::Range(1u, 1024u));

  CLI::App* list_schemes = app.add_subcommand("list-schemes", "list scheme ids");
  CLI::App* list_adversaries = app.add_subcommand("list-adversaries", "list adversary ids");

  std::string scheme_path;
  CLI::App* calibrate = app.add_subcommand("calibrate", "worst-case fixed-time budgets for a scheme");
  calibrate->add_option("scheme-config", scheme_path, "scheme configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*run) return run_command(config_path, format, out_dir, threads);
  if (*list_schemes) {
    list(cca2ta::kSchemes);
    return kExitOk;
  }
  if (*list_adversaries) {
    list(cca2ta::kAdversaries);
    return kExitOk;
  }
  if (*calibrate) return calibrate_command(scheme_path);
  return kExitConfig;
}
