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

#ifndef CCA2TA_SUITE_HPP_
#define CCA2TA_SUITE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cca2ta/adversaries.hpp"
#include "cca2ta/cramer_shoup.hpp"
#include "cca2ta/digest.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/games.hpp"
#include "cca2ta/goldwasser_micali.hpp"
#include "cca2ta/leaky.hpp"
#include "cca2ta/timing.hpp"

namespace cca2ta {

struct CatalogEntry {
  std::string_view id;
  std::string_view description;
};

inline constexpr CatalogEntry kSchemes[] = {
    {"gm", "Goldwasser-Micali bitwise encryption over a Blum modulus"},
    {"cs", "Cramer-Shoup over a prime-order subgroup of Z_p^*"},
};

inline constexpr CatalogEntry kAdversaries[] = {
    {"random_guess", "two random plaintexts, fair-coin guess"},
    {"gm_malleability", "re-randomises c* and asks the oracle (GM only)"},
    {"timing_distinguisher", "separates arms by challenge encryption cost (needs CCA2_TA)"},
    {"early_abort_probe", "measures rejection cost per tag position (CS only, needs CCA2_TA)"},
};

struct SchemeSpec {
  std::string id;
  std::size_t bits = 0;          // GM: bits per prime, CS: group bits
  std::size_t message_bits = 8;  // GM only
  CsHash hash = CsHash::kSha256;
  LeakProfile leak;
  bool fixed_time = false;
  std::optional<FixedTimeConfig> budget;  // explicit t_ft instead of calibration
};

struct RunSpec {
  std::string name;
  ExperimentKind kind = ExperimentKind::kCpa;
  SchemeSpec scheme;
  std::string adversary;
  std::size_t trials_per_arm = 1000;
  std::uint64_t seed = 0;
  DelayModel delay;
  double negligible_threshold = kDefaultNegligibleThreshold;
  bool wall_clock = false;
};

struct SuiteConfig {
  std::vector<RunSpec> runs;
};

namespace internal {

using json = nlohmann::json;

inline std::string known_ids(std::span<const CatalogEntry> entries) {
  std::string out;
  for (const CatalogEntry& e : entries) {
    if (!out.empty()) out += ", ";
    out += e.id;
  }
  return out;
}

inline bool in_catalog(std::span<const CatalogEntry> entries, std::string_view id) {
  for (const CatalogEntry& e : entries) {
    if (e.id == id) return true;
  }
  return false;
}

inline void allow_only(const json& obj, std::initializer_list<std::string_view> keys,
                       const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (std::string_view k : keys) ok = ok || it.key() == k;
    if (!ok) throw ConfigError(where + ": unknown field '" + it.key() + "'");
  }
}

template <class T>
T get_or(const json& obj, const char* key, T fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": field '" + key + "' has the wrong type");
  }
}

inline SchemeSpec parse_scheme(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": scheme must be an object");
  allow_only(j, {"id", "bits", "message_bits", "hash", "leak", "fixed_time", "budget"}, where);
  SchemeSpec s;
  s.id = get_or<std::string>(j, "id", "", where);
  if (!in_catalog(kSchemes, s.id)) {
    throw ConfigError(where + ": unknown scheme id '" + s.id + "' (known: " + known_ids(kSchemes) + ")");
  }
  s.bits = get_or<std::size_t>(j, "bits", s.id == "gm" ? 16 : 32, where);
  s.message_bits = get_or<std::size_t>(j, "message_bits", 8, where);
  if (s.message_bits == 0 || s.message_bits > 64) {
    throw ConfigError(where + ": message_bits must be in [1, 64]");
  }
  const std::string hash = get_or<std::string>(j, "hash", "sha256", where);
  if (hash == "sha256") {
    s.hash = CsHash::kSha256;
  } else if (hash == "toy") {
    s.hash = CsHash::kToy;
  } else {
    throw ConfigError(where + ": unknown hash '" + hash + "' (known: sha256, toy)");
  }
  if (j.contains("leak")) {
    const json& leak = j.at("leak");
    if (!leak.is_object()) throw ConfigError(where + ": leak must be an object");
    allow_only(leak, {"enc_leak", "dec_early_abort"}, where + ".leak");
    s.leak.enc_leak = get_or<Units>(leak, "enc_leak", 0, where);
    s.leak.dec_early_abort = get_or<bool>(leak, "dec_early_abort", false, where);
  }
  s.fixed_time = get_or<bool>(j, "fixed_time", false, where);
  if (j.contains("budget")) {
    const json& b = j.at("budget");
    if (!b.is_object()) throw ConfigError(where + ": budget must be an object");
    allow_only(b, {"t_ft_encrypt", "t_ft_decrypt"}, where + ".budget");
    FixedTimeConfig cfg{get_or<Units>(b, "t_ft_encrypt", 0, where),
                        get_or<Units>(b, "t_ft_decrypt", 0, where)};
    if (cfg.t_ft_encrypt < 1 || cfg.t_ft_decrypt < 1) {
      throw ConfigError(where + ": budgets must be >= 1");
    }
    s.budget = cfg;
    s.fixed_time = true;
  }
  return s;
}

inline DelayModel parse_delay(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": delay must be an object");
  allow_only(j, {"base", "per_byte", "jitter_seed", "jitter_max"}, where + ".delay");
  DelayModel d;
  d.base = get_or<Units>(j, "base", 0, where);
  d.per_byte = get_or<Units>(j, "per_byte", 0, where);
  d.jitter_seed = get_or<std::uint64_t>(j, "jitter_seed", 0, where);
  d.jitter_max = get_or<Units>(j, "jitter_max", 0, where);
  return d;
}

}  // namespace internal

// Parses a suite document. A seed is mandatory for every run, either on the
// run itself or at top level.
inline SuiteConfig parse_config(std::string_view text) {
  using internal::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  internal::allow_only(doc, {"runs", "seed"}, "config");
  std::optional<std::uint64_t> default_seed;
  if (doc.contains("seed")) default_seed = internal::get_or<std::uint64_t>(doc, "seed", 0, "config");
  SuiteConfig cfg;
  if (!doc.contains("runs")) return cfg;
  if (!doc.at("runs").is_array()) throw ConfigError("config: runs must be an array");
  std::set<std::string> names;
  std::size_t index = 0;
  for (const json& r : doc.at("runs")) {
    const std::string where = "runs[" + std::to_string(index++) + "]";
    if (!r.is_object()) throw ConfigError(where + ": run must be an object");
    internal::allow_only(r, {"name", "experiment", "scheme", "adversary", "trials_per_arm", "seed",
                             "delay", "negligible_threshold", "wall_clock"},
                         where);
    RunSpec run;
    run.name = internal::get_or<std::string>(r, "name", "", where);
    if (run.name.empty()) throw ConfigError(where + ": name is required");
    if (run.name.find_first_of("/\\") != std::string::npos) {
      throw ConfigError(where + ": name must not contain path separators");
    }
    if (!names.insert(run.name).second) throw ConfigError(where + ": duplicate run name '" + run.name + "'");
    const std::string kind = internal::get_or<std::string>(r, "experiment", "", where);
    const auto parsed_kind = parse_experiment_kind(kind);
    if (!parsed_kind) {
      throw ConfigError(where + ": unknown experiment '" + kind + "' (known: CPA, CCA1, CCA2, CCA2_TA)");
    }
    run.kind = *parsed_kind;
    if (!r.contains("scheme")) throw ConfigError(where + ": scheme is required");
    run.scheme = internal::parse_scheme(r.at("scheme"), where + ".scheme");
    run.adversary = internal::get_or<std::string>(r, "adversary", "", where);
    if (!internal::in_catalog(kAdversaries, run.adversary)) {
      throw ConfigError(where + ": unknown adversary id '" + run.adversary +
                        "' (known: " + internal::known_ids(kAdversaries) + ")");
    }
    run.trials_per_arm = internal::get_or<std::size_t>(r, "trials_per_arm", 1000, where);
    if (run.trials_per_arm < 1) throw ConfigError(where + ": trials_per_arm must be >= 1");
    if (r.contains("seed")) {
      run.seed = internal::get_or<std::uint64_t>(r, "seed", 0, where);
    } else if (default_seed) {
      run.seed = *default_seed;
    } else {
      throw ConfigError(where + ": seed is required (no time-based default)");
    }
    if (r.contains("delay")) run.delay = internal::parse_delay(r.at("delay"), where);
    run.negligible_threshold =
        internal::get_or<double>(r, "negligible_threshold", kDefaultNegligibleThreshold, where);
    if (!(run.negligible_threshold > 0 && run.negligible_threshold < 1)) {
      throw ConfigError(where + ": negligible_threshold must be in (0, 1)");
    }
    run.wall_clock = internal::get_or<bool>(r, "wall_clock", false, where);
    cfg.runs.push_back(std::move(run));
  }
  return cfg;
}

struct CalibrationSummary {
  FixedTimeConfig config;
  bool calibrated = false;  // false when the budget came from the config
  std::size_t encrypt_samples = 0;
  std::size_t decrypt_samples = 0;
  std::string note;
  friend bool operator==(const CalibrationSummary&, const CalibrationSummary&) = default;
};

struct RunReport {
  std::string name;
  std::string scheme;
  std::string experiment;
  std::string adversary;
  std::size_t trials_per_arm = 0;
  std::uint64_t seed = 0;
  std::size_t security_bits = 0;
  bool toy_parameters = false;
  bool executed = false;
  std::string error;
  std::optional<AdvantageEstimate> estimate;
  std::string verdict;
  bool all_trials_faulted = false;
  std::vector<std::string> warnings;
  std::optional<CalibrationSummary> calibration;
  std::string transcript_file;
  std::string transcript_digest;
};

struct SuiteReport {
  std::string generated_at;
  std::vector<RunReport> runs;

  bool any_failed() const {
    for (const RunReport& r : runs) {
      if (!r.executed) return true;
    }
    return false;
  }
  bool any_toy() const {
    for (const RunReport& r : runs) {
      if (r.toy_parameters) return true;
    }
    return false;
  }
};

struct SuiteOptions {
  std::optional<std::filesystem::path> out_dir;
  unsigned threads = 1;
};

// Modulus sizes below this are flagged as toy parameters in every report.
inline constexpr std::size_t kToyModulusBits = 64;

namespace internal {

inline Rng stream(std::uint64_t seed, std::uint64_t label) { return Rng(derive_seed(seed, {label})); }

enum StreamLabel : std::uint64_t { kSetupStream = 0x5e7u, kCalibrationStream = 0xca1u };

template <Cryptosystem S>
CalibrationSummary calibrate_for_run(const S& scheme, const RunSpec& spec) {
  if (spec.scheme.budget) return {*spec.scheme.budget, false, 0, 0, ""};
  Rng rng = stream(spec.seed, kCalibrationStream);
  const CalibrationSample<S> sample = build_calibration_sample(scheme, rng);
  CostLedger ledger;
  const CalibrationResult result = calibrate_worst_case(scheme, sample, rng, ledger);
  return {result.config, true, result.encrypt_samples, result.decrypt_samples, result.note};
}

template <Cryptosystem S>
AdversaryFactory<S> adversary_factory(const std::string& id) {
  if (id == "random_guess") return random_guess_adversary<S>();
  if (id == "timing_distinguisher") return timing_distinguisher_adversary<S>();
  if (id == "gm_malleability") {
    if constexpr (GmFamily<S>) return gm_malleability_adversary<S>();
    throw IncompatiblePairing("gm_malleability only attacks Goldwasser-Micali schemes");
  }
  if (id == "early_abort_probe") {
    if constexpr (CsFamily<S>) return early_abort_probe_adversary<S>();
    throw IncompatiblePairing("early_abort_probe only attacks Cramer-Shoup schemes");
  }
  throw ConfigError("unknown adversary id '" + id + "'");
}

template <Cryptosystem S>
void execute_on(const S& scheme, const RunSpec& spec, const SuiteOptions& options, RunReport& report) {
  report.scheme = scheme.name();
  const AdversaryFactory<S> factory = adversary_factory<S>(spec.adversary);
  ExperimentOptions eo;
  eo.trials_per_arm = spec.trials_per_arm;
  eo.master_seed = spec.seed;
  eo.delay = spec.delay;
  eo.negligible_threshold = spec.negligible_threshold;
  eo.threads = options.threads;
  eo.wall_clock = spec.wall_clock;
  const ExperimentResult result = run_experiment(spec.kind, scheme, factory, eo);
  report.estimate = result.estimate;
  report.verdict = to_string(negligible_check(result.estimate));
  report.all_trials_faulted = result.all_trials_faulted;
  report.warnings = result.warnings;
  const std::string body = transcript_document(result, eo).dump(1);
  report.transcript_digest = sha256_hex(body);
  if (options.out_dir) {
    std::filesystem::create_directories(*options.out_dir);
    const std::filesystem::path path = *options.out_dir / (spec.name + ".transcript.json");
    std::ofstream out(path, std::ios::binary);
    out << body << '\n';
    if (!out) throw std::runtime_error("cannot write " + path.string());
    report.transcript_file = path.filename().string();
  }
}

template <Cryptosystem Base>
void execute_wrapped(Base base, const RunSpec& spec, const SuiteOptions& options, RunReport& report) {
  Leaky<Base> leaky = leaky_wrap(std::move(base), spec.scheme.leak);
  if (!spec.scheme.fixed_time) {
    execute_on(leaky, spec, options, report);
    return;
  }
  const CalibrationSummary calibration = calibrate_for_run(leaky, spec);
  report.calibration = calibration;
  execute_on(wrap_fixed_time(std::move(leaky), calibration.config), spec, options, report);
}

}  // namespace internal

inline RunReport run_one(const RunSpec& spec, const SuiteOptions& options = {}) {
  RunReport report;
  report.name = spec.name;
  report.experiment = to_string(spec.kind);
  report.adversary = spec.adversary;
  report.trials_per_arm = spec.trials_per_arm;
  report.seed = spec.seed;
  report.scheme = spec.scheme.id;
  try {
    Rng setup = internal::stream(spec.seed, internal::kSetupStream);
    if (spec.scheme.id == "gm") {
      report.security_bits = 2 * spec.scheme.bits;
      internal::execute_wrapped(GoldwasserMicali(GmParams{spec.scheme.bits, spec.scheme.message_bits}),
                                spec, options, report);
    } else {
      report.security_bits = spec.scheme.bits;
      internal::execute_wrapped(CramerShoup::generate(spec.scheme.bits, setup, spec.scheme.hash), spec,
                                options, report);
    }
    report.executed = true;
  } catch (const std::exception& e) {
    report.executed = false;
    report.error = e.what();
    report.estimate.reset();
    report.verdict.clear();
  }
  report.toy_parameters = report.security_bits < kToyModulusBits;
  return report;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Runs every configured run in order. A run that throws is recorded as not
// executed and the suite moves on.
inline SuiteReport run_suite(const SuiteConfig& cfg, const SuiteOptions& options = {}) {
  SuiteReport report;
  report.generated_at = utc_timestamp();
  for (const RunSpec& spec : cfg.runs) report.runs.push_back(run_one(spec, options));
  return report;
}

enum class ReportFormat { kJson, kCsv, kText };

inline ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "text") return ReportFormat::kText;
  throw ConfigError("unknown report format '" + std::string(text) + "' (known: json, csv, text)");
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["scheme"] = r.scheme;
  j["experiment"] = r.experiment;
  j["adversary"] = r.adversary;
  j["trials_per_arm"] = r.trials_per_arm;
  j["seed"] = r.seed;
  j["security_bits"] = r.security_bits;
  j["toy_parameters"] = r.toy_parameters;
  j["executed"] = r.executed;
  j["error"] = r.error;
  j["estimate"] = r.estimate ? to_json(*r.estimate) : nlohmann::ordered_json(nullptr);
  j["verdict"] = r.verdict;
  j["all_trials_faulted"] = r.all_trials_faulted;
  j["warnings"] = r.warnings;
  if (r.calibration) {
    j["calibration"] = {{"t_ft_encrypt", r.calibration->config.t_ft_encrypt},
                        {"t_ft_decrypt", r.calibration->config.t_ft_decrypt},
                        {"calibrated", r.calibration->calibrated},
                        {"encrypt_samples", r.calibration->encrypt_samples},
                        {"decrypt_samples", r.calibration->decrypt_samples},
                        {"note", r.calibration->note}};
  } else {
    j["calibration"] = nullptr;
  }
  j["transcript_file"] = r.transcript_file;
  j["transcript_digest"] = r.transcript_digest;
  return j;
}

// Report without the timestamp; identical across reruns of one config.
inline nlohmann::ordered_json report_body(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["toy_parameters"] = report.any_toy();
  auto& runs = j["runs"] = nlohmann::ordered_json::array();
  for (const RunReport& r : report.runs) runs.push_back(to_json(r));
  return j;
}

inline SuiteReport parse_report(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SuiteReport report;
  report.generated_at = j.value("generated_at", "");
  for (const nlohmann::json& rj : j.at("runs")) {
    RunReport r;
    r.name = rj.at("name").get<std::string>();
    r.scheme = rj.at("scheme").get<std::string>();
    r.experiment = rj.at("experiment").get<std::string>();
    r.adversary = rj.at("adversary").get<std::string>();
    r.trials_per_arm = rj.at("trials_per_arm").get<std::size_t>();
    r.seed = rj.at("seed").get<std::uint64_t>();
    r.security_bits = rj.at("security_bits").get<std::size_t>();
    r.toy_parameters = rj.at("toy_parameters").get<bool>();
    r.executed = rj.at("executed").get<bool>();
    r.error = rj.at("error").get<std::string>();
    if (!rj.at("estimate").is_null()) {
      const nlohmann::json& e = rj.at("estimate");
      AdvantageEstimate est;
      est.p_exp0 = e.at("p_exp0").get<double>();
      est.p_exp1 = e.at("p_exp1").get<double>();
      est.advantage = e.at("advantage").get<double>();
      est.ci95_halfwidth = e.at("ci95_halfwidth").get<double>();
      est.negligible_threshold = e.at("negligible_threshold").get<double>();
      est.win_rate = e.at("win_rate").get<double>();
      est.trials_arm0 = e.at("trials_arm0").get<std::size_t>();
      est.trials_arm1 = e.at("trials_arm1").get<std::size_t>();
      est.faults = e.at("faults").get<std::size_t>();
      r.estimate = est;
    }
    r.verdict = rj.at("verdict").get<std::string>();
    r.all_trials_faulted = rj.at("all_trials_faulted").get<bool>();
    r.warnings = rj.at("warnings").get<std::vector<std::string>>();
    if (!rj.at("calibration").is_null()) {
      const nlohmann::json& c = rj.at("calibration");
      r.calibration = CalibrationSummary{
          {c.at("t_ft_encrypt").get<Units>(), c.at("t_ft_decrypt").get<Units>()},
          c.at("calibrated").get<bool>(),
          c.at("encrypt_samples").get<std::size_t>(),
          c.at("decrypt_samples").get<std::size_t>(),
          c.at("note").get<std::string>()};
    }
    r.transcript_file = rj.at("transcript_file").get<std::string>();
    r.transcript_digest = rj.at("transcript_digest").get<std::string>();
    report.runs.push_back(std::move(r));
  }
  return report;
}

namespace internal {

inline std::string fixed(double v, int precision = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string text_table(const SuiteReport& report) {
  const std::vector<std::string> header = {"run", "scheme", "experiment", "adversary", "trials/arm",
                                           "advantage", "ci95", "verdict"};
  std::vector<std::vector<std::string>> rows;
  for (const RunReport& r : report.runs) {
    if (r.estimate) {
      rows.push_back({r.name, r.scheme, r.experiment, r.adversary, std::to_string(r.trials_per_arm),
                      fixed(r.estimate->advantage), fixed(r.estimate->ci95_halfwidth), r.verdict});
    } else {
      rows.push_back({r.name, r.scheme, r.experiment, r.adversary, std::to_string(r.trials_per_arm),
                      "-", "-", "FAILED: " + r.error});
    }
  }
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream out;
  if (report.any_toy()) {
    out << "WARNING: toy parameters (moduli below " << kToyModulusBits
        << " bits); results demonstrate behaviour, not real-world strength\n";
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

}  // namespace internal

inline std::string emit_report(const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::ordered_json j;
      j["generated_at"] = report.generated_at;
      const nlohmann::ordered_json body = report_body(report);
      for (const auto& [key, value] : body.items()) j[key] = value;
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::ostringstream out;
      out << "name,scheme,experiment,adversary,trials_per_arm,p_exp0,p_exp1,advantage,"
             "ci95_halfwidth,negligible_threshold,verdict,faults,toy_parameters,executed,error\n";
      for (const RunReport& r : report.runs) {
        using internal::csv_field;
        out << csv_field(r.name) << ',' << csv_field(r.scheme) << ',' << r.experiment << ','
            << r.adversary << ',' << r.trials_per_arm << ',';
        if (r.estimate) {
          const AdvantageEstimate& e = *r.estimate;
          out << internal::fixed(e.p_exp0, 6) << ',' << internal::fixed(e.p_exp1, 6) << ','
              << internal::fixed(e.advantage, 6) << ',' << internal::fixed(e.ci95_halfwidth, 6) << ','
              << internal::fixed(e.negligible_threshold, 6) << ',' << r.verdict << ',' << e.faults;
        } else {
          out << ",,,,,,";
        }
        out << ',' << (r.toy_parameters ? "true" : "false") << ',' << (r.executed ? "true" : "false")
            << ',' << csv_field(r.error) << '\n';
      }
      return out.str();
    }
    case ReportFormat::kText:
      return internal::text_table(report);
  }
  throw ConfigError("unknown report format");
}

inline std::string emit_report(const SuiteReport& report, std::string_view format) {
  return emit_report(report, parse_report_format(format));
}

// Worst-case calibration for one scheme block, as used by fixed-time runs.
inline nlohmann::ordered_json calibrate_scheme(const SchemeSpec& scheme, std::uint64_t seed) {
  RunSpec spec;
  spec.name = "calibrate";
  spec.scheme = scheme;
  spec.scheme.budget.reset();
  spec.seed = seed;
  CalibrationSummary summary;
  std::string name;
  auto go = [&](auto base) {
    Leaky leaky = leaky_wrap(std::move(base), scheme.leak);
    name = leaky.name();
    summary = internal::calibrate_for_run(leaky, spec);
  };
  Rng setup = internal::stream(seed, internal::kSetupStream);
  if (scheme.id == "gm") {
    go(GoldwasserMicali(GmParams{scheme.bits, scheme.message_bits}));
  } else {
    go(CramerShoup::generate(scheme.bits, setup, scheme.hash));
  }
  nlohmann::ordered_json j;
  j["scheme"] = name;
  j["seed"] = seed;
  j["t_ft_encrypt"] = summary.config.t_ft_encrypt;
  j["t_ft_decrypt"] = summary.config.t_ft_decrypt;
  j["encrypt_samples"] = summary.encrypt_samples;
  j["decrypt_samples"] = summary.decrypt_samples;
  j["note"] = summary.note;
  return j;
}

inline SchemeSpec parse_scheme_spec(std::string_view text, std::uint64_t* seed_out) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("scheme config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("scheme")) throw ConfigError("scheme config needs a 'scheme' object");
  internal::allow_only(doc, {"scheme", "seed"}, "scheme config");
  if (!doc.contains("seed")) throw ConfigError("scheme config: seed is required");
  if (seed_out) *seed_out = internal::get_or<std::uint64_t>(doc, "seed", 0, "scheme config");
  return internal::parse_scheme(doc.at("scheme"), "scheme");
}

}  // namespace cca2ta

#endif  // CCA2TA_SUITE_HPP_
