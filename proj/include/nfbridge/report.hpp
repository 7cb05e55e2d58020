#pragma once

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "nfbridge/forces.hpp"

namespace nfb {

inline constexpr const char* kToolVersion = "0.1.0";

/// Configuration or input problems; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  std::size_t nt = 33;
  std::size_t ny = 33;
  double h = 1.0 / 32;
};

/// One validated run request. Every field has a default; unknown JSON keys
/// are rejected.
struct Scenario {
  std::string suite = "all";
  std::string mode = "exact";  // exact | float
  std::uint64_t seed = 1;
  GridSpec grid;
  std::string constants = "natural";  // natural | symbolic
  Rational mass{3};
  int bilinear_trials = 1000;
  int random_trials = 100;
  RingConfig ring{1, 1, Rational(1, 2), 1, 1, 1};
  bool has_custom_ring = false;
  std::array<ExactComplex, 4> amplitudes{ExactComplex(1), ExactComplex(0),
                                         ExactComplex(0), ExactComplex(-1)};
  bool has_custom_amplitudes = false;

  PhysicalConstants physical_constants() const {
    if (constants == "natural") return PhysicalConstants::natural(mass);
    return PhysicalConstants{Rational(7, 2), Rational(3, 5), mass};
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "algebra",  "bilinears",    "directions", "canonical",
      "planewave", "currents",    "grid",       "conservation",
      "lagrangian", "forces",     "hydro",      "all"};
  return names;
}

inline void validate_scenario(const Scenario& s) {
  bool known = false;
  for (const auto& name : suite_names()) known = known || name == s.suite;
  if (!known) throw ConfigError("unknown suite: " + s.suite);
  if (s.mode != "exact" && s.mode != "float")
    throw ConfigError("mode must be 'exact' or 'float'");
  if (s.constants != "natural" && s.constants != "symbolic")
    throw ConfigError("constants must be 'natural' or 'symbolic'");
  if (s.grid.nt < 3 || s.grid.ny < 3)
    throw ConfigError("grid must have at least 3 points per axis");
  if (s.grid.h <= 0) throw ConfigError("grid spacing must be positive");
  if (s.bilinear_trials <= 0 || s.random_trials <= 0)
    throw ConfigError("trial counts must be positive");
  if (s.mass < 0) throw ConfigError("mass must be nonnegative");
}

/// Parses a scenario JSON object; every key optional, unknown keys rejected.
inline Scenario scenario_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> known{
      "suite", "mode", "seed",  "grid",       "constants",
      "mass",  "ring", "trials", "amplitudes"};
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : known) ok = ok || k == key;
    if (!ok) throw ConfigError("unknown scenario key: " + key);
  }
  Scenario s;
  try {
    if (j.contains("suite")) s.suite = j.at("suite").get<std::string>();
    if (j.contains("mode")) s.mode = j.at("mode").get<std::string>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mass"))
      s.mass = parse_rational(j.at("mass").get<std::string>());
    if (j.contains("constants"))
      s.constants = j.at("constants").get<std::string>();
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      for (const auto& [key, value] : g.items()) {
        (void)value;
        if (key != "nt" && key != "ny" && key != "h")
          throw ConfigError("unknown grid key: " + key);
      }
      if (g.contains("nt")) s.grid.nt = g.at("nt").get<std::size_t>();
      if (g.contains("ny")) s.grid.ny = g.at("ny").get<std::size_t>();
      if (g.contains("h")) s.grid.h = g.at("h").get<double>();
    }
    if (j.contains("trials")) {
      const auto& t = j.at("trials");
      for (const auto& [key, value] : t.items()) {
        (void)value;
        if (key != "bilinear" && key != "random")
          throw ConfigError("unknown trials key: " + key);
      }
      if (t.contains("bilinear"))
        s.bilinear_trials = t.at("bilinear").get<int>();
      if (t.contains("random")) s.random_trials = t.at("random").get<int>();
    }
    if (j.contains("ring")) {
      const auto& r = j.at("ring");
      for (const auto& [key, value] : r.items()) {
        (void)value;
        static const std::vector<std::string> rk{"rho_e", "j_tau",   "e_p",
                                                 "h_p",   "r_p",     "omega_p",
                                                 "delta_tau"};
        bool ok = false;
        for (const auto& k : rk) ok = ok || k == key;
        if (!ok) throw ConfigError("unknown ring key: " + key);
      }
      auto rat = [&](const char* key, const Rational& fallback) {
        return r.contains(key) ? parse_rational(r.at(key).get<std::string>())
                               : fallback;
      };
      s.ring.rho_e = rat("rho_e", s.ring.rho_e);
      s.ring.j_tau = rat("j_tau", s.ring.j_tau);
      s.ring.e_p = rat("e_p", s.ring.e_p);
      s.ring.h_p = rat("h_p", s.ring.h_p);
      s.ring.r_p = rat("r_p", s.ring.r_p);
      s.ring.omega_p = rat("omega_p", s.ring.omega_p);
      s.ring.delta_tau = rat("delta_tau", s.ring.delta_tau);
      if (s.ring.delta_tau <= 0)
        throw ConfigError("ring delta_tau must be positive");
      s.has_custom_ring = true;
    }
    if (j.contains("amplitudes")) {
      const auto& a = j.at("amplitudes");
      if (!a.is_array() || a.size() != 4)
        throw ConfigError("amplitudes must be an array of 4 [re, im] pairs");
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& pair = a.at(k);
        if (!pair.is_array() || pair.size() != 2)
          throw ConfigError("amplitudes must be an array of 4 [re, im] pairs");
        s.amplitudes[k] =
            ExactComplex(parse_rational(pair.at(0).get<std::string>()),
                         parse_rational(pair.at(1).get<std::string>()));
      }
      s.has_custom_amplitudes = true;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed scenario: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed scenario: ") + e.what());
  }
  validate_scenario(s);
  return s;
}

inline Scenario scenario_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

struct CheckResult {
  std::string id;
  std::string paper_eq;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string mode;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_ms = 0;
  std::string tool_version = kToolVersion;
  std::string scenario_echo;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

/// Canonical JSON body: exactly the pinned keys, no volatile fields, so the
/// same seed and scenario serialize byte-identically.
inline nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"paper_eq", c.paper_eq},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  return {{"suite", r.suite},
          {"mode", r.mode},
          {"seed", r.seed},
          {"checks", checks},
          {"summary",
           {{"checks", r.checks.size()},
            {"passed", r.passed()},
            {"failed", r.failed()},
            {"pass", r.all_pass()}}}};
}

inline std::string report_json_string(const SuiteReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

inline void emit_json(const SuiteReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report_json_string(r);
  if (!out) throw std::runtime_error("failed writing " + path);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline void emit_csv(const SuiteReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "id,paper_eq,pass,detail\n";
  for (const auto& c : r.checks)
    out << csv_escape(c.id) << "," << csv_escape(c.paper_eq) << ","
        << (c.pass ? "true" : "false") << "," << csv_escape(c.detail) << "\n";
  if (!out) throw std::runtime_error("failed writing " + path);
}

/// Deterministic short formatting for detail strings.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace nfb
