#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinc {

inline const char* version() { return "0.1.0"; }

enum class Suite { eh, calabi, dirac, quotient, l2, flux, all };

inline std::string to_string(Suite s) {
  switch (s) {
    case Suite::eh: return "eh";
    case Suite::calabi: return "calabi";
    case Suite::dirac: return "dirac";
    case Suite::quotient: return "quotient";
    case Suite::l2: return "l2";
    case Suite::flux: return "flux";
    default: return "all";
  }
}

inline Suite suite_from_string(const std::string& s) {
  for (Suite v : {Suite::eh, Suite::calabi, Suite::dirac, Suite::quotient, Suite::l2, Suite::flux,
                  Suite::all})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown suite: " + s);
}

struct RunConfig {
  Suite suite = Suite::all;
  int n = 2;
  double kappa = 1.0;
  int ell_max = 3;
  unsigned long long seed = 7;
  int samples = 25;
  std::map<std::string, double> tolerances;
  std::string output;
  std::string format = "json";

  double tol(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
  void validate() const {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (ell_max < 0) throw std::invalid_argument("ell-max must be >= 0");
    if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
    for (const auto& [k, v] : tolerances)
      if (!(v > 0.0)) throw std::invalid_argument("tolerance " + k + " must be positive");
  }
};

/// One verified identity: id names the check, anchor names the identity
/// it certifies, and status is pass iff max_residual < tolerance.
struct CheckRecord {
  std::string id;
  std::string anchor;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string details;

  bool pass() const { return max_residual < tolerance; }
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> records;
  std::string timestamp;  // isolated so reports stay comparable

  int passed() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                          [](const CheckRecord& r) { return r.pass(); }));
  }
  int failed() const { return static_cast<int>(records.size()) - passed(); }

  void add(std::string id, std::string anchor, double residual, double tol,
           std::string details = "") {
    records.push_back({std::move(id), std::move(anchor), residual, tol, std::move(details)});
  }
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline nlohmann::ordered_json to_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["version"] = version();
  j["config"] = {{"suite", to_string(rep.config.suite)},
                 {"n", rep.config.n},
                 {"kappa", rep.config.kappa},
                 {"ell_max", rep.config.ell_max},
                 {"seed", rep.config.seed},
                 {"samples", rep.config.samples},
                 {"format", rep.config.format}};
  nlohmann::ordered_json tols = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.config.tolerances) tols[k] = v;
  j["config"]["tolerances"] = tols;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& r : rep.records) {
    recs.push_back({{"check_id", r.id},
                    {"anchor", r.anchor},
                    {"status", r.pass() ? "pass" : "fail"},
                    {"max_residual", r.max_residual},
                    {"tolerance", r.tolerance},
                    {"details", r.details}});
  }
  j["records"] = recs;
  j["summary"] = {{"passed", rep.passed()}, {"failed", rep.failed()}};
  j["generated_at"] = rep.timestamp;
  return j;
}

inline std::string to_csv(const Report& rep) {
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  out << "check_id,anchor,status,max_residual,tolerance,details\n";
  for (const auto& r : rep.records)
    out << quote(r.id) << ',' << quote(r.anchor) << ',' << (r.pass() ? "pass" : "fail") << ','
        << format_double(r.max_residual) << ',' << format_double(r.tolerance) << ','
        << quote(r.details) << '\n';
  return out.str();
}

inline std::string serialize(const Report& rep) {
  if (rep.config.format == "csv") return to_csv(rep);
  return to_json(rep).dump(2) + "\n";
}

// write-then-rename so readers never observe a partial report
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace spinc
