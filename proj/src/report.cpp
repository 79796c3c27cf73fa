// SPDX-License-Identifier: Apache-2.0
#include "fsos/report.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fsos {

namespace {

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

bool SuiteReport::any_fail() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

bool RunReport::any_fail() const {
  for (const auto& s : suites)
    if (s.any_fail()) return true;
  return false;
}

std::string status_for(double residual, double tol, int evaluated, int requested) {
  if (requested > 0 && evaluated == 0) return "skipped-singular";
  if (!(residual == residual)) return "fail";  // NaN
  return residual <= tol ? "pass" : "fail";
}

std::string report_json(const RunReport& R) {
  using json = nlohmann::ordered_json;
  json root;
  root["params"] = {{"x", R.x}, {"r", R.r}, {"kmax", R.kmax}, {"tol", R.tol}};
  root["seed"] = R.seed;
  root["version"] = R.version;
  json cal = json::object();
  for (const auto& [k, v] : R.calibrations) cal[k] = v;
  root["calibrations"] = cal;
  json suites = json::array();
  for (const auto& s : R.suites) {
    json js;
    js["suite"] = s.suite;
    json checks = json::array();
    for (const auto& c : s.checks) {
      json jc;
      jc["name"] = c.name;
      jc["status"] = c.status;
      jc["residual"] = fmt_g17(c.residual);
      jc["tolerance"] = fmt_g17(c.tolerance);
      jc["samples"] = c.samples;
      jc["skipped"] = c.skipped;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(std::move(jc));
    }
    js["checks"] = std::move(checks);
    suites.push_back(std::move(js));
  }
  root["suites"] = std::move(suites);
  return root.dump(2) + "\n";
}

std::string report_csv(const RunReport& R) {
  std::ostringstream out;
  out << "suite,check,status,residual,tolerance,samples,skipped,detail\n";
  for (const auto& s : R.suites)
    for (const auto& c : s.checks)
      out << csv_escape(s.suite) << ',' << csv_escape(c.name) << ',' << c.status << ','
          << fmt_g17(c.residual) << ',' << fmt_g17(c.tolerance) << ',' << c.samples << ','
          << c.skipped << ',' << csv_escape(c.detail) << '\n';
  return out.str();
}

std::string Config::get(const std::string& section, const std::string& key,
                        const std::string& fallback) const {
  if (!section.empty()) {
    auto si = sections.find(section);
    if (si != sections.end()) {
      auto ki = si->second.find(key);
      if (ki != si->second.end()) return ki->second;
    }
  }
  auto gi = global.find(key);
  if (gi != global.end()) return gi->second;
  return fallback;
}

double Config::get_num(const std::string& section, const std::string& key,
                       double fallback) const {
  std::string v = get(section, key, "");
  if (v.empty()) return fallback;
  try {
    std::size_t pos = 0;
    double out = std::stod(v, &pos);
    if (pos != v.size()) throw ConfigError("trailing characters in numeric value: " + v);
    return out;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + v);
  }
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
  std::string v = get(section, key, "");
  if (v.empty()) return fallback;
  try {
    std::size_t pos = 0;
    long long out = std::stoll(v, &pos);
    if (pos != v.size()) throw ConfigError("trailing characters in integer value: " + v);
    return out;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + v);
  }
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (section.empty())
      cfg.global[key] = val;
    else
      cfg.sections[section][key] = val;
  }
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace fsos
