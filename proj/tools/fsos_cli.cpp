// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: property-suite runner plus weight/character tables.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsos/characters.hpp"
#include "fsos/face.hpp"
#include "fsos/params.hpp"
#include "fsos/report.hpp"
#include "fsos/suites.hpp"
#include "fsos/version.hpp"
#include "fsos/vertex.hpp"

namespace {

fsos::Cplx parse_point(const std::string& text) {
  const auto pos = text.find(':');
  const std::string re = pos == std::string::npos ? text : text.substr(0, pos);
  const std::string im = pos == std::string::npos ? "0" : text.substr(pos + 1);
  std::size_t used = 0;
  const double re_v = std::stod(re, &used);
  if (used != re.size()) throw fsos::ConfigError("bad spectral point: " + text);
  const double im_v = std::stod(im, &used);
  if (used != im.size()) throw fsos::ConfigError("bad spectral point: " + text);
  return {re_v, im_v};
}

fsos::Config load_config(const std::string& cli_path) {
  std::string path = cli_path;
  if (path.empty()) {
    if (const char* env = std::getenv("FSOS_CONFIG")) path = env;
  }
  if (path.empty()) return {};
  return fsos::load_config_file(path);
}

int run_check(const std::vector<std::string>& suites, const std::string& config_path,
              const fsos::SuiteOptions& cli_opt, const std::vector<bool>& given,
              const std::string& json_path, const std::string& csv_path) {
  const fsos::Config cfg = load_config(config_path);
  fsos::SuiteOptions opt;
  opt.x = given[0] ? cli_opt.x : cfg.get_num("", "x", opt.x);
  opt.r = given[1] ? cli_opt.r : cfg.get_num("", "r", opt.r);
  opt.kmax = given[2] ? cli_opt.kmax : static_cast<int>(cfg.get_int("", "kmax", opt.kmax));
  opt.tol = given[3] ? cli_opt.tol : cfg.get_num("", "tol", opt.tol);
  opt.seed = given[4] ? cli_opt.seed
                      : static_cast<std::uint64_t>(cfg.get_int("", "seed",
                                                               static_cast<long long>(opt.seed)));
  opt.samples =
      given[5] ? cli_opt.samples : static_cast<int>(cfg.get_int("", "samples", opt.samples));
  opt.char_depth = given[6] ? cli_opt.char_depth
                            : static_cast<int>(cfg.get_int("", "char-depth", opt.char_depth));
  opt.parallel = cli_opt.parallel;

  std::vector<std::string> ids = suites;
  for (const auto& id : ids)
    if (!fsos::is_suite_id(id)) throw fsos::ConfigError("unknown suite id: " + id);

  const fsos::RunReport R = fsos::run_suites(ids, opt, cfg);

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw fsos::ConfigError("cannot write " + json_path);
    out << fsos::report_json(R);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw fsos::ConfigError("cannot write " + csv_path);
    out << fsos::report_csv(R);
  }

  std::printf("fsos %s  x=%g r=%g kmax=%d tol=%g seed=%llu\n", fsos::kVersion, R.x, R.r,
              R.kmax, R.tol, static_cast<unsigned long long>(R.seed));
  for (const auto& [key, value] : R.calibrations)
    std::printf("  calibration %-28s %s\n", key.c_str(), value.c_str());
  int failed = 0, total = 0;
  for (const auto& S : R.suites) {
    std::printf("suite %-12s (%.2fs)\n", S.suite.c_str(), S.seconds);
    for (const auto& chk : S.checks) {
      ++total;
      if (chk.status == "fail") ++failed;
      std::printf("  %-34s %-16s residual %.3e  tol %.1e  n=%d", chk.name.c_str(),
                  chk.status.c_str(), chk.residual, chk.tolerance, chk.samples);
      if (chk.skipped > 0) std::printf("  skipped=%d", chk.skipped);
      if (!chk.detail.empty()) std::printf("  [%s]", chk.detail.c_str());
      std::printf("\n");
    }
  }
  std::printf("%d checks, %d failed -> %s\n", total, failed, failed == 0 ? "OK" : "FAIL");
  return failed == 0 ? 0 : 1;
}

int run_table(const std::string& kind, int k, const std::string& u_text, double x, double r,
              double base) {
  const fsos::Cplx u = parse_point(u_text);
  const fsos::ModelParams P = fsos::make_params(x, r, k);
  if (kind == "vertex") {
    const fsos::RTensor T = fsos::fused_r(u, k, P);
    std::printf("in1,in2,out1,out2,re,im\n");
    for (int e1 = 0; e1 <= k; ++e1)
      for (int e2 = 0; e2 <= k; ++e2)
        for (int f1 = 0; f1 <= k; ++f1)
          for (int f2 = 0; f2 <= k; ++f2) {
            const fsos::Cplx w = T.at(e1, e2, f1, f2);
            std::printf("%d,%d,%d,%d,%.12g,%.12g\n", k - 2 * e1, k - 2 * e2, k - 2 * f1,
                        k - 2 * f2, w.real(), w.imag());
          }
    return 0;
  }
  if (kind == "face") {
    std::printf("a,b,d,c,re,im\n");
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        for (int m = 0; m <= k; ++m) {
          const double a = base;
          const double b = a + 2 * i - k;
          const double cc = b + 2 * j - k;
          const double d = a + 2 * m - k;
          if (std::abs(cc - d) > k + 0.5) continue;
          const fsos::Cplx w = fsos::face_weight_kk(k, {a, b, d, cc}, u, P);
          std::printf("%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", a, b, d, cc, w.real(),
                      w.imag());
        }
    return 0;
  }
  throw fsos::ConfigError("unknown table kind: " + kind);
}

int run_chars(int k, int depth) {
  std::printf("k,ell,M,n,mult,coefficient-exponent\n");
  for (int ell = 0; ell <= k; ++ell) {
    const fsos::StringTable T = fsos::build_string_table(k, ell, depth);
    for (int M = 0; M <= 2 * k - 1; ++M) {
      if (((M - ell) % 2 + 2) % 2 != 0) continue;
      const double head = T.string_head(M);
      for (int n = 0; n <= depth; ++n)
        std::printf("%d,%d,%d,%d,%lld,%.12g\n", k, ell, M, n,
                    static_cast<long long>(T.mult(M, n)), head + n);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion eight-vertex / height-model verification toolkit"};
  app.set_version_flag("--version", fsos::kVersion);
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run property suites and report residuals");
  std::vector<std::string> suites;
  std::string config_path, json_path, csv_path;
  fsos::SuiteOptions cli_opt;
  bool serial = false;
  check->add_option("--suite", suites, "suite id (repeatable); default: all");
  check->add_option("--config", config_path, "config file (default: $FSOS_CONFIG)");
  auto* ox = check->add_option("--x", cli_opt.x, "elliptic nome base in (0,1)");
  auto* orr = check->add_option("--r", cli_opt.r, "restriction parameter, r > kmax + 2");
  auto* ok = check->add_option("--kmax", cli_opt.kmax, "highest fusion level");
  auto* ot = check->add_option("--tol", cli_opt.tol, "default residual tolerance");
  auto* os = check->add_option("--seed", cli_opt.seed, "sampling seed");
  auto* on = check->add_option("--samples", cli_opt.samples, "samples per check");
  auto* od = check->add_option("--char-depth", cli_opt.char_depth, "character series depth");
  check->add_option("--json", json_path, "write JSON report to this path");
  check->add_option("--csv", csv_path, "write CSV report to this path");
  check->add_flag("--serial", serial, "disable parallel sampling");

  // table
  auto* table = app.add_subcommand("table", "print fused weight tables as CSV");
  std::string kind = "vertex", u_text = "-0.5:0.01";
  int tk = 1;
  double tx = 0.3, tr = 5.7, tbase = 1.3;
  table->add_option("--kind", kind, "vertex | face")
      ->check(CLI::IsMember({"vertex", "face"}));
  table->add_option("--k", tk, "fusion level");
  table->add_option("--u", u_text, "spectral point re[:im]");
  table->add_option("--x", tx, "elliptic nome base");
  table->add_option("--r", tr, "restriction parameter");
  table->add_option("--base", tbase, "base height for face tables");

  // chars
  auto* chars = app.add_subcommand("chars", "print string-function multiplicities as CSV");
  int ck = 1, cdepth = 20;
  chars->add_option("--k", ck, "level");
  chars->add_option("--depth", cdepth, "grade depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      cli_opt.parallel = !serial;
      const std::vector<bool> given = {ox->count() > 0, orr->count() > 0, ok->count() > 0,
                                       ot->count() > 0, os->count() > 0, on->count() > 0,
                                       od->count() > 0};
      return run_check(suites, config_path, cli_opt, given, json_path, csv_path);
    }
    if (table->parsed()) return run_table(kind, tk, u_text, tx, tr, tbase);
    if (chars->parsed()) return run_chars(ck, cdepth);
  } catch (const fsos::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
