// teich_verify: run tangent-space identity checks for one Beltrami
// coefficient and write a JSON report (plus optional CSV tables).
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "teich/error.hpp"
#include "teich/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw teich::Error(teich::ErrorCode::kInvalidConfig, "cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify tangent-space identities for a Beltrami coefficient on the unit disc"};
  app.set_version_flag("--version", std::string(teich::library_version()));

  std::string config_path;
  std::string mu_text;
  int K = 0;
  int nr = 0;
  int ntheta = 0;
  std::string checks;
  std::vector<std::string> tols;
  std::string out_path;
  std::string csv_path;
  std::string period_csv_path;
  bool quiet = false;

  app.add_option("-c,--config", config_path, "JSON scenario file");
  app.add_option("--mu", mu_text,
                 "Beltrami coefficient: zero | example:N | monomial:C,P,Q | harmonic:H0,H1,...");
  app.add_option("--k", K, "Truncation order K");
  app.add_option("--nr", nr, "Radial Gauss-Legendre nodes");
  app.add_option("--ntheta", ntheta, "Angular nodes");
  app.add_option("--checks", checks,
                 "Comma-separated checks (theorem1,hilbert,welding,wp,period,zygmund,appendix,"
                 "example-family) or 'all'");
  app.add_option("--tol", tols, "Tolerance override: CHECK=VALUE, or VALUE for every check")
      ->take_all();
  app.add_option("--out", out_path, "JSON report path ('-' for stdout)");
  app.add_option("--csv", csv_path, "Coefficient table CSV path");
  app.add_option("--period-csv", period_csv_path, "Period-matrix CSV path (needs the period check)");
  app.add_flag("-q,--quiet", quiet, "Suppress the per-check summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  teich::VerificationReport report;
  try {
    teich::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = teich::parse_config(read_file(config_path));
    if (!mu_text.empty()) {
      cfg.mu = teich::parse_mu(mu_text);
      cfg.mu_text = mu_text;
    }
    if (K != 0) cfg.K = K;
    if (nr != 0) cfg.nr = nr;
    if (ntheta != 0) cfg.ntheta = ntheta;
    if (!checks.empty()) {
      cfg.checks.clear();
      for (const auto& name : split_commas(checks)) {
        if (name == "all") {
          cfg.checks = teich::all_checks();
          break;
        }
        const auto c = teich::parse_check(name);
        if (!c) throw teich::Error(teich::ErrorCode::kInvalidConfig, "--checks: unknown check '" + name + "'");
        cfg.checks.push_back(*c);
      }
    }
    if (cfg.checks.empty()) cfg.checks = teich::all_checks();
    for (const auto& t : tols) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) {
        const double v = std::stod(t);
        for (const auto c : teich::all_checks()) cfg.tolerances[std::string(teich::check_name(c))] = v;
      } else {
        const std::string name = t.substr(0, eq);
        if (!teich::parse_check(name)) {
          throw teich::Error(teich::ErrorCode::kInvalidConfig, "--tol: unknown check '" + name + "'");
        }
        cfg.tolerances[name] = std::stod(t.substr(eq + 1));
      }
    }
    if (!out_path.empty()) cfg.report_path = out_path;
    if (!csv_path.empty()) cfg.csv_path = csv_path;
    if (!period_csv_path.empty()) cfg.period_csv_path = period_csv_path;

    report = teich::run_scenario(cfg);
  } catch (const teich::Error& e) {
    std::cerr << "teich_verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "teich_verify: bad numeric value in --tol\n";
    return kExitUsage;
  }

  try {
    const std::string json = report.to_json();
    if (report.config.report_path == "-") {
      std::cout << json;
    } else if (!report.config.report_path.empty()) {
      write_file(report.config.report_path, json);
    }
    if (!report.config.csv_path.empty()) write_file(report.config.csv_path, report.coefficient_csv());
    if (!report.config.period_csv_path.empty()) {
      write_file(report.config.period_csv_path, report.period_csv());
    }
  } catch (const std::exception& e) {
    std::cerr << "teich_verify: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!quiet) {
    auto& os = report.config.report_path == "-" ? std::cerr : std::cout;
    for (const auto& c : report.checks) {
      os << (c.skipped ? "SKIP" : c.pass() ? "PASS" : "FAIL") << "  " << teich::check_name(c.check);
      if (!c.skipped) os << "  residual=" << c.residual() << "  tol=" << c.tolerance();
      os << "\n";
    }
  }
  return report.all_pass() ? kExitPass : kExitFail;
}
