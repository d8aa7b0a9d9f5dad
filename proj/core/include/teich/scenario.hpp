#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teich/beltrami.hpp"
#include "teich/series.hpp"
#include "teich/structures.hpp"

namespace teich {

enum class Check {
  kTheorem1,
  kHilbert,
  kWelding,
  kWp,
  kPeriod,
  kZygmund,
  kAppendix,
  kExampleFamily,
};

std::string_view check_name(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name) noexcept;
std::vector<Check> all_checks();

inline constexpr double kQuadratureTolerance = 1e-8;
inline constexpr double kAlgebraicTolerance = 1e-12;
inline constexpr double kZygmundStabilityTolerance = 0.05;

struct PeriodOptions {
  double t = 0.01;
  int R = 0;  // 0: min(3, K/2)
  int S = 0;
};

struct ScenarioConfig {
  BeltramiSpec mu;
  std::string mu_text = "zero";  // canonical textual form, echoed in the report
  int K = kDefaultTruncation;
  int nr = kDefaultRadialNodes;
  int ntheta = kDefaultAngularNodes;
  std::vector<Check> checks;
  std::map<std::string, double> tolerances;  // per-check overrides of the primary tolerance
  PeriodOptions period;
  std::string report_path;
  std::string csv_path;
  std::string period_csv_path;
};

/// One asserted identity inside a check.
struct Assertion {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual < tolerance; }
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(Check c) : check(c) {}

  Check check = Check::kTheorem1;
  bool skipped = false;
  std::string note;
  std::vector<Assertion> assertions;    // the first one is the primary identity
  std::map<std::string, double> values;  // reported quantities
  std::map<std::string, bool> flags;
  double seconds = 0.0;

  bool pass() const;
  double residual() const { return assertions.empty() ? 0.0 : assertions.front().residual; }
  double tolerance() const { return assertions.empty() ? 0.0 : assertions.front().tolerance; }
};

struct VerificationReport {
  ScenarioConfig config;
  std::vector<CheckResult> checks;
  FourierField fourier;
  SchlichtVariation schlicht;
  std::optional<PeriodVariationMatrix> period;
  double seconds = 0.0;

  bool all_pass() const;
  std::string to_json() const;
  /// k,re_a,im_a,re_gamma,im_gamma for 2 <= k <= K, 17 significant digits.
  std::string coefficient_csv() const;
  /// r,s,re,im for each period-matrix entry (empty without a period check).
  std::string period_csv() const;
};

/// Parses "zero", "example:N", "monomial:C,P,Q" or "harmonic:H0,H1,...",
/// with complex literals such as 2, -0.5i, 1+0.25i.
BeltramiSpec parse_mu(std::string_view text);
cplx parse_complex(std::string_view text);

/// Parses a JSON scenario file body. Throws kInvalidConfig naming the
/// offending field.
ScenarioConfig parse_config(std::string_view json_text);

/// Rejects K < 2, nr < 8, ntheta < 4K + 2 and similar; the message lists
/// every offending field.
void validate_config(const ScenarioConfig& config);

VerificationReport run_scenario(const ScenarioConfig& config);

std::string_view library_version() noexcept;

}  // namespace teich
