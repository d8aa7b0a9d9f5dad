#include "teich/example_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "teich/error.hpp"

namespace teich {
namespace {

cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

void require_order(int n, int K) {
  if (n < 3) throw Error(ErrorCode::kOutOfRange, "example family requires n >= 3");
  if (n - 1 > K) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "mode n - 1 = " + std::to_string(n - 1) + " exceeds K = " + std::to_string(K));
  }
}

}  // namespace

ExampleMap::ExampleMap(int n, cplx t) : n_(n), t_(t) {
  if (n < 3) throw Error(ErrorCode::kOutOfRange, "example family requires n >= 3");
  if (!(std::abs(t) < 1.0 / n)) {
    throw Error(ErrorCode::kOutOfRange,
                "|t| = " + std::to_string(std::abs(t)) + " must be below 1/n = " +
                    std::to_string(1.0 / n));
  }
}

cplx ExampleMap::exterior(cplx zeta) const { return zeta / (1.0 + t_ / ipow(zeta, n_ - 1)); }

cplx ExampleMap::interior(cplx zeta) const {
  if (zeta == cplx{}) return {};
  return 1.0 / (1.0 / zeta + t_ * ipow(std::conj(zeta), n_));
}

cplx example_map_eval(const ExampleMap& m, cplx zeta) {
  return std::abs(zeta) >= 1.0 ? m.exterior(zeta) : m.interior(zeta);
}

double example_branch_mismatch(const ExampleMap& m, int samples) {
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const cplx e = std::polar(1.0, 2.0 * std::numbers::pi * j / samples);
    worst = std::max(worst, std::abs(m.exterior(e) - m.interior(e)));
  }
  return worst;
}

FourierField example_expected_fourier(int n, int K) {
  require_order(n, K);
  FourierField f(K);
  f.set_mode(n - 1, {0.0, -1.0});
  return f;
}

SchlichtVariation example_expected_cdot(int n, int K) {
  require_order(n, K);
  SchlichtVariation gamma(K);
  gamma[n - 1] = -1.0;
  return gamma;
}

double dilatation_check(const ExampleMap& m, cplx z, double h) {
  const double limit = 1.0 - kDilatationInteriorMargin;
  if (!(std::abs(z) < limit)) {
    throw Error(ErrorCode::kOutsideDomain, "dilatation check needs |z| < 1 - 1e-2");
  }
  if (!(h > 0.0) || std::abs(z) + h >= limit) {
    throw Error(ErrorCode::kStepTooLarge, "finite-difference stencil leaves the disc");
  }
  const cplx ih{0.0, h};
  const cplx wx = (m.interior(z + h) - m.interior(z - h)) / (2.0 * h);
  const cplx wy = (m.interior(z + ih) - m.interior(z - ih)) / (2.0 * h);
  const cplx I{0.0, 1.0};
  const cplx w_z = 0.5 * (wx - I * wy);
  const cplx w_zbar = 0.5 * (wx + I * wy);
  const cplx mu = -static_cast<double>(m.n()) * z * z * ipow(std::conj(z), m.n() - 1);
  return std::abs(w_zbar / w_z - m.t() * mu);
}

SchlichtCoefficients example_finite_t_coefficients(const ExampleMap& m, int K) {
  SchlichtCoefficients c(std::max(K, 1));
  const int step = m.n() - 1;
  cplx power = -m.t();
  for (int k = step; k <= K; k += step) {
    c[k] = power;
    power *= -m.t();
  }
  return c;
}

}  // namespace teich
