#include "teich/variation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "teich/error.hpp"

namespace teich {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void require_truncation(int K, int minimum) {
  if (K < minimum) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "K = " + std::to_string(K) + " below minimum " + std::to_string(minimum));
  }
}

// ∫∫_Δ μ z^m for m in [m_lo, m_hi].
std::vector<cplx> mu_moments(const BeltramiSpec& mu, const PolarGrid& grid, int m_lo, int m_hi) {
  return integrate_disc_moments([&mu](const DiscNode& n) { return mu.at(n); }, grid, m_lo, m_hi);
}

}  // namespace

SchlichtVariation schlicht_variation(const BeltramiSpec& mu, int K, const PolarGrid& grid) {
  require_truncation(K, 2);
  const auto moments = mu_moments(mu, grid, 0, K - 2);
  SchlichtVariation gamma(K);
  for (int k = 2; k <= K; ++k) gamma[k] = moments[static_cast<std::size_t>(k - 2)] / kPi;
  return gamma;
}

FourierField fourier_variation(const BeltramiSpec& mu, int K, const PolarGrid& grid) {
  require_truncation(K, 2);
  const auto moments = mu_moments(mu, grid, 0, K - 2);
  FourierField field(K);
  for (int k = 2; k <= K; ++k) {
    const cplx a_minus_k = -kI / kPi * moments[static_cast<std::size_t>(k - 2)];
    field.set_mode(k, std::conj(a_minus_k));
  }
  return field;
}

bool infinitesimally_trivial(const BeltramiSpec& mu, int K, const PolarGrid& grid, double tol) {
  const FourierField f = fourier_variation(mu, K, grid);
  return std::all_of(f.dense().begin(), f.dense().end(),
                     [tol](cplx a) { return std::abs(a) <= tol; });
}

RawVariation raw_coefficient_variation(const BeltramiSpec& mu, int K, const PolarGrid& grid) {
  require_truncation(K, 1);
  const cplx a_integral = integrate_disc(
      [&mu](const DiscNode& n) {
        if (std::abs(n.z) < 1e-14 || std::abs(n.z - 1.0) < 1e-14) {
          throw Error(ErrorCode::kSingularNode, "quadrature node coincides with a pole of the "
                                                "leading-coefficient integrand");
        }
        return mu.at(n) / (n.z * (n.z - 1.0));
      },
      grid);
  const auto moments = mu_moments(mu, grid, -1, K - 2);
  RawVariation raw{a_integral / kPi, {}};
  raw.b_dot.reserve(static_cast<std::size_t>(K));
  for (const cplx m : moments) raw.b_dot.push_back(m / kPi);
  return raw;
}

cplx f_dot(const BeltramiSpec& mu, cplx zeta, const PolarGrid& grid) {
  if (!(std::abs(zeta) > 1.0 + kBoundaryGuard)) {
    throw Error(ErrorCode::kTooCloseToBoundary,
                "|zeta| = " + std::to_string(std::abs(zeta)) + " must exceed 1 + " +
                    std::to_string(kBoundaryGuard));
  }
  const cplx integral = integrate_disc(
      [&mu, zeta](const DiscNode& n) {
        return mu.at(n) / (n.z * (n.z - 1.0) * (n.z - zeta));
      },
      grid);
  return -zeta * (zeta - 1.0) / kPi * integral;
}

cplx w_dot_mu(const BeltramiSpec& mu, cplx zeta, const PolarGrid& grid) {
  const cplx prefactor = -(zeta - 1.0) * (zeta + 1.0) * (zeta + kI) / kPi;
  if (prefactor == cplx{}) return {};
  const auto g = [](cplx z) { return 1.0 / ((z - 1.0) * (z + 1.0) * (z + kI)); };
  const auto g_reflected = [](cplx zb) { return 1.0 / ((zb - 1.0) * (zb + 1.0) * (zb - kI)); };

  // On the circle both kernels are singular at the boundary point z = ζ. When
  // μ extends continuously there, subtract its value and add back the exact
  // integrals ∫∫ 1/(z - ζ) = -π/ζ and ∫∫ 1/(1 - ζz̄) = π.
  cplx mu_b{};
  if (std::abs(std::abs(zeta) - 1.0) < kOnCircle) {
    if (const auto v = mu.closed_form(zeta)) mu_b = *v;
  }
  const cplx s1 = mu_b * g(zeta);
  const cplx s2 = std::conj(mu_b) * g_reflected(std::conj(zeta));

  const cplx interior = integrate_disc(
      [&](const DiscNode& n) { return (mu.at(n) * g(n.z) - s1) / (n.z - zeta); }, grid);
  const cplx reflected = integrate_disc(
      [&](const DiscNode& n) {
        const cplx zb = std::conj(n.z);
        return (std::conj(mu.at(n)) * g_reflected(zb) - s2) / (1.0 - zeta * zb);
      },
      grid);
  return prefactor * (interior - s1 * kPi / zeta + kI * (reflected + s2 * kPi));
}

FourierField fourier_variation_by_sampling(const BeltramiSpec& mu, int K, const PolarGrid& grid,
                                           int samples) {
  require_truncation(K, 2);
  if (samples == 0) samples = 4 * K + 2;
  std::vector<double> u(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const cplx e = std::polar(1.0, 2.0 * kPi * j / samples);
    u[static_cast<std::size_t>(j)] = (w_dot_mu(mu, e, grid) / (kI * e)).real();
  }
  return sl2_normalize(fourier_from_samples(u, K));
}

FourierField harmonic_fourier_closed_form(const QuadraticDifferential& phi, int K) {
  require_truncation(K, 2);
  FourierField field(K);
  for (int k = 2; k <= K; ++k) {
    const double weight = static_cast<double>(k) * k * k - k;
    field.set_mode(k, 2.0 * kI * phi.coeff(k - 2) / weight);
  }
  return field;
}

VariationPair verify_theorem1(const BeltramiSpec& mu, int K, const PolarGrid& grid) {
  VariationPair pair{fourier_variation(mu, K, grid), schlicht_variation(mu, K, grid), mu.label(),
                     K, 0.0};
  for (int k = 2; k <= K; ++k) {
    pair.residual = std::max(pair.residual,
                             std::abs(pair.schlicht[k] - kI * std::conj(pair.fourier.coeff(k))));
  }
  return pair;
}

}  // namespace teich
