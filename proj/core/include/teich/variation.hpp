#pragma once

#include <string>
#include <vector>

#include "teich/beltrami.hpp"
#include "teich/quadrature.hpp"
#include "teich/series.hpp"

namespace teich {

/// Minimum distance outside the unit circle at which f_dot evaluates its
/// Cauchy-type integral.
inline constexpr double kBoundaryGuard = 1e-3;
/// |ζ| within this of 1 counts as a point of the circle for w_dot_mu.
inline constexpr double kOnCircle = 1e-12;

/// Both faces of one tangent vector, with the defect of ċ_k(0) = i·conj(a_k).
struct VariationPair {
  FourierField fourier;
  SchlichtVariation schlicht;
  std::string mu_label;
  int K = 0;
  double residual = 0.0;
};

/// ȧ(0) and ḃ_k(0), 1 <= k <= K, of the unnormalized family f^{tμ}.
struct RawVariation {
  cplx a_dot;
  std::vector<cplx> b_dot;  // b_dot[k-1] = ḃ_k(0)

  cplx b(int k) const { return b_dot.at(static_cast<std::size_t>(k - 1)); }
};

/// γ_k = (1/π) ∫∫_Δ μ z^{k-2}, 2 <= k <= K.
SchlichtVariation schlicht_variation(const BeltramiSpec& mu, int K, const PolarGrid& grid);

/// Boundary field of μ in sl(2,R)-normalized form:
/// a_{-k} = -(i/π) ∫∫_Δ μ z^{k-2}, a_k = conj(a_{-k}), k >= 2.
FourierField fourier_variation(const BeltramiSpec& mu, int K, const PolarGrid& grid);

/// μ is infinitesimally trivial at truncation K iff its boundary field
/// vanishes (all |a_k| <= tol).
bool infinitesimally_trivial(const BeltramiSpec& mu, int K, const PolarGrid& grid,
                             double tol = 1e-10);

/// ȧ(0) = (1/π)∫∫ μ/(z(z-1)) and ḃ_k(0) = (1/π)∫∫ μ z^{k-2}, k >= 1.
/// The ȧ(0) integrand has integrable poles at 0 and 1; grid nodes avoid them
/// but convergence is slow.
RawVariation raw_coefficient_variation(const BeltramiSpec& mu, int K, const PolarGrid& grid);

/// ∂_t f^{tμ}(ζ) at t = 0 for |ζ| > 1 + kBoundaryGuard, the Cauchy-type
/// integral with the 0, 1, ∞ normalization.
cplx f_dot(const BeltramiSpec& mu, cplx zeta, const PolarGrid& grid);

/// ẇ[μ](ζ) for the reflection-symmetric extension of μ, normalized to fix
/// 1, -1, -i. Valid for any ζ; on |ζ| = 1 the kernel 1/(z - ζ) reaches the
/// boundary and quadrature accuracy drops to roughly 1e-3 on the default grid.
cplx w_dot_mu(const BeltramiSpec& mu, cplx zeta, const PolarGrid& grid);

/// Cross-validation path: sample ẇ at `samples` points of the unit circle,
/// form u = ẇ/(i e^{iθ}) and extract sl(2,R)-normalized Fourier
/// coefficients. Only good to ~1e-3; fourier_variation is canonical.
FourierField fourier_variation_by_sampling(const BeltramiSpec& mu, int K, const PolarGrid& grid,
                                           int samples = 0);

/// a_k = 2i h_{k-2} / (k³ - k), 2 <= k <= K.
FourierField harmonic_fourier_closed_form(const QuadraticDifferential& phi, int K);

/// Computes γ (power-series route) and a (boundary route) by separate
/// quadratures and records max_k |γ_k - i·conj(a_k)|.
VariationPair verify_theorem1(const BeltramiSpec& mu, int K, const PolarGrid& grid);

}  // namespace teich
