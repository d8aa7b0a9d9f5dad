#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "teich/series.hpp"

namespace teich {

inline constexpr int kDefaultRadialNodes = 64;
inline constexpr int kDefaultAngularNodes = 256;

/// One quadrature node of a PolarGrid.
struct DiscNode {
  int ir;       // radial index
  int itheta;   // angular index
  cplx z;       // r_ir e^{iθ_itheta}
  double weight;
};

/// Tensor-product rule on the open unit disc: Gauss–Legendre in r mapped to
/// (0,1) with the polar Jacobian r folded into the weights, uniform
/// (trapezoid) nodes in θ. Weights sum to π.
class PolarGrid {
 public:
  PolarGrid(int nr = kDefaultRadialNodes, int ntheta = kDefaultAngularNodes);

  int nr() const noexcept { return nr_; }
  int ntheta() const noexcept { return ntheta_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(nr_) * ntheta_; }

  double radius(int ir) const { return radii_.at(static_cast<std::size_t>(ir)); }
  double angle(int itheta) const;
  double weight(int ir) const { return weights_.at(static_cast<std::size_t>(ir)); }
  DiscNode node(int ir, int itheta) const;

  /// Node index of z, or {-1,-1} if z is not a node (relative tolerance 1e-12).
  std::pair<int, int> locate(cplx z) const;

  friend bool operator==(const PolarGrid& a, const PolarGrid& b) {
    return a.nr_ == b.nr_ && a.ntheta_ == b.ntheta_;
  }

 private:
  int nr_;
  int ntheta_;
  std::vector<double> radii_;    // ascending
  std::vector<double> weights_;  // radial weight × r × 2π/ntheta
};

/// Gauss–Legendre nodes and weights on [a, b], ascending.
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Σ w_ij f(node_ij). The integrand sees the full node so sampled data can be
/// looked up by index. Throws kIntegrationDomain on a non-finite value.
cplx integrate_disc(const std::function<cplx(const DiscNode&)>& f, const PolarGrid& grid);

/// Convenience overload for integrands that only need z.
cplx integrate_disc(const std::function<cplx(cplx)>& f, const PolarGrid& grid);

/// Moments ∫∫_Δ f(z) z^m dx dy for m_lo <= m <= m_hi in one sweep over the
/// grid (f is evaluated once per node). m_lo may be negative.
std::vector<cplx> integrate_disc_moments(const std::function<cplx(const DiscNode&)>& f,
                                         const PolarGrid& grid, int m_lo, int m_hi);

/// ∫∫_Δ z^p z̄^q dx dy = π/(p+1) if p == q, else 0.
cplx monomial_disc_integral(int p, int q);

}  // namespace teich
