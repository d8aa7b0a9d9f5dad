#pragma once

#include "teich/series.hpp"

namespace teich {

/// The explicit quasiconformal family with dilatation t·(-n z² z̄^{n-1}) on
/// the disc:
///   ζ (1 + t/ζ^{n-1})^{-1}   on |ζ| >= 1 (already normalized schlicht),
///   (1/ζ + t ζ̄^n)^{-1}       on |ζ| <= 1.
class ExampleMap {
 public:
  /// Throws kOutOfRange unless n >= 3 and |t| < 1/n.
  ExampleMap(int n, cplx t);

  int n() const noexcept { return n_; }
  cplx t() const noexcept { return t_; }

  cplx exterior(cplx zeta) const;
  cplx interior(cplx zeta) const;

 private:
  int n_;
  cplx t_;
};

inline constexpr double kDilatationInteriorMargin = 1e-2;
inline constexpr double kDefaultDilatationStep = 1e-5;

cplx example_map_eval(const ExampleMap& m, cplx zeta);

/// max |exterior - interior| over `samples` equally spaced points of |ζ| = 1.
double example_branch_mismatch(const ExampleMap& m, int samples = 64);

/// a_{n-1} = -i, a_{1-n} = i, all other modes zero.
FourierField example_expected_fourier(int n, int K);

/// γ_{n-1} = -1, all other γ_k zero.
SchlichtVariation example_expected_cdot(int n, int K);

/// |w_z̄ / w_z - t μ(z)| with Wirtinger derivatives of the interior branch
/// taken by central differences of step h. Requires |z| < 1 - 1e-2 and the
/// stencil to stay inside that disc.
double dilatation_check(const ExampleMap& m, cplx z, double h = kDefaultDilatationStep);

/// c_k(t), 2 <= k <= K, of the exterior branch: ζ Σ_j (-t)^j ζ^{-j(n-1)},
/// so c_{j(n-1)} = (-t)^j and every other c_k vanishes.
SchlichtCoefficients example_finite_t_coefficients(const ExampleMap& m, int K);

}  // namespace teich
