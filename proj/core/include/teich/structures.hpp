#pragma once

#include <vector>

#include "teich/beltrami.hpp"
#include "teich/quadrature.hpp"
#include "teich/series.hpp"

namespace teich {

/// Sign used by wp_pairing_schlicht.
enum class WpSignConvention {
  /// +Re Σ conj(γ_k) δ_k (k³-k): agrees with the field pairing under welding.
  kTheorem1Consistent,
  /// -Re Σ conj(γ_k) δ_k (k³-k), the opposite sign, as the formula is often quoted.
  kLiteral,
};

/// First-order period-matrix variation Π_rs, 1 <= r <= R, 1 <= s <= S.
struct PeriodVariationMatrix {
  int R = 0;
  int S = 0;
  double t = 0.0;
  std::vector<cplx> entries;        // t·i√(rs)·a_{-(r+s)}, row-major
  std::vector<cplx> cross_entries;  // √(rs)·t·γ_{r+s}, row-major
  double max_discrepancy = 0.0;     // max |entries - cross_entries|

  cplx operator()(int r, int s) const {
    return entries.at(static_cast<std::size_t>((r - 1) * S + (s - 1)));
  }
  cplx cross(int r, int s) const {
    return cross_entries.at(static_cast<std::size_t>((r - 1) * S + (s - 1)));
  }
};

/// Conjugate-series map a_k -> -i·sgn(k)·a_k (the almost complex structure).
FourierField hilbert_transform(const FourierField& f);

/// Boundary field of the welding derivative: a_k = i·conj(γ_k), k >= 2.
FourierField welding_derivative(const SchlichtVariation& gamma);

/// γ_k = i·conj(a_k), k >= 2.
SchlichtVariation welding_derivative_inverse(const FourierField& f);

/// Re Σ_{k=2}^{K} a_k conj(b_k) (k³ - k)
double wp_pairing_fields(const FourierField& V, const FourierField& W, int K);

double wp_pairing_schlicht(const SchlichtVariation& gamma, const SchlichtVariation& delta, int K,
                           WpSignConvention sign = WpSignConvention::kTheorem1Consistent);

/// Π([tμ])_rs to first order, with the principal branch √(-rs) = i√(rs), and
/// the equivalent power-series form for comparison. Requires R + S <= K.
PeriodVariationMatrix period_variation(const BeltramiSpec& mu, double t, int R, int S, int K,
                                       const PolarGrid& grid);

}  // namespace teich
