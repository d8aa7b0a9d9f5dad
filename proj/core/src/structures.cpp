#include "teich/structures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "teich/error.hpp"
#include "teich/variation.hpp"

namespace teich {
namespace {

constexpr cplx kI{0.0, 1.0};

double cubic_weight(int k) { return static_cast<double>(k) * k * k - k; }

void require_same_truncation(int K, int a, int b) {
  if (K > a || K > b) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "pairing order " + std::to_string(K) + " exceeds operand truncation");
  }
}

}  // namespace

FourierField hilbert_transform(const FourierField& f) {
  std::vector<cplx> dense(f.dense().begin(), f.dense().end());
  for (int k = -f.K(); k <= f.K(); ++k) {
    auto& a = dense[static_cast<std::size_t>(k + f.K())];
    if (k > 0) {
      a *= -kI;
    } else if (k < 0) {
      a *= kI;
    } else {
      a = {};
    }
  }
  return FourierField::from_coefficients(f.K(), std::move(dense));
}

FourierField welding_derivative(const SchlichtVariation& gamma) {
  FourierField field(gamma.K());
  for (int k = 2; k <= gamma.K(); ++k) field.set_mode(k, kI * std::conj(gamma[k]));
  return field;
}

SchlichtVariation welding_derivative_inverse(const FourierField& f) {
  SchlichtVariation gamma(std::max(f.K(), 1));
  for (int k = 2; k <= f.K(); ++k) gamma[k] = kI * std::conj(f.coeff(k));
  return gamma;
}

double wp_pairing_fields(const FourierField& V, const FourierField& W, int K) {
  require_same_truncation(K, V.K(), W.K());
  double sum = 0.0;
  for (int k = 2; k <= K; ++k) sum += (V.coeff(k) * std::conj(W.coeff(k))).real() * cubic_weight(k);
  return sum;
}

double wp_pairing_schlicht(const SchlichtVariation& gamma, const SchlichtVariation& delta, int K,
                           WpSignConvention sign) {
  require_same_truncation(K, gamma.K(), delta.K());
  double sum = 0.0;
  for (int k = 2; k <= K; ++k) sum += (std::conj(gamma[k]) * delta[k]).real() * cubic_weight(k);
  return sign == WpSignConvention::kLiteral ? -sum : sum;
}

PeriodVariationMatrix period_variation(const BeltramiSpec& mu, double t, int R, int S, int K,
                                       const PolarGrid& grid) {
  if (R < 1 || S < 1) throw Error(ErrorCode::kOutOfRange, "R and S must be >= 1");
  if (R + S > K) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "R + S = " + std::to_string(R + S) + " exceeds K = " + std::to_string(K));
  }
  const FourierField a = fourier_variation(mu, K, grid);
  const SchlichtVariation gamma = schlicht_variation(mu, K, grid);

  PeriodVariationMatrix pi{R, S, t, {}, {}, 0.0};
  pi.entries.reserve(static_cast<std::size_t>(R * S));
  pi.cross_entries.reserve(static_cast<std::size_t>(R * S));
  for (int r = 1; r <= R; ++r) {
    for (int s = 1; s <= S; ++s) {
      const double root = std::sqrt(static_cast<double>(r) * s);
      const cplx entry = t * kI * root * a.coeff(-(r + s));
      const cplx cross = root * t * gamma[r + s];
      pi.entries.push_back(entry);
      pi.cross_entries.push_back(cross);
      pi.max_discrepancy = std::max(pi.max_discrepancy, std::abs(entry - cross));
    }
  }
  return pi;
}

}  // namespace teich
