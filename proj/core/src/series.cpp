#include "teich/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "teich/error.hpp"

namespace teich {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kTruncationInsufficient: return "truncation-insufficient";
    case ErrorCode::kInconsistentField: return "inconsistent-field";
    case ErrorCode::kDegenerateNormalization: return "degenerate-normalization";
    case ErrorCode::kIntegrationDomain: return "integration-domain";
    case ErrorCode::kOutsideDomain: return "outside-domain";
    case ErrorCode::kNoInterpolation: return "no-interpolation";
    case ErrorCode::kSingularNode: return "singular-node";
    case ErrorCode::kTooCloseToBoundary: return "too-close-to-boundary";
    case ErrorCode::kGridShape: return "grid-shape";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kStepTooLarge: return "step-too-large";
    case ErrorCode::kNormalizationDefect: return "normalization-defect";
    case ErrorCode::kAppendixInconsistency: return "appendix-inconsistency";
    case ErrorCode::kInvalidConfig: return "invalid-config";
  }
  return "unknown";
}

FourierField::FourierField(int K) : K_(K), coeffs_(static_cast<std::size_t>(2 * K + 1)) {
  if (K < 0) throw Error(ErrorCode::kTruncationInsufficient, "negative truncation order");
}

FourierField FourierField::from_coefficients(int K, std::vector<cplx> dense) {
  FourierField f(K);
  if (dense.size() != f.coeffs_.size()) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "expected " + std::to_string(f.coeffs_.size()) + " coefficients, got " +
                    std::to_string(dense.size()));
  }
  f.coeffs_ = std::move(dense);
  return f;
}

cplx FourierField::coeff(int k) const {
  if (k < -K_ || k > K_) return {};
  return coeffs_[static_cast<std::size_t>(k + K_)];
}

void FourierField::set_mode(int k, cplx a_k) {
  if (k < -K_ || k > K_) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "mode " + std::to_string(k) + " beyond K = " + std::to_string(K_));
  }
  if (k == 0) {
    coeffs_[static_cast<std::size_t>(K_)] = {a_k.real(), 0.0};
    return;
  }
  coeffs_[static_cast<std::size_t>(k + K_)] = a_k;
  coeffs_[static_cast<std::size_t>(-k + K_)] = std::conj(a_k);
}

double FourierField::reality_defect() const noexcept {
  double defect = 0.0;
  for (int k = 0; k <= K_; ++k) {
    defect = std::max(defect, std::abs(coeffs_[static_cast<std::size_t>(K_ - k)] -
                                       std::conj(coeffs_[static_cast<std::size_t>(K_ + k)])));
  }
  return defect;
}

namespace detail {

IndexedFromTwo::IndexedFromTwo(int K) : IndexedFromTwo(K, std::vector<cplx>(K >= 2 ? K - 1 : 0)) {}

IndexedFromTwo::IndexedFromTwo(int K, std::vector<cplx> values) : K_(K), values_(std::move(values)) {
  if (K < 1) throw Error(ErrorCode::kTruncationInsufficient, "truncation order must be >= 1");
  if (values_.size() != static_cast<std::size_t>(K - 1)) {
    throw Error(ErrorCode::kTruncationInsufficient, "sequence length must be K - 1");
  }
}

cplx IndexedFromTwo::operator[](int k) const {
  if (k < 2 || k > K_) return {};
  return values_[static_cast<std::size_t>(k - 2)];
}

cplx& IndexedFromTwo::operator[](int k) {
  if (k < 2 || k > K_) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "index " + std::to_string(k) + " outside [2, " + std::to_string(K_) + "]");
  }
  return values_[static_cast<std::size_t>(k - 2)];
}

}  // namespace detail

FourierField fourier_from_samples(std::span<const double> samples, int K) {
  const auto N = static_cast<long>(samples.size());
  if (K < 0 || N < 4L * K + 2) {
    throw Error(ErrorCode::kTruncationInsufficient,
                "need at least 4K + 2 = " + std::to_string(4L * K + 2) + " samples, got " +
                    std::to_string(N));
  }
  FourierField f(K);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(N);
  for (int k = 0; k <= K; ++k) {
    cplx acc{};
    for (long j = 0; j < N; ++j) {
      // Reduce k*j mod N so the phase stays accurate for large grids.
      const double phase = step * static_cast<double>((static_cast<long>(k) * j) % N);
      acc += samples[static_cast<std::size_t>(j)] * cplx(std::cos(phase), -std::sin(phase));
    }
    f.set_mode(k, acc / static_cast<double>(N));
  }
  return f;
}

double evaluate_field(const FourierField& f, double theta, double tol) {
  if (f.reality_defect() > tol) {
    throw Error(ErrorCode::kInconsistentField,
                "a_{-k} != conj(a_k), defect " + std::to_string(f.reality_defect()));
  }
  cplx sum = f.coeff(0);
  for (int k = 1; k <= f.K(); ++k) {
    const cplx e = std::polar(1.0, k * theta);
    sum += f.coeff(k) * e + f.coeff(-k) * std::conj(e);
  }
  if (std::abs(sum.imag()) > tol * std::max(1.0, std::abs(sum.real()))) {
    throw Error(ErrorCode::kInconsistentField, "field value has imaginary part " +
                                                   std::to_string(sum.imag()));
  }
  return sum.real();
}

FourierField sl2_normalize(const FourierField& f) {
  std::vector<cplx> dense(f.dense().begin(), f.dense().end());
  for (int k = -1; k <= 1; ++k) {
    if (k >= -f.K() && k <= f.K()) dense[static_cast<std::size_t>(k + f.K())] = {};
  }
  return FourierField::from_coefficients(f.K(), std::move(dense));
}

SchlichtCoefficients normalize_schlicht(const RawSchlichtCoefficients& raw) {
  if (raw.a == cplx{}) {
    throw Error(ErrorCode::kDegenerateNormalization, "leading coefficient a vanishes");
  }
  const int K = std::max(1, static_cast<int>(raw.b.size()));
  SchlichtCoefficients c(K);
  for (int k = 2; k <= static_cast<int>(raw.b.size()); ++k) {
    c[k] = raw.b[static_cast<std::size_t>(k - 1)] / raw.a;
  }
  return c;
}

}  // namespace teich
