#pragma once

#include <complex>
#include <span>
#include <vector>

namespace teich {

using cplx = std::complex<double>;

inline constexpr int kDefaultTruncation = 32;

/// Truncated Fourier coefficients a_k, |k| <= K, of a real vector field
/// u(e^{iθ}) ∂/∂θ on the circle, u(e^{iθ}) = Σ a_k e^{ikθ}.
///
/// Coefficients are stored densely. `set_mode` writes a_k together with
/// a_{-k} = conj(a_k) so fields built through it are real by construction;
/// `from_coefficients` accepts arbitrary data and leaves the reality check to
/// consumers such as evaluate_field.
class FourierField {
 public:
  FourierField() = default;
  explicit FourierField(int K);

  static FourierField from_coefficients(int K, std::vector<cplx> dense);

  int K() const noexcept { return K_; }
  cplx coeff(int k) const;
  void set_mode(int k, cplx a_k);

  std::span<const cplx> dense() const noexcept { return coeffs_; }

  /// max_k |a_{-k} - conj(a_k)|
  double reality_defect() const noexcept;

  friend bool operator==(const FourierField&, const FourierField&) = default;

 private:
  int K_ = 0;
  std::vector<cplx> coeffs_;  // index k + K
};

namespace detail {

// Complex sequence indexed by k in [2, K].
class IndexedFromTwo {
 public:
  IndexedFromTwo() = default;
  explicit IndexedFromTwo(int K);
  IndexedFromTwo(int K, std::vector<cplx> values);

  int K() const noexcept { return K_; }
  cplx operator[](int k) const;
  cplx& operator[](int k);
  std::span<const cplx> values() const noexcept { return values_; }

  friend bool operator==(const IndexedFromTwo&, const IndexedFromTwo&) = default;

 private:
  int K_ = 1;
  std::vector<cplx> values_;
};

}  // namespace detail

/// First variations γ_k = ċ_k(0), 2 <= k <= K, of the coefficients of a
/// normalized schlicht family F(ζ) = ζ(1 + c_2/ζ² + c_3/ζ³ + ...).
class SchlichtVariation : public detail::IndexedFromTwo {
 public:
  using IndexedFromTwo::IndexedFromTwo;
  friend bool operator==(const SchlichtVariation&, const SchlichtVariation&) = default;
};

/// Normalized coefficients c_k, 2 <= k <= K, at a fixed parameter value.
class SchlichtCoefficients : public detail::IndexedFromTwo {
 public:
  using IndexedFromTwo::IndexedFromTwo;
};

/// f(ζ) = ζ(a + b_1/ζ + b_2/ζ² + ...); `b` holds b_1..b_K.
struct RawSchlichtCoefficients {
  cplx a{1.0, 0.0};
  std::vector<cplx> b;
};

/// Fourier coefficients of u from N uniform samples u(2πj/N). Requires
/// N >= 4K + 2.
FourierField fourier_from_samples(std::span<const double> samples, int K);

/// Σ a_k e^{ikθ}; throws kInconsistentField when the imaginary part (or the
/// reality defect) exceeds `tol`.
double evaluate_field(const FourierField& f, double theta, double tol = 1e-10);

/// Zeroes the Möbius modes a_{-1}, a_0, a_1.
FourierField sl2_normalize(const FourierField& f);

/// c_k = b_k / a for k >= 2.
SchlichtCoefficients normalize_schlicht(const RawSchlichtCoefficients& raw);

}  // namespace teich
