#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "teich/beltrami.hpp"
#include "teich/error.hpp"
#include "teich/series.hpp"

// First-order Ahlfors–Weill pipeline for harmonic Beltrami coefficients
// μ = t·conj(φ)(1 - |z|²)², t real:
//   v'' = tφv with v₁ = 1 + t g₁, v₂ = z + t g₂,
//   w(ζ) = conj(v₁(1/ζ̄)) / conj(v₂(1/ζ̄)) on |ζ| > 1,
// and the boundary formula ẇ = 2Φ̄z² - 2Φ on |z| = 1 with Φ''' = φ.
//
// Everything is polynomial algebra, so the routines are templates over the
// coefficient field. `cplx` gives the everyday double-precision path;
// `GaussianRational` gives exact results for rational inputs.

namespace teich {

using Rational = boost::multiprecision::cpp_rational;

/// p + qi with p, q arbitrary-precision rationals.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long n) : re(n), im(0) {}  // NOLINT

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    if (d == 0) throw Error(ErrorCode::kDegenerateNormalization, "division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  cplx to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/// Field operations the appendix templates need beyond + - * /.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<cplx> {
  static cplx conj(const cplx& z) { return std::conj(z); }
  static cplx i() { return {0.0, 1.0}; }
  static cplx ratio(long num, long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static double magnitude(const cplx& z) { return std::abs(z); }
  // Relative tolerance for the closed-form assertions in double precision.
  static bool equal(const cplx& a, const cplx& b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  }
};

template <>
struct ScalarOps<GaussianRational> {
  static GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
  static GaussianRational i() { return {0, 1}; }
  static GaussianRational ratio(long num, long den) { return {Rational(num, den), 0}; }
  static double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }
  static bool equal(const GaussianRational& a, const GaussianRational& b) { return a == b; }
};

/// Order-t parts of v₁ and v₂; index j holds the coefficient of z^j.
template <class T>
struct OdeSeriesSolutions {
  std::vector<T> g1;
  std::vector<T> g2;
  std::vector<T> phi;
  int K = 0;
};

namespace appendix_detail {

template <class T>
T coeff_or_zero(std::span<const T> h, int m) {
  return m >= 0 && m < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(m)] : T(0);
}

template <class T>
void require_degree(std::span<const T> h, int K) {
  for (int m = static_cast<int>(h.size()) - 1; m > K - 2; --m) {
    if (!(h[static_cast<std::size_t>(m)] == T(0))) {
      throw Error(ErrorCode::kTruncationInsufficient,
                  "quadratic differential degree " + std::to_string(m) + " exceeds K - 2 = " +
                      std::to_string(K - 2));
    }
  }
}

// c0 + t·c1 modulo t².
template <class T>
struct FirstOrder {
  T c0{0};
  T c1{0};

  friend FirstOrder operator+(const FirstOrder& a, const FirstOrder& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend FirstOrder operator*(const FirstOrder& a, const FirstOrder& b) {
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0};
  }
  FirstOrder inverse() const {
    const T inv = T(1) / c0;
    return {inv, -(c1 * inv * inv)};
  }
};

// Power series in w = 1/ζ with FirstOrder coefficients, truncated at degree n.
template <class T>
using WSeries = std::vector<FirstOrder<T>>;

template <class T>
WSeries<T> multiply(const WSeries<T>& a, const WSeries<T>& b, std::size_t n) {
  WSeries<T> out(n + 1);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

// 1/s for a series with invertible constant term.
template <class T>
WSeries<T> reciprocal(const WSeries<T>& s, std::size_t n) {
  WSeries<T> inv(n + 1);
  const FirstOrder<T> lead_inv = s.at(0).inverse();
  inv[0] = lead_inv;
  for (std::size_t k = 1; k <= n; ++k) {
    FirstOrder<T> acc;
    for (std::size_t j = 1; j <= k && j < s.size(); ++j) acc = acc + s[j] * inv[k - j];
    inv[k] = FirstOrder<T>{-acc.c0, -acc.c1} * lead_inv;
  }
  return inv;
}

template <class T>
std::vector<T> second_derivative(const std::vector<T>& p) {
  std::vector<T> d;
  for (std::size_t j = 2; j < p.size(); ++j) {
    d.push_back(p[j] * T(static_cast<long>(j * (j - 1))));
  }
  return d;
}

}  // namespace appendix_detail

/// g₁ = Σ_{k≥2} h_{k-2} z^k/(k(k-1)), g₂ = Σ_{k≥2} h_{k-2} z^{k+1}/(k(k+1)).
template <class T>
OdeSeriesSolutions<T> ode_series_solutions(std::span<const T> h, int K) {
  using Ops = ScalarOps<T>;
  appendix_detail::require_degree(h, K);
  OdeSeriesSolutions<T> sol;
  sol.K = K;
  sol.phi.assign(h.begin(), h.end());
  sol.g1.assign(static_cast<std::size_t>(K + 1), T(0));
  sol.g2.assign(static_cast<std::size_t>(K + 2), T(0));
  for (int k = 2; k <= K; ++k) {
    const T hk = appendix_detail::coeff_or_zero(h, k - 2);
    sol.g1[static_cast<std::size_t>(k)] = hk * Ops::ratio(1, static_cast<long>(k) * (k - 1));
    sol.g2[static_cast<std::size_t>(k + 1)] = hk * Ops::ratio(1, static_cast<long>(k) * (k + 1));
  }
  return sol;
}

/// Largest coefficient defect of g₁'' = φ and g₂'' = zφ (zero in exact
/// arithmetic).
template <class T>
double ode_identity_defect(const OdeSeriesSolutions<T>& sol) {
  using Ops = ScalarOps<T>;
  const auto d1 = appendix_detail::second_derivative(sol.g1);
  const auto d2 = appendix_detail::second_derivative(sol.g2);
  const std::span<const T> phi(sol.phi);
  double defect = 0.0;
  for (std::size_t m = 0; m < d1.size(); ++m) {
    defect = std::max(defect,
                      Ops::magnitude(d1[m] - appendix_detail::coeff_or_zero(phi, static_cast<int>(m))));
  }
  for (std::size_t m = 0; m < d2.size(); ++m) {
    const T target = m == 0 ? T(0) : appendix_detail::coeff_or_zero(phi, static_cast<int>(m) - 1);
    defect = std::max(defect, Ops::magnitude(d2[m] - target));
  }
  return defect;
}

/// ċ_k(0), 2 <= k <= K (index k; entries 0 and 1 unused), from the
/// first-order expansion of conj(v₁(1/ζ̄))/conj(v₂(1/ζ̄)) in powers of 1/ζ.
/// Throws kNormalizationDefect if the expansion is not of the form
/// ζ(1 + O(ζ⁻²)), and kAppendixInconsistency if a coefficient differs from
/// 2·conj(h_{k-2})/(k³ - k).
template <class T>
std::vector<T> aw_schlicht_variation(std::span<const T> h, int K) {
  using Ops = ScalarOps<T>;
  using appendix_detail::FirstOrder;
  const auto sol = ode_series_solutions(h, K);
  const auto n = static_cast<std::size_t>(K + 1);

  // conj(v(1/ζ̄)) = Σ conj(c_j) w^j with w = 1/ζ, for real t.
  appendix_detail::WSeries<T> num(n + 1);
  appendix_detail::WSeries<T> den(n + 2);
  num[0].c0 = T(1);
  den[1].c0 = T(1);
  for (std::size_t j = 0; j < sol.g1.size() && j <= n; ++j) num[j].c1 = Ops::conj(sol.g1[j]);
  for (std::size_t j = 0; j < sol.g2.size() && j <= n + 1; ++j) den[j].c1 = Ops::conj(sol.g2[j]);

  if (!(den[0].c0 == T(0)) || !(den[0].c1 == T(0))) {
    throw Error(ErrorCode::kNormalizationDefect, "conj(v2(1/ζ̄)) has a constant term");
  }
  // den = w·s, so num/den = ζ·(num/s).
  appendix_detail::WSeries<T> s(den.begin() + 1, den.end());
  const auto q = appendix_detail::multiply(num, appendix_detail::reciprocal(s, n), n);

  auto is_zero = [](const T& x) { return ScalarOps<T>::equal(x, T(0)); };
  if (!ScalarOps<T>::equal(q[0].c0, T(1)) || !is_zero(q[0].c1) || !is_zero(q[1].c0) ||
      !is_zero(q[1].c1)) {
    throw Error(ErrorCode::kNormalizationDefect,
                "expansion is not of the form ζ(1 + c_2/ζ² + ...)");
  }

  std::vector<T> cdot(n, T(0));
  for (int k = 2; k <= K; ++k) {
    const auto& qk = q[static_cast<std::size_t>(k)];
    if (!is_zero(qk.c0)) {
      throw Error(ErrorCode::kNormalizationDefect, "zeroth-order map is not the identity");
    }
    cdot[static_cast<std::size_t>(k)] = qk.c1;
    const long weight = static_cast<long>(k) * k * k - k;
    const T closed = T(2) * Ops::conj(appendix_detail::coeff_or_zero(h, k - 2)) * Ops::ratio(1, weight);
    if (!Ops::equal(qk.c1, closed)) {
      throw Error(ErrorCode::kAppendixInconsistency,
                  "series coefficient for k = " + std::to_string(k) +
                      " differs from 2·conj(h_{k-2})/(k³-k)");
    }
  }
  return cdot;
}

/// Φ with Φ''' = φ and vanishing quadratic part: Φ_{m+3} = h_m/((m+1)(m+2)(m+3)).
template <class T>
std::vector<T> triple_antiderivative(std::span<const T> h) {
  using Ops = ScalarOps<T>;
  std::vector<T> Phi(h.size() + 3, T(0));
  for (std::size_t m = 0; m < h.size(); ++m) {
    const long d = static_cast<long>((m + 1) * (m + 2) * (m + 3));
    Phi[m + 3] = h[m] * Ops::ratio(1, d);
  }
  return Phi;
}

/// Fourier modes a_k, -K <= k <= K (index k + K), of u = ẇ/(iz) with
/// ẇ = 2Φ̄z² - 2Φ on |z| = 1, where conj(z^j) = z^{-j}. The Φ̄'' and Φ̄'
/// terms carry factors of 1 - |z|² and vanish there. Throws
/// kAppendixInconsistency if a mode differs from 2i·h_{k-2}/(k³-k).
template <class T>
std::vector<T> ahlfors_boundary_modes(std::span<const T> h, int K) {
  using Ops = ScalarOps<T>;
  appendix_detail::require_degree(h, K);
  const auto Phi = triple_antiderivative(h);
  std::vector<T> a(static_cast<std::size_t>(2 * K + 1), T(0));
  const T minus_i = -Ops::i();
  auto add = [&](int exponent_of_w_dot, const T& c) {
    // u = -i·z^{-1}·ẇ
    const int k = exponent_of_w_dot - 1;
    if (k >= -K && k <= K) a[static_cast<std::size_t>(k + K)] += minus_i * c;
  };
  for (std::size_t j = 0; j < Phi.size(); ++j) {
    if (Phi[j] == T(0)) continue;
    const int e = static_cast<int>(j);
    add(2 - e, T(2) * Ops::conj(Phi[j]));
    add(e, -(T(2) * Phi[j]));
  }
  for (int k = 2; k <= K; ++k) {
    const long weight = static_cast<long>(k) * k * k - k;
    const T closed = T(2) * Ops::i() * appendix_detail::coeff_or_zero(h, k - 2) * Ops::ratio(1, weight);
    if (!Ops::equal(a[static_cast<std::size_t>(k + K)], closed) ||
        !Ops::equal(a[static_cast<std::size_t>(K - k)], Ops::conj(closed))) {
      throw Error(ErrorCode::kAppendixInconsistency,
                  "boundary mode k = " + std::to_string(k) + " differs from 2i·h_{k-2}/(k³-k)");
    }
  }
  return a;
}

/// max_k |ċ_k(0) - i·conj(a_k)| between the two appendix routes.
template <class T>
double appendix_defect(std::span<const T> h, int K) {
  using Ops = ScalarOps<T>;
  const auto cdot = aw_schlicht_variation(h, K);
  const auto a = ahlfors_boundary_modes(h, K);
  double defect = 0.0;
  for (int k = 2; k <= K; ++k) {
    const T rhs = Ops::i() * Ops::conj(a[static_cast<std::size_t>(k + K)]);
    defect = std::max(defect, Ops::magnitude(cdot[static_cast<std::size_t>(k)] - rhs));
  }
  return defect;
}

// Double-precision entry points on the library's value types.

OdeSeriesSolutions<cplx> ode_series_solutions(const QuadraticDifferential& phi, int K);
SchlichtVariation aw_schlicht_variation(const QuadraticDifferential& phi, int K);
std::vector<cplx> triple_antiderivative(const QuadraticDifferential& phi);
FourierField ahlfors_boundary_field(const QuadraticDifferential& phi, int K);

struct AppendixReport {
  double defect = 0.0;       // max_k |ċ_k(0) - i·conj(a_k)|
  double ode_defect = 0.0;   // g₁'' = φ, g₂'' = zφ
  double closed_form_defect = 0.0;  // boundary field vs 2i h_{k-2}/(k³-k)
};

AppendixReport verify_appendix(const QuadraticDifferential& phi, int K);

}  // namespace teich
