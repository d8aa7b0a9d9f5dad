#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "teich/quadrature.hpp"
#include "teich/series.hpp"

namespace teich {

/// Polynomial holomorphic quadratic differential φ(z) = Σ h_m z^m.
struct QuadraticDifferential {
  std::vector<cplx> h;

  cplx operator()(cplx z) const;
  cplx coeff(int m) const {
    return m >= 0 && m < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(m)] : cplx{};
  }
  int degree() const;  // -1 for φ = 0
};

class BeltramiSpec;

namespace mu {

/// conj(φ(z)) (1 - |z|²)²
struct Harmonic {
  QuadraticDifferential phi;
};

/// -n z² z̄^{n-1}, n >= 3
struct ExampleFamily {
  int n = 3;
};

/// c z^p z̄^q
struct Monomial {
  cplx c{1.0, 0.0};
  int p = 0;
  int q = 0;
};

/// Values at the nodes of a PolarGrid, row-major over (ir, itheta).
struct Sampled {
  PolarGrid grid;
  std::vector<cplx> values;
};

struct Zero {};

/// Σ weight_i μ_i; lets linearity and the i·μ direction be expressed for any
/// mix of the other variants.
struct Combination {
  std::vector<std::pair<cplx, std::shared_ptr<const BeltramiSpec>>> terms;
};

}  // namespace mu

/// A Beltrami coefficient on the unit disc, used as a tangent direction.
class BeltramiSpec {
 public:
  using Variant = std::variant<mu::Zero, mu::Harmonic, mu::ExampleFamily, mu::Monomial,
                               mu::Sampled, mu::Combination>;

  BeltramiSpec() = default;
  BeltramiSpec(Variant v);  // NOLINT: implicit from any variant

  static BeltramiSpec zero() { return BeltramiSpec(mu::Zero{}); }
  static BeltramiSpec harmonic(QuadraticDifferential phi);
  static BeltramiSpec example_family(int n);
  static BeltramiSpec monomial(cplx c, int p, int q);
  static BeltramiSpec sampled(const PolarGrid& grid, std::vector<cplx> values);

  const Variant& variant() const noexcept { return v_; }

  /// μ at an interior point; Sampled specs require z to be a grid node.
  cplx operator()(cplx z) const;
  /// μ at a quadrature node; Sampled specs use the node index directly.
  cplx at(const DiscNode& node) const;

  /// The defining formula at any z, which extends μ continuously to the
  /// closed disc; nullopt for sampled data.
  std::optional<cplx> closed_form(cplx z) const;

  /// Short human-readable description, used as report provenance.
  std::string label() const;

 private:
  Variant v_;
};

cplx evaluate_mu(const BeltramiSpec& spec, cplx z);

/// μ̃(w) on |w| > 1, defined by μ̃(1/z̄) = conj(μ(z)) z²/z̄².
cplx reflect_mu(const BeltramiSpec& spec, cplx w);

/// c·μ, kept inside the same variant where one exists.
BeltramiSpec scale(const BeltramiSpec& spec, cplx c);

/// α·μ₁ + β·μ₂
BeltramiSpec combine(cplx alpha, const BeltramiSpec& mu1, cplx beta, const BeltramiSpec& mu2);

}  // namespace teich
