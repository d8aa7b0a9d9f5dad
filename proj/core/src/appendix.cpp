#include "teich/appendix.hpp"

#include "teich/variation.hpp"

namespace teich {

OdeSeriesSolutions<cplx> ode_series_solutions(const QuadraticDifferential& phi, int K) {
  return ode_series_solutions<cplx>(std::span<const cplx>(phi.h), K);
}

SchlichtVariation aw_schlicht_variation(const QuadraticDifferential& phi, int K) {
  const auto cdot = aw_schlicht_variation<cplx>(std::span<const cplx>(phi.h), K);
  SchlichtVariation gamma(K);
  for (int k = 2; k <= K; ++k) gamma[k] = cdot[static_cast<std::size_t>(k)];
  return gamma;
}

std::vector<cplx> triple_antiderivative(const QuadraticDifferential& phi) {
  return triple_antiderivative<cplx>(std::span<const cplx>(phi.h));
}

FourierField ahlfors_boundary_field(const QuadraticDifferential& phi, int K) {
  return FourierField::from_coefficients(
      K, ahlfors_boundary_modes<cplx>(std::span<const cplx>(phi.h), K));
}

AppendixReport verify_appendix(const QuadraticDifferential& phi, int K) {
  const std::span<const cplx> h(phi.h);
  AppendixReport report;
  report.defect = appendix_defect<cplx>(h, K);
  report.ode_defect = ode_identity_defect(ode_series_solutions<cplx>(h, K));
  const FourierField boundary = ahlfors_boundary_field(phi, K);
  const FourierField closed = harmonic_fourier_closed_form(phi, K);
  for (int k = -K; k <= K; ++k) {
    report.closed_form_defect =
        std::max(report.closed_form_defect, std::abs(boundary.coeff(k) - closed.coeff(k)));
  }
  return report;
}

}  // namespace teich
