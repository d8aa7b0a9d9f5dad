#pragma once

#include <span>
#include <vector>

#include "teich/series.hpp"

namespace teich {

/// Real function F sampled at points x_i of the real line.
struct LineFunction {
  std::vector<double> x;
  std::vector<double> values;
};

/// Real field u sampled at angles θ_i of the unit circle.
struct CircleSamples {
  std::vector<double> theta;
  std::vector<double> values;
};

/// Grid parameters for the line-side estimator. The default grid is uniform
/// on [-half_width, half_width]; an empty t_set means dyadic offsets
/// {h, 2h, 4h, ...} up to half_width / 2.
struct ZygmundGridOptions {
  double half_width = 50.0;
  double spacing = 1.0 / 16.0;
  std::vector<double> t_set;
};

/// Real quadratic q(x) = αx² + βx + γ subtracted by sl2_normalize_line.
struct LineQuadratic {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator()(double x) const { return (alpha * x + beta) * x + gamma; }
};

struct Sl2LineNormalization {
  LineFunction normalized;
  LineQuadratic subtracted;
};

struct ZygmundEstimate {
  double quotient = 0.0;  // lower bound for the Zygmund norm of the normalized F
  LineQuadratic subtracted;
  // Normalization diagnostics on the raw F: |F(0)|, |F(1)| and the largest
  // |F(x)|/(x²+1) at the two grid ends.
  double f_at_zero = 0.0;
  double f_at_one = 0.0;
  double end_decay = 0.0;
};

std::vector<double> uniform_line_grid(double half_width, double spacing);
std::vector<double> dyadic_offsets(double spacing, double half_width);

/// Boundary point of the Cayley identification: x = -cot(θ/2), i.e.
/// e^{iθ} = (x - i)/(x + i).
double line_to_angle(double x);
double angle_to_line(double theta);

/// F(x) = ½(x² + 1) u(e^{iθ(x)}).
LineFunction cayley_to_line(const FourierField& u, std::span<const double> x_grid);
LineFunction cayley_to_line(const CircleSamples& u);

/// u(e^{iθ}) = 2F(x)/(x² + 1).
CircleSamples cayley_to_circle(const LineFunction& F);

/// sup over grid points x and t ∈ t_set of |F(x+t) + F(x-t) - 2F(x)| / |t|.
/// The grid must be uniform and every t a positive multiple of its spacing.
double zygmund_quotient(const LineFunction& F, std::span<const double> t_set);

/// Subtracts the real quadratic that matches F at x = 0 and x = 1 and whose
/// leading coefficient absorbs the average growth F(x)/(x²+1) at the grid ends.
/// The grid must contain 0 and 1.
Sl2LineNormalization sl2_normalize_line(const LineFunction& F);

/// Builds u = welding_derivative(γ) on the circle, transfers it to the line,
/// normalizes and reports the Zygmund quotient. Finite sequences always give
/// smooth fields, so this is a diagnostic, never a membership decision.
ZygmundEstimate zygmund_check_sequence(const SchlichtVariation& gamma,
                                       const ZygmundGridOptions& options = {});

}  // namespace teich
