#include "teich/zygmund.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "teich/error.hpp"
#include "teich/structures.hpp"

namespace teich {
namespace {

constexpr double kGridTol = 1e-9;

// Index of x in an ascending grid, or -1.
long find_node(const std::vector<double>& x, double target) {
  const auto it = std::lower_bound(x.begin(), x.end(), target - kGridTol);
  if (it == x.end() || std::abs(*it - target) > kGridTol) return -1;
  return it - x.begin();
}

}  // namespace

std::vector<double> uniform_line_grid(double half_width, double spacing) {
  if (!(spacing > 0.0) || !(half_width > 0.0)) {
    throw Error(ErrorCode::kGridShape, "line grid needs positive spacing and half width");
  }
  const auto steps = std::lround(half_width / spacing);
  if (std::abs(static_cast<double>(steps) * spacing - half_width) > kGridTol * half_width) {
    throw Error(ErrorCode::kGridShape, "spacing must divide the half width");
  }
  std::vector<double> x(static_cast<std::size_t>(2 * steps + 1));
  for (long i = -steps; i <= steps; ++i) {
    x[static_cast<std::size_t>(i + steps)] = static_cast<double>(i) * spacing;
  }
  return x;
}

std::vector<double> dyadic_offsets(double spacing, double half_width) {
  std::vector<double> t;
  for (double s = spacing; s <= 0.5 * half_width * (1.0 + kGridTol); s *= 2.0) t.push_back(s);
  return t;
}

double line_to_angle(double x) {
  const cplx e = cplx(x, -1.0) / cplx(x, 1.0);
  double theta = std::arg(e);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  return theta;
}

double angle_to_line(double theta) {
  const double half = 0.5 * theta;
  const double s = std::sin(half);
  if (std::abs(s) < 1e-15) {
    throw Error(ErrorCode::kOutOfRange, "θ = 0 corresponds to the point at infinity");
  }
  return -std::cos(half) / s;
}

LineFunction cayley_to_line(const FourierField& u, std::span<const double> x_grid) {
  LineFunction F{{x_grid.begin(), x_grid.end()}, {}};
  F.values.reserve(F.x.size());
  for (const double x : F.x) {
    F.values.push_back(0.5 * (x * x + 1.0) * evaluate_field(u, line_to_angle(x)));
  }
  return F;
}

LineFunction cayley_to_line(const CircleSamples& u) {
  if (u.theta.size() != u.values.size()) {
    throw Error(ErrorCode::kGridShape, "circle samples: theta/value length mismatch");
  }
  LineFunction F;
  F.x.reserve(u.theta.size());
  F.values.reserve(u.theta.size());
  for (std::size_t i = 0; i < u.theta.size(); ++i) {
    const double x = angle_to_line(u.theta[i]);
    F.x.push_back(x);
    F.values.push_back(0.5 * (x * x + 1.0) * u.values[i]);
  }
  return F;
}

CircleSamples cayley_to_circle(const LineFunction& F) {
  if (F.x.size() != F.values.size()) {
    throw Error(ErrorCode::kGridShape, "line function: x/value length mismatch");
  }
  CircleSamples u;
  u.theta.reserve(F.x.size());
  u.values.reserve(F.x.size());
  for (std::size_t i = 0; i < F.x.size(); ++i) {
    const double x = F.x[i];
    u.theta.push_back(line_to_angle(x));
    u.values.push_back(2.0 * F.values[i] / (x * x + 1.0));
  }
  return u;
}

double zygmund_quotient(const LineFunction& F, std::span<const double> t_set) {
  const std::size_t n = F.x.size();
  if (n != F.values.size() || n < 3) {
    throw Error(ErrorCode::kGridShape, "line function needs at least 3 matched samples");
  }
  const double h = F.x[1] - F.x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((F.x[i] - F.x[i - 1]) - h) > kGridTol * std::max(1.0, std::abs(h))) {
      throw Error(ErrorCode::kGridShape, "second-difference scan needs a uniform grid");
    }
  }
  double best = 0.0;
  for (const double t : t_set) {
    const double steps_real = t / h;
    const auto s = static_cast<std::size_t>(std::llround(steps_real));
    if (!(t > 0.0) || s == 0 || std::abs(steps_real - static_cast<double>(s)) > kGridTol * steps_real) {
      throw Error(ErrorCode::kGridShape,
                  "offset t = " + std::to_string(t) + " is not a positive multiple of the spacing");
    }
    if (2 * s >= n) {
      throw Error(ErrorCode::kGridShape,
                  "offset t = " + std::to_string(t) + " leaves no x with x ± t on the grid");
    }
    for (std::size_t i = s; i + s < n; ++i) {
      const double second = F.values[i + s] + F.values[i - s] - 2.0 * F.values[i];
      best = std::max(best, std::abs(second) / t);
    }
  }
  return best;
}

Sl2LineNormalization sl2_normalize_line(const LineFunction& F) {
  const long i0 = find_node(F.x, 0.0);
  const long i1 = find_node(F.x, 1.0);
  if (i0 < 0 || i1 < 0) throw Error(ErrorCode::kGridShape, "line grid must contain 0 and 1");
  const double lo = F.x.front();
  const double hi = F.x.back();

  LineQuadratic q;
  q.alpha = 0.5 * (F.values.front() / (lo * lo + 1.0) + F.values.back() / (hi * hi + 1.0));
  q.gamma = F.values[static_cast<std::size_t>(i0)];
  q.beta = F.values[static_cast<std::size_t>(i1)] - q.alpha - q.gamma;

  Sl2LineNormalization out{F, q};
  for (std::size_t i = 0; i < F.x.size(); ++i) out.normalized.values[i] -= q(F.x[i]);
  return out;
}

ZygmundEstimate zygmund_check_sequence(const SchlichtVariation& gamma,
                                       const ZygmundGridOptions& options) {
  const FourierField u = welding_derivative(gamma);
  const auto x = uniform_line_grid(options.half_width, options.spacing);
  const LineFunction F = cayley_to_line(u, x);
  const auto t_set = options.t_set.empty() ? dyadic_offsets(options.spacing, options.half_width)
                                           : options.t_set;

  const Sl2LineNormalization norm = sl2_normalize_line(F);
  ZygmundEstimate est;
  const auto i0 = static_cast<std::size_t>(find_node(F.x, 0.0));
  const auto i1 = static_cast<std::size_t>(find_node(F.x, 1.0));
  est.f_at_zero = std::abs(F.values[i0]);
  est.f_at_one = std::abs(F.values[i1]);
  const double lo = F.x.front();
  const double hi = F.x.back();
  est.end_decay = std::max(std::abs(F.values.front()) / (lo * lo + 1.0),
                           std::abs(F.values.back()) / (hi * hi + 1.0));

  est.subtracted = norm.subtracted;
  est.quotient = zygmund_quotient(norm.normalized, t_set);
  return est;
}

}  // namespace teich
