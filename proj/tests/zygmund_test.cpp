#include "teich/zygmund.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "teich/error.hpp"

namespace teich {
namespace {

LineFunction tabulate(double half_width, double spacing, double (*f)(double)) {
  LineFunction F;
  F.x = uniform_line_grid(half_width, spacing);
  for (const double x : F.x) F.values.push_back(f(x));
  return F;
}

FourierField sine_field() {
  FourierField u(8);
  u.set_mode(2, {0.0, -1.0});  // u = 2 sin 2θ
  return u;
}

TEST(Grid, UniformAndDyadic) {
  const auto x = uniform_line_grid(1.0, 0.25);
  ASSERT_EQ(x.size(), 9u);
  EXPECT_EQ(x.front(), -1.0);
  EXPECT_EQ(x[4], 0.0);
  const auto t = dyadic_offsets(0.25, 4.0);
  EXPECT_EQ(t, (std::vector<double>{0.25, 0.5, 1.0, 2.0}));
}

TEST(Cayley, AngleLineMaps) {
  EXPECT_NEAR(line_to_angle(0.0), std::numbers::pi, 1e-15);
  EXPECT_NEAR(angle_to_line(std::numbers::pi / 2), -1.0, 1e-15);
  EXPECT_THROW(angle_to_line(0.0), Error);
  for (const double x : {-7.0, -1.0, 0.3, 12.0}) {
    const double th = line_to_angle(x);
    EXPECT_NEAR(angle_to_line(th), x, 1e-12 * (1 + std::abs(x)));
    const cplx e = std::polar(1.0, th);
    EXPECT_LT(std::abs(e - cplx(x, -1.0) / cplx(x, 1.0)), 1e-15);
  }
}

TEST(Cayley, Examples) {
  const auto x = uniform_line_grid(4.0, 0.5);
  const LineFunction zero = cayley_to_line(FourierField(4), x);
  for (const double v : zero.values) EXPECT_EQ(v, 0.0);

  const LineFunction F = cayley_to_line(sine_field(), x);
  EXPECT_NEAR(F.values[8], 0.0, 1e-14);  // x = 0

  LineFunction G{x, {}};
  for (const double xi : x) G.values.push_back(xi * xi + 1.0);
  for (const double u : cayley_to_circle(G).values) EXPECT_NEAR(u, 2.0, 1e-15);
}

TEST(Cayley, RoundTrip) {
  const auto x = uniform_line_grid(20.0, 0.125);
  const LineFunction F = cayley_to_line(sine_field(), x);
  const CircleSamples u = cayley_to_circle(F);
  const LineFunction back = cayley_to_line(u);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(u.values[i], evaluate_field(sine_field(), u.theta[i]), 1e-12);
    EXPECT_NEAR(back.x[i], x[i], 1e-12 * (1 + std::abs(x[i])));
    EXPECT_NEAR(back.values[i], F.values[i], 1e-12 * (1 + x[i] * x[i]));
  }
}

TEST(Quotient, AffineAndQuadratic) {
  const LineFunction affine = tabulate(8.0, 0.25, [](double x) { return 3.0 * x - 2.0; });
  EXPECT_EQ(zygmund_quotient(affine, dyadic_offsets(0.25, 8.0)), 0.0);

  const LineFunction sq = tabulate(8.0, 0.25, [](double x) { return x * x; });
  EXPECT_EQ(zygmund_quotient(sq, dyadic_offsets(0.25, 8.0)), 8.0);  // 2·T, T = 4
  EXPECT_EQ(zygmund_quotient(sq, std::vector<double>{0.5}), 1.0);
}

TEST(Quotient, HomogeneityAndMonotonicity) {
  LineFunction F = tabulate(10.0, 0.125, [](double x) { return std::abs(x) * std::sin(x); });
  const auto t = dyadic_offsets(0.125, 10.0);
  const double q = zygmund_quotient(F, t);
  // Exact in floating point for power-of-two factors, to rounding otherwise.
  LineFunction G = F;
  for (double& v : G.values) v *= -4.0;
  EXPECT_EQ(zygmund_quotient(G, t), 4.0 * q);
  for (double& v : G.values) v *= -0.625;
  EXPECT_NEAR(zygmund_quotient(G, t), 2.5 * q, 1e-14 * q);
  const std::vector<double> fewer(t.begin(), t.begin() + 2);
  EXPECT_LE(zygmund_quotient(F, fewer), q);
}

TEST(Quotient, GridShapeErrors) {
  LineFunction F = tabulate(2.0, 0.5, [](double x) { return x; });
  try {
    zygmund_quotient(F, std::vector<double>{0.3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGridShape);
  }
  F.x[3] += 0.01;
  EXPECT_THROW(zygmund_quotient(F, std::vector<double>{0.5}), Error);
}

TEST(Normalization, RemovesQuadratics) {
  LineFunction F = tabulate(16.0, 0.25, [](double x) { return 2.0 * x * x - x + 3.0; });
  const auto n = sl2_normalize_line(F);
  EXPECT_NEAR(n.subtracted.alpha, 2.0, 1e-2);
  for (std::size_t i = 0; i < F.x.size(); ++i) {
    EXPECT_LT(std::abs(n.normalized.values[i]) / (F.x[i] * F.x[i] + 1.0), 1e-2);
  }
  EXPECT_EQ(n.normalized.values[64], 0.0);  // x = 0
  EXPECT_NEAR(n.normalized.values[68], 0.0, 1e-12);  // x = 1
  LineFunction off = tabulate(0.9, 0.3, [](double x) { return x; });
  EXPECT_THROW(sl2_normalize_line(off), Error);
}

TEST(CheckSequence, ZeroAndScaling) {
  EXPECT_EQ(zygmund_check_sequence(SchlichtVariation(4)).quotient, 0.0);
  SchlichtVariation g(4);
  g[2] = -1.0;
  const double q = zygmund_check_sequence(g).quotient;
  EXPECT_GT(q, 0.0);
  SchlichtVariation g2(4);
  g2[2] = -2.0;
  EXPECT_NEAR(zygmund_check_sequence(g2).quotient, 2.0 * q, 1e-12 * q);
}

TEST(CheckSequence, StableUnderGridDoubling) {
  SchlichtVariation g(4);
  g[2] = -1.0;
  ZygmundGridOptions coarse;
  ZygmundGridOptions fine;
  fine.spacing = coarse.spacing / 2;
  const double a = zygmund_check_sequence(g, coarse).quotient;
  const double b = zygmund_check_sequence(g, fine).quotient;
  EXPECT_LT(std::abs(a - b) / b, 0.05);
}

}  // namespace
}  // namespace teich
