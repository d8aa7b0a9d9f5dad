#include "teich/structures.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "teich/error.hpp"
#include "teich/variation.hpp"

namespace teich {
namespace {

constexpr cplx kI{0.0, 1.0};

FourierField random_field(std::mt19937_64& rng, int K) {
  std::normal_distribution<double> g;
  FourierField f(K);
  for (int k = 2; k <= K; ++k) f.set_mode(k, {g(rng), g(rng)});
  return f;
}

TEST(Hilbert, Examples) {
  FourierField f(4);
  f.set_mode(2, 1.0);
  const FourierField j = hilbert_transform(f);
  EXPECT_EQ(j.coeff(2), -kI);
  EXPECT_EQ(j.coeff(-2), kI);
  EXPECT_EQ(hilbert_transform(FourierField(4)), FourierField(4));
}

TEST(Hilbert, SquaresToMinusIdentity) {
  std::mt19937_64 rng(1);
  const FourierField f = random_field(rng, 12);
  const FourierField jj = hilbert_transform(hilbert_transform(f));
  for (int k = -12; k <= 12; ++k) EXPECT_EQ(jj.coeff(k), -f.coeff(k));
}

TEST(Hilbert, MatchesMultiplicationOfMuByI) {
  const PolarGrid grid;
  std::mt19937_64 rng(2);
  for (const auto& spec : {BeltramiSpec::example_family(4),
                           BeltramiSpec::harmonic(oracle::random_phi(rng, 6)),
                           BeltramiSpec::monomial({0.5, 0.5}, 1, 4)}) {
    const FourierField lhs = fourier_variation(scale(spec, kI), 16, grid);
    const FourierField rhs = hilbert_transform(fourier_variation(spec, 16, grid));
    for (int k = -16; k <= 16; ++k) EXPECT_LT(std::abs(lhs.coeff(k) - rhs.coeff(k)), 1e-10);
  }
}

TEST(Welding, Examples) {
  SchlichtVariation g(4);
  g[2] = -1.0;
  const FourierField f = welding_derivative(g);
  EXPECT_EQ(f.coeff(2), -kI);
  EXPECT_EQ(f.coeff(-2), kI);
  EXPECT_EQ(welding_derivative(SchlichtVariation(4)), FourierField(4));
}

TEST(Welding, RoundTripsExactly) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  SchlichtVariation g(10);
  for (int k = 2; k <= 10; ++k) g[k] = {n(rng), n(rng)};
  EXPECT_EQ(welding_derivative_inverse(welding_derivative(g)), g);
}

TEST(Welding, AgreesWithFourierVariation) {
  const PolarGrid grid;
  const auto spec = BeltramiSpec::harmonic({{{1.0, -0.5}, {0.25, 0.0}, {0.0, 2.0}}});
  const FourierField a = welding_derivative(schlicht_variation(spec, 16, grid));
  const FourierField b = fourier_variation(spec, 16, grid);
  for (int k = -16; k <= 16; ++k) EXPECT_LT(std::abs(a.coeff(k) - b.coeff(k)), 1e-10);
}

TEST(WeilPetersson, FieldExamples) {
  FourierField a2(4);
  a2.set_mode(2, 1.0);
  FourierField a3(4);
  a3.set_mode(3, 1.0);
  EXPECT_EQ(wp_pairing_fields(a2, a2, 4), 6.0);
  EXPECT_EQ(wp_pairing_fields(a2, a3, 4), 0.0);
  EXPECT_EQ(wp_pairing_fields(a3, a3, 4), 24.0);
}

TEST(WeilPetersson, SchlichtExamplesAndSign) {
  SchlichtVariation g(4);
  g[2] = 1.0;
  EXPECT_EQ(wp_pairing_schlicht(g, g, 4), 6.0);
  EXPECT_EQ(wp_pairing_schlicht(g, g, 4, WpSignConvention::kLiteral), -6.0);
}

TEST(WeilPetersson, PositiveSymmetricAndIsometric) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 20; ++trial) {
    const FourierField V = random_field(rng, 10);
    const FourierField W = random_field(rng, 10);
    EXPECT_GT(wp_pairing_fields(V, V, 10), 0.0);
    EXPECT_EQ(wp_pairing_fields(V, W, 10), wp_pairing_fields(W, V, 10));

    SchlichtVariation g(10), d(10);
    for (int k = 2; k <= 10; ++k) {
      g[k] = {n(rng), n(rng)};
      d[k] = {n(rng), n(rng)};
    }
    EXPECT_EQ(wp_pairing_schlicht(g, d, 10),
              wp_pairing_fields(welding_derivative(g), welding_derivative(d), 10));
  }
}

TEST(PeriodVariation, ExampleFamilyEntry) {
  const PolarGrid grid;
  const auto p = period_variation(BeltramiSpec::example_family(3), 0.01, 1, 1, 8, grid);
  EXPECT_NEAR(std::abs(p(1, 1) + 0.01), 0.0, 1e-12);
  EXPECT_LT(p.max_discrepancy, 1e-12);
}

TEST(PeriodVariation, ZeroAndSymmetry) {
  const PolarGrid grid;
  const auto z = period_variation(BeltramiSpec::zero(), 0.01, 2, 2, 8, grid);
  for (const cplx e : z.entries) EXPECT_EQ(e, cplx{});
  const auto p = period_variation(BeltramiSpec::example_family(4), 0.05, 3, 3, 8, grid);
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) EXPECT_EQ(p(r, s), p(s, r));
  }
  EXPECT_LT(p.max_discrepancy, 1e-10);
}

TEST(PeriodVariation, TruncationError) {
  const PolarGrid grid;
  try {
    period_variation(BeltramiSpec::example_family(3), 0.01, 5, 5, 8, grid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncationInsufficient);
  }
}

}  // namespace
}  // namespace teich
