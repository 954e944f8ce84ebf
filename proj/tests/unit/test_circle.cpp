#include <gtest/gtest.h>

#include <cmath>

#include "nctorus/circle.hpp"
#include "nctorus/errors.hpp"

using namespace nctorus;

namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 4.0;

// Benchmark lift written out by hand.
double H(double x) { return x + 0.3 / kTwoPi * std::sin(kTwoPi * x); }
double Hp(double x) { return 1.0 + 0.3 * std::cos(kTwoPi * x); }

}  // namespace

TEST(Circle, RotationIterate) {
  const DiffeoSpec d = DiffeoSpec::rotation(0.3);
  EXPECT_NEAR(iterate_lift(d, 3, 0.0), 1.8, 1e-15);
}

TEST(Circle, ZeroIterateIsIdentity) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  for (double x : {0.0, 0.1, 0.77}) EXPECT_NEAR(iterate_lift(d, 0, x), x, 1e-13);
}

TEST(Circle, BenchmarkTwoFoldComposition) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  EXPECT_NEAR(iterate_lift(d, 2, 0.1), iterate_lift(d, 1, iterate_lift(d, 1, 0.1)), 1e-11);
}

TEST(Circle, InverseConjugator) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const ConjugatorLift& h = d.conjugator();
  for (double y : {0.0, 0.2, 0.5, 0.93}) EXPECT_NEAR(H(h.inverse(y)), y, 1e-13);
  EXPECT_NEAR(h(0.3), H(0.3), 1e-15);
  EXPECT_NEAR(h.derivative(0.3), Hp(0.3), 1e-15);
}

TEST(Circle, RadonNikodymRotationIsOne) {
  const DiffeoSpec d = DiffeoSpec::rotation(0.21);
  for (int n : {-3, 0, 2}) EXPECT_LT((radon_nikodym_values(d, n, 64).array() - 1.0).abs().maxCoeff(), 1e-15);
  EXPECT_LT((radon_nikodym_values(DiffeoSpec::benchmark(), 0, 64).array() - 1.0).abs().maxCoeff(), 1e-13);
}

TEST(Circle, RadonNikodymAtZeroMatchesClosedFormAndFiniteDifference) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const double closed = (1.0 + 0.3 * std::cos(4.0 * M_PI * kGolden)) / 1.3;
  EXPECT_NEAR(radon_nikodym_at(d, 1, 0.0), closed, 1e-12);
  const double h = 1e-6;
  const double fd = (iterate_lift(d, 1, h) - iterate_lift(d, 1, -h)) / (2 * h);
  EXPECT_NEAR(radon_nikodym_at(d, 1, 0.0), fd, 1e-7);
}

TEST(Circle, CocycleAndNormalization) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  for (int m = -4; m <= 4; ++m)
    for (int n = -4; n <= 4; ++n)
      for (double x : {0.0, 0.13, 0.5, 0.71}) {
        EXPECT_NEAR(radon_nikodym_at(d, m + n, x),
                    radon_nikodym_at(d, m, iterate_lift(d, n, x)) * radon_nikodym_at(d, n, x), 1e-9);
        EXPECT_NEAR(iterate_lift(d, m, iterate_lift(d, n, x)), iterate_lift(d, m + n, x), 1e-11);
      }
  for (int n = -8; n <= 8; ++n) EXPECT_NEAR(radon_nikodym_values(d, n, 256).mean(), 1.0, 1e-9);
}

TEST(Circle, GrowthSequence) {
  const GrowthSequence id = growth_sequence(DiffeoSpec::rotation(0.3), 5, 256);
  for (int n = 0; n <= 5; ++n) EXPECT_NEAR(id[n], 1.0, 1e-15);
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const GrowthSequence g = growth_sequence(d, 10, 4096);
  EXPECT_EQ(g[0], 1.0);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_LE(g[n], 13.0 / 7.0 + 1e-9);
    EXPECT_GE(g[n], 1.0);
  }
  EXPECT_NEAR(g[1], growth_sequence(d, 1, 16384)[1], 1e-6);
  // Gamma_1 by brute force over the invariant parametrization u.
  double brute = 0.0;
  for (int j = 0; j < 200000; ++j) {
    const double u = j / 200000.0;
    brute = std::max({brute, Hp(u + 2 * kGolden) / Hp(u), Hp(u - 2 * kGolden) / Hp(u)});
  }
  EXPECT_NEAR(g[1], brute, 1e-8);
  EXPECT_THROW(g[11], OutOfBoxError);
}

TEST(Circle, RotationNumber) {
  EXPECT_NEAR(rotation_number(DiffeoSpec::rotation(0.3), 100), 0.6, 1e-12);
  EXPECT_NEAR(rotation_number(DiffeoSpec::benchmark(), 1000), 2 * kGolden, 1e-10);
  EXPECT_EQ(rotation_number(DiffeoSpec::rotation(0.0, true), 100), 0.0);
}

TEST(Circle, Validation) {
  EXPECT_THROW(ConjugatorLift({0.2}, {}), PositivityError);
  EXPECT_THROW(DiffeoSpec::rotation(0.0), InvalidArgumentError);
  EXPECT_THROW(DiffeoSpec::rotation(0.7), InvalidArgumentError);
  EXPECT_NO_THROW(DiffeoSpec::rotation(0.0, true));
}
