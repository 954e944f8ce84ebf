#include <gtest/gtest.h>

#include <random>

#include "nctorus/errors.hpp"
#include "nctorus/gns.hpp"

using namespace nctorus;

namespace {
const double kGolden = (std::sqrt(5.0) - 1.0) / 4.0;
const TruncationBox kBox(16, 16, 256);
}  // namespace

TEST(Gns, BoxValidation) {
  EXPECT_THROW(TruncationBox(4, 16, 64), GridTooSmallError);
  EXPECT_EQ(TruncationBox::with_default_grid(4, 16).G, 256);
}

TEST(Gns, IdentityRepresentation) {
  const GnsOperator I = represent(WeylElement::identity(kGolden), DiffeoSpec::benchmark(), kBox);
  std::mt19937_64 rng(7);
  const GnsVector x = random_gns_vector(kBox, 16, 16, rng);
  EXPECT_LT((I.apply(x) - x).norm(), 1e-13);
  for (int n = -kBox.K; n <= kBox.K; ++n)
    EXPECT_LT((I.multiplier(n, 0).array() - 1.0).abs().maxCoeff(), 1e-14);
}

TEST(Gns, ClassicalGeneratorIsMultiplicationByZ) {
  const DiffeoSpec d = DiffeoSpec::rotation(0.0, true);
  const GnsOperator U = represent(WeylElement::generator(0.0, {1, 0}), d, kBox);
  for (int n = -kBox.K; n <= kBox.K; ++n) {
    const CVector& m = U.multiplier(n, 0);
    for (int j = 0; j < kBox.G; ++j) EXPECT_LT(std::abs(m[j] - std::polar(1.0, GridFunction::angle(j, kBox.G))), 1e-14);
  }
}

TEST(Gns, BasisVectors) {
  const GnsVector xi = cyclic_vector(kBox);
  EXPECT_EQ((basis_vector(0, 0, kBox) - xi).norm(), 0.0);
  const BlockGrid a(basis_vector(1, 2, kBox)), b(basis_vector(1, 3, kBox));
  EXPECT_NEAR(a.inner(a).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(a.inner(b)), 0.0, 1e-15);
  const BlockGrid x(xi);
  for (int n = -kBox.K; n <= kBox.K; ++n)
    EXPECT_LT((x.block(n).array() - (n == 0 ? 1.0 : 0.0)).abs().maxCoeff(), 1e-15);
}

TEST(Gns, UklRotationExact) {
  const DiffeoSpec d = DiffeoSpec::rotation(kGolden);
  const GnsVector xi = cyclic_vector(kBox);
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l)
      EXPECT_LT((build_u_kl(k, l, d, kBox).apply(xi) - basis_vector(k, l, kBox)).norm(), 1e-13);
  EXPECT_LT((build_u_kl(0, 0, d, kBox).apply(xi) - xi).norm(), 1e-15);
}

TEST(Gns, UklBenchmark) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const GnsVector xi = cyclic_vector(kBox);
  EXPECT_LE((build_u_kl(1, 1, d, kBox).apply(xi) - basis_vector(1, 1, kBox)).norm(), 1e-8);
  for (int k = -8; k <= 8; k += 4)
    for (int l = -8; l <= 8; ++l)
      EXPECT_LE((build_u_kl(k, l, d, kBox).apply(xi) - basis_vector(k, l, kBox)).norm(), 1e-8);
  // h^l coefficients against direct quadrature of e^{2 pi i l H(x)}.
  const FourierPoly c = hpow_coefficients(d, 3, 16);
  const int G = 1024;
  for (int q = -5; q <= 5; ++q) {
    cplx s = 0.0;
    for (int j = 0; j < G; ++j) {
      const double x = double(j) / G;
      s += std::polar(1.0, kTwoPi * (3 * d.conjugator()(x) - q * x)) / double(G);
    }
    EXPECT_LT(std::abs(s - c.coeff(q)), 1e-12);
  }
}

TEST(Gns, StateEval) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const StateValue one = state_eval(WeylElement::identity(kGolden), d, kBox);
  EXPECT_NEAR(std::abs(one.via_measure - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(one.via_gns - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(state_eval(WeylElement::generator(kGolden, {0, 1}), d, kBox).via_gns), 0.0, 1e-15);
  const StateValue z = state_eval(WeylElement::generator(kGolden, {1, 0}), DiffeoSpec::rotation(kGolden), kBox);
  EXPECT_NEAR(std::abs(z.via_measure), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(z.via_gns), 0.0, 1e-14);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const WeylElement f = random_weyl_element(kGolden, 2, 2, rng);
    const StateValue w = state_eval(star_product(involution(f), f), d, kBox);
    EXPECT_GE(w.via_gns.real(), -1e-10);
    EXPECT_LT(w.deviation(), 1e-10);
  }
}

TEST(Gns, AdjointConsistency) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    const WeylElement f = random_weyl_element(kGolden, 2, 2, rng);
    const GnsVector x = random_gns_vector(kBox, 4, 4, rng), y = random_gns_vector(kBox, 4, 4, rng);
    EXPECT_LT(std::abs(represent(f, d, kBox).apply(x).inner(y) - x.inner(represent(involution(f), d, kBox).apply(y))), 1e-9);
    const Eigen::MatrixXcd A = represent(f, d, kBox).to_dense();
    const Eigen::MatrixXcd As = represent(involution(f), d, kBox).to_dense();
    EXPECT_LT((A.adjoint() - As).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((A * x.flat() - represent(f, d, kBox).apply(x).flat()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Gns, LostShiftsAndAlphaMismatch) {
  const TruncationBox small(2, 4, 64);
  EXPECT_TRUE(represent(WeylElement::generator(0.3, {0, 5}), DiffeoSpec::rotation(0.3), small).lost_shifts());
  EXPECT_THROW(represent(WeylElement::identity(0.2), DiffeoSpec::rotation(0.3), small), AlphaMismatchError);
}
