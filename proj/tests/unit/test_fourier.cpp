#include <gtest/gtest.h>

#include <random>

#include "nctorus/errors.hpp"
#include "nctorus/fourier.hpp"

using namespace nctorus;

namespace {
const double kGolden = (std::sqrt(5.0) - 1.0) / 4.0;
const TruncationBox kBox(16, 16, 256);

double table_dev(const FourierCoeffs& a, const FourierCoeffs& b) {
  return (a.table() - b.table()).cwiseAbs().maxCoeff();
}

FourierCoeffs delta_table(int K, int M, int k, int l) {
  FourierCoeffs c(TransformKind::Hat, K, M);
  c.set(k, l, 1.0);
  return c;
}
}  // namespace

TEST(Fourier, HatVectorExamples) {
  GnsVector x(kBox);
  x.set(0, 1, 1.0 / std::sqrt(2.0));
  x.set(1, 0, 1.0 / std::sqrt(2.0));
  const FourierCoeffs c = hat_vector(x);
  EXPECT_NEAR(c.l2_norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(c.at(0, 1)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(table_dev(hat_vector(cyclic_vector(kBox)), delta_table(16, 16, 0, 0)), 0.0);
}

TEST(Fourier, HatFunctionalOnUrs) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  EXPECT_LT(table_dev(hat_functional(WeylElement::identity(kGolden), d, kBox), delta_table(16, 16, 0, 0)), 1e-13);
  for (auto [r, s] : {std::pair{1, 2}, std::pair{-3, 1}, std::pair{0, -5}})
    EXPECT_LT(table_dev(hat_functional(u_kl_element(r, s, d, kBox), d, kBox), delta_table(16, 16, r, s)), 1e-8);
}

TEST(Fourier, Parseval) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const GnsVector x = random_gns_vector(kBox, 16, 16, rng);
    EXPECT_NEAR(hat_vector(x).l2_norm(), x.norm(), 1e-12 * x.norm());
  }
}

TEST(Fourier, HausdorffYoungEndpoint) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  std::mt19937_64 rng(14);
  for (int t = 0; t < 5; ++t) {
    const WeylElement a = random_weyl_element(kGolden, 2, 2, rng);
    const GnsOperator A = represent(a, d, kBox);
    const FourierCoeffs c = hat_functional(a, d, kBox);
    EXPECT_LE(c.sup_norm(), A.apply(BlockGrid(cyclic_vector(kBox))).norm() + 1e-12);
    EXPECT_LE(c.sup_norm(), truncated_operator_norm(A) + 1e-9);
  }
}

TEST(Fourier, ParenRoutesAgree) {
  const EpsilonBasis eps{ModularData(DiffeoSpec::benchmark(), kBox)};
  std::mt19937_64 rng(15);
  const WeylElement a = random_weyl_element(kGolden, 2, 2, rng);
  const ParenRoutes r = paren_routes(a, eps);
  EXPECT_LE(r.deviation, 1e-7);
  EXPECT_LT(table_dev(paren_functional(involution(a), eps), FourierCoeffs(TransformKind::Paren, 16, 16,
                                                                           hat_functional(a, DiffeoSpec::benchmark(), kBox).table().conjugate())),
            1e-9);
}

TEST(Fourier, ParenRotationCase) {
  const DiffeoSpec d = DiffeoSpec::rotation(kGolden);
  const EpsilonBasis eps{ModularData(d, kBox)};
  const FourierCoeffs one = paren_functional(WeylElement::identity(kGolden), eps);
  EXPECT_LT((one.table() - delta_table(16, 16, 0, 0).table()).cwiseAbs().maxCoeff(), 1e-13);
  // omega(u_rs u_kl) is nonzero only at (k, l) = (-r, -s).
  const FourierCoeffs c = paren_functional(u_kl_element(2, -1, d, kBox), eps);
  for (int k = -16; k <= 16; ++k)
    for (int l = -16; l <= 16; ++l)
      if (k != -2 || l != 1) EXPECT_LT(std::abs(c.at(k, l)), 1e-13);
  EXPECT_NEAR(std::abs(c.at(-2, 1)), 1.0, 1e-13);
}

TEST(Fourier, AntiTransforms) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const EpsilonBasis eps{ModularData(d, kBox)};
  EXPECT_EQ((anti_transform(delta_table(16, 16, 0, 0), eps) - cyclic_vector(kBox)).norm(), 0.0);
  std::mt19937_64 rng(16);
  const GnsVector x = random_gns_vector(kBox, 16, 16, rng);
  EXPECT_EQ((anti_transform(hat_vector(x), eps) - x).norm(), 0.0);

  const WeylElement a = random_weyl_element(kGolden, 2, 2, rng);
  const FourierCoeffs p = paren_functional(a, eps);
  const BlockGrid lhs = anti_transform_paren(p, eps);
  const BlockGrid rhs = apply_delta_power(1.0, represent(a, d, kBox).apply(BlockGrid(cyclic_vector(kBox))), eps.modular());
  // Both sides agree on the span of the epsilon window.
  EXPECT_LT((paren_vector(lhs, eps).table() - paren_vector(rhs, eps).table()).cwiseAbs().maxCoeff(), 1e-7);

  FourierCoeffs c(TransformKind::Hat, 16, 16);
  c.set(1, 2, 0.5);
  c.set(-2, 0, cplx(0, 1));
  const GnsVector viaop = anti_transform_operator(c, d, kBox).apply(cyclic_vector(kBox));
  EXPECT_LT((viaop - anti_transform_hat(c, kBox)).norm(), 1e-8);
}

TEST(Fourier, RiemannLebesgueGenerator) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const RiemannLebesgueProfile g = riemann_lebesgue_profile(u_kl_element(2, 1, d, kBox), d, kBox);
  for (int L = 3; L <= 16; ++L) EXPECT_LT(g.shell_max[L], 1e-8);
  // pi(delta_(1,0)) xi is h^{-1}(z) in block 0; its coefficients by direct quadrature in u = H^{-1}(x).
  const FourierCoeffs hat = hat_functional(WeylElement::generator(kGolden, {1, 0}), d, kBox);
  const int Q = 4096;
  for (int q = -16; q <= 16; ++q) {
    cplx c = 0.0;
    for (int j = 0; j < Q; ++j) {
      const double u = double(j) / Q;
      c += std::polar(1.0, kTwoPi * (u - q * d.conjugator()(u))) * d.conjugator().derivative(u) / double(Q);
    }
    EXPECT_LT(std::abs(hat.at(0, q) - c), 1e-13) << "q = " << q;
  }
}

TEST(Fourier, RiemannLebesgueSmoothElement) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  WeylElement smooth(kGolden, 6, 2);
  for (int m = -6; m <= 6; ++m)
    for (int n = -2; n <= 2; ++n) smooth.set({m, n}, std::exp(-0.5 * (m * m + n * n)));
  for (const TruncationBox& box : {kBox, TruncationBox(16, 32, 512)}) {
    const RiemannLebesgueProfile p = riemann_lebesgue_profile(smooth, d, box);
    for (std::size_t L = 3; L < p.shell_max.size(); ++L) EXPECT_LT(p.shell_max[L], p.shell_max[L - 1]);
    EXPECT_TRUE(p.injectivity_ok);
    if (box.M == 32) EXPECT_LT(p.shell_max[box.M / 2], 1e-6);
  }
}

TEST(Fourier, ClassicalLimit) {
  const TruncationBox box(8, 8, 128);
  const ClassicalComparison z = classical_limit_compare(WeylElement::generator(0.0, {1, 0}), box);
  EXPECT_LT(z.max(), 1e-13);
  const FourierCoeffs hat = hat_functional(WeylElement::generator(0.0, {1, 0}), DiffeoSpec::rotation(0.0, true), box);
  EXPECT_LT(table_dev(hat, delta_table(8, 8, 0, 1)), 1e-14);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) EXPECT_LE(classical_limit_compare(random_weyl_element(0.0, 3, 3, rng), box).max(), 1e-10);
  EXPECT_THROW(classical_limit_compare(WeylElement::identity(0.1), box), AlphaMismatchError);
}
