// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "nctorus/verify.hpp"

using namespace nctorus;

namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 4.0;
const TruncationBox kBox(16, 16, 256);
int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail, double seconds) {
  std::printf("%s [%02d] %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

template <class F>
void criterion(int id, const std::string& what, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, what, ok, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

WeylElement interior(double alpha, std::mt19937_64& rng) { return random_weyl_element(alpha, 2, 2, rng); }

}  // namespace

int main() {
  const DiffeoSpec bench = DiffeoSpec::benchmark();
  const DiffeoSpec rot = DiffeoSpec::rotation(kGolden);

  criterion(1, "Weyl relations", [](std::string& out) {
    const double tol = 1e-14;
    double dev = 0.0;
    for (double alpha : {0.0, 0.25, kGolden})
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n)
          for (int M = -3; M <= 3; ++M)
            for (int N = -3; N <= 3; ++N) dev = std::max(dev, weyl_relation_check({m, n}, {M, N}, alpha));
    out = fmt("max deviation %.3e <= %.0e", dev, tol);
    return dev <= tol;
  });

  criterion(2, "star associativity and trace traciality", [](std::string& out) {
    const double tol = 1e-12;
    std::mt19937_64 rng(101);
    double assoc = 0.0, trac = 0.0;
    for (int t = 0; t < 100; ++t) {
      const WeylElement f = random_weyl_element(kGolden, 2, 2, rng);
      const WeylElement g = random_weyl_element(kGolden, 2, 2, rng);
      const WeylElement h = random_weyl_element(kGolden, 2, 2, rng);
      assoc = std::max(assoc, max_deviation(star_product(star_product(f, g), h), star_product(f, star_product(g, h))));
      trac = std::max(trac, std::abs(trace(star_product(f, g)) - trace(star_product(g, f))));
    }
    out = fmt("associativity %.3e, traciality %.3e <= %.0e", assoc, trac, tol);
    return assoc <= tol && trac <= tol;
  });

  criterion(3, "basis orthonormality and u_kl xi = e^{kl}", [&](std::string& out) {
    const double gram_tol = 1e-14, ukl_tol = 1e-8;
    double gram = 0.0;
    for (int k = -kBox.K; k <= kBox.K; ++k) {
      Eigen::MatrixXcd E(kBox.G, kBox.modes());
      for (int l = -kBox.M; l <= kBox.M; ++l) {
        const BlockGrid g(basis_vector(k, l, kBox));
        for (int n = -kBox.K; n <= kBox.K; ++n)
          if (n != k && g.block(n).cwiseAbs().maxCoeff() != 0.0) gram = 1.0;
        E.col(l + kBox.M) = g.block(k);
      }
      const Eigen::MatrixXcd Gm = E.adjoint() * E / double(kBox.G);
      gram = std::max(gram, (Gm - Eigen::MatrixXcd::Identity(kBox.modes(), kBox.modes())).cwiseAbs().maxCoeff());
    }
    double ukl = 0.0;
    const GnsVector xi = cyclic_vector(kBox);
    for (int k = -8; k <= 8; ++k)
      for (int l = -8; l <= 8; ++l)
        ukl = std::max(ukl, (build_u_kl(k, l, bench, kBox).apply(xi) - basis_vector(k, l, kBox)).norm());
    out = fmt("Gram deviation %.3e <= %.0e, u_kl deviation %.3e <= %.0e", gram, gram_tol, ukl, ukl_tol);
    return gram <= gram_tol && ukl <= ukl_tol;
  });

  criterion(4, "Radon-Nikodym cocycle and normalization", [&](std::string& out) {
    const double tol = 1e-9;
    const int G = kBox.G;
    double cocycle = 0.0, norm = 0.0;
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < G; ++j) {
          const double x = double(j) / G;
          cocycle = std::max(cocycle, std::abs(radon_nikodym_at(bench, m + n, x) -
                                               radon_nikodym_at(bench, m, iterate_lift(bench, n, x)) *
                                                   radon_nikodym_at(bench, n, x)));
        }
    for (int n = -4; n <= 4; ++n) norm = std::max(norm, std::abs(radon_nikodym_values(bench, n, G).mean() - 1.0));
    out = fmt("cocycle %.3e, normalization %.3e <= %.0e", cocycle, norm, tol);
    return cocycle <= tol && norm <= tol;
  });

  criterion(5, "Tomita and Borel identities", [&](std::string& out) {
    const double bench_tol = 1e-7, rot_tol = 1e-9, borel_tol = 1e-9;
    const ModularData mb(bench, kBox), mr(rot, kBox);
    std::mt19937_64 rng(105);
    double tb = 0.0, tr = 0.0;
    for (int t = 0; t < 20; ++t) {
      tb = std::max(tb, tomita_check(interior(kGolden, rng), mb));
      tr = std::max(tr, tomita_check(interior(kGolden, rng), mr));
    }
    const double borel = borel_identity_check(BorelFunction::power(0.5), mb);
    out = fmt("benchmark %.3e <= 1e-7, rotation %.3e <= 1e-9, J Delta^1/2 J vs Delta^-1/2 %.3e <= 1e-9", tb, tr, borel);
    return tb <= bench_tol && tr <= rot_tol && borel <= borel_tol;
  });

  criterion(6, "Parseval and Hausdorff-Young endpoint", [&](std::string& out) {
    const double tol = 1e-12;
    std::mt19937_64 rng(106);
    double parseval = 0.0, hy = -1.0;
    for (int t = 0; t < 50; ++t) {
      const GnsVector x = random_gns_vector(kBox, 16, 16, rng);
      parseval = std::max(parseval, std::abs(hat_vector(x).l2_norm() - x.norm()) / x.norm());
    }
    for (int t = 0; t < 10; ++t) {
      const WeylElement a = interior(kGolden, rng);
      const double norm = represent(a, bench, kBox).apply(BlockGrid(cyclic_vector(kBox))).norm();
      hy = std::max(hy, hat_functional(a, bench, kBox).sup_norm() - norm);
    }
    out = fmt("relative Parseval deviation %.3e <= %.0e, max(sup|x^| - ||pi(a)xi||) = %.3e <= %.0e", parseval, tol, hy, tol);
    return parseval <= tol && hy <= tol;
  });

  criterion(7, "classical limit", [&](std::string& out) {
    const double tol = 1e-10;
    std::mt19937_64 rng(107);
    double dev = 0.0;
    for (int t = 0; t < 20; ++t) dev = std::max(dev, classical_limit_compare(random_weyl_element(0.0, 3, 3, rng), kBox).max());
    out = fmt("hat/paren vs classical 2D coefficients %.3e <= %.0e", dev, tol);
    return dev <= tol;
  });

  criterion(8, "transferred hat tables (twist identity)", [&](std::string& out) {
    const double gen_tol = 1e-12, rand_tol = 1e-10;
    std::mt19937_64 rng(108);
    const TransferencePoint w = TransferencePoint::from_angles(0.9, -2.3);
    std::vector<WeylElement> elems;
    const int ngen = 6;
    for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {-2, 3}, {4, -1}, {-8, -8}}) elems.push_back(u_kl_element(k, l, bench, kBox));
    for (int t = 0; t < 4; ++t) elems.push_back(interior(kGolden, rng));
    const auto tables = transferred_hat_tables(w, elems, bench, kBox);
    double gen = 0.0, rnd = 0.0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const FourierCoeffs hat = hat_functional(elems[i], bench, kBox);
      double dev = 0.0;
      for (int k = -16; k <= 16; ++k)
        for (int l = -16; l <= 16; ++l)
          dev = std::max(dev, std::abs(tables[i].at(k, l) - std::pow(w.w1, -l) * std::pow(w.w2, -k) * hat.at(k, l)));
      (int(i) < ngen ? gen : rnd) = std::max(int(i) < ngen ? gen : rnd, dev);
    }
    out = fmt("generators %.3e <= %.0e, random %.3e <= %.0e", gen, gen_tol, rnd, rand_tol);
    return gen <= gen_tol && rnd <= rand_tol;
  });

  criterion(9, "Fejer and Abel inversion at p = 2", [&](std::string& out) {
    const EpsilonBasis eps{ModularData(bench, kBox)};
    std::mt19937_64 rng(109);
    const MeanSource x = random_gns_vector(kBox, 2, 2, rng);
    const double e4 = fejer_mean(x, 4, TransformKind::Hat, eps).l2_error;
    const double e8 = fejer_mean(x, 8, TransformKind::Hat, eps).l2_error;
    const double e16 = fejer_mean(x, 16, TransformKind::Hat, eps).l2_error;
    const double r1 = e8 / e4, r2 = e16 / e8;
    const bool fejer_ok = e8 < e4 && e16 < e8 && r1 >= 0.3 && r1 <= 0.7 && r2 >= 0.3 && r2 <= 0.7;
    const double trans = transference_integral_check(x, 3, 16, eps);
    const double a1 = abel_mean(x, 0.9, TransformKind::Hat, eps).l2_error;
    const double a2 = abel_mean(x, 0.99, TransformKind::Hat, eps).l2_error;
    const double a3 = abel_mean(x, 0.999, TransformKind::Hat, eps).l2_error;
    const bool abel_ok = a2 < a1 && a3 < a2;
    out = fmt("Fejer ratios %.3f, %.3f in [0.3, 0.7]; transference %.3e <= 1e-9; Abel errors ", r1, r2, trans) +
          fmt("%.3e > %.3e > %.3e", a1, a2, a3);
    return fejer_ok && trans <= 1e-9 && abel_ok;
  });

  criterion(10, "Dirichlet counterexample profile", [&](std::string& out) {
    const auto rows = kernel_l1_profile({10, 100});
    const double growth = rows[1].l1_norm - rows[0].l1_norm;
    const double expected = 4.0 / (std::numbers::pi * std::numbers::pi) * std::log(10.0);
    double sup_dev = 0.0;
    for (int n : {10, 100}) sup_dev = std::max(sup_dev, std::abs(dirichlet_functional_table(n, bench, kBox).sup_norm() - 1.0));
    out = fmt("||D_100||_1 - ||D_10||_1 = %.4f vs %.4f +- 0.2; |sup X^_n - 1| = %.3e <= 1e-9", growth, expected, sup_dev);
    return std::abs(growth - expected) <= 0.2 && sup_dev <= 1e-9;
  });

  criterion(11, "Dirac matrix elements, closed form vs oracle", [&](std::string& out) {
    const DiracContext cb(bench, kBox), cr(rot, kBox);
    double db = 0.0, dr = 0.0;
    for (double eta : {0.0, 0.5, 1.0}) {
      for (const auto& row : matrix_element_sweep(eta, 8, cb)) db = std::max(db, row.deviation);
      for (const auto& row : matrix_element_sweep(eta, 8, cr)) dr = std::max(dr, row.deviation);
    }
    out = fmt("benchmark %.3e <= 1e-7, rotation %.3e <= 1e-12", db, dr);
    return db <= 1e-7 && dr <= 1e-12;
  });

  criterion(12, "resolvent and commutator bounds", [&](std::string& out) {
    const DiracContext ctx(bench, kBox);
    double res = -1.0, com = -1.0, ident = 0.0;
    for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (const auto& row : resolvent_profile(eta, 8, ctx))
        res = std::max(res, row.inverse_norm - row.bound * (1.0 + 1e-6));
      for (auto g : {ShiftGenerator::Lambda, ShiftGenerator::LambdaInverse})
        for (const auto& row : commutator_block(eta, g, 8, ctx))
          com = std::max(com, row.norm - row.bound * (1.0 + 1e-6));
    }
    const DiracCoefficients& a = ctx.coeffs();
    for (int n = -8; n <= 8; ++n)
      ident = std::max(ident, std::abs(std::abs(a[n - 1] - a[n]) * ctx.growth()[std::abs(n)] - 1.0));
    out = fmt("max(1/sigma_min - bound(1+1e-6)) = %.3e <= 0, max(norm - bound(1+1e-6)) = %.3e <= 0, "
              "| |a_{n-1}-a_n| Gamma_|n| - 1 | = %.3e <= 1e-12", res, com, ident);
    return res <= 0.0 && com <= 0.0 && ident <= 1e-12;
  });

  criterion(13, "verify determinism", [&](std::string& out) {
    ExperimentConfig config;
    config.diffeo = bench;
    config.box = kBox;
    config.seed = 113;
    const std::string first = run_invariant_suite(config).to_json().dump();
    const std::string second = run_invariant_suite(config).to_json().dump();
    out = std::string("two reports of ") + std::to_string(first.size()) + " bytes " +
          (first == second ? "identical" : "differ");
    return first == second;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
