#include "nctorus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "nctorus/errors.hpp"

namespace nctorus {

namespace {

// Suites whose tolerance is a bound on a ratio or a count rather than a deviation.
const std::set<std::string> kUnscaled = {"summation.dirichlet_growth"};

class Runner {
 public:
  Runner(const ExperimentConfig& c, double scale) : c_(c), scale_(scale) {}

  double tol(const std::string& key) const {
    const bool unscaled = kUnscaled.count(key) > 0;
    return suite_tolerance(c_, key, unscaled ? 1.0 : scale_);
  }

  std::mt19937_64 rng(int salt) const {
    std::seed_seq seq{static_cast<std::uint64_t>(c_.seed), static_cast<std::uint64_t>(salt)};
    return std::mt19937_64(seq);
  }

  void deviation(const std::string& name, double observed, const std::string& key = "") {
    const double t = tol(key.empty() ? name : key);
    report.suites.push_back({name, t, observed, observed <= t, ""});
  }

  void custom(const std::string& name, double tolerance, double observed, bool passed,
              std::string detail = "") {
    report.suites.push_back({name, tolerance, observed, passed, std::move(detail)});
  }

  VerifyReport report;
  const ExperimentConfig& c_;
  double scale_;
};

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

WeylElement interior_element(double alpha, std::mt19937_64& rng) {
  return random_weyl_element(alpha, 2, 2, rng);
}

void spectral_suites(Runner& R) {
  auto rng = R.rng(1);
  std::normal_distribution<double> N01;
  const int M = 16, G = 64;
  auto random_poly = [&] {
    CVector c(2 * M + 1);
    for (auto& v : c) v = {N01(rng), N01(rng)};
    return FourierPoly(M, c);
  };
  double roundtrip = 0.0, parseval = 0.0, linear = 0.0;
  for (int t = 0; t < 10; ++t) {
    const FourierPoly p = random_poly(), q = random_poly();
    const GridFunction gp = evaluate_on_grid(p, G), gq = evaluate_on_grid(q, G);
    roundtrip = std::max(roundtrip, (project_to_modes(gp, M).coeffs() - p.coeffs()).cwiseAbs().maxCoeff());
    parseval = std::max(parseval, std::abs(quadrature_inner(gp, gp).real() - p.coeffs().squaredNorm()));
    const cplx a{N01(rng), N01(rng)}, b{N01(rng), N01(rng)};
    const FourierPoly comb(M, a * p.coeffs() + b * q.coeffs());
    const GridFunction gc = evaluate_on_grid(comb, G);
    linear = std::max(linear, (gc.samples() - (a * gp.samples() + b * gq.samples())).cwiseAbs().maxCoeff());
    const GridFunction gsum(a * gp.samples() + b * gq.samples());
    linear = std::max(linear, (project_to_modes(gsum, M).coeffs() - comb.coeffs()).cwiseAbs().maxCoeff());
    linear = std::max(linear, std::abs(quadrature_inner(gsum, gq) -
                                       (a * quadrature_inner(gp, gq) + b * quadrature_inner(gq, gq))));
  }
  R.deviation("spectral.roundtrip", roundtrip);
  R.deviation("spectral.parseval", parseval);
  R.deviation("spectral.linearity", linear);
}

void circle_suites(Runner& R) {
  const DiffeoSpec& d = R.c_.diffeo;
  const int G = R.c_.box.G;
  std::vector<double> xs(G);
  for (int j = 0; j < G; ++j) xs[j] = static_cast<double>(j) / G;
  double cocycle = 0.0, inverse = 0.0, action = 0.0, norm = 0.0;
  for (int m = -4; m <= 4; ++m)
    for (int n = -4; n <= 4; ++n)
      for (double x : xs) {
        const double fn = iterate_lift(d, n, x);
        const double lhs = radon_nikodym_at(d, m + n, x);
        const double rhs = radon_nikodym_at(d, m, fn) * radon_nikodym_at(d, n, x);
        cocycle = std::max(cocycle, std::abs(lhs - rhs));
        action = std::max(action, std::abs(iterate_lift(d, m, fn) - iterate_lift(d, m + n, x)));
      }
  for (int n = -8; n <= 8; ++n) {
    norm = std::max(norm, std::abs(radon_nikodym_values(d, n, G).mean() - 1.0));
    for (double x : xs)
      inverse = std::max(inverse, std::abs(radon_nikodym_at(d, -n, iterate_lift(d, n, x)) *
                                               radon_nikodym_at(d, n, x) - 1.0));
  }
  R.deviation("circle.cocycle", cocycle);
  R.deviation("circle.normalization", norm);
  R.deviation("circle.inverse", inverse);
  R.deviation("circle.group_action", action);
}

void weyl_suites(Runner& R) {
  const double alpha = R.c_.diffeo.alpha();
  double relation = 0.0;
  for (double a : {0.0, 0.25, (std::sqrt(5.0) - 1.0) / 4.0, alpha})
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n)
        for (int M = -3; M <= 3; ++M)
          for (int N = -3; N <= 3; ++N)
            relation = std::max(relation, weyl_relation_check({m, n}, {M, N}, a));
  R.deviation("weyl.relations", relation);

  auto rng = R.rng(2);
  double assoc = 0.0, star = 0.0, trace_dev = 0.0;
  for (int t = 0; t < 100; ++t) {
    const WeylElement f = random_weyl_element(alpha, 2, 2, rng);
    const WeylElement g = random_weyl_element(alpha, 2, 2, rng);
    const WeylElement h = random_weyl_element(alpha, 2, 2, rng);
    const WeylElement fg = star_product(f, g);
    assoc = std::max(assoc, max_deviation(star_product(fg, h), star_product(f, star_product(g, h))));
    star = std::max(star, max_deviation(involution(fg), star_product(involution(g), involution(f))));
    star = std::max(star, max_deviation(involution(involution(f)), f));
    trace_dev = std::max(trace_dev, std::abs(trace(fg) - trace(star_product(g, f))));
    const cplx tf = trace(star_product(involution(f), f));
    trace_dev = std::max({trace_dev, std::abs(tf - f.table().squaredNorm()), std::max(0.0, -tf.real())});
  }
  R.deviation("weyl.associativity", assoc);
  R.deviation("weyl.involution", star);
  R.deviation("weyl.trace", trace_dev);
}

void gns_suites(Runner& R) {
  const DiffeoSpec& d = R.c_.diffeo;
  const TruncationBox& box = R.c_.box;
  auto rng = R.rng(3);

  const GnsVector xi = cyclic_vector(box);
  double gram = 0.0;
  {
    std::vector<std::pair<int, int>> idx;
    for (int k = -2; k <= 2; ++k)
      for (int l = -box.M; l <= box.M; ++l) idx.emplace_back(k, l);
    std::vector<BlockGrid> grids;
    for (auto [k, l] : idx) grids.emplace_back(basis_vector(k, l, box));
    for (std::size_t i = 0; i < grids.size(); ++i)
      for (std::size_t j = 0; j < grids.size(); ++j)
        gram = std::max(gram, std::abs(grids[i].inner(grids[j]) - (i == j ? 1.0 : 0.0)));
  }
  R.deviation("gns.orthonormality", gram);

  double adjoint = 0.0, positivity = 0.0, identity = 0.0;
  for (int t = 0; t < 10; ++t) {
    const WeylElement f = interior_element(d.alpha(), rng);
    const GnsVector x = random_gns_vector(box, 4, 4, rng);
    const GnsVector y = random_gns_vector(box, 4, 4, rng);
    const cplx lhs = represent(f, d, box).apply(x).inner(y);
    const cplx rhs = x.inner(represent(involution(f), d, box).apply(y));
    adjoint = std::max(adjoint, std::abs(lhs - rhs));
    const StateValue w = state_eval(star_product(involution(f), f), d, box);
    positivity = std::max({positivity, -w.via_gns.real(), -w.via_measure.real()});
    identity = std::max(identity, (GnsOperator::identity(box).apply(x) - x).norm());
    identity = std::max(identity, (represent(WeylElement::identity(d.alpha()), d, box).apply(x) - x).norm());
  }
  R.deviation("gns.adjoint", adjoint);
  R.deviation("gns.state_positivity", std::max(0.0, positivity));
  R.deviation("gns.identity", identity);

  double ukl = 0.0;
  const int half = std::min(box.K, box.M) / 2;
  for (int k = -half; k <= half; ++k)
    for (int l = -half; l <= half; ++l)
      ukl = std::max(ukl, (build_u_kl(k, l, d, box).apply(xi) - basis_vector(k, l, box)).norm());
  R.deviation("gns.u_kl", ukl);
}

void modular_suites(Runner& R, const ModularData& md, const EpsilonBasis& eps) {
  const DiffeoSpec& d = R.c_.diffeo;
  const TruncationBox& box = R.c_.box;
  auto rng = R.rng(4);
  const BlockGrid xi(cyclic_vector(box));

  double tomita = 0.0, s_sq = 0.0, sym = 0.0;
  for (int t = 0; t < 20; ++t) {
    const WeylElement f = interior_element(d.alpha(), rng);
    tomita = std::max(tomita, tomita_check(f, md));
    const BlockGrid y = represent(f, d, box).apply(xi);
    s_sq = std::max(s_sq, (apply_S(apply_S(y, md), md) - y).norm());
    const BlockGrid z = represent(interior_element(d.alpha(), rng), d, box).apply(xi);
    const cplx lhs = apply_delta_power(1.0, y, md).inner(apply_delta_power(1.0, z, md));
    const cplx rhs = apply_delta_power(2.0, y, md).inner(z);
    sym = std::max(sym, std::abs(lhs - rhs));
  }
  R.deviation("modular.tomita", tomita, d.is_rotation() ? "modular.tomita.rotation" : "modular.tomita");
  R.deviation("modular.s_involution", s_sq);
  R.deviation("modular.delta_symmetry", sym);

  const double borel = std::max(borel_identity_check(BorelFunction::power(0.5), md),
                                borel_identity_check(BorelFunction::rational({1.0, 2.0}, {3.0, 1.0}), md));
  R.deviation("modular.borel", borel);

  double ortho = 0.0;
  std::vector<std::pair<int, int>> idx;
  for (int k = -4; k <= 4; ++k)
    for (int l = -4; l <= 4; ++l) idx.emplace_back(k, l);
  for (auto [k, l] : idx)
    for (auto [r, s] : idx) {
      const cplx g = eps.vector(k, l).inner(eps.vector(r, s));
      ortho = std::max(ortho, std::abs(g - ((k == r && l == s) ? 1.0 : 0.0)));
    }
  R.deviation("modular.epsilon_orthonormal", ortho);
}

void fourier_suites(Runner& R, const EpsilonBasis& eps) {
  const DiffeoSpec& d = R.c_.diffeo;
  const TruncationBox& box = R.c_.box;
  auto rng = R.rng(5);

  double parseval = 0.0;
  for (int t = 0; t < 50; ++t) {
    const GnsVector x = random_gns_vector(box, box.K, box.M, rng);
    parseval = std::max(parseval, std::abs(hat_vector(x).l2_norm() - x.norm()) / x.norm());
  }
  R.deviation("fourier.parseval", parseval);

  double hy = -1.0, two_route = 0.0, paren = 0.0, adjoint = 0.0;
  const GnsVector xi = cyclic_vector(box);
  for (int t = 0; t < 5; ++t) {
    const WeylElement a = interior_element(d.alpha(), rng);
    const GnsOperator A = represent(a, d, box);
    const FourierCoeffs hat = hat_functional(a, d, box);
    const double vec_norm = A.apply(BlockGrid(xi)).norm();
    hy = std::max({hy, hat.sup_norm() - vec_norm, hat.sup_norm() - truncated_operator_norm(A) - 1e-9});
    two_route = std::max(two_route, max_abs(hat.table() - hat_vector(A.apply(xi)).table()));
    if (t < 3) {
      const ParenRoutes routes = paren_routes(a, eps);
      paren = std::max(paren, routes.deviation);
      const ParenRoutes star = paren_routes(involution(a), eps);
      adjoint = std::max(adjoint, max_abs(star.via_modular.table() - hat.table().conjugate()));
    }
  }
  R.deviation("fourier.hausdorff_young", std::max(0.0, hy));
  R.deviation("fourier.hat_two_route", two_route);
  R.deviation("fourier.paren_routes", paren);
  R.deviation("fourier.paren_adjoint", adjoint);

  double classical = 0.0;
  for (int t = 0; t < 20; ++t)
    classical = std::max(classical, classical_limit_compare(interior_element(0.0, rng), box).max());
  R.deviation("fourier.classical_limit", classical);
}

void summation_suites(Runner& R, const EpsilonBasis& eps) {
  const DiffeoSpec& d = R.c_.diffeo;
  const TruncationBox& box = R.c_.box;
  auto rng = R.rng(6);

  const TransferencePoint w = TransferencePoint::from_angles(0.7, -1.3);
  std::vector<WeylElement> elements;
  std::vector<std::pair<int, int>> gens{{0, 0}, {1, 0}, {0, 1}, {-1, 2}, {2, -3}};
  for (auto [k, l] : gens) elements.push_back(u_kl_element(k, l, d, box));
  for (int t = 0; t < 3; ++t) elements.push_back(interior_element(d.alpha(), rng));
  const auto tables = transferred_hat_tables(w, elements, d, box);
  double gen_dev = 0.0, rand_dev = 0.0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const FourierCoeffs hat = hat_functional(elements[i], d, box);
    double dev = 0.0;
    for (int k = -box.K; k <= box.K; ++k)
      for (int l = -box.M; l <= box.M; ++l) {
        const cplx twist = std::pow(w.w1, -l) * std::pow(w.w2, -k);
        dev = std::max(dev, std::abs(tables[i].at(k, l) - twist * hat.at(k, l)));
      }
    (i < gens.size() ? gen_dev : rand_dev) = std::max(i < gens.size() ? gen_dev : rand_dev, dev);
  }
  R.deviation("summation.transference_generators", gen_dev);
  R.deviation("summation.transference_random", rand_dev);

  {
    const GnsVector x = random_gns_vector(box, 3, 3, rng);
    std::vector<double> dist;
    for (double e : {0.1, 0.01, 0.001})
      dist.push_back((transfer_vector(TransferencePoint::from_angles(e, e), x) - x).norm());
    const double worst = std::max(dist[1] / dist[0], dist[2] / dist[1]);
    R.custom("summation.strong_continuity", 1.0, worst, worst < 1.0,
             "max ||rho_w x - x|| ratio over eps = 0.1, 0.01, 0.001");
  }

  const WeylElement a = interior_element(d.alpha(), rng);
  const MeanSource src = a;
  {
    const int N = 4;
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(box.blocks(), box.modes());
    for (int k = -N; k <= N; ++k)
      for (int l = -N; l <= N; ++l)
        W(k + box.K, l + box.M) = (1.0 - std::abs(k) / (N + 1.0)) * (1.0 - std::abs(l) / (N + 1.0));
    const GnsVector once = fejer_mean(src, N, TransformKind::Hat, eps).mean;
    const GnsVector twice = fejer_mean(MeanSource(once), N, TransformKind::Hat, eps).mean;
    const GnsVector squared = weighted_mean(src, W.cwiseProduct(W), TransformKind::Hat, eps).mean;
    const double excess = std::max(W.maxCoeff() - 1.0, 0.0);
    R.deviation("summation.fejer_weights", std::max((twice - squared).norm(), excess));
  }
  {
    std::vector<double> err;
    for (int N : {4, 8, 16}) err.push_back(fejer_mean(src, N, TransformKind::Hat, eps).l2_error);
    double worst = 0.0;
    bool ok = true;
    for (std::size_t i = 1; i < err.size(); ++i) {
      const double ratio = err[i] / err[i - 1];
      worst = std::max(worst, ratio);
      ok = ok && ratio >= 0.3 && ratio <= 0.7;
    }
    R.custom("summation.fejer_decay", 0.7, worst, ok, "max error(2N)/error(N) over N = 4, 8; lower bound 0.3");
  }
  const int Q = 3 + std::max(box.K, box.M) + 1;
  R.deviation("summation.transference_integral", transference_integral_check(src, 3, std::max(Q, 16), eps));
  {
    std::vector<double> err;
    for (double r : {0.9, 0.99, 0.999}) err.push_back(abel_mean(src, r, TransformKind::Hat, eps).l2_error);
    const double worst = std::max(err[1] / err[0], err[2] / err[1]);
    R.custom("summation.abel_decay", 1.0, worst, worst < 1.0, "max error ratio over r = 0.9, 0.99, 0.999");
  }
  {
    const double alpha = d.alpha() > 0.0 ? d.alpha() : (std::sqrt(5.0) - 1.0) / 4.0;
    const DiffeoSpec rot = DiffeoSpec::rotation(alpha);
    const EpsilonBasis reps{ModularData(rot, box)};
    const MeanSource rsrc = interior_element(alpha, rng);
    double dev = 0.0;
    for (int N : {4, 8, 16}) {
      const double h = fejer_mean(rsrc, N, TransformKind::Hat, reps).l2_error;
      const double p = fejer_mean(rsrc, N, TransformKind::Paren, reps).l2_error;
      dev = std::max(dev, std::abs(h - p) / h);
    }
    R.deviation("summation.paren_fejer", dev);
  }
  {
    const auto rows = kernel_l1_profile({10, 100});
    const double growth = rows[1].l1_norm - rows[0].l1_norm;
    const double expected = 4.0 / (std::numbers::pi * std::numbers::pi) * std::log(10.0);
    const double t = R.tol("summation.dirichlet_growth");
    R.custom("summation.dirichlet_growth", t, std::abs(growth - expected),
             std::abs(growth - expected) <= t, "||D_100||_1 - ||D_10||_1 against (4/pi^2) ln 10");
    double sup_dev = 0.0;
    for (int n : R.c_.dirichlet_orders)
      sup_dev = std::max(sup_dev, std::abs(dirichlet_functional_table(n, d, box).sup_norm() - 1.0));
    R.deviation("summation.dirichlet_sup", sup_dev);
  }
}

void dirac_suites(Runner& R) {
  const DiffeoSpec& d = R.c_.diffeo;
  const TruncationBox& box = R.c_.box;
  const DiracContext ctx(d, box, R.c_.growth_grid);
  const int range = std::min({box.K, box.M, 2 * R.c_.index_range}) / 2;
  const int n_range = std::min(R.c_.n_range, box.K - 1);

  double master = 0.0, offdiag = 0.0;
  for (double eta : {0.0, 0.5, 1.0})
    for (const auto& row : matrix_element_sweep(eta, range, ctx)) {
      master = std::max(master, row.deviation);
      if (row.k != row.r) offdiag = std::max(offdiag, std::abs(row.oracle));
    }
  R.deviation("dirac.master", master, d.is_rotation() ? "dirac.master.rotation" : "dirac.master");
  R.deviation("dirac.block_diagonal", offdiag);

  std::vector<double> etas{0.0, 0.25, 0.5, 0.75, 1.0};
  for (double e : R.c_.etas)
    if (std::find(etas.begin(), etas.end(), e) == etas.end()) etas.push_back(e);

  double sa = 0.0;
  for (double eta : etas)
    for (int n = -n_range; n <= n_range; ++n) sa = std::max(sa, deformed_block(n, eta, ctx).self_adjoint_deviation());
  R.deviation("dirac.self_adjoint", sa);

  const DiracCoefficients& a = ctx.coeffs();
  const GrowthSequence& gamma = ctx.growth();
  const int ab = a.bound();
  double tele = 0.0, gamma_id = 0.0;
  auto recip_sum = [&](int m, int n) {
    double s = 0.0;
    for (int j = m + 1; j <= n; ++j) s += 1.0 / gamma[std::abs(j)];
    return s;
  };
  for (int m = -ab; m <= ab; ++m)
    for (int n = m; n <= ab; ++n) tele = std::max(tele, std::abs((a[n] - a[m]) - recip_sum(m, n)));
  for (int n = -ab + 1; n <= ab; ++n)
    gamma_id = std::max(gamma_id, std::abs(std::abs(a[n - 1] - a[n]) * gamma[std::abs(n)] - 1.0));
  R.deviation("dirac.telescoping", tele);
  R.deviation("dirac.gamma_identity", gamma_id);

  double resolvent = -1.0, commutator = -1.0, sup_bound = 0.0;
  for (double eta : etas) {
    for (const auto& row : resolvent_profile(eta, n_range, ctx))
      resolvent = std::max(resolvent, -row.margin / row.bound);
    for (ShiftGenerator g : {ShiftGenerator::Lambda, ShiftGenerator::LambdaInverse})
      for (const auto& row : commutator_block(eta, g, n_range, ctx)) {
        commutator = std::max(commutator, (row.norm - row.bound * (1.0 + 1e-6)) / row.bound);
        if (g == ShiftGenerator::Lambda) sup_bound = std::max(sup_bound, row.bound);
      }
  }
  R.custom("dirac.resolvent", 0.0, resolvent, resolvent <= 0.0,
           "max (1/sigma_min - bound (1 + 1e-6)) / bound");
  R.custom("dirac.commutator", 0.0, commutator, commutator <= 0.0,
           "max (norm - bound (1 + 1e-6)) / bound");
  R.custom("dirac.commutator_sup", gamma[1], sup_bound, sup_bound <= gamma[1] * (1.0 + 1e-12),
           "sup of commutator bounds against Gamma_1");

  auto rng = R.rng(7);
  double deriv = 0.0;
  for (int t = 0; t < 3; ++t) {
    const WeylElement f = interior_element(d.alpha(), rng);
    const GnsOperator A = represent(f, d, box);
    const GnsOperator As = represent(involution(f), d, box);
    for (double eta : {0.0, 0.5, 1.0}) {
      const Eigen::MatrixXcd D = deformed_derivation(eta, A, ctx);
      const Eigen::MatrixXcd Ds = deformed_derivation(eta, As, ctx);
      deriv = std::max(deriv, max_abs(D.adjoint() - Ds));
    }
  }
  R.deviation("dirac.derivation_adjoint", deriv);
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::vector<SuiteResult> VerifyReport::failures() const {
  std::vector<SuiteResult> out;
  for (const auto& s : suites)
    if (!s.passed) out.push_back(s);
  return out;
}

Json VerifyReport::to_json() const {
  Json arr = Json::array();
  for (const auto& s : suites) {
    Json j{{"name", s.name}, {"tolerance", s.tolerance}, {"observed", s.observed}, {"passed", s.passed}};
    if (!s.detail.empty()) j["detail"] = s.detail;
    arr.push_back(std::move(j));
  }
  return {{"passed", all_passed()}, {"suites", arr}};
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table = {
      {"spectral.roundtrip", 1e-12},
      {"spectral.parseval", 1e-10},
      {"spectral.linearity", 1e-12},
      {"circle.cocycle", 1e-9},
      {"circle.normalization", 1e-9},
      {"circle.inverse", 1e-9},
      {"circle.group_action", 1e-11},
      {"weyl.relations", 1e-14},
      {"weyl.associativity", 1e-12},
      {"weyl.involution", 1e-12},
      {"weyl.trace", 1e-12},
      {"gns.orthonormality", 1e-14},
      {"gns.adjoint", 1e-9},
      {"gns.state_positivity", 1e-10},
      {"gns.identity", 1e-14},
      {"gns.u_kl", 1e-8},
      {"modular.tomita", 1e-7},
      {"modular.tomita.rotation", 1e-9},
      {"modular.s_involution", 1e-8},
      {"modular.delta_symmetry", 1e-9},
      {"modular.borel", 1e-9},
      {"modular.epsilon_orthonormal", 1e-9},
      {"fourier.parseval", 1e-12},
      {"fourier.hausdorff_young", 1e-12},
      {"fourier.hat_two_route", 1e-12},
      {"fourier.paren_routes", 1e-7},
      {"fourier.paren_adjoint", 1e-9},
      {"fourier.classical_limit", 1e-10},
      {"summation.transference_generators", 1e-12},
      {"summation.transference_random", 1e-10},
      {"summation.fejer_weights", 1e-12},
      {"summation.transference_integral", 1e-9},
      {"summation.paren_fejer", 1e-9},
      {"summation.dirichlet_growth", 0.2},
      {"summation.dirichlet_sup", 1e-9},
      {"dirac.master", 1e-7},
      {"dirac.master.rotation", 1e-12},
      {"dirac.block_diagonal", 1e-7},
      {"dirac.self_adjoint", 1e-9},
      {"dirac.telescoping", 1e-12},
      {"dirac.gamma_identity", 1e-12},
      {"dirac.derivation_adjoint", 1e-8},
  };
  return table;
}

double suite_tolerance(const ExperimentConfig& config, const std::string& name, double tol_scale) {
  if (!(tol_scale > 0.0)) throw InvalidArgumentError("tol_scale must be positive");
  if (auto it = config.tolerances.find(name); it != config.tolerances.end()) return it->second * tol_scale;
  const auto& table = default_tolerances();
  auto it = table.find(name);
  if (it == table.end()) throw InvalidArgumentError("no tolerance for suite '" + name + "'");
  return it->second * tol_scale;
}

VerifyReport run_invariant_suite(const ExperimentConfig& config, double tol_scale) {
  for (const auto& [name, v] : config.tolerances)
    if (!default_tolerances().count(name)) throw ConfigError("unknown tolerance key '" + name + "'");
  Runner R(config, tol_scale);
  spectral_suites(R);
  circle_suites(R);
  weyl_suites(R);
  gns_suites(R);
  const ModularData md(config.diffeo, config.box);
  const EpsilonBasis eps(md);
  modular_suites(R, md, eps);
  fourier_suites(R, eps);
  summation_suites(R, eps);
  dirac_suites(R);
  return std::move(R.report);
}

}  // namespace nctorus
