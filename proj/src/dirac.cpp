#include "nctorus/dirac.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {
namespace {

CVector monomial_samples(int l, int G) {
  CVector g(G);
  for (int j = 0; j < G; ++j) g[j] = std::polar(1.0, l * GridFunction::angle(j, G));
  return g;
}

CVector scaled(const RVector& w, const CVector& x) {
  return (w.array().cast<cplx>() * x.array()).matrix();
}

// (d/dtheta - a) x
CVector apply_L(const CVector& x, double a) { return spectral::angular_derivative(x) - a * x; }
// (-d/dtheta - a) x
CVector apply_L_star(const CVector& x, double a) {
  return -spectral::angular_derivative(x) - a * x;
}

CVector project_checked(const CVector& samples, int M) {
  const int G = static_cast<int>(samples.size());
  const double tail = spectral::relative_tail(samples, G / 4);
  if (tail > 1e-6)
    throw AliasingError("Dirac pipeline leaves unresolved grid content " + std::to_string(tail));
  return spectral::project(samples, M);
}

Eigen::MatrixXcd toeplitz_from_spectrum(const CVector& spec, int M) {
  const int G = static_cast<int>(spec.size());
  Eigen::MatrixXcd T(2 * M + 1, 2 * M + 1);
  for (int s = -M; s <= M; ++s)
    for (int l = -M; l <= M; ++l) T(s + M, l + M) = spec[spectral::mode_slot(s - l, G)];
  return T;
}

double largest_singular_value(const Eigen::MatrixXcd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  return svd.singularValues()(0);
}

}  // namespace

DiracCoefficients::DiracCoefficients(int bound, std::vector<double> values)
    : bound_(bound), a_(std::move(values)) {
  if (static_cast<int>(a_.size()) != 2 * bound + 1)
    throw InvalidArgumentError("Dirac coefficient table has the wrong length");
}

double DiracCoefficients::operator[](int n) const {
  if (std::abs(n) > bound_)
    throw OutOfBoxError("a_" + std::to_string(n) + " not computed (bound " + std::to_string(bound_) + ")");
  return a_[n + bound_];
}

DiracCoefficients a_sequence(const GrowthSequence& gamma, int bound) {
  if (gamma.max_index() < bound)
    throw InvalidArgumentError("growth sequence too short for the requested bound");
  std::vector<double> a(2 * bound + 1, 0.0);
  double up = 0.0, down = 0.0;
  for (int n = 1; n <= bound; ++n) {
    up += 1.0 / gamma[n];
    down += 1.0 / gamma[n - 1];
    a[bound + n] = up;
    a[bound - n] = -down;
  }
  return DiracCoefficients(bound, std::move(a));
}

double DiracBlock::self_adjoint_deviation() const {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

DiracContext::DiracContext(const DiffeoSpec& d, const TruncationBox& box, int growth_grid)
    : eps_(ModularData(d, box)),
      gamma_(growth_sequence(d, box.K + 1, growth_grid)),
      a_(a_sequence(gamma_, box.K + 1)) {
  for (int n = -box.K; n <= box.K; ++n) {
    const RVector& dn = modular().delta(n);
    delta_spec_.push_back(spectral::forward(dn.cast<cplx>()));
    inv_delta_spec_.push_back(spectral::forward(dn.cwiseInverse().cast<cplx>()));
  }
}

cplx DiracContext::delta_coefficient(int n, double p, int q) const {
  if (std::abs(n) > box().K) throw OutOfBoxError("delta_" + std::to_string(n) + " outside the box");
  const int slot = spectral::mode_slot(q, box().G);
  if (p == 1.0) return delta_spec_[n + box().K][slot];
  if (p == -1.0) return inv_delta_spec_[n + box().K][slot];
  return spectral::forward(modular().delta_power(n, p).cast<cplx>())[slot];
}

DiracBlock undeformed_block(int n, const DiracCoefficients& a, int M) {
  const int m = 2 * M + 1;
  DiracBlock b;
  b.n = n;
  b.eta = 0.0;
  b.matrix = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (int l = -M; l <= M; ++l) {
    b.matrix(l + M, m + l + M) = cplx(-a[n], l);
    b.matrix(m + l + M, l + M) = cplx(-a[n], -l);
  }
  return b;
}

DiracBlock deformed_block(int n, double eta, const DiracContext& ctx) {
  if (eta < 0.0 || eta > 1.0) throw InvalidArgumentError("eta must lie in [0, 1]");
  const TruncationBox& box = ctx.box();
  const int M = box.M, G = box.G, m = 2 * M + 1;
  const ModularData& md = ctx.modular();
  const double an = ctx.coeffs()[n];
  const RVector left = md.delta_power(n, eta - 1.0);
  const RVector right = md.delta_power(n, -eta);
  DiracBlock b;
  b.n = n;
  b.eta = eta;
  b.matrix = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (int l = -M; l <= M; ++l) {
    const CVector g = monomial_samples(l, G);
    const CVector up = project_checked(scaled(left, apply_L(scaled(right, g), an)), M);
    const CVector lo = project_checked(scaled(right, apply_L_star(scaled(left, g), an)), M);
    b.matrix.block(0, m + l + M, m, 1) = up;
    b.matrix.block(m, l + M, m, 1) = lo;
  }
  return b;
}

cplx matrix_element_closed_form(double eta, int k, int l, int r, int s, const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  if (!box.contains(k, l) || !box.contains(r, s)) throw OutOfBoxError("matrix element index outside the box");
  if (k != r) return 0.0;
  const DiracCoefficients& a = ctx.coeffs();
  if (eta == 0.0) return cplx(-a[k], l) * ctx.delta_coefficient(k, -1.0, s - l);
  if (eta == 1.0) return cplx(-a[k], s) * ctx.delta_coefficient(k, -1.0, s - l);
  if (eta == 0.5) {
    const cplx diag = l == s ? cplx(0.0, l) : cplx(0.0);
    return -(diag + a[-k] * ctx.delta_coefficient(k, 1.0, l - s));
  }
  throw InvalidArgumentError("closed-form matrix elements exist only for eta in {0, 1/2, 1}");
}

ElementBasis default_basis(double eta) { return eta == 0.5 ? ElementBasis::Paren : ElementBasis::Hat; }

namespace {

struct PipelineOutput {
  int block = 0;
  CVector samples;
};

PipelineOutput run_pipeline(double eta, ElementBasis basis, int k, int l, const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  const ModularData& md = ctx.modular();
  PipelineOutput out;
  CVector v;
  if (basis == ElementBasis::Hat) {
    out.block = k;
    v = monomial_samples(l, box.G);
  } else {
    out.block = -k;
    v = ctx.epsilon().block(k, l);
  }
  const int n = out.block;
  out.samples = scaled(md.delta_power(n, eta - 1.0),
                       apply_L(scaled(md.delta_power(n, -eta), v), ctx.coeffs()[n]));
  return out;
}

cplx pair_with(const PipelineOutput& w, ElementBasis basis, int r, int s, const DiracContext& ctx) {
  const int G = ctx.box().G;
  if (basis == ElementBasis::Hat) {
    if (w.block != r) return 0.0;
    return monomial_samples(s, G).dot(w.samples) / static_cast<double>(G);
  }
  if (w.block != -r) return 0.0;
  return ctx.epsilon().block(r, s).dot(w.samples) / static_cast<double>(G);
}

}  // namespace

cplx matrix_element_oracle(double eta, ElementBasis basis, int k, int l, int r, int s,
                           const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  if (!box.contains(k, l) || !box.contains(r, s)) throw OutOfBoxError("matrix element index outside the box");
  return pair_with(run_pipeline(eta, basis, k, l, ctx), basis, r, s, ctx);
}

cplx matrix_element_oracle(double eta, int k, int l, int r, int s, const DiracContext& ctx) {
  return matrix_element_oracle(eta, default_basis(eta), k, l, r, s, ctx);
}

std::vector<MatrixElementRow> matrix_element_sweep(double eta, int range, const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  if (range < 0 || range > std::min(box.K, box.M)) throw OutOfBoxError("sweep range exceeds the box");
  const ElementBasis basis = default_basis(eta);
  std::vector<MatrixElementRow> rows;
  for (int k = -range; k <= range; ++k)
    for (int l = -range; l <= range; ++l) {
      const PipelineOutput w = run_pipeline(eta, basis, k, l, ctx);
      for (int r = -range; r <= range; ++r)
        for (int s = -range; s <= range; ++s) {
          MatrixElementRow row;
          row.eta = eta;
          row.k = k; row.l = l; row.r = r; row.s = s;
          row.closed_form = matrix_element_closed_form(eta, k, l, r, s, ctx);
          row.oracle = pair_with(w, basis, r, s, ctx);
          row.deviation = std::abs(row.closed_form - row.oracle);
          rows.push_back(row);
        }
    }
  return rows;
}

std::vector<ResolventRow> resolvent_profile(double eta, int n_range, const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  if (n_range < 0 || n_range > box.K) throw OutOfBoxError("resolvent range exceeds the box");
  const int M = box.M;
  std::vector<ResolventRow> rows;
  for (int n = -n_range; n <= n_range; ++n) {
    const DiracBlock b = deformed_block(n, eta, ctx);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b.matrix);
    const RVector& sv = svd.singularValues();
    ResolventRow row;
    row.n = n;
    row.eta = eta;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] < 1e-10) ++row.kernel_dim;
    row.sigma_min = sv[sv.size() - 1 - row.kernel_dim];
    if (n != 0 && row.sigma_min < 1e-13)
      throw SingularBlockError("block " + std::to_string(n) + " is numerically singular");
    const double an = ctx.coeffs()[n];
    double smallest = std::numeric_limits<double>::infinity();
    for (int l = -M; l <= M; ++l) {
      const double v = std::hypot(static_cast<double>(l), an);
      if (v > 0.0) smallest = std::min(smallest, v);
    }
    row.inverse_norm = 1.0 / row.sigma_min;
    row.bound = ctx.growth()[std::abs(n)] / smallest;
    row.margin = row.bound * (1.0 + 1e-6) - row.inverse_norm;
    rows.push_back(row);
  }
  return rows;
}

std::vector<CommutatorRow> commutator_block(double eta, ShiftGenerator g, int n_range,
                                            const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  const ModularData& md = ctx.modular();
  const DiracCoefficients& a = ctx.coeffs();
  const GrowthSequence& gamma = ctx.growth();
  const int M = box.M, G = box.G, m = 2 * M + 1;
  const int step = g == ShiftGenerator::Lambda ? -1 : 1;
  std::vector<CommutatorRow> rows;
  for (int n = -n_range; n <= n_range; ++n) {
    const int src = n + step;
    if (std::abs(n) > box.K || std::abs(src) > box.K) continue;
    const RVector left = md.delta_power(n, eta - 1.0);
    const RVector right = md.delta_power(src, -eta);
    Eigen::MatrixXcd C(m, m);
    for (int l = -M; l <= M; ++l) {
      const CVector y = scaled(right, monomial_samples(l, G));
      const CVector comm = apply_L(y, a[n]) - apply_L(y, a[src]);
      C.col(l + M) = project_checked(scaled(left, comm), M);
    }
    CommutatorRow row;
    row.n = n;
    row.eta = eta;
    row.norm = largest_singular_value(C);
    row.bound = std::abs(a[src] - a[n]) * std::pow(gamma[std::abs(n)], 1.0 - eta) *
                std::pow(gamma[std::abs(src)], eta);
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd deformed_derivation(double eta, const GnsOperator& A, const DiracContext& ctx) {
  const TruncationBox& box = ctx.box();
  if (!(A.box() == box)) throw GridMismatchError("operator box differs from the Dirac box");
  const int N = box.dim(), m = box.modes(), M = box.M;
  const Eigen::MatrixXcd D = A.to_dense();
  CVector L(N), Ls(N);
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -M; l <= M; ++l) {
      L[box.index(k, l)] = cplx(-ctx.coeffs()[k], l);
      Ls[box.index(k, l)] = cplx(-ctx.coeffs()[k], -l);
    }
  auto compression = [&](double p) {
    std::vector<Eigen::MatrixXcd> blocks;
    for (int k = -box.K; k <= box.K; ++k)
      blocks.push_back(toeplitz_from_spectrum(
          spectral::forward(ctx.modular().delta_power(k, p).cast<cplx>()), M));
    return blocks;
  };
  const auto left = compression(eta - 1.0);
  const auto right = compression(-eta);
  const Eigen::MatrixXcd commL = L.asDiagonal() * D - D * L.asDiagonal();
  const Eigen::MatrixXcd commLs = Ls.asDiagonal() * D - D * Ls.asDiagonal();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
  const int B = box.blocks();
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j) {
      if (commL.block(i * m, j * m, m, m).isZero(0.0) && commLs.block(i * m, j * m, m, m).isZero(0.0))
        continue;
      out.block(i * m, N + j * m, m, m).noalias() =
          cplx(0.0, 1.0) * (left[i] * commL.block(i * m, j * m, m, m) * right[j]);
      out.block(N + i * m, j * m, m, m).noalias() =
          cplx(0.0, 1.0) * (right[i] * commLs.block(i * m, j * m, m, m) * left[j]);
    }
  return out;
}

}  // namespace nctorus
