#include "nctorus/fourier.hpp"

#include <cmath>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {

const char* kind_name(TransformKind kind) { return kind == TransformKind::Hat ? "hat" : "paren"; }

FourierCoeffs::FourierCoeffs(TransformKind kind, int K, int M)
    : kind_(kind), K_(K), M_(M), table_(Eigen::MatrixXcd::Zero(2 * K + 1, 2 * M + 1)) {}

FourierCoeffs::FourierCoeffs(TransformKind kind, int K, int M, Eigen::MatrixXcd table)
    : kind_(kind), K_(K), M_(M), table_(std::move(table)) {
  if (table_.rows() != 2 * K + 1 || table_.cols() != 2 * M + 1)
    throw InvalidArgumentError("coefficient table does not match its bounds");
}

cplx FourierCoeffs::at(int k, int l) const {
  if (std::abs(k) > K_ || std::abs(l) > M_) return 0.0;
  return table_(k + K_, l + M_);
}

void FourierCoeffs::set(int k, int l, cplx value) {
  if (std::abs(k) > K_ || std::abs(l) > M_)
    throw OutOfBoxError("coefficient index outside the table");
  table_(k + K_, l + M_) = value;
}

double FourierCoeffs::sup_norm() const { return table_.size() ? table_.cwiseAbs().maxCoeff() : 0.0; }

EpsilonBasis::EpsilonBasis(const ModularData& md) : md_(md) {
  const TruncationBox& box = md.box();
  blocks_.reserve(box.dim());
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) blocks_.push_back(epsilon_basis(k, l, md).block(-k));
}

const CVector& EpsilonBasis::block(int k, int l) const {
  if (!box().contains(k, l)) throw OutOfBoxError("epsilon^{kl} index outside the box");
  return blocks_[box().index(k, l)];
}

BlockGrid EpsilonBasis::vector(int k, int l) const {
  BlockGrid e(box());
  e.block(-k) = block(k, l);
  return e;
}

cplx EpsilonBasis::coefficient(const BlockGrid& y, int k, int l) const {
  return block(k, l).dot(y.block(-k)) / static_cast<double>(box().G);
}

FourierCoeffs hat_vector(const GnsVector& x) {
  return FourierCoeffs(TransformKind::Hat, x.box().K, x.box().M, x.coeffs());
}

FourierCoeffs hat_functional(const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box) {
  const BlockGrid y = represent(a, d, box).apply(BlockGrid(cyclic_vector(box)));
  return hat_vector(y.project());
}

FourierCoeffs paren_vector(const BlockGrid& y, const EpsilonBasis& eps) {
  const TruncationBox& box = eps.box();
  FourierCoeffs c(TransformKind::Paren, box.K, box.M);
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) c.set(k, l, eps.coefficient(y, k, l));
  return c;
}

ParenRoutes paren_routes(const WeylElement& a, const EpsilonBasis& eps) {
  const TruncationBox& box = eps.box();
  const ModularData& md = eps.modular();
  const GnsOperator op = represent(a, md.diffeo(), box);
  ParenRoutes out;
  out.via_state = FourierCoeffs(TransformKind::Paren, box.K, box.M);
  for (int k = -box.K; k <= box.K; ++k) {
    if (!op.has_shift(-k)) continue;
    const CVector c = spectral::forward(op.multiplier(0, -k));
    for (int l = -box.M; l <= box.M; ++l) out.via_state.set(k, l, c[spectral::mode_slot(-l, box.G)]);
  }
  const BlockGrid y = apply_delta_power(1.0, op.apply(BlockGrid(cyclic_vector(box))), md);
  out.via_modular = paren_vector(y, eps);
  out.deviation = (out.via_state.table() - out.via_modular.table()).cwiseAbs().maxCoeff();
  return out;
}

FourierCoeffs paren_functional(const WeylElement& a, const EpsilonBasis& eps, double tol) {
  ParenRoutes r = paren_routes(a, eps);
  if (r.deviation > tol)
    throw RouteDisagreementError("paren routes disagree by " + std::to_string(r.deviation));
  return r.via_state;
}

GnsVector anti_transform_hat(const FourierCoeffs& c, const TruncationBox& box) {
  if (c.K() > box.K || c.M() > box.M) throw OutOfBoxError("coefficient table exceeds the box");
  GnsVector x(box);
  for (int k = -c.K(); k <= c.K(); ++k)
    for (int l = -c.M(); l <= c.M(); ++l) x.set(k, l, c.at(k, l));
  return x;
}

BlockGrid anti_transform_paren(const FourierCoeffs& c, const EpsilonBasis& eps) {
  const TruncationBox& box = eps.box();
  if (c.K() > box.K || c.M() > box.M) throw OutOfBoxError("coefficient table exceeds the box");
  BlockGrid y(box);
  for (int k = -c.K(); k <= c.K(); ++k)
    for (int l = -c.M(); l <= c.M(); ++l) {
      const cplx v = c.at(k, l);
      if (v != cplx(0.0)) y.block(-k) += v * eps.block(k, l);
    }
  return y;
}

GnsVector anti_transform(const FourierCoeffs& c, const EpsilonBasis& eps) {
  if (c.kind() == TransformKind::Hat) return anti_transform_hat(c, eps.box());
  return anti_transform_paren(c, eps).project();
}

GnsOperator anti_transform_operator(const FourierCoeffs& c, const DiffeoSpec& d,
                                    const TruncationBox& box) {
  if (c.K() > box.K || c.M() > box.M) throw OutOfBoxError("coefficient table exceeds the box");
  WeylElement sum(d.alpha(), 0, 0);
  for (int k = -c.K(); k <= c.K(); ++k)
    for (int l = -c.M(); l <= c.M(); ++l) {
      const cplx v = c.at(k, l);
      if (v == cplx(0.0)) continue;
      WeylElement u = u_kl_element(k, l, d, box);
      if (c.kind() == TransformKind::Paren) u = involution(u);
      sum += v * u;
    }
  return represent(sum, d, box);
}

RiemannLebesgueProfile riemann_lebesgue_profile(const WeylElement& a, const DiffeoSpec& d,
                                                const TruncationBox& box) {
  const BlockGrid y = represent(a, d, box).apply(BlockGrid(cyclic_vector(box)));
  const FourierCoeffs c = hat_vector(y.project());
  RiemannLebesgueProfile out;
  out.shell_max.assign(std::max(box.K, box.M) + 1, 0.0);
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) {
      const int L = std::max(std::abs(k), std::abs(l));
      out.shell_max[L] = std::max(out.shell_max[L], std::abs(c.at(k, l)));
    }
  out.vector_norm = y.norm();
  out.table_zero = c.sup_norm() == 0.0;
  out.injectivity_ok = !out.table_zero || out.vector_norm <= 1e-10;
  return out;
}

ClassicalComparison classical_limit_compare(const WeylElement& a, const TruncationBox& box) {
  if (a.alpha() != 0.0) throw AlphaMismatchError("classical comparison needs alpha = 0");
  const DiffeoSpec d = DiffeoSpec::rotation(0.0, true);
  const FourierCoeffs hat = hat_functional(a, d, box);
  const EpsilonBasis eps(ModularData(d, box));
  const FourierCoeffs paren = paren_functional(a, eps);

  const int extent = std::max({a.S1(), a.S2(), box.K, box.M});
  int Gc = 8;
  while (Gc < 2 * extent + 2) Gc *= 2;
  Eigen::MatrixXcd fx(Gc, Gc);
  for (int i = 0; i < Gc; ++i)
    for (int j = 0; j < Gc; ++j) {
      const double t1 = GridFunction::angle(i, Gc), t2 = GridFunction::angle(j, Gc);
      cplx v = 0.0;
      for (const auto& [idx, c] : a.support()) v += c * std::polar(1.0, idx.m * t1 + idx.n * t2);
      fx(i, j) = v;
    }
  Eigen::MatrixXcd F(Gc, Gc);
  for (int i = 0; i < Gc; ++i) F.row(i) = spectral::forward(fx.row(i).transpose()).transpose();
  for (int j = 0; j < Gc; ++j) F.col(j) = spectral::forward(F.col(j));
  auto classical = [&](int p, int q) { return F(spectral::mode_slot(p, Gc), spectral::mode_slot(q, Gc)); };

  ClassicalComparison out;
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) {
      out.hat_deviation = std::max(out.hat_deviation, std::abs(hat.at(k, l) - classical(l, k)));
      out.paren_deviation = std::max(out.paren_deviation, std::abs(paren.at(k, l) - classical(-l, -k)));
    }
  return out;
}

double truncated_operator_norm(const GnsOperator& A, int iterations) {
  const Eigen::MatrixXcd D = A.to_dense();
  const TruncationBox& box = A.box();
  CVector x = CVector::Zero(box.dim());
  x[box.index(0, 0)] = 1.0;
  double best = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const CVector y = D * x;
    const double ny = y.norm();
    best = std::max(best, ny);
    if (ny == 0.0) break;
    CVector z = D.adjoint() * y;
    const double nz = z.norm();
    if (nz == 0.0) break;
    x = z / nz;
  }
  return best;
}

}  // namespace nctorus
