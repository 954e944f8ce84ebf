#include "nctorus/summation.hpp"

#include <cmath>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {
namespace {

struct SourceData {
  FourierCoeffs table;
  BlockGrid target;
};

SourceData prepare(const MeanSource& source, TransformKind kind, const EpsilonBasis& eps) {
  const TruncationBox& box = eps.box();
  const ModularData& md = eps.modular();
  const BlockGrid xi(cyclic_vector(box));
  SourceData s;
  if (const auto* a = std::get_if<WeylElement>(&source)) {
    const BlockGrid y = represent(*a, md.diffeo(), box).apply(xi);
    if (kind == TransformKind::Hat) {
      s.target = BlockGrid(y.project());
      s.table = hat_vector(y.project());
    } else {
      s.target = apply_delta_power(1.0, y, md);
      s.table = paren_functional(*a, eps);
    }
  } else {
    const GnsVector& x = std::get<GnsVector>(source);
    if (!(x.box() == box)) throw GridMismatchError("source vector box differs from the basis box");
    s.target = BlockGrid(x);
    s.table = kind == TransformKind::Hat ? hat_vector(x) : paren_vector(s.target, eps);
  }
  return s;
}

}  // namespace

TransferencePoint::TransferencePoint(cplx a, cplx b) : w1(a), w2(b) {
  if (std::abs(std::abs(a) - 1.0) > 1e-14 || std::abs(std::abs(b) - 1.0) > 1e-14)
    throw InvalidArgumentError("transference point must have unit-modulus entries");
}

TransferencePoint TransferencePoint::from_angles(double t1, double t2) {
  return TransferencePoint(std::polar(1.0, t1), std::polar(1.0, t2));
}

double SummationKernel::coefficient(int l) const {
  switch (kind) {
    case Kind::Fejer:
      return std::max(0.0, 1.0 - std::abs(l) / (order + 1.0));
    case Kind::Poisson:
      return std::pow(radius, std::abs(l));
    case Kind::Dirichlet:
      return std::abs(l) <= order ? 1.0 : 0.0;
  }
  return 0.0;
}

double SummationKernel::value(double theta) const {
  switch (kind) {
    case Kind::Fejer: {
      const double s = std::sin(theta / 2.0);
      if (std::abs(s) < 1e-12) return order + 1.0;
      const double t = std::sin((order + 1.0) * theta / 2.0);
      return t * t / (s * s) / (order + 1.0);
    }
    case Kind::Poisson:
      return (1.0 - radius * radius) / (1.0 - 2.0 * radius * std::cos(theta) + radius * radius);
    case Kind::Dirichlet: {
      const double s = std::sin(theta / 2.0);
      if (std::abs(s) < 1e-12) return 2.0 * order + 1.0;
      return std::sin((order + 0.5) * theta) / s;
    }
  }
  return 0.0;
}

GnsVector transfer_vector(const TransferencePoint& w, const GnsVector& x) {
  const TruncationBox& box = x.box();
  GnsVector y = x;
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l)
      if (x.at(k, l) != cplx(0.0)) y.set(k, l, x.at(k, l) * std::pow(w.w2, k) * std::pow(w.w1, l));
  return y;
}

BlockGrid transfer_vector(const TransferencePoint& w, const BlockGrid& x) {
  const TruncationBox& box = x.box();
  BlockGrid y(box);
  const double phi = std::arg(w.w1);
  for (int n = -box.K; n <= box.K; ++n) {
    if (x.block(n).isZero(0.0)) continue;
    y.block(n) = std::pow(w.w2, n) * spectral::rotate(x.block(n), phi);
  }
  return y;
}

GnsOperator transfer_operator(const TransferencePoint& w, const GnsOperator& A) {
  const TruncationBox& box = A.box();
  GnsOperator out(box);
  const double phi = std::arg(w.w1);
  for (const auto& [s, mult] : A.terms()) {
    std::vector<CVector>& dst = out.shift_term(s);
    const cplx phase = std::pow(w.w2, s);
    for (int n = -box.K; n <= box.K; ++n) {
      const CVector& m = mult[n + box.K];
      if (m.isZero(0.0)) continue;
      dst[n + box.K] = phase * spectral::rotate(m, phi);
    }
  }
  if (A.lost_shifts()) out.mark_lost_shifts();
  return out;
}

std::vector<FourierCoeffs> transferred_hat_tables(const TransferencePoint& w,
                                                  const std::vector<WeylElement>& elements,
                                                  const DiffeoSpec& d, const TruncationBox& box) {
  const BlockGrid xi(cyclic_vector(box));
  std::vector<BlockGrid> ys;
  ys.reserve(elements.size());
  for (const WeylElement& a : elements) ys.push_back(represent(a, d, box).apply(xi));
  std::vector<FourierCoeffs> tables(elements.size(), FourierCoeffs(TransformKind::Hat, box.K, box.M));
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) {
      const BlockGrid v = transfer_operator(w, build_u_kl(k, l, d, box)).apply(xi);
      for (std::size_t i = 0; i < ys.size(); ++i) tables[i].set(k, l, ys[i].inner(v));
    }
  return tables;
}

FourierCoeffs source_table(const MeanSource& source, TransformKind kind, const EpsilonBasis& eps) {
  return prepare(source, kind, eps).table;
}

MeanResult weighted_mean(const MeanSource& source, const Eigen::MatrixXd& weights,
                         TransformKind kind, const EpsilonBasis& eps) {
  const TruncationBox& box = eps.box();
  if (weights.rows() != box.blocks() || weights.cols() != box.modes())
    throw InvalidArgumentError("weight table does not match the box");
  const SourceData s = prepare(source, kind, eps);
  FourierCoeffs weighted(kind, box.K, box.M,
                         (s.table.table().array() * weights.array().cast<cplx>()).matrix());
  MeanResult out;
  out.sup_coeff_error = (s.table.table() - weighted.table()).cwiseAbs().maxCoeff();
  if (kind == TransformKind::Hat) {
    out.mean = anti_transform_hat(weighted, box);
    out.l2_error = (BlockGrid(out.mean) - s.target).norm();
  } else {
    const BlockGrid m = anti_transform_paren(weighted, eps);
    out.l2_error = (m - s.target).norm();
    out.mean = m.project();
  }
  return out;
}

MeanResult fejer_mean(const MeanSource& source, int N, TransformKind kind, const EpsilonBasis& eps) {
  const TruncationBox& box = eps.box();
  if (N < 0 || N > std::min(box.K, box.M))
    throw InvalidArgumentError("Fejer order must satisfy 0 <= N <= min(K, M)");
  const SummationKernel F = SummationKernel::fejer(N);
  Eigen::MatrixXd w(box.blocks(), box.modes());
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) w(k + box.K, l + box.M) = F.coefficient(k) * F.coefficient(l);
  return weighted_mean(source, w, kind, eps);
}

MeanResult abel_mean(const MeanSource& source, double r, TransformKind kind,
                     const EpsilonBasis& eps) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidArgumentError("Abel radius must lie in [0, 1)");
  const TruncationBox& box = eps.box();
  Eigen::MatrixXd w(box.blocks(), box.modes());
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) w(k + box.K, l + box.M) = std::pow(r, std::abs(k) + std::abs(l));
  return weighted_mean(source, w, kind, eps);
}

double transference_integral_check(const MeanSource& source, int N, int Q,
                                   const EpsilonBasis& eps) {
  if (Q < 4 * N + 4) throw InvalidArgumentError("transference quadrature needs Q >= 4N+4");
  const TruncationBox& box = eps.box();
  const SourceData s = prepare(source, TransformKind::Hat, eps);
  const GnsVector x = s.target.project();
  const SummationKernel F = SummationKernel::fejer(N);
  GnsVector integral(box);
  for (int i = 0; i < Q; ++i) {
    const double t1 = GridFunction::angle(i, Q);
    for (int j = 0; j < Q; ++j) {
      const double t2 = GridFunction::angle(j, Q);
      const double weight = F.value(t1) * F.value(t2) / (static_cast<double>(Q) * Q);
      integral += weight * transfer_vector(TransferencePoint::from_angles(t1, t2), x);
    }
  }
  const MeanResult direct = fejer_mean(GnsVector(x), N, TransformKind::Hat, eps);
  return (integral - direct.mean).norm();
}

std::vector<KernelL1Row> kernel_l1_profile(const std::vector<int>& n_values) {
  std::vector<KernelL1Row> rows;
  for (int n : n_values) {
    if (n < 0) throw InvalidArgumentError("Dirichlet order must be >= 0");
    int G = 1 << 14;
    while (G < 2048 * (n + 1)) G *= 2;
    const SummationKernel D = SummationKernel::dirichlet(n);
    double sum = 0.0;
    for (int j = 0; j < G; ++j) sum += std::abs(D.value(kTwoPi * (j + 0.5) / G));
    rows.push_back({n, sum / G});
  }
  return rows;
}

FourierCoeffs dirichlet_functional_table(int n, const DiffeoSpec& d, const TruncationBox& box) {
  const int G = default_grid_size(n + box.M);
  const CVector hinv = inverse_conjugator_samples(d, G);
  const SummationKernel D = SummationKernel::dirichlet(n);
  RVector kernel(G);
  for (int j = 0; j < G; ++j) kernel[j] = D.value(GridFunction::angle(j, G));
  FourierCoeffs table(TransformKind::Hat, box.K, box.M);
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) {
      const WeylElement u_star = involution(u_kl_element(k, l, d, box));
      bool has_column = false;
      for (int m = -u_star.S1(); m <= u_star.S1() && !has_column; ++m)
        has_column = u_star.coeff({m, 0}) != cplx(0.0);
      if (!has_column) continue;
      const CVector vals = evaluate_column(u_star, 0, hinv);
      table.set(k, l, (vals.array() * kernel.array().cast<cplx>()).mean());
    }
  return table;
}

}  // namespace nctorus
