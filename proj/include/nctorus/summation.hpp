#pragma once

#include <variant>
#include <vector>

#include "nctorus/fourier.hpp"

namespace nctorus {

/// w = (w1, w2) on the 2-torus.
struct TransferencePoint {
  cplx w1 = 1.0;
  cplx w2 = 1.0;

  TransferencePoint() = default;
  TransferencePoint(cplx w1, cplx w2);
  static TransferencePoint from_angles(double t1, double t2);
};

struct SummationKernel {
  enum class Kind { Fejer, Poisson, Dirichlet };
  Kind kind = Kind::Fejer;
  int order = 0;       // N for Fejer, n for Dirichlet
  double radius = 0.0;  // r for Poisson

  static SummationKernel fejer(int N) { return {Kind::Fejer, N, 0.0}; }
  static SummationKernel poisson(double r) { return {Kind::Poisson, 0, r}; }
  static SummationKernel dirichlet(int n) { return {Kind::Dirichlet, n, 0.0}; }

  /// Fourier coefficient of mode l.
  double coefficient(int l) const;
  /// Kernel value at angle theta.
  double value(double theta) const;
};

/// (rho_w x)_n(z) = w2^n x_n(w1 z).
GnsVector transfer_vector(const TransferencePoint& w, const GnsVector& x);
BlockGrid transfer_vector(const TransferencePoint& w, const BlockGrid& x);
/// m_{n,s}(z) -> w2^s m_{n,s}(w1 z).
GnsOperator transfer_operator(const TransferencePoint& w, const GnsOperator& A);

/// Hat tables of L_a o rho_w, i.e. <pi(a) xi, rho_w(u_kl) xi>, for each element.
std::vector<FourierCoeffs> transferred_hat_tables(const TransferencePoint& w,
                                                  const std::vector<WeylElement>& elements,
                                                  const DiffeoSpec& d, const TruncationBox& box);

using MeanSource = std::variant<WeylElement, GnsVector>;

struct MeanResult {
  GnsVector mean;
  double l2_error = 0.0;
  double sup_coeff_error = 0.0;
};

/// Coefficient table of the source in the requested kind.
FourierCoeffs source_table(const MeanSource& source, TransformKind kind, const EpsilonBasis& eps);

/// sum_{|k|,|l|<=N} (1-|k|/(N+1))(1-|l|/(N+1)) c(k,l) e^{kl} (hat) or epsilon^{kl} (paren).
MeanResult fejer_mean(const MeanSource& source, int N, TransformKind kind, const EpsilonBasis& eps);
/// sum r^{|k|+|l|} c(k,l) e^{kl} (hat) or epsilon^{kl} (paren).
MeanResult abel_mean(const MeanSource& source, double r, TransformKind kind,
                     const EpsilonBasis& eps);

/// Weighted mean for an arbitrary weight table (rows k + K, columns l + M).
MeanResult weighted_mean(const MeanSource& source, const Eigen::MatrixXd& weights,
                         TransformKind kind, const EpsilonBasis& eps);

/// || sum_{i,j} Q^{-2} F_N(w1_i) F_N(w2_j) rho_w(x) - Fejer mean || for the hat kind.
/// The Q-point rule is exact once Q > N + max(K, M).
double transference_integral_check(const MeanSource& source, int N, int Q,
                                   const EpsilonBasis& eps);

struct KernelL1Row {
  int n = 0;
  double l1_norm = 0.0;
};

/// ||D_n||_1 by high-resolution quadrature.
std::vector<KernelL1Row> kernel_l1_profile(const std::vector<int>& n_values);

/// X_n^(k,l) = X_n(u_kl^*), X_n(pi(W(f))) = integral of f^(0)(h^{-1}(z)) D_n(z) dm.
FourierCoeffs dirichlet_functional_table(int n, const DiffeoSpec& d, const TruncationBox& box);

}  // namespace nctorus
