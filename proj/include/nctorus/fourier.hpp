#pragma once

#include <vector>

#include "nctorus/gns.hpp"
#include "nctorus/modular.hpp"

namespace nctorus {

enum class TransformKind { Hat, Paren };

const char* kind_name(TransformKind kind);

/// Table over |k| <= K, |l| <= M (rows k + K, columns l + M).
class FourierCoeffs {
 public:
  FourierCoeffs() = default;
  FourierCoeffs(TransformKind kind, int K, int M);
  FourierCoeffs(TransformKind kind, int K, int M, Eigen::MatrixXcd table);

  TransformKind kind() const { return kind_; }
  int K() const { return K_; }
  int M() const { return M_; }
  const Eigen::MatrixXcd& table() const { return table_; }
  Eigen::MatrixXcd& table() { return table_; }
  cplx at(int k, int l) const;
  void set(int k, int l, cplx value);
  double l2_norm() const { return table_.norm(); }
  double sup_norm() const;

 private:
  TransformKind kind_ = TransformKind::Hat;
  int K_ = 0, M_ = 0;
  Eigen::MatrixXcd table_;
};

/// The vectors epsilon^{kl} = J e^{kl}; each lives in block -k only.
class EpsilonBasis {
 public:
  explicit EpsilonBasis(const ModularData& md);

  const ModularData& modular() const { return md_; }
  const TruncationBox& box() const { return md_.box(); }
  /// Samples of block -k of epsilon^{kl}.
  const CVector& block(int k, int l) const;
  BlockGrid vector(int k, int l) const;
  /// <y, epsilon^{kl}>.
  cplx coefficient(const BlockGrid& y, int k, int l) const;

 private:
  ModularData md_;
  std::vector<CVector> blocks_;
};

/// x^(k,l) = <x, e^{kl}>.
FourierCoeffs hat_vector(const GnsVector& x);
/// <pi(a) xi, e^{kl}>.
FourierCoeffs hat_functional(const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box);

/// <y, epsilon^{kl}> for a grid vector y.
FourierCoeffs paren_vector(const BlockGrid& y, const EpsilonBasis& eps);

struct ParenRoutes {
  FourierCoeffs via_state;    // <pi(a) u_kl xi, xi>
  FourierCoeffs via_modular;  // <Delta^{1/2} pi(a) xi, epsilon^{kl}>
  double deviation = 0.0;
};

ParenRoutes paren_routes(const WeylElement& a, const EpsilonBasis& eps);
/// omega(a u_kl); throws RouteDisagreementError when the routes differ by more than tol.
FourierCoeffs paren_functional(const WeylElement& a, const EpsilonBasis& eps, double tol = 1e-7);

/// Hat kind: sum c(k,l) e^{kl}. Paren kind: projection of sum c(k,l) epsilon^{kl}.
GnsVector anti_transform(const FourierCoeffs& c, const EpsilonBasis& eps);
GnsVector anti_transform_hat(const FourierCoeffs& c, const TruncationBox& box);
BlockGrid anti_transform_paren(const FourierCoeffs& c, const EpsilonBasis& eps);
/// Hat kind: sum c(k,l) u_kl. Paren kind: sum c(k,l) u_kl^*.
GnsOperator anti_transform_operator(const FourierCoeffs& c, const DiffeoSpec& d,
                                    const TruncationBox& box);

struct RiemannLebesgueProfile {
  std::vector<double> shell_max;  // r(L), L = 0..max(K, M)
  double vector_norm = 0.0;       // ||pi(a) xi||
  bool table_zero = false;
  bool injectivity_ok = true;
};

RiemannLebesgueProfile riemann_lebesgue_profile(const WeylElement& a, const DiffeoSpec& d,
                                                const TruncationBox& box);

struct ClassicalComparison {
  double hat_deviation = 0.0;
  double paren_deviation = 0.0;
  double max() const { return std::max(hat_deviation, paren_deviation); }
};

/// At alpha = 0 with the identity conjugator: hat(k,l) = f_x^(l,k), paren(k,l) = f_x^(-l,-k).
ClassicalComparison classical_limit_compare(const WeylElement& a, const TruncationBox& box);

/// Largest singular value of P A P by power iteration started at xi.
double truncated_operator_norm(const GnsOperator& A, int iterations = 200);

}  // namespace nctorus
