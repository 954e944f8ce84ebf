#pragma once

#include <vector>

#include "nctorus/fourier.hpp"

namespace nctorus {

/// a_0 = 0, a_n = sum_{l=1}^n 1/Gamma_l (n > 0), a_n = -sum_{l=0}^{|n|-1} 1/Gamma_l (n < 0).
class DiracCoefficients {
 public:
  DiracCoefficients() = default;
  DiracCoefficients(int bound, std::vector<double> values);

  int bound() const { return bound_; }
  double operator[](int n) const;

 private:
  int bound_ = 0;
  std::vector<double> a_{0.0};
};

/// Uses Gamma_0..Gamma_bound.
DiracCoefficients a_sequence(const GrowthSequence& gamma, int bound);

/// [[0, upper], [lower, 0]] in the basis {z^l} + {z^l}, |l| <= M.
struct DiracBlock {
  int n = 0;
  double eta = 0.0;
  Eigen::MatrixXcd matrix;

  int modes() const { return static_cast<int>(matrix.rows() / 2); }
  Eigen::MatrixXcd upper() const { return matrix.topRightCorner(modes(), modes()); }
  Eigen::MatrixXcd lower() const { return matrix.bottomLeftCorner(modes(), modes()); }
  /// max |D - D^*|.
  double self_adjoint_deviation() const;
};

/// Cached growth sequence, a_n, delta_n grids and the epsilon basis for one diffeo and box.
class DiracContext {
 public:
  DiracContext(const DiffeoSpec& d, const TruncationBox& box, int growth_grid = 4096);

  const DiffeoSpec& diffeo() const { return eps_.modular().diffeo(); }
  const TruncationBox& box() const { return eps_.box(); }
  const ModularData& modular() const { return eps_.modular(); }
  const EpsilonBasis& epsilon() const { return eps_; }
  const GrowthSequence& growth() const { return gamma_; }
  const DiracCoefficients& coeffs() const { return a_; }
  /// Classical Fourier coefficient of delta_n^p at mode q.
  cplx delta_coefficient(int n, double p, int q) const;

 private:
  EpsilonBasis eps_;
  GrowthSequence gamma_;
  DiracCoefficients a_;
  std::vector<CVector> delta_spec_, inv_delta_spec_;
};

DiracBlock undeformed_block(int n, const DiracCoefficients& a, int M);
/// Upper corner delta^{eta-1} L delta^{-eta}, lower corner delta^{-eta} L^* delta^{eta-1},
/// each built on the grid and projected.
DiracBlock deformed_block(int n, double eta, const DiracContext& ctx);

/// eta = 0: (il - a_k) (1/delta_k)^(s-l); eta = 1: (is - a_k) (1/delta_k)^(s-l);
/// eta = 1/2 (epsilon basis): -(il delta_{ls} + a_{-k} delta_k^(l-s)); all times delta_{kr}.
cplx matrix_element_closed_form(double eta, int k, int l, int r, int s, const DiracContext& ctx);

enum class ElementBasis { Hat, Paren };
/// Default basis: Paren for eta = 1/2, Hat otherwise.
ElementBasis default_basis(double eta);

/// <Delta^{eta-1} L Delta^{-eta} b^{kl}, b^{rs}> through the grid pipeline.
cplx matrix_element_oracle(double eta, int k, int l, int r, int s, const DiracContext& ctx);
cplx matrix_element_oracle(double eta, ElementBasis basis, int k, int l, int r, int s,
                           const DiracContext& ctx);

struct MatrixElementRow {
  double eta = 0.0;
  int k = 0, l = 0, r = 0, s = 0;
  cplx closed_form;
  cplx oracle;
  double deviation = 0.0;
};

/// All |k|,|l|,|r|,|s| <= range.
std::vector<MatrixElementRow> matrix_element_sweep(double eta, int range, const DiracContext& ctx);

struct ResolventRow {
  int n = 0;
  double eta = 0.0;
  double sigma_min = 0.0;
  double inverse_norm = 0.0;  // 1/sigma_min
  double bound = 0.0;         // Gamma_|n| ||D_n^{-1}||
  double margin = 0.0;        // bound (1 + 1e-6) - inverse_norm
  int kernel_dim = 0;
};

std::vector<ResolventRow> resolvent_profile(double eta, int n_range, const DiracContext& ctx);

enum class ShiftGenerator { Lambda, LambdaInverse };

struct CommutatorRow {
  int n = 0;
  double eta = 0.0;
  double norm = 0.0;
  double bound = 0.0;
};

/// Norm of the block of Delta^{eta-1} [L, g] Delta^{-eta} landing in block n, g = lambda^{+-1}.
std::vector<CommutatorRow> commutator_block(double eta, ShiftGenerator g, int n_range,
                                            const DiracContext& ctx);

/// i [[0, Delta^{eta-1}[L, A]Delta^{-eta}], [Delta^{-eta}[L^*, A]Delta^{eta-1}, 0]] on the box.
Eigen::MatrixXcd deformed_derivation(double eta, const GnsOperator& A, const DiracContext& ctx);

}  // namespace nctorus
