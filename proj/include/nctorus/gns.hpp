#pragma once

#include <map>
#include <random>
#include <vector>

#include "nctorus/circle.hpp"
#include "nctorus/spectral.hpp"
#include "nctorus/weyl.hpp"

namespace nctorus {

/// Window |k| <= K, |l| <= M with grid size G >= 8(M+1).
struct TruncationBox {
  int K = 16;
  int M = 16;
  int G = 256;

  TruncationBox() = default;
  TruncationBox(int K, int M, int G);
  static TruncationBox with_default_grid(int K, int M);

  int blocks() const { return 2 * K + 1; }
  int modes() const { return 2 * M + 1; }
  int dim() const { return blocks() * modes(); }
  int index(int k, int l) const { return (k + K) * modes() + (l + M); }
  bool contains(int k, int l) const { return std::abs(k) <= K && std::abs(l) <= M; }
  friend bool operator==(const TruncationBox&, const TruncationBox&) = default;
};

/// Coefficients over the orthonormal family e^{kl}, e^{kl}_n(z) = z^l delta_{n,k}.
class GnsVector {
 public:
  GnsVector() = default;
  explicit GnsVector(const TruncationBox& box);
  GnsVector(const TruncationBox& box, Eigen::MatrixXcd coeffs);

  const TruncationBox& box() const { return box_; }
  /// Rows k + K, columns l + M.
  const Eigen::MatrixXcd& coeffs() const { return coeffs_; }
  Eigen::MatrixXcd& coeffs() { return coeffs_; }
  cplx at(int k, int l) const;
  void set(int k, int l, cplx value);

  double norm() const { return coeffs_.norm(); }
  /// <x, y>, linear in x.
  cplx inner(const GnsVector& y) const;
  CVector flat() const;
  static GnsVector from_flat(const TruncationBox& box, const CVector& v);

  GnsVector& operator+=(const GnsVector& o);
  GnsVector& operator-=(const GnsVector& o);
  GnsVector& operator*=(cplx s);
  friend GnsVector operator+(GnsVector a, const GnsVector& b) { return a += b; }
  friend GnsVector operator-(GnsVector a, const GnsVector& b) { return a -= b; }
  friend GnsVector operator*(cplx s, GnsVector a) { return a *= s; }

 private:
  TruncationBox box_;
  Eigen::MatrixXcd coeffs_;
};

/// Grid samples of the blocks x_n, |n| <= K.
class BlockGrid {
 public:
  BlockGrid() = default;
  explicit BlockGrid(const TruncationBox& box);
  explicit BlockGrid(const GnsVector& x);

  const TruncationBox& box() const { return box_; }
  CVector& block(int n) { return blocks_[n + box_.K]; }
  const CVector& block(int n) const { return blocks_[n + box_.K]; }

  /// Orthogonal projection onto |l| <= M.
  GnsVector project() const;
  /// Largest per-block relative spectral mass in |l| > G/4.
  double alias_fraction() const;
  cplx inner(const BlockGrid& y) const;
  double norm() const;

  BlockGrid& operator+=(const BlockGrid& o);
  BlockGrid& operator-=(const BlockGrid& o);
  BlockGrid& operator*=(cplx s);
  friend BlockGrid operator+(BlockGrid a, const BlockGrid& b) { return a += b; }
  friend BlockGrid operator-(BlockGrid a, const BlockGrid& b) { return a -= b; }
  friend BlockGrid operator*(cplx s, BlockGrid a) { return a *= s; }

 private:
  TruncationBox box_;
  std::vector<CVector> blocks_;
};

/// (A g)_n = sum_s m_{n,s} g_{n-s}; components with |n - s| > K are dropped.
class GnsOperator {
 public:
  GnsOperator() = default;
  explicit GnsOperator(const TruncationBox& box);
  static GnsOperator identity(const TruncationBox& box);

  const TruncationBox& box() const { return box_; }
  const std::map<int, std::vector<CVector>>& terms() const { return terms_; }
  bool has_shift(int s) const { return terms_.count(s) > 0; }
  const CVector& multiplier(int n, int s) const;
  /// Creates the shift term (zero multipliers) if missing.
  std::vector<CVector>& shift_term(int s);

  BlockGrid apply(const BlockGrid& x) const;
  GnsVector apply(const GnsVector& x) const;
  /// Matrix of P A P in the e^{kl} basis, index TruncationBox::index.
  Eigen::MatrixXcd to_dense() const;

  /// Set when the element had shifts beyond 2K, which cannot act on the window.
  bool lost_shifts() const { return lost_shifts_; }
  void mark_lost_shifts() { lost_shifts_ = true; }

  GnsOperator& operator+=(const GnsOperator& o);
  GnsOperator& operator*=(cplx s);

 private:
  TruncationBox box_;
  std::map<int, std::vector<CVector>> terms_;
  bool lost_shifts_ = false;
};

GnsVector basis_vector(int k, int l, const TruncationBox& box);
GnsVector cyclic_vector(const TruncationBox& box);

/// m_{n,s}(z) = f^(s)(e^{2 pi i alpha (2n - s)} h^{-1}(z)).
GnsOperator represent(const WeylElement& f, const DiffeoSpec& d, const TruncationBox& box);

/// Coefficients of h^l with the mode bound grown from start_bound until the tail mass is < tol.
FourierPoly hpow_coefficients(const DiffeoSpec& d, int l, int start_bound, double tol = 1e-10);

/// The element W(f_k) W(g_l) whose representative is u_kl.
WeylElement u_kl_element(int k, int l, const DiffeoSpec& d, const TruncationBox& box);
GnsOperator build_u_kl(int k, int l, const DiffeoSpec& d, const TruncationBox& box);

struct StateData {
  int mode_bound = 0;
  CVector mu_check;  // index m + mode_bound
  cplx at(int m) const { return mu_check[m + mode_bound]; }
};

/// mu_check(m) = integral of h^{-1}(z)^m dm by quadrature.
StateData state_data(const DiffeoSpec& d, int mode_bound, int G);

struct StateValue {
  cplx via_measure;
  cplx via_gns;
  double deviation() const { return std::abs(via_measure - via_gns); }
};

/// omega(W(f)) by the measure formula and by <pi(f) xi, xi>.
StateValue state_eval(const WeylElement& f, const DiffeoSpec& d, const TruncationBox& box);

/// Complex Gaussian coefficients for |k| <= kmax, |l| <= lmax.
GnsVector random_gns_vector(const TruncationBox& box, int kmax, int lmax, std::mt19937_64& rng);

}  // namespace nctorus
