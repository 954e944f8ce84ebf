#pragma once

#include <random>
#include <utility>
#include <vector>

#include "nctorus/circle.hpp"
#include "nctorus/spectral.hpp"

namespace nctorus {

struct Index2 {
  int m = 0;
  int n = 0;
  friend Index2 operator+(Index2 a, Index2 b) { return {a.m + b.m, a.n + b.n}; }
  friend Index2 operator-(Index2 a, Index2 b) { return {a.m - b.m, a.n - b.n}; }
  friend Index2 operator-(Index2 a) { return {-a.m, -a.n}; }
  friend bool operator==(Index2, Index2) = default;
};

/// sigma(a, A) = mN - Mn.
inline long symplectic(Index2 a, Index2 A) {
  return static_cast<long>(a.m) * A.n - static_cast<long>(A.m) * a.n;
}

/// Finitely supported f on Z^2 in the box [-S1,S1] x [-S2,S2], representing W(f).
class WeylElement {
 public:
  WeylElement(double alpha, int S1, int S2);

  static WeylElement identity(double alpha);
  /// delta_a, i.e. the generator W(a).
  static WeylElement generator(double alpha, Index2 a, cplx value = 1.0);

  double alpha() const { return alpha_; }
  int S1() const { return S1_; }
  int S2() const { return S2_; }
  bool in_box(Index2 a) const { return std::abs(a.m) <= S1_ && std::abs(a.n) <= S2_; }

  cplx coeff(Index2 a) const;
  void set(Index2 a, cplx value);
  void add(Index2 a, cplx value);

  /// Nonzero entries in (m, n) lexicographic order.
  std::vector<std::pair<Index2, cplx>> support() const;
  /// Smallest box containing the nonzero entries.
  WeylElement trimmed() const;
  /// Largest |n| with a nonzero column.
  int shift_extent() const;
  int mode_extent() const;

  /// Table indexed (m + S1, n + S2).
  const Eigen::MatrixXcd& table() const { return table_; }

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator*=(cplx s);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator*(cplx s, WeylElement a) { return a *= s; }

 private:
  double alpha_;
  int S1_, S2_;
  Eigen::MatrixXcd table_;
};

/// (f * g)(a) = sum_A f(A) g(a - A) e^{-2 pi i alpha sigma(a, A)}.
WeylElement star_product(const WeylElement& f, const WeylElement& g);
/// f*(a) = conj f(-a).
WeylElement involution(const WeylElement& f);
/// tau(W(f)) = f(0).
cplx trace(const WeylElement& f);
/// tau(W(-a) * f).
cplx abstract_fourier_coeff(const WeylElement& f, Index2 a);
/// max deviation between W(a)W(A) and e^{2 pi i alpha sigma(a,A)} W(a+A).
double weyl_relation_check(Index2 a, Index2 A, double alpha);

/// max over the n-support of (|n|+1)^k sup_z |D^l(f^(n)(e^{-2 pi i alpha n} h^{-1}(z)))|.
double smooth_seminorm(const WeylElement& f, const DiffeoSpec& d, int k, int l, int G);

/// Column f^(n)(w) = sum_m f(m, n) w^m evaluated at each w.
CVector evaluate_column(const WeylElement& f, int n, const CVector& w);

/// max |f - g| over the union of supports.
double max_deviation(const WeylElement& f, const WeylElement& g);

/// Complex Gaussian coefficients on the box [-S1,S1] x [-S2,S2].
WeylElement random_weyl_element(double alpha, int S1, int S2, std::mt19937_64& rng);

}  // namespace nctorus
