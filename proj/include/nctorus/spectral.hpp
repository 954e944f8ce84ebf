#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace nctorus {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Samples of a function on the unit circle at theta_j = 2*pi*j/G.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(CVector samples);

  /// Samples fn(theta_j) for j = 0..G-1.
  static GridFunction from_angle_function(int G, const std::function<cplx(double)>& fn);
  static GridFunction constant(int G, cplx value);

  int size() const { return static_cast<int>(samples_.size()); }
  const CVector& samples() const { return samples_; }
  cplx operator[](int j) const { return samples_[j]; }

  static double angle(int j, int G) { return kTwoPi * j / G; }

 private:
  CVector samples_;
};

/// Trigonometric polynomial sum_{|l|<=M} c_l z^l.
class FourierPoly {
 public:
  FourierPoly() = default;
  FourierPoly(int mode_bound, CVector coeffs);
  static FourierPoly zero(int mode_bound);
  static FourierPoly monomial(int mode_bound, int l, cplx value = 1.0);

  int mode_bound() const { return mode_bound_; }
  const CVector& coeffs() const { return coeffs_; }
  cplx coeff(int l) const;
  void set_coeff(int l, cplx value);

 private:
  int mode_bound_ = 0;
  CVector coeffs_ = CVector::Zero(1);
};

/// Smallest power of two >= 8(M+1).
int default_grid_size(int mode_bound);

/// c_l = (1/G) sum_j g(theta_j) e^{-i l theta_j}, |l| <= M.
FourierPoly project_to_modes(const GridFunction& g, int mode_bound);

/// Horner evaluation in e^{i theta} and e^{-i theta}.
std::vector<cplx> evaluate_poly(const FourierPoly& p, std::span<const double> angles);

/// Samples p on a G-point grid.
GridFunction evaluate_on_grid(const FourierPoly& p, int G);

/// (1/G) sum_j g1_j conj(g2_j).
cplx quadrature_inner(const GridFunction& g1, const GridFunction& g2);

namespace spectral {

/// Normalized DFT: out[q] = (1/G) sum_j in[j] e^{-2 pi i q j / G}.
CVector forward(const CVector& samples);
/// Synthesis: out[j] = sum_q c[q] e^{2 pi i q j / G}.
CVector backward(const CVector& coeffs);

/// Signed mode carried by DFT slot q (Nyquist slot reported as -G/2).
inline int slot_mode(int q, int G) { return q < G / 2 ? q : q - G; }
inline int mode_slot(int l, int G) { return ((l % G) + G) % G; }

/// d/dtheta of the trigonometric interpolant; the Nyquist mode is dropped.
CVector angular_derivative(const CVector& samples);

/// Samples of the interpolant at theta_j + phi (i.e. g(e^{i phi} z)).
CVector rotate(const CVector& samples, double phi);

/// Evaluates the trigonometric interpolant of grid samples at arbitrary angles.
/// The Nyquist mode is split symmetrically.
CVector interpolate(const CVector& samples, std::span<const double> angles);

/// l2 mass of the grid spectrum in modes |l| > cutoff, relative to the total.
double relative_tail(const CVector& samples, int cutoff);

/// Coefficients of modes |l| <= M from grid samples (index l + M).
CVector project(const CVector& samples, int mode_bound);
/// Grid samples of a coefficient vector with index l + M.
CVector synthesize(const CVector& coeffs, int mode_bound, int G);

}  // namespace spectral
}  // namespace nctorus
