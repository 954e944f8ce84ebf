#pragma once

#include <vector>

#include "nctorus/gns.hpp"

namespace nctorus {

/// Grid data shared by the modular operators: delta_n and the angles of f^n(z_j), |n| <= K.
class ModularData {
 public:
  ModularData(const DiffeoSpec& d, const TruncationBox& box);

  const DiffeoSpec& diffeo() const { return d_; }
  const TruncationBox& box() const { return box_; }
  const RVector& delta(int n) const;
  /// delta_n^p on the grid.
  RVector delta_power(int n, double p) const;
  /// 2 pi F_n(x_j).
  const std::vector<double>& mapped_angles(int n) const;

 private:
  DiffeoSpec d_;
  TruncationBox box_;
  std::vector<RVector> delta_;
  std::vector<std::vector<double>> angles_;
};

/// Grids delta_n^{a/2}, |n| <= K.
struct ModularPowerField {
  double exponent = 0.0;
  std::vector<RVector> grids;
};

ModularPowerField modular_power_field(double a, const ModularData& md);

/// (Delta^{a/2} x)_n = delta_n^{a/2} x_n.
BlockGrid apply_delta_power(double a, const BlockGrid& x, const ModularData& md);
GnsVector apply_delta_power(double a, const GnsVector& x, const ModularData& md,
                            double alias_tol = 1e-6);

/// (J x)_n(z) = delta_n(z)^{1/2} conj(x_{-n}(f^n(z))).
BlockGrid apply_J(const BlockGrid& x, const ModularData& md);
GnsVector apply_J(const GnsVector& x, const ModularData& md, double alias_tol = 1e-6);

/// S = J Delta^{1/2}.
BlockGrid apply_S(const BlockGrid& x, const ModularData& md);
GnsVector apply_S(const GnsVector& x, const ModularData& md, double alias_tol = 1e-6);

/// || J Delta^{1/2} pi(f) xi - pi(f*) xi ||.
double tomita_check(const WeylElement& f, const ModularData& md);

/// Real-coefficient function of Delta: t^p or a ratio of polynomials.
struct BorelFunction {
  enum class Kind { Power, Rational };
  Kind kind = Kind::Power;
  double exponent = 0.0;
  std::vector<double> numerator;    // ascending powers of t
  std::vector<double> denominator;  // ascending powers of t

  static BorelFunction power(double p) { return {Kind::Power, p, {}, {}}; }
  static BorelFunction rational(std::vector<double> num, std::vector<double> den) {
    return {Kind::Rational, 0.0, std::move(num), std::move(den)};
  }
  double operator()(double t) const;
};

/// Multiplication by fn(delta_n) on each block.
BlockGrid apply_borel(const BorelFunction& fn, const BlockGrid& x, const ModularData& md,
                      bool inverse_argument = false);

/// max over sampled e^{kl} of || J fn(Delta) J x - fn(Delta^{-1}) x ||.
double borel_identity_check(const BorelFunction& fn, const ModularData& md);

/// epsilon^{kl} = J e^{kl} on the grid.
BlockGrid epsilon_basis(int k, int l, const ModularData& md);

}  // namespace nctorus
