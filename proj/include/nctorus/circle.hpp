#pragma once

#include <span>
#include <vector>

#include "nctorus/spectral.hpp"

namespace nctorus {

/// Lift H(x) = x + P(x) of the conjugator h, with
/// P(x) = sum_k a_k sin(2 pi k x) + b_k (cos(2 pi k x) - 1).
class ConjugatorLift {
 public:
  ConjugatorLift() = default;
  ConjugatorLift(std::vector<double> sin_coeffs, std::vector<double> cos_coeffs);

  static ConjugatorLift identity() { return {}; }

  const std::vector<double>& sin_coeffs() const { return sin_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  bool is_identity() const;

  double operator()(double x) const;
  double derivative(double x) const;
  /// H^{-1}(y): bisection to width 1e-8, then Newton to residual 1e-13.
  double inverse(double y) const;
  /// Upper bound for |P|.
  double periodic_bound() const;
  /// Positive lower bound of H' measured on the check grid.
  double min_derivative() const { return min_derivative_; }
  double max_derivative() const { return max_derivative_; }

 private:
  std::vector<double> sin_, cos_;
  double min_derivative_ = 1.0;
  double max_derivative_ = 1.0;
};

/// f = h o R_{2 alpha} o h^{-1} with square root T = h o R_alpha o h^{-1}.
class DiffeoSpec {
 public:
  DiffeoSpec(ConjugatorLift conjugator, double alpha, bool classical_mode = false);

  static DiffeoSpec rotation(double alpha, bool classical_mode = false);
  /// H(x) = x + (0.3/2 pi) sin(2 pi x), alpha = (sqrt 5 - 1)/4.
  static DiffeoSpec benchmark();

  const ConjugatorLift& conjugator() const { return h_; }
  double alpha() const { return alpha_; }
  bool classical_mode() const { return classical_; }
  bool is_rotation() const { return h_.is_identity(); }

 private:
  ConjugatorLift h_;
  double alpha_;
  bool classical_;
};

class GrowthSequence {
 public:
  GrowthSequence() = default;
  explicit GrowthSequence(std::vector<double> values);
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  double operator[](int n) const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_{1.0};
};

/// F_n(x) = H(H^{-1}(x) + 2 alpha n).
double iterate_lift(const DiffeoSpec& d, int n, double x);
std::vector<double> iterate_lift(const DiffeoSpec& d, int n, std::span<const double> xs);
/// Lift of T^j: H(H^{-1}(x) + alpha j).
double half_iterate_lift(const DiffeoSpec& d, int j, double x);

/// delta_n(x) = F_n'(x).
double radon_nikodym_at(const DiffeoSpec& d, int n, double x);
GridFunction radon_nikodym(const DiffeoSpec& d, int n, int G);
/// Real grid values of delta_n, strictly positive.
RVector radon_nikodym_values(const DiffeoSpec& d, int n, int G);

/// Gamma_n = max(sup F_n', sup F_{-n}'), grid maximum refined by golden-section search.
GrowthSequence growth_sequence(const DiffeoSpec& d, int n_max, int G);

double rotation_number(const DiffeoSpec& d, int iterations);

/// Samples e^{2 pi i H^{-1}(x_j)}, i.e. h^{-1}(z_j).
CVector inverse_conjugator_samples(const DiffeoSpec& d, int G);
/// Samples e^{2 pi i H(x_j)}, i.e. h(z_j).
CVector conjugator_samples(const DiffeoSpec& d, int G);

}  // namespace nctorus
