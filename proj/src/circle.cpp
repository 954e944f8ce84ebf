#include "nctorus/circle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {
namespace {

constexpr int kCheckPointsPerHarmonic = 4096;

std::vector<double> inverse_grid(const ConjugatorLift& h, int G) {
  std::vector<double> u(G);
  for (int j = 0; j < G; ++j) u[j] = h.inverse(static_cast<double>(j) / G);
  return u;
}

}  // namespace

ConjugatorLift::ConjugatorLift(std::vector<double> sin_coeffs, std::vector<double> cos_coeffs)
    : sin_(std::move(sin_coeffs)), cos_(std::move(cos_coeffs)) {
  for (double c : sin_)
    if (!std::isfinite(c)) throw InvalidArgumentError("conjugator coefficients must be finite");
  for (double c : cos_)
    if (!std::isfinite(c)) throw InvalidArgumentError("conjugator coefficients must be finite");
  const int harmonics = static_cast<int>(std::max(sin_.size(), cos_.size()));
  const int points = kCheckPointsPerHarmonic * std::max(1, harmonics);
  min_derivative_ = derivative(0.0);
  max_derivative_ = min_derivative_;
  for (int j = 1; j < points; ++j) {
    const double v = derivative(static_cast<double>(j) / points);
    min_derivative_ = std::min(min_derivative_, v);
    max_derivative_ = std::max(max_derivative_, v);
  }
  if (!(min_derivative_ > 0.0))
    throw PositivityError("conjugator lift is not increasing: min H' = " +
                          std::to_string(min_derivative_));
}

bool ConjugatorLift::is_identity() const {
  return std::all_of(sin_.begin(), sin_.end(), [](double c) { return c == 0.0; }) &&
         std::all_of(cos_.begin(), cos_.end(), [](double c) { return c == 0.0; });
}

double ConjugatorLift::operator()(double x) const {
  double p = 0.0;
  for (std::size_t k = 0; k < sin_.size(); ++k) p += sin_[k] * std::sin(kTwoPi * (k + 1) * x);
  for (std::size_t k = 0; k < cos_.size(); ++k)
    p += cos_[k] * (std::cos(kTwoPi * (k + 1) * x) - 1.0);
  return x + p;
}

double ConjugatorLift::derivative(double x) const {
  double dp = 0.0;
  for (std::size_t k = 0; k < sin_.size(); ++k)
    dp += sin_[k] * kTwoPi * (k + 1) * std::cos(kTwoPi * (k + 1) * x);
  for (std::size_t k = 0; k < cos_.size(); ++k)
    dp -= cos_[k] * kTwoPi * (k + 1) * std::sin(kTwoPi * (k + 1) * x);
  return 1.0 + dp;
}

double ConjugatorLift::periodic_bound() const {
  double b = 0.0;
  for (double c : sin_) b += std::abs(c);
  for (double c : cos_) b += 2.0 * std::abs(c);
  return b;
}

double ConjugatorLift::inverse(double y) const {
  if (!std::isfinite(y)) throw InverseSolveError("non-finite argument to H^{-1}");
  if (is_identity()) return y;
  const double shift = std::floor(y);
  const double t = y - shift;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < t)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double r = (*this)(x) - t;
    if (std::abs(r) <= 1e-13) return x + shift;
    x -= r / derivative(x);
  }
  const double r = (*this)(x) - t;
  if (std::abs(r) <= 1e-13) return x + shift;
  throw InverseSolveError("H^{-1} did not converge at y = " + std::to_string(y) +
                          ", residual " + std::to_string(r));
}

DiffeoSpec::DiffeoSpec(ConjugatorLift conjugator, double alpha, bool classical_mode)
    : h_(std::move(conjugator)), alpha_(alpha), classical_(classical_mode) {
  if (!std::isfinite(alpha)) throw InvalidArgumentError("alpha must be finite");
  if (classical_mode) {
    if (alpha < 0.0 || alpha > 0.5)
      throw InvalidArgumentError("alpha must lie in [0, 1/2] in classical mode");
  } else if (!(alpha > 0.0 && alpha <= 0.5)) {
    throw InvalidArgumentError("alpha must lie in (0, 1/2]; set classical_mode for alpha = 0");
  }
}

DiffeoSpec DiffeoSpec::rotation(double alpha, bool classical_mode) {
  return DiffeoSpec(ConjugatorLift::identity(), alpha, classical_mode);
}

DiffeoSpec DiffeoSpec::benchmark() {
  return DiffeoSpec(ConjugatorLift({0.3 / kTwoPi}, {}), (std::sqrt(5.0) - 1.0) / 4.0);
}

GrowthSequence::GrowthSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgumentError("growth sequence needs Gamma_0");
}

double GrowthSequence::operator[](int n) const {
  if (n < 0 || n > max_index())
    throw OutOfBoxError("Gamma_" + std::to_string(n) + " not computed (max index " +
                        std::to_string(max_index()) + ")");
  return values_[n];
}

double iterate_lift(const DiffeoSpec& d, int n, double x) {
  const ConjugatorLift& h = d.conjugator();
  return h(h.inverse(x) + 2.0 * d.alpha() * n);
}

std::vector<double> iterate_lift(const DiffeoSpec& d, int n, std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(iterate_lift(d, n, x));
  return out;
}

double half_iterate_lift(const DiffeoSpec& d, int j, double x) {
  const ConjugatorLift& h = d.conjugator();
  return h(h.inverse(x) + d.alpha() * j);
}

double radon_nikodym_at(const DiffeoSpec& d, int n, double x) {
  const ConjugatorLift& h = d.conjugator();
  const double u = h.inverse(x);
  return h.derivative(u + 2.0 * d.alpha() * n) / h.derivative(u);
}

RVector radon_nikodym_values(const DiffeoSpec& d, int n, int G) {
  if (G < 4 || G % 2 != 0) throw GridTooSmallError("grid size must be even and >= 4");
  const ConjugatorLift& h = d.conjugator();
  RVector out(G);
  if (h.is_identity() || n == 0) {
    out.setOnes();
    return out;
  }
  const std::vector<double> u = inverse_grid(h, G);
  for (int j = 0; j < G; ++j) {
    out[j] = h.derivative(u[j] + 2.0 * d.alpha() * n) / h.derivative(u[j]);
    if (!(out[j] > 0.0) || !std::isfinite(out[j]))
      throw PositivityError("delta_" + std::to_string(n) + " not positive at grid point " +
                            std::to_string(j));
  }
  return out;
}

GridFunction radon_nikodym(const DiffeoSpec& d, int n, int G) {
  return GridFunction(radon_nikodym_values(d, n, G).cast<cplx>());
}

GrowthSequence growth_sequence(const DiffeoSpec& d, int n_max, int G) {
  if (n_max < 1) throw InvalidArgumentError("growth sequence needs N_max >= 1");
  std::vector<double> gamma(n_max + 1, 1.0);
  if (d.is_rotation()) return GrowthSequence(std::move(gamma));
  const ConjugatorLift& h = d.conjugator();
  const std::vector<double> u = inverse_grid(h, G);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto refine = [&](int n, int j) {
    double a = static_cast<double>(j - 1) / G, b = static_cast<double>(j + 1) / G;
    auto f = [&](double x) { return radon_nikodym_at(d, n, x); };
    double c = b - invphi * (b - a), e = a + invphi * (b - a);
    double fc = f(c), fe = f(e);
    while (b - a > 1e-12) {
      if (fc > fe) {
        b = e; e = c; fe = fc;
        c = b - invphi * (b - a); fc = f(c);
      } else {
        a = c; c = e; fc = fe;
        e = a + invphi * (b - a); fe = f(e);
      }
    }
    return std::max(fc, fe);
  };
  for (int n = 1; n <= n_max; ++n) {
    double best = 1.0;
    for (int sign : {1, -1}) {
      const int m = sign * n;
      int arg = 0;
      double peak = -1.0;
      for (int j = 0; j < G; ++j) {
        const double v = h.derivative(u[j] + 2.0 * d.alpha() * m) / h.derivative(u[j]);
        if (v > peak) {
          peak = v;
          arg = j;
        }
      }
      best = std::max({best, peak, refine(m, arg)});
    }
    gamma[n] = best;
  }
  return GrowthSequence(std::move(gamma));
}

double rotation_number(const DiffeoSpec& d, int iterations) {
  if (iterations < 100) throw InvalidArgumentError("rotation number needs >= 100 iterations");
  const ConjugatorLift& h = d.conjugator();
  const int samples = 256;
  const double shift = 2.0 * d.alpha() * iterations;
  double total = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double u = static_cast<double>(j) / samples;
    total += h(u + shift) - h(u);
  }
  return total / samples / iterations;
}

CVector inverse_conjugator_samples(const DiffeoSpec& d, int G) {
  CVector out(G);
  const ConjugatorLift& h = d.conjugator();
  for (int j = 0; j < G; ++j) out[j] = std::polar(1.0, kTwoPi * h.inverse(static_cast<double>(j) / G));
  return out;
}

CVector conjugator_samples(const DiffeoSpec& d, int G) {
  CVector out(G);
  const ConjugatorLift& h = d.conjugator();
  for (int j = 0; j < G; ++j) out[j] = std::polar(1.0, kTwoPi * h(static_cast<double>(j) / G));
  return out;
}

}  // namespace nctorus
