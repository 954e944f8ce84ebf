#include "nctorus/spectral.hpp"

#include <cmath>
#include <string>

#include "fft.hpp"
#include "nctorus/errors.hpp"

namespace nctorus {

GridFunction::GridFunction(CVector samples) : samples_(std::move(samples)) {
  const int G = size();
  if (G < 4 || G % 2 != 0)
    throw GridTooSmallError("grid size must be even and >= 4, got " + std::to_string(G));
  if (!samples_.allFinite()) throw InvalidArgumentError("grid samples must be finite");
}

GridFunction GridFunction::from_angle_function(int G, const std::function<cplx(double)>& fn) {
  CVector s(G);
  for (int j = 0; j < G; ++j) s[j] = fn(angle(j, G));
  return GridFunction(std::move(s));
}

GridFunction GridFunction::constant(int G, cplx value) {
  return GridFunction(CVector::Constant(G, value));
}

FourierPoly::FourierPoly(int mode_bound, CVector coeffs)
    : mode_bound_(mode_bound), coeffs_(std::move(coeffs)) {
  if (mode_bound_ < 0) throw InvalidArgumentError("mode bound must be >= 0");
  if (coeffs_.size() != 2 * mode_bound_ + 1)
    throw InvalidArgumentError("FourierPoly needs 2M+1 coefficients");
}

FourierPoly FourierPoly::zero(int mode_bound) {
  return FourierPoly(mode_bound, CVector::Zero(2 * mode_bound + 1));
}

FourierPoly FourierPoly::monomial(int mode_bound, int l, cplx value) {
  FourierPoly p = zero(mode_bound);
  p.set_coeff(l, value);
  return p;
}

cplx FourierPoly::coeff(int l) const {
  if (l < -mode_bound_ || l > mode_bound_) return 0.0;
  return coeffs_[l + mode_bound_];
}

void FourierPoly::set_coeff(int l, cplx value) {
  if (l < -mode_bound_ || l > mode_bound_)
    throw OutOfBoxError("mode " + std::to_string(l) + " outside |l| <= " + std::to_string(mode_bound_));
  coeffs_[l + mode_bound_] = value;
}

int default_grid_size(int mode_bound) {
  int G = 4;
  while (G < 8 * (mode_bound + 1)) G *= 2;
  return G;
}

FourierPoly project_to_modes(const GridFunction& g, int mode_bound) {
  if (g.size() < 2 * mode_bound + 2)
    throw GridTooSmallError("G = " + std::to_string(g.size()) + " < 2M+2 for M = " +
                            std::to_string(mode_bound));
  return FourierPoly(mode_bound, spectral::project(g.samples(), mode_bound));
}

std::vector<cplx> evaluate_poly(const FourierPoly& p, std::span<const double> angles) {
  const int M = p.mode_bound();
  std::vector<cplx> out;
  out.reserve(angles.size());
  for (double theta : angles) {
    const cplx z = std::polar(1.0, theta);
    const cplx zi = std::conj(z);
    cplx pos = 0.0;
    for (int l = M; l >= 1; --l) pos = (pos + p.coeff(l)) * z;
    cplx neg = 0.0;
    for (int l = M; l >= 1; --l) neg = (neg + p.coeff(-l)) * zi;
    out.push_back(p.coeff(0) + pos + neg);
  }
  return out;
}

GridFunction evaluate_on_grid(const FourierPoly& p, int G) {
  if (G < 2 * p.mode_bound() + 2)
    throw GridTooSmallError("G = " + std::to_string(G) + " too small for M = " +
                            std::to_string(p.mode_bound()));
  return GridFunction(spectral::synthesize(p.coeffs(), p.mode_bound(), G));
}

cplx quadrature_inner(const GridFunction& g1, const GridFunction& g2) {
  if (g1.size() != g2.size())
    throw GridMismatchError("grid sizes differ: " + std::to_string(g1.size()) + " vs " +
                            std::to_string(g2.size()));
  return g2.samples().dot(g1.samples()) / static_cast<double>(g1.size());
}

namespace spectral {

CVector forward(const CVector& samples) {
  const int G = static_cast<int>(samples.size());
  CVector out(G);
  detail::dft(G, -1, samples.data(), out.data());
  out /= static_cast<double>(G);
  return out;
}

CVector backward(const CVector& coeffs) {
  const int G = static_cast<int>(coeffs.size());
  CVector out(G);
  detail::dft(G, +1, coeffs.data(), out.data());
  return out;
}

CVector angular_derivative(const CVector& samples) {
  const int G = static_cast<int>(samples.size());
  CVector c = forward(samples);
  for (int q = 0; q < G; ++q) {
    const int l = slot_mode(q, G);
    c[q] *= (2 * l == -G) ? cplx(0.0) : cplx(0.0, l);
  }
  return backward(c);
}

CVector rotate(const CVector& samples, double phi) {
  if (phi == 0.0) return samples;
  const int G = static_cast<int>(samples.size());
  CVector c = forward(samples);
  for (int q = 0; q < G; ++q) {
    const int l = slot_mode(q, G);
    if (2 * l == -G)
      c[q] *= std::cos(phi * G / 2);
    else
      c[q] *= std::polar(1.0, l * phi);
  }
  return backward(c);
}

CVector interpolate(const CVector& samples, std::span<const double> angles) {
  const int G = static_cast<int>(samples.size());
  const CVector c = forward(samples);
  const int half = G / 2;
  CVector out(static_cast<Eigen::Index>(angles.size()));
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const cplx z = std::polar(1.0, angles[i]);
    const cplx zi = std::conj(z);
    cplx pos = 0.0, neg = 0.0;
    for (int l = half - 1; l >= 1; --l) {
      pos = (pos + c[l]) * z;
      neg = (neg + c[G - l]) * zi;
    }
    const double nyq = std::cos(half * angles[i]);
    out[static_cast<Eigen::Index>(i)] = c[0] + pos + neg + c[half] * nyq;
  }
  return out;
}

double relative_tail(const CVector& samples, int cutoff) {
  const int G = static_cast<int>(samples.size());
  const CVector c = forward(samples);
  double total = 0.0, tail = 0.0;
  for (int q = 0; q < G; ++q) {
    const double e = std::norm(c[q]);
    total += e;
    if (std::abs(slot_mode(q, G)) > cutoff) tail += e;
  }
  return total > 0.0 ? std::sqrt(tail / total) : 0.0;
}

CVector project(const CVector& samples, int mode_bound) {
  const int G = static_cast<int>(samples.size());
  if (G < 2 * mode_bound + 2)
    throw GridTooSmallError("G = " + std::to_string(G) + " < 2M+2 for M = " +
                            std::to_string(mode_bound));
  const CVector c = forward(samples);
  CVector out(2 * mode_bound + 1);
  for (int l = -mode_bound; l <= mode_bound; ++l) out[l + mode_bound] = c[mode_slot(l, G)];
  return out;
}

CVector synthesize(const CVector& coeffs, int mode_bound, int G) {
  if (G < 2 * mode_bound + 2)
    throw GridTooSmallError("G = " + std::to_string(G) + " < 2M+2 for M = " +
                            std::to_string(mode_bound));
  CVector c = CVector::Zero(G);
  for (int l = -mode_bound; l <= mode_bound; ++l) c[mode_slot(l, G)] = coeffs[l + mode_bound];
  return backward(c);
}

}  // namespace spectral
}  // namespace nctorus
