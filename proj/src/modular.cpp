#include "nctorus/modular.hpp"

#include <cmath>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {
namespace {

void check_alias(const BlockGrid& y, double tol, const char* what) {
  const double frac = y.alias_fraction();
  if (frac > tol)
    throw AliasingError(std::string(what) + ": unresolved grid content " + std::to_string(frac) +
                        " exceeds " + std::to_string(tol));
}

}  // namespace

ModularData::ModularData(const DiffeoSpec& d, const TruncationBox& box) : d_(d), box_(box) {
  const int K = box.K, G = box.G;
  const ConjugatorLift& h = d.conjugator();
  std::vector<double> u(G);
  for (int j = 0; j < G; ++j) u[j] = h.inverse(static_cast<double>(j) / G);
  delta_.assign(2 * K + 1, RVector::Ones(G));
  angles_.assign(2 * K + 1, std::vector<double>(G));
  for (int n = -K; n <= K; ++n) {
    RVector& dn = delta_[n + K];
    std::vector<double>& an = angles_[n + K];
    const double shift = 2.0 * d.alpha() * n;
    for (int j = 0; j < G; ++j) {
      dn[j] = h.derivative(u[j] + shift) / h.derivative(u[j]);
      if (!(dn[j] > 0.0)) throw PositivityError("delta_" + std::to_string(n) + " not positive");
      an[j] = kTwoPi * h(u[j] + shift);
    }
  }
}

const RVector& ModularData::delta(int n) const {
  if (std::abs(n) > box_.K) throw OutOfBoxError("delta_" + std::to_string(n) + " outside |n| <= K");
  return delta_[n + box_.K];
}

RVector ModularData::delta_power(int n, double p) const {
  if (p == 0.0) return RVector::Ones(box_.G);
  return (delta(n).array().log() * p).exp().matrix();
}

const std::vector<double>& ModularData::mapped_angles(int n) const {
  if (std::abs(n) > box_.K) throw OutOfBoxError("f^" + std::to_string(n) + " outside |n| <= K");
  return angles_[n + box_.K];
}

ModularPowerField modular_power_field(double a, const ModularData& md) {
  ModularPowerField field;
  field.exponent = a;
  for (int n = -md.box().K; n <= md.box().K; ++n) field.grids.push_back(md.delta_power(n, a / 2.0));
  return field;
}

BlockGrid apply_delta_power(double a, const BlockGrid& x, const ModularData& md) {
  if (a == 0.0) return x;
  BlockGrid y = x;
  for (int n = -md.box().K; n <= md.box().K; ++n)
    y.block(n).array() *= md.delta_power(n, a / 2.0).array().cast<cplx>();
  return y;
}

GnsVector apply_delta_power(double a, const GnsVector& x, const ModularData& md, double alias_tol) {
  if (a == 0.0) return x;
  const BlockGrid y = apply_delta_power(a, BlockGrid(x), md);
  check_alias(y, alias_tol, "Delta power");
  return y.project();
}

BlockGrid apply_J(const BlockGrid& x, const ModularData& md) {
  const int K = md.box().K;
  BlockGrid y(md.box());
  for (int n = -K; n <= K; ++n) {
    const CVector& src = x.block(-n);
    if (src.isZero(0.0)) continue;
    const CVector vals = spectral::interpolate(src, md.mapped_angles(n));
    y.block(n) = (md.delta_power(n, 0.5).array().cast<cplx>() * vals.array().conjugate()).matrix();
  }
  return y;
}

GnsVector apply_J(const GnsVector& x, const ModularData& md, double alias_tol) {
  const TruncationBox& box = md.box();
  BlockGrid y(box);
  for (int n = -box.K; n <= box.K; ++n) {
    const CVector row = x.coeffs().row(-n + box.K).transpose();
    if (row.isZero(0.0)) continue;
    const std::vector<cplx> vals = evaluate_poly(FourierPoly(box.M, row), md.mapped_angles(n));
    const RVector w = md.delta_power(n, 0.5);
    CVector& out = y.block(n);
    for (int j = 0; j < box.G; ++j) out[j] = w[j] * std::conj(vals[j]);
  }
  check_alias(y, alias_tol, "J");
  return y.project();
}

BlockGrid apply_S(const BlockGrid& x, const ModularData& md) {
  return apply_J(apply_delta_power(1.0, x, md), md);
}

GnsVector apply_S(const GnsVector& x, const ModularData& md, double alias_tol) {
  return apply_J(apply_delta_power(1.0, x, md, alias_tol), md, alias_tol);
}

double tomita_check(const WeylElement& f, const ModularData& md) {
  const BlockGrid xi(cyclic_vector(md.box()));
  const BlockGrid lhs = apply_S(represent(f, md.diffeo(), md.box()).apply(xi), md);
  const BlockGrid rhs = represent(involution(f), md.diffeo(), md.box()).apply(xi);
  return (lhs - rhs).norm();
}

double BorelFunction::operator()(double t) const {
  if (kind == Kind::Power) return std::pow(t, exponent);
  auto poly = [t](const std::vector<double>& c) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
  };
  return poly(numerator) / poly(denominator);
}

BlockGrid apply_borel(const BorelFunction& fn, const BlockGrid& x, const ModularData& md,
                      bool inverse_argument) {
  BlockGrid y = x;
  for (int n = -md.box().K; n <= md.box().K; ++n) {
    const RVector& dn = md.delta(n);
    CVector& b = y.block(n);
    for (Eigen::Index j = 0; j < b.size(); ++j) b[j] *= fn(inverse_argument ? 1.0 / dn[j] : dn[j]);
  }
  return y;
}

double borel_identity_check(const BorelFunction& fn, const ModularData& md) {
  const TruncationBox& box = md.box();
  const int kmax = std::min(box.K, 4), lmax = std::min(box.M, 4);
  double worst = 0.0;
  for (int k = -kmax; k <= kmax; ++k)
    for (int l = -lmax; l <= lmax; ++l) {
      const BlockGrid x(basis_vector(k, l, box));
      const BlockGrid lhs = apply_J(apply_borel(fn, apply_J(x, md), md), md);
      const BlockGrid rhs = apply_borel(fn, x, md, true);
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

BlockGrid epsilon_basis(int k, int l, const ModularData& md) {
  const TruncationBox& box = md.box();
  if (!box.contains(k, l)) throw OutOfBoxError("epsilon^{kl} index outside the box");
  BlockGrid e(box);
  const std::vector<double>& ang = md.mapped_angles(-k);
  const RVector w = md.delta_power(-k, 0.5);
  CVector& b = e.block(-k);
  for (int j = 0; j < box.G; ++j) b[j] = w[j] * std::polar(1.0, -l * ang[j]);
  return e;
}

}  // namespace nctorus
