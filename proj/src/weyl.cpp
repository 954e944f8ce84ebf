#include "nctorus/weyl.hpp"

#include <cmath>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {
namespace {

void require_same_alpha(double a, double b) {
  if (a != b)
    throw AlphaMismatchError("alpha mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

cplx weyl_phase(double alpha, long sigma) {
  const double turns = std::fmod(alpha * static_cast<double>(sigma), 1.0);
  return std::polar(1.0, kTwoPi * turns);
}

}  // namespace

WeylElement::WeylElement(double alpha, int S1, int S2)
    : alpha_(alpha), S1_(S1), S2_(S2), table_(Eigen::MatrixXcd::Zero(2 * S1 + 1, 2 * S2 + 1)) {
  if (S1 < 0 || S2 < 0) throw InvalidArgumentError("support box bounds must be >= 0");
}

WeylElement WeylElement::identity(double alpha) { return generator(alpha, {0, 0}); }

WeylElement WeylElement::generator(double alpha, Index2 a, cplx value) {
  WeylElement f(alpha, std::abs(a.m), std::abs(a.n));
  f.set(a, value);
  return f;
}

cplx WeylElement::coeff(Index2 a) const {
  if (!in_box(a)) return 0.0;
  return table_(a.m + S1_, a.n + S2_);
}

void WeylElement::set(Index2 a, cplx value) {
  if (!in_box(a))
    throw OutOfBoxError("index (" + std::to_string(a.m) + "," + std::to_string(a.n) +
                        ") outside the support box");
  table_(a.m + S1_, a.n + S2_) = value;
}

void WeylElement::add(Index2 a, cplx value) { set(a, coeff(a) + value); }

std::vector<std::pair<Index2, cplx>> WeylElement::support() const {
  std::vector<std::pair<Index2, cplx>> out;
  for (int m = -S1_; m <= S1_; ++m)
    for (int n = -S2_; n <= S2_; ++n) {
      const cplx v = table_(m + S1_, n + S2_);
      if (v != cplx(0.0)) out.push_back({{m, n}, v});
    }
  return out;
}

int WeylElement::shift_extent() const {
  int e = 0;
  for (const auto& [a, v] : support()) e = std::max(e, std::abs(a.n));
  return e;
}

int WeylElement::mode_extent() const {
  int e = 0;
  for (const auto& [a, v] : support()) e = std::max(e, std::abs(a.m));
  return e;
}

WeylElement WeylElement::trimmed() const {
  WeylElement out(alpha_, mode_extent(), shift_extent());
  for (const auto& [a, v] : support()) out.set(a, v);
  return out;
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  require_same_alpha(alpha_, other.alpha_);
  if (other.S1_ > S1_ || other.S2_ > S2_) {
    WeylElement grown(alpha_, std::max(S1_, other.S1_), std::max(S2_, other.S2_));
    for (const auto& [a, v] : support()) grown.set(a, v);
    *this = std::move(grown);
  }
  for (const auto& [a, v] : other.support()) add(a, v);
  return *this;
}

WeylElement& WeylElement::operator*=(cplx s) {
  table_ *= s;
  return *this;
}

WeylElement star_product(const WeylElement& f, const WeylElement& g) {
  require_same_alpha(f.alpha(), g.alpha());
  WeylElement out(f.alpha(), f.S1() + g.S1(), f.S2() + g.S2());
  const auto fs = f.support();
  const auto gs = g.support();
  for (const auto& [A, fv] : fs)
    for (const auto& [B, gv] : gs) {
      const Index2 a = A + B;
      out.add(a, fv * gv * weyl_phase(-f.alpha(), symplectic(a, A)));
    }
  return out;
}

WeylElement involution(const WeylElement& f) {
  WeylElement out(f.alpha(), f.S1(), f.S2());
  for (const auto& [a, v] : f.support()) out.set(-a, std::conj(v));
  return out;
}

cplx trace(const WeylElement& f) { return f.coeff({0, 0}); }

cplx abstract_fourier_coeff(const WeylElement& f, Index2 a) {
  return trace(star_product(WeylElement::generator(f.alpha(), -a), f));
}

double weyl_relation_check(Index2 a, Index2 A, double alpha) {
  const WeylElement lhs =
      star_product(WeylElement::generator(alpha, a), WeylElement::generator(alpha, A));
  const WeylElement rhs =
      WeylElement::generator(alpha, a + A, weyl_phase(alpha, symplectic(a, A)));
  return max_deviation(lhs, rhs);
}

double max_deviation(const WeylElement& f, const WeylElement& g) {
  const int S1 = std::max(f.S1(), g.S1()), S2 = std::max(f.S2(), g.S2());
  double dev = 0.0;
  for (int m = -S1; m <= S1; ++m)
    for (int n = -S2; n <= S2; ++n) dev = std::max(dev, std::abs(f.coeff({m, n}) - g.coeff({m, n})));
  return dev;
}

CVector evaluate_column(const WeylElement& f, int n, const CVector& w) {
  const int S = f.S1();
  CVector out(w.size());
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    const cplx z = w[j];
    const cplx zi = std::conj(z) / std::norm(z);
    cplx pos = 0.0, neg = 0.0;
    for (int m = S; m >= 1; --m) {
      pos = (pos + f.coeff({m, n})) * z;
      neg = (neg + f.coeff({-m, n})) * zi;
    }
    out[j] = f.coeff({0, n}) + pos + neg;
  }
  return out;
}

double smooth_seminorm(const WeylElement& f, const DiffeoSpec& d, int k, int l, int G) {
  if (l != 0 && l != 1) throw InvalidArgumentError("seminorm derivative order must be 0 or 1");
  if (k < 0) throw InvalidArgumentError("seminorm weight order must be >= 0");
  const CVector hinv = inverse_conjugator_samples(d, G);
  double best = 0.0;
  for (int n = -f.S2(); n <= f.S2(); ++n) {
    bool nonzero = false;
    for (int m = -f.S1(); m <= f.S1(); ++m) nonzero = nonzero || f.coeff({m, n}) != cplx(0.0);
    if (!nonzero) continue;
    const CVector w = hinv * std::polar(1.0, -kTwoPi * d.alpha() * n);
    CVector phi = evaluate_column(f, n, w);
    if (l == 1) phi = spectral::angular_derivative(phi);
    best = std::max(best, std::pow(std::abs(n) + 1.0, k) * phi.cwiseAbs().maxCoeff());
  }
  return best;
}

WeylElement random_weyl_element(double alpha, int S1, int S2, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  WeylElement f(alpha, S1, S2);
  for (int m = -S1; m <= S1; ++m)
    for (int n = -S2; n <= S2; ++n) {
      const double re = normal(rng);
      const double im = normal(rng);
      f.set({m, n}, {re, im});
    }
  return f;
}

}  // namespace nctorus
