#include "nctorus/gns.hpp"

#include <cmath>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {

TruncationBox::TruncationBox(int K_, int M_, int G_) : K(K_), M(M_), G(G_) {
  if (K < 1 || M < 1) throw InvalidArgumentError("truncation bounds K, M must be >= 1");
  if (G % 2 != 0) throw GridTooSmallError("grid size must be even");
  if (G < 8 * (M + 1))
    throw GridTooSmallError("grid size " + std::to_string(G) + " < 8(M+1) = " +
                            std::to_string(8 * (M + 1)));
}

TruncationBox TruncationBox::with_default_grid(int K, int M) {
  return TruncationBox(K, M, default_grid_size(M));
}

GnsVector::GnsVector(const TruncationBox& box)
    : box_(box), coeffs_(Eigen::MatrixXcd::Zero(box.blocks(), box.modes())) {}

GnsVector::GnsVector(const TruncationBox& box, Eigen::MatrixXcd coeffs)
    : box_(box), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != box.blocks() || coeffs_.cols() != box.modes())
    throw InvalidArgumentError("coefficient table does not match the truncation box");
}

cplx GnsVector::at(int k, int l) const {
  if (!box_.contains(k, l)) return 0.0;
  return coeffs_(k + box_.K, l + box_.M);
}

void GnsVector::set(int k, int l, cplx value) {
  if (!box_.contains(k, l))
    throw OutOfBoxError("(k,l) = (" + std::to_string(k) + "," + std::to_string(l) +
                        ") outside the truncation box");
  coeffs_(k + box_.K, l + box_.M) = value;
}

cplx GnsVector::inner(const GnsVector& y) const {
  if (!(box_ == y.box_)) throw GridMismatchError("vectors live in different boxes");
  return (coeffs_.array() * y.coeffs_.array().conjugate()).sum();
}

CVector GnsVector::flat() const {
  CVector v(box_.dim());
  for (int k = -box_.K; k <= box_.K; ++k)
    for (int l = -box_.M; l <= box_.M; ++l) v[box_.index(k, l)] = at(k, l);
  return v;
}

GnsVector GnsVector::from_flat(const TruncationBox& box, const CVector& v) {
  if (v.size() != box.dim()) throw InvalidArgumentError("flat vector has the wrong dimension");
  GnsVector x(box);
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l) x.set(k, l, v[box.index(k, l)]);
  return x;
}

GnsVector& GnsVector::operator+=(const GnsVector& o) {
  if (!(box_ == o.box_)) throw GridMismatchError("vectors live in different boxes");
  coeffs_ += o.coeffs_;
  return *this;
}

GnsVector& GnsVector::operator-=(const GnsVector& o) {
  if (!(box_ == o.box_)) throw GridMismatchError("vectors live in different boxes");
  coeffs_ -= o.coeffs_;
  return *this;
}

GnsVector& GnsVector::operator*=(cplx s) {
  coeffs_ *= s;
  return *this;
}

BlockGrid::BlockGrid(const TruncationBox& box)
    : box_(box), blocks_(box.blocks(), CVector::Zero(box.G)) {}

BlockGrid::BlockGrid(const GnsVector& x) : BlockGrid(x.box()) {
  const TruncationBox& b = x.box();
  for (int n = -b.K; n <= b.K; ++n) {
    const CVector row = x.coeffs().row(n + b.K).transpose();
    if (row.isZero(0.0)) continue;
    block(n) = spectral::synthesize(row, b.M, b.G);
  }
}

GnsVector BlockGrid::project() const {
  GnsVector x(box_);
  for (int n = -box_.K; n <= box_.K; ++n) {
    if (block(n).isZero(0.0)) continue;
    x.coeffs().row(n + box_.K) = spectral::project(block(n), box_.M).transpose();
  }
  return x;
}

double BlockGrid::alias_fraction() const {
  double worst = 0.0;
  for (const CVector& b : blocks_)
    if (!b.isZero(0.0)) worst = std::max(worst, spectral::relative_tail(b, box_.G / 4));
  return worst;
}

cplx BlockGrid::inner(const BlockGrid& y) const {
  if (!(box_ == y.box_)) throw GridMismatchError("block grids live in different boxes");
  cplx s = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += y.blocks_[i].dot(blocks_[i]);
  return s / static_cast<double>(box_.G);
}

double BlockGrid::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

BlockGrid& BlockGrid::operator+=(const BlockGrid& o) {
  if (!(box_ == o.box_)) throw GridMismatchError("block grids live in different boxes");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
  return *this;
}

BlockGrid& BlockGrid::operator-=(const BlockGrid& o) {
  if (!(box_ == o.box_)) throw GridMismatchError("block grids live in different boxes");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= o.blocks_[i];
  return *this;
}

BlockGrid& BlockGrid::operator*=(cplx s) {
  for (CVector& b : blocks_) b *= s;
  return *this;
}

GnsOperator::GnsOperator(const TruncationBox& box) : box_(box) {}

GnsOperator GnsOperator::identity(const TruncationBox& box) {
  GnsOperator op(box);
  for (CVector& m : op.shift_term(0)) m.setOnes();
  return op;
}

const CVector& GnsOperator::multiplier(int n, int s) const {
  auto it = terms_.find(s);
  if (it == terms_.end() || std::abs(n) > box_.K)
    throw OutOfBoxError("no multiplier for block " + std::to_string(n) + ", shift " +
                        std::to_string(s));
  return it->second[n + box_.K];
}

std::vector<CVector>& GnsOperator::shift_term(int s) {
  auto it = terms_.find(s);
  if (it == terms_.end())
    it = terms_.emplace(s, std::vector<CVector>(box_.blocks(), CVector::Zero(box_.G))).first;
  return it->second;
}

BlockGrid GnsOperator::apply(const BlockGrid& x) const {
  if (!(box_ == x.box())) throw GridMismatchError("operator and vector boxes differ");
  BlockGrid y(box_);
  const int K = box_.K;
#ifdef NCTORUS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int n = -K; n <= K; ++n) {
    CVector& out = y.block(n);
    for (const auto& [s, mult] : terms_) {
      const int src = n - s;
      if (std::abs(src) > K) continue;
      out.array() += mult[n + K].array() * x.block(src).array();
    }
  }
  return y;
}

GnsVector GnsOperator::apply(const GnsVector& x) const { return apply(BlockGrid(x)).project(); }

Eigen::MatrixXcd GnsOperator::to_dense() const {
  const int K = box_.K, M = box_.M, G = box_.G;
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(box_.dim(), box_.dim());
  for (const auto& [t, mult] : terms_)
    for (int r = -K; r <= K; ++r) {
      const int k = r - t;
      if (std::abs(k) > K) continue;
      const CVector c = spectral::forward(mult[r + K]);
      for (int s = -M; s <= M; ++s)
        for (int l = -M; l <= M; ++l) D(box_.index(r, s), box_.index(k, l)) = c[spectral::mode_slot(s - l, G)];
    }
  return D;
}

GnsOperator& GnsOperator::operator+=(const GnsOperator& o) {
  if (!(box_ == o.box_)) throw GridMismatchError("operator boxes differ");
  for (const auto& [s, mult] : o.terms_) {
    std::vector<CVector>& mine = shift_term(s);
    for (std::size_t i = 0; i < mine.size(); ++i) mine[i] += mult[i];
  }
  lost_shifts_ = lost_shifts_ || o.lost_shifts_;
  return *this;
}

GnsOperator& GnsOperator::operator*=(cplx s) {
  for (auto& [t, mult] : terms_)
    for (CVector& m : mult) m *= s;
  return *this;
}

GnsVector basis_vector(int k, int l, const TruncationBox& box) {
  GnsVector x(box);
  x.set(k, l, 1.0);
  return x;
}

GnsVector cyclic_vector(const TruncationBox& box) { return basis_vector(0, 0, box); }

GnsOperator represent(const WeylElement& f, const DiffeoSpec& d, const TruncationBox& box) {
  if (f.alpha() != d.alpha())
    throw AlphaMismatchError("element alpha " + std::to_string(f.alpha()) +
                             " differs from diffeomorphism alpha " + std::to_string(d.alpha()));
  GnsOperator op(box);
  const CVector hinv = inverse_conjugator_samples(d, box.G);
  const int K = box.K;
  for (int s = -f.S2(); s <= f.S2(); ++s) {
    bool nonzero = false;
    for (int m = -f.S1(); m <= f.S1() && !nonzero; ++m) nonzero = f.coeff({m, s}) != cplx(0.0);
    if (!nonzero) continue;
    if (std::abs(s) > 2 * K) {
      op.mark_lost_shifts();
      continue;
    }
    std::vector<CVector>& term = op.shift_term(s);
#ifdef NCTORUS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int n = -K; n <= K; ++n) {
      if (std::abs(n - s) > K) continue;
      const double turns = std::fmod(d.alpha() * (2.0 * n - s), 1.0);
      term[n + K] = evaluate_column(f, s, hinv * std::polar(1.0, kTwoPi * turns));
    }
  }
  return op;
}

FourierPoly hpow_coefficients(const DiffeoSpec& d, int l, int start_bound, double tol) {
  const ConjugatorLift& h = d.conjugator();
  if (h.is_identity() || l == 0) {
    const int bound = std::max(start_bound, std::abs(l));
    return FourierPoly::monomial(bound, l);
  }
  int bound = std::max(start_bound, 2 * std::abs(l));
  constexpr int kMaxBound = 1 << 14;
  while (bound <= kMaxBound) {
    const int G = default_grid_size(bound);
    CVector samples(G);
    for (int j = 0; j < G; ++j) samples[j] = std::polar(1.0, kTwoPi * l * h(static_cast<double>(j) / G));
    const CVector c = spectral::forward(samples);
    double tail = 0.0;
    for (int q = 0; q < G; ++q)
      if (std::abs(spectral::slot_mode(q, G)) > bound) tail += std::norm(c[q]);
    if (std::sqrt(tail) < tol) {
      CVector coeffs(2 * bound + 1);
      for (int m = -bound; m <= bound; ++m) coeffs[m + bound] = c[spectral::mode_slot(m, G)];
      return FourierPoly(bound, coeffs);
    }
    bound *= 2;
  }
  throw TailMassError("coefficients of h^" + std::to_string(l) +
                      " need a mode bound above " + std::to_string(kMaxBound));
}

WeylElement u_kl_element(int k, int l, const DiffeoSpec& d, const TruncationBox& box) {
  if (std::abs(k) > box.K) throw OutOfBoxError("u_kl needs |k| <= K");
  const FourierPoly hl = hpow_coefficients(d, l, 3 * box.M);
  const int Mh = hl.mode_bound();
  WeylElement g(d.alpha(), Mh, 0);
  for (int m = -Mh; m <= Mh; ++m) g.set({m, 0}, hl.coeff(m));
  return star_product(WeylElement::generator(d.alpha(), {0, k}), g);
}

GnsOperator build_u_kl(int k, int l, const DiffeoSpec& d, const TruncationBox& box) {
  return represent(u_kl_element(k, l, d, box), d, box);
}

StateData state_data(const DiffeoSpec& d, int mode_bound, int G) {
  const CVector hinv = inverse_conjugator_samples(d, G);
  StateData out;
  out.mode_bound = mode_bound;
  out.mu_check.resize(2 * mode_bound + 1);
  for (int m = -mode_bound; m <= mode_bound; ++m) {
    cplx s = 0.0;
    for (int j = 0; j < G; ++j) s += std::pow(hinv[j], m);
    out.mu_check[m + mode_bound] = s / static_cast<double>(G);
  }
  return out;
}

StateValue state_eval(const WeylElement& f, const DiffeoSpec& d, const TruncationBox& box) {
  const StateData mu = state_data(d, f.S1(), box.G);
  StateValue v;
  v.via_measure = 0.0;
  for (int m = -f.S1(); m <= f.S1(); ++m) v.via_measure += mu.at(m) * f.coeff({m, 0});
  const GnsOperator op = represent(f, d, box);
  const BlockGrid y = op.apply(BlockGrid(cyclic_vector(box)));
  v.via_gns = y.block(0).mean();
  if (v.deviation() > 1e-6)
    throw RouteDisagreementError("state routes disagree by " + std::to_string(v.deviation()));
  return v;
}

GnsVector random_gns_vector(const TruncationBox& box, int kmax, int lmax, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  GnsVector x(box);
  for (int k = -kmax; k <= kmax; ++k)
    for (int l = -lmax; l <= lmax; ++l) {
      const double re = normal(rng);
      const double im = normal(rng);
      x.set(k, l, {re, im});
    }
  return x;
}

}  // namespace nctorus
