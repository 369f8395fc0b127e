#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ncalg/constructions.hpp"
#include "ncalg/embeddings.hpp"
#include "ncalg/exact_rank.hpp"

namespace ncalg {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;

namespace tol {
inline constexpr double relator_residual = 1e-12;
inline constexpr double power_iteration = 1e-12;
inline constexpr double rank_threshold = 1e-8;
inline constexpr double hermitian = 1e-12;
inline constexpr double cholesky_residual = 1e-10;
inline constexpr double scalar_matrix = 1e-10;
inline constexpr double distinct_entries = 1e-6;
inline constexpr double example_residual = 1e-8;
inline constexpr double block_relations = 1e-12;
inline constexpr double witness = 1e-9;
}  // namespace tol

inline double max_abs(const MatrixC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

namespace detail {

/// Largest eigenvalue of a Hermitian positive semidefinite matrix from one start vector.
inline double power_iterate(const MatrixC& b, Eigen::VectorXcd v, double rel_tol, std::size_t max_iter) {
  double nv = v.norm();
  if (nv == 0.0) return 0.0;
  v /= nv;
  double lambda = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd w = b * v;
    double nw = w.norm();
    if (nw == 0.0) return 0.0;
    lambda = v.dot(w).real();
    double residual = (w - lambda * v).norm();
    v = w / nw;
    if (residual <= rel_tol * std::abs(lambda)) break;
  }
  return std::max(lambda, (b * v).dot(v).real());
}

}  // namespace detail

/// Spectral norm by power iteration on M^dagger M.
///
/// Starts from the all-ones vector and again from a fixed-seed random vector;
/// the larger estimate wins. Deterministic.
inline double spectral_norm(const MatrixC& m, double rel_tol = tol::power_iteration,
                            std::size_t max_iter = 200000) {
  if (m.size() == 0) return 0.0;
  MatrixC b = m.adjoint() * m;
  Eigen::Index n = b.rows();
  double best = detail::power_iterate(b, Eigen::VectorXcd::Ones(n), rel_tol, max_iter);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  best = std::max(best, detail::power_iterate(b, v, rel_tol, max_iter));
  return std::sqrt(std::max(best, 0.0));
}

/// Assignment letter -> matrix satisfying rep(star x) = rep(x)^dagger and the relators.
class MatRep {
 public:
  /// `base` gives the matrix of every unstarred letter; starred letters get the adjoint.
  MatRep(Presentation p, const std::vector<MatrixC>& base) : presentation_(std::move(p)) {
    std::size_t g = 0;
    mats_.resize(presentation_.letter_count());
    for (Letter l = 0; l < presentation_.letter_count(); ++l) {
      const auto& info = presentation_.letters()[l];
      if (info.starred) continue;
      if (g >= base.size()) throw ConfigError("missing matrix for letter " + info.name);
      mats_[l] = base[g++];
    }
    if (g != base.size()) throw ConfigError("too many matrices for the presentation");
    dim_ = mats_.empty() ? 0 : mats_[0].rows();
    for (Letter l = 0; l < mats_.size(); ++l) {
      const auto& info = presentation_.letters()[l];
      if (info.starred) mats_[l] = mats_[l - 1].adjoint();
      if (mats_[l].rows() != dim_ || mats_[l].cols() != dim_)
        throw ConfigError("dimension mismatch for letter " + info.name);
    }
    if (presentation_.is_star()) {
      auto inv = presentation_.involution();
      for (Letter l = 0; l < mats_.size(); ++l)
        if (max_abs(mats_[inv[l]] - mats_[l].adjoint()) > tol::relator_residual)
          throw NumericError("representation is not star-compatible at " + presentation_.letter_name(l));
    }
    for (const auto& r : presentation_.relators()) {
      double res = eval(r).norm();
      max_residual_ = std::max(max_residual_, res);
      if (res > tol::relator_residual)
        throw NumericError("relator " + presentation_.render(r) + " has residual " + std::to_string(res));
    }
  }

  const Presentation& presentation() const noexcept { return presentation_; }
  Eigen::Index dimension() const noexcept { return dim_; }
  const MatrixC& matrix(Letter l) const { return mats_.at(l); }
  double max_relator_residual() const noexcept { return max_residual_; }

  MatrixC eval(const FreeElement& f) const {
    presentation_.check_letters(f);
    MatrixC out = MatrixC::Zero(dim_, dim_);
    for (const auto& [w, c] : f) {
      MatrixC term = MatrixC::Identity(dim_, dim_);
      for (Letter l : w) term = term * mats_[l];
      out += c.to_complex() * term;
    }
    return out;
  }

 private:
  Presentation presentation_;
  std::vector<MatrixC> mats_;
  Eigen::Index dim_ = 0;
  double max_residual_ = 0.0;
};

inline Presentation dz2_presentation() { return star_double(group_algebra_z2()).presentation; }

inline MatrixC dz2_matrix(Complex lambda) {
  MatrixC s(2, 2);
  s << 1.0, lambda, 0.0, -1.0;
  return s;
}

/// The two-dimensional representation s -> [[1, lambda], [0, -1]] of D(C[Z2]).
inline MatRep dz2_rep(Complex lambda) { return MatRep(dz2_presentation(), {dz2_matrix(lambda)}); }

struct FaithfulnessReport {
  std::size_t bound = 0;
  std::size_t basis_words = 0;
  std::size_t samples = 0;           // distinct nonzero lambdas
  std::size_t required_samples = 0;  // ceil(words / 4)
  std::size_t numerical_rank = 0;
  std::size_t exact_rank = 0;
  double sigma_ratio_min = 0.0;  // smallest / largest singular value
  double threshold = tol::rank_threshold;

  bool sufficient_samples() const { return samples >= required_samples; }
  bool full_rank() const { return numerical_rank == basis_words; }
  bool exact_full_rank() const { return exact_rank == basis_words; }
  bool inconclusive() const { return !sufficient_samples(); }
};

/// Linear independence of the basis words of D(C[Z2]) of length <= bound under
/// the direct sum of the lambda representations.
///
/// The numerical rank counts singular values above threshold * largest; the
/// exact rank repeats the computation over Gaussian rationals.
inline FaithfulnessReport faithfulness_certificate(std::size_t bound, std::span<const Scalar> lambdas) {
  FaithfulnessReport rep;
  rep.bound = bound;
  Algebra alg = complete_algebra(dz2_presentation(), std::max<std::size_t>(bound, 2));
  auto words = basis_words(alg.system, bound);
  rep.basis_words = words.size();
  rep.required_samples = (words.size() + 3) / 4;
  std::vector<Scalar> distinct;
  for (const auto& l : lambdas)
    if (!l.is_zero() && std::find(distinct.begin(), distinct.end(), l) == distinct.end()) distinct.push_back(l);
  rep.samples = distinct.size();

  MatrixC vecs(static_cast<Eigen::Index>(4 * lambdas.size()), static_cast<Eigen::Index>(words.size()));
  SparseEliminator exact;
  for (std::size_t j = 0; j < words.size(); ++j) {
    FreeElement column;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      MatRep r = dz2_rep(lambdas[k].to_complex());
      MatrixC m = r.eval(FreeElement::monomial(words[j]));
      for (int e = 0; e < 4; ++e) vecs(static_cast<Eigen::Index>(4 * k + e), static_cast<Eigen::Index>(j)) = m(e / 2, e % 2);

      // exact product of [[1, l], [0, -1]] and its adjoint [[1, 0], [conj l, -1]]
      Scalar a = 1, b = 0, c = 0, d = 1;
      for (Letter l : words[j]) {
        Scalar p, q, rr, s;
        if (l == 0) { p = 1; q = lambdas[k]; rr = 0; s = -1; }
        else { p = 1; q = 0; rr = lambdas[k].conj(); s = -1; }
        Scalar na = a * p + b * rr, nb = a * q + b * s, nc = c * p + d * rr, nd = c * q + d * s;
        a = na; b = nb; c = nc; d = nd;
      }
      Letter base = static_cast<Letter>(4 * k);
      column.add_term(Word{base}, a);
      column.add_term(Word{base + 1}, b);
      column.add_term(Word{base + 2}, c);
      column.add_term(Word{base + 3}, d);
    }
    exact.insert(column);
  }
  rep.exact_rank = exact.rank();
  if (words.empty() || lambdas.empty()) return rep;
  Eigen::JacobiSVD<MatrixC> svd(vecs);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rep.threshold * smax) ++rep.numerical_rank;
  rep.sigma_ratio_min = sv.size() < static_cast<Eigen::Index>(words.size()) || smax == 0.0 ? 0.0 : sv(sv.size() - 1) / smax;
  return rep;
}

/// C = L L^dagger with L lower triangular and positive diagonal.
inline MatrixC cholesky(const MatrixC& c) {
  if (c.rows() != c.cols()) throw PreconditionError("cholesky needs a square matrix");
  double scale = std::max(1.0, max_abs(c));
  if (max_abs(c - c.adjoint()) > tol::hermitian * scale) throw PreconditionError("matrix is not Hermitian");
  Eigen::Index n = c.rows();
  MatrixC l = MatrixC::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex d = c(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= l(j, k) * std::conj(l(j, k));
    if (!(d.real() > 0.0)) throw PreconditionError("non-positive pivot at " + std::to_string(j));
    double pivot = std::sqrt(d.real());
    l(j, j) = pivot;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Complex s = c(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / pivot;
    }
  }
  if ((l * l.adjoint() - c).norm() > tol::cholesky_residual * std::max(c.norm(), 1e-300))
    throw NumericError("cholesky residual above tolerance");
  return l;
}

/// Lower-triangular A = L T L^-1 and B = L T^dagger L^-1 with C B^dagger C^-1 = A, C = S^dagger S.
struct SimilarityWitness {
  MatrixC c, l, a, b;
  double residual = 0.0;
  double cond_c = 0.0;
  double cond_s = 0.0;
  double norm_t = 0.0;
  double residual_bound = 0.0;
  bool scalar_flag = false;
  bool distinct_t = false;
  bool contract_holds() const { return residual <= residual_bound && (!distinct_t || !scalar_flag); }
};

inline SimilarityWitness nonisometric_witness(const MatrixC& s, const MatrixC& t) {
  if (s.rows() != s.cols() || t.rows() != t.cols() || s.rows() != t.rows())
    throw PreconditionError("S and T must be square of equal size");
  Eigen::Index n = s.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && t(i, j) != Complex(0.0)) throw PreconditionError("T must be diagonal");
  Eigen::FullPivLU<MatrixC> slu(s);
  if (!slu.isInvertible()) throw PreconditionError("S is singular");

  SimilarityWitness w;
  w.cond_s = spectral_norm(s) * spectral_norm(slu.inverse());
  w.c = s.adjoint() * s;
  w.l = cholesky(w.c);
  MatrixC l_inv = w.l.triangularView<Eigen::Lower>().solve(MatrixC::Identity(n, n));
  w.a = w.l * t * l_inv;
  w.b = w.l * t.adjoint() * l_inv;
  MatrixC c_inv = w.c.partialPivLu().inverse();
  w.residual = spectral_norm(w.c * w.b.adjoint() * c_inv - w.a);
  w.cond_c = spectral_norm(w.c) * spectral_norm(c_inv);
  w.norm_t = t.diagonal().cwiseAbs().maxCoeff();
  w.residual_bound = tol::example_residual * w.cond_c * w.norm_t;
  Complex mean = w.a.trace() / static_cast<double>(n);
  w.scalar_flag = spectral_norm(w.a - mean * MatrixC::Identity(n, n)) <= tol::scalar_matrix;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(t(i, i) - t(j, j)) > tol::distinct_entries) w.distinct_t = true;
  return w;
}

/// Block-operator witnesses for the lower bound |phi| |phi^-1| >= 1/|c|.
struct VcWitness {
  Complex c;
  MatrixC a, x;
  double relation_residual = 0.0;  // max over X^2, XA - cX, AX
  double norm_y = 0.0;
  double norm_x = 0.0;
  double norm_phi_e22 = 0.0;       // |phi(E22)|, E22 of norm one
  double phi_lower = 0.0;          // |Y| / |c|
  double phi_inverse_lower = 0.0;  // |phi^-1(X)| / |X| = 1 / |X|
  double witness_product = 0.0;    // phi_lower * phi_inverse_lower
  double target = 0.0;             // 1 / |c|
  bool relations_hold = false;
  bool phi_is_consistent = false;  // phi(I) = I, phi(xi) = A, phi(eta) = X
  bool certified = false;
};

inline VcWitness vc_bound_witness(Complex c, const MatrixC& y) {
  if (c == Complex(0.0)) throw PreconditionError("c must be nonzero");
  if (y.size() == 0 || max_abs(y) == 0.0) throw PreconditionError("Y must be nonzero");
  Eigen::Index n1 = y.rows(), n2 = y.cols(), n = n1 + n2;
  auto phi = [&](Complex alpha, Complex beta, Complex gamma) {
    MatrixC m = MatrixC::Zero(n, n);
    m.topLeftCorner(n1, n1) = alpha * MatrixC::Identity(n1, n1);
    m.topRightCorner(n1, n2) = (beta - (gamma - alpha) / c) * y;
    m.bottomRightCorner(n2, n2) = gamma * MatrixC::Identity(n2, n2);
    return m;
  };
  VcWitness w;
  w.c = c;
  w.a = MatrixC::Zero(n, n);
  w.a.bottomRightCorner(n2, n2) = c * MatrixC::Identity(n2, n2);
  w.x = MatrixC::Zero(n, n);
  w.x.topRightCorner(n1, n2) = y;
  w.relation_residual = std::max({max_abs(w.x * w.x), max_abs(w.x * w.a - c * w.x), max_abs(w.a * w.x)});
  w.relations_hold = w.relation_residual <= tol::block_relations;
  w.phi_is_consistent = max_abs(phi(1.0, 0.0, 1.0) - MatrixC::Identity(n, n)) <= tol::block_relations &&
                        max_abs(phi(0.0, 1.0, c) - w.a) <= tol::block_relations &&
                        max_abs(phi(0.0, 1.0, 0.0) - w.x) <= tol::block_relations;
  w.norm_y = spectral_norm(y);
  w.norm_x = spectral_norm(w.x);
  w.norm_phi_e22 = spectral_norm(phi(0.0, 0.0, 1.0));
  w.phi_lower = w.norm_y / std::abs(c);
  w.phi_inverse_lower = 1.0 / w.norm_x;
  w.witness_product = w.phi_lower * w.phi_inverse_lower;
  w.target = 1.0 / std::abs(c);
  w.certified = w.relations_hold && w.phi_is_consistent &&
                w.norm_phi_e22 >= w.phi_lower - tol::witness &&
                w.witness_product >= w.target - tol::witness;
  return w;
}

}  // namespace ncalg
