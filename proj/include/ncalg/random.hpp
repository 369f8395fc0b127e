#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ncalg/element.hpp"

namespace ncalg {

using Rng = std::mt19937_64;

/// Small Gaussian rational, real about half of the time; never zero.
inline Scalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3), coin(0, 1);
  for (;;) {
    Scalar re = Scalar::rational(num(rng), den(rng));
    Scalar im = coin(rng) ? Scalar::rational(num(rng), den(rng)) : Scalar();
    Scalar s = re + im * Scalar::i();
    if (!s.is_zero()) return s;
  }
}

/// Exact unit-modulus Gaussian rational ((1 - t^2) + 2t i) / (1 + t^2), t rational.
inline Scalar random_unit_scalar(Rng& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 12), coin(0, 3);
  Scalar t = Scalar::rational(num(rng), den(rng));
  Scalar one = 1;
  Scalar lambda = (one - t * t + Scalar(2) * t * Scalar::i()) * (one + t * t).inverse();
  switch (coin(rng)) {
    case 1: return -lambda;
    case 2: return lambda * Scalar::i();
    default: return lambda;
  }
}

inline Word random_word(Rng& rng, std::size_t letters, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(letters - 1));
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = pick(rng);
  return Word(std::move(w));
}

/// Nonzero element with 1..max_terms terms of degree <= max_deg.
inline FreeElement random_element(Rng& rng, std::size_t letters, std::size_t max_deg, std::size_t max_terms = 4) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  for (;;) {
    FreeElement f;
    std::size_t n = terms(rng);
    for (std::size_t k = 0; k < n; ++k) f.add_term(random_word(rng, letters, 0, max_deg), random_scalar(rng));
    if (!f.is_zero()) return f;
  }
}

/// Random element that involves at least one letter.
inline FreeElement random_nonscalar(Rng& rng, std::size_t letters, std::size_t max_deg, std::size_t max_terms = 4) {
  for (;;) {
    FreeElement f = random_element(rng, letters, max_deg, max_terms);
    if (f.degree() > 0) return f;
  }
}

inline std::complex<double> random_disc(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::complex<double> z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return z;
  }
}

inline Eigen::MatrixXcd random_disc_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_disc(rng);
  return m;
}

}  // namespace ncalg
