#pragma once

#include <complex>
#include <functional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "ncalg/errors.hpp"

namespace ncalg {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den) {
    if (den == 0) throw ConfigError("zero denominator");
    return Scalar(mpq_class(num, den));
  }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Scalar inverse() const {
    if (is_zero()) throw ConfigError("division by zero scalar");
    mpq_class n = norm2();
    return Scalar(re_ / n, -im_ / n);
  }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Rendering used by the presentation language: `3/5`, `4/5 i`, `(3/5 - 4/5 i)`.
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag = imag_part_string(im_);
    if (sgn(re_) == 0) return imag;
    std::string sign = sgn(im_) < 0 ? " - " : " + ";
    return "(" + re_.get_str() + sign + imag_part_string(abs(im_)) + ")";
  }

  std::size_t hash() const {
    std::hash<std::string> h;
    return h(re_.get_str()) * 31u + h(im_.get_str());
  }

 private:
  static std::string imag_part_string(const mpq_class& v) {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + " i";
  }

  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ncalg
