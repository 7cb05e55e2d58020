#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>

#include "nfbridge/rational.hpp"

namespace nfb {

/// Element of the ring Q(sqrt2, i): (a + b*sqrt2) + i*(c + d*sqrt2) with
/// arbitrary-precision rational a, b, c, d. Closed under +, -, *, conjugation,
/// and (being a field) under division by nonzero elements. Equality is exact.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long v) : re_rat_(v) {}  // NOLINT: implicit by design
  ExactComplex(Rational re) : re_rat_(std::move(re)) {}
  ExactComplex(Rational re, Rational im)
      : re_rat_(std::move(re)), im_rat_(std::move(im)) {}
  ExactComplex(Rational re_rat, Rational re_sqrt2, Rational im_rat,
               Rational im_sqrt2)
      : re_rat_(std::move(re_rat)),
        re_sqrt2_(std::move(re_sqrt2)),
        im_rat_(std::move(im_rat)),
        im_sqrt2_(std::move(im_sqrt2)) {}

  static ExactComplex i() { return ExactComplex(0, 0, 1, 0); }
  static ExactComplex sqrt2() { return ExactComplex(0, 1, 0, 0); }
  /// 1/sqrt2 = sqrt2/2, the factor introduced by the canonical transformation.
  static ExactComplex inv_sqrt2() {
    return ExactComplex(0, Rational(1, 2), 0, 0);
  }

  const Rational& re_rat() const { return re_rat_; }
  const Rational& re_sqrt2() const { return re_sqrt2_; }
  const Rational& im_rat() const { return im_rat_; }
  const Rational& im_sqrt2() const { return im_sqrt2_; }

  bool is_zero() const {
    return re_rat_ == 0 && re_sqrt2_ == 0 && im_rat_ == 0 && im_sqrt2_ == 0;
  }
  bool is_rational_complex() const { return re_sqrt2_ == 0 && im_sqrt2_ == 0; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_rat_ == b.re_rat_ && a.re_sqrt2_ == b.re_sqrt2_ &&
           a.im_rat_ == b.im_rat_ && a.im_sqrt2_ == b.im_sqrt2_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) {
    return !(a == b);
  }

  ExactComplex operator-() const {
    return {-re_rat_, -re_sqrt2_, -im_rat_, -im_sqrt2_};
  }
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re_rat_ + b.re_rat_, a.re_sqrt2_ + b.re_sqrt2_,
            a.im_rat_ + b.im_rat_, a.im_sqrt2_ + b.im_sqrt2_};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return a + (-b);
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    // (x1 + i y1)(x2 + i y2) with x, y in Q(sqrt2).
    auto [xr, xs] = mul2(a.re_rat_, a.re_sqrt2_, b.re_rat_, b.re_sqrt2_);
    auto [yr, ys] = mul2(a.im_rat_, a.im_sqrt2_, b.im_rat_, b.im_sqrt2_);
    auto [ur, us] = mul2(a.re_rat_, a.re_sqrt2_, b.im_rat_, b.im_sqrt2_);
    auto [vr, vs] = mul2(a.im_rat_, a.im_sqrt2_, b.re_rat_, b.re_sqrt2_);
    return {xr - yr, xs - ys, ur + vr, us + vs};
  }
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

  ExactComplex conj() const { return {re_rat_, re_sqrt2_, -im_rat_, -im_sqrt2_}; }

  ExactComplex inverse() const {
    if (is_zero()) throw std::domain_error("ExactComplex: divide by zero");
    // 1/(x + iy) = (x - iy)/(x^2 + y^2); the norm lives in Q(sqrt2) and is
    // nonzero there, so one more sqrt2-rationalization finishes the job.
    auto [nr, ns] = mul2(re_rat_, re_sqrt2_, re_rat_, re_sqrt2_);
    auto [mr, ms] = mul2(im_rat_, im_sqrt2_, im_rat_, im_sqrt2_);
    Rational p = nr + mr, q = ns + ms;       // norm = p + q*sqrt2
    Rational d = p * p - 2 * q * q;          // nonzero: sqrt2 is irrational
    Rational ip = p / d, iq = -q / d;        // 1/norm = ip + iq*sqrt2
    ExactComplex inv_norm(ip, iq, 0, 0);
    return conj() * inv_norm;
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    return a * b.inverse();
  }

  std::complex<double> to_complex() const {
    static const double s2 = 1.4142135623730950488;
    return {to_double(re_rat_) + to_double(re_sqrt2_) * s2,
            to_double(im_rat_) + to_double(im_sqrt2_) * s2};
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
    os << "(" << z.re_rat_;
    if (z.re_sqrt2_ != 0) os << "+" << z.re_sqrt2_ << "*s2";
    os << ")+i(" << z.im_rat_;
    if (z.im_sqrt2_ != 0) os << "+" << z.im_sqrt2_ << "*s2";
    os << ")";
    return os;
  }

 private:
  // (r1 + s1*sqrt2)(r2 + s2*sqrt2) = (r1 r2 + 2 s1 s2) + (r1 s2 + s1 r2)*sqrt2
  static std::pair<Rational, Rational> mul2(const Rational& r1,
                                            const Rational& s1,
                                            const Rational& r2,
                                            const Rational& s2) {
    return {r1 * r2 + 2 * s1 * s2, r1 * s2 + s1 * r2};
  }

  Rational re_rat_{0}, re_sqrt2_{0}, im_rat_{0}, im_sqrt2_{0};
};

}  // namespace nfb
