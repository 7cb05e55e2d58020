#pragma once

#include <cmath>
#include <complex>

#include "nfbridge/exact.hpp"
#include "nfbridge/rational.hpp"

namespace nfb {

/// Uniform access to the two scalar modes: ExactComplex (exact, default for
/// the matrix apparatus) and std::complex<double> (grid modules, 1e-12
/// tolerances).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<ExactComplex> {
  static constexpr bool exact = true;
  static ExactComplex zero() { return {}; }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex i() { return ExactComplex::i(); }
  static ExactComplex inv_sqrt2() { return ExactComplex::inv_sqrt2(); }
  static ExactComplex from_rational(const Rational& r) {
    return ExactComplex(r);
  }
  static ExactComplex conj(const ExactComplex& z) { return z.conj(); }
  static bool is_zero(const ExactComplex& z) { return z.is_zero(); }
  /// Pivoting predicate for elimination; exact mode needs no threshold.
  static bool negligible(const ExactComplex& z) { return z.is_zero(); }
  static std::complex<double> to_complex(const ExactComplex& z) {
    return z.to_complex();
  }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool exact = false;
  using C = std::complex<double>;
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static C i() { return {0.0, 1.0}; }
  static C inv_sqrt2() { return {1.0 / std::sqrt(2.0), 0.0}; }
  static C from_rational(const Rational& r) { return {to_double(r), 0.0}; }
  static C conj(const C& z) { return std::conj(z); }
  static bool is_zero(const C& z) { return z == C{0.0, 0.0}; }
  static bool negligible(const C& z) { return std::abs(z) < 1e-12; }
  static std::complex<double> to_complex(const C& z) { return z; }
};

/// Comparison policy: exact equality in exact mode; in float mode 1e-12
/// relative on nonzero expectations, 1e-12 absolute on zero expectations.
template <class S>
bool matches(const S& got, const S& expected) {
  if constexpr (scalar_traits<S>::exact) {
    return got == expected;
  } else {
    const double mag = std::abs(expected);
    if (mag == 0.0) return std::abs(got) <= 1e-12;
    return std::abs(got - expected) <= 1e-12 * mag;
  }
}

}  // namespace nfb
