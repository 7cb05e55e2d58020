#pragma once

#include <cstdint>
#include <random>

#include "nfbridge/bridge.hpp"

namespace nfb {

/// Deterministic source of small rational values. Draws go through explicit
/// modulo reduction rather than std distributions so that a seed pins the
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  long uniform(long lo, long hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  /// Numerators in [-9, 9], denominators in [1, 9].
  Rational rational() { return Rational(uniform(-9, 9), uniform(1, 9)); }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  Rational positive_rational() {
    return Rational(uniform(1, 9), uniform(1, 9));
  }

  ExactComplex exact_complex(bool with_sqrt2 = false) {
    if (with_sqrt2) return {rational(), rational(), rational(), rational()};
    return {rational(), rational()};
  }

  template <class S>
  S scalar(bool with_sqrt2 = false) {
    const ExactComplex z = exact_complex(with_sqrt2);
    if constexpr (scalar_traits<S>::exact)
      return z;
    else
      return z.to_complex();
  }

  /// Random complex quad, not identically zero.
  template <class S>
  FieldQuad<S> field_quad() {
    for (;;) {
      FieldQuad<S> q{scalar<S>(), scalar<S>(), scalar<S>(), scalar<S>()};
      if (!q.is_zero()) return q;
    }
  }

  /// Random real-valued quad (rational amplitudes), not identically zero.
  template <class S>
  FieldQuad<S> real_field_quad() {
    using T = scalar_traits<S>;
    for (;;) {
      FieldQuad<S> q{T::from_rational(rational()), T::from_rational(rational()),
                     T::from_rational(rational()),
                     T::from_rational(rational())};
      if (!q.is_zero()) return q;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace nfb
