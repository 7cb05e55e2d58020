#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "nfbridge/dirac.hpp"

namespace nfb {

enum class Axis : int { x = 0, y = 1, z = 2 };
enum class Sign : int { plus = +1, minus = -1 };
enum class Rep { standard, primed, retarded_conjugated };

inline const char* to_string(Axis a) {
  switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    default: return "z";
  }
}
inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

inline Axis next_axis(Axis a) { return Axis{(static_cast<int>(a) + 1) % 3}; }

/// One slot of a bispinor layout: which physical transverse component lives
/// there (E or H along a coordinate axis).
struct ComponentRef {
  bool magnetic = false;
  Axis axis = Axis::x;

  friend bool operator==(const ComponentRef& a, const ComponentRef& b) {
    return a.magnetic == b.magnetic && a.axis == b.axis;
  }
  std::string name() const {
    return std::string(magnetic ? "H" : "E") + to_string(axis);
  }
};

/// The two transverse electric and two transverse magnetic components for one
/// propagation frame, in that frame's slot order. The longitudinal pair is
/// absent by construction.
template <class S>
struct FieldQuad {
  S e1{}, e2{}, h1{}, h2{};

  friend bool operator==(const FieldQuad& a, const FieldQuad& b) {
    return a.e1 == b.e1 && a.e2 == b.e2 && a.h1 == b.h1 && a.h2 == b.h2;
  }
  bool is_zero() const {
    using T = scalar_traits<S>;
    return T::is_zero(e1) && T::is_zero(e2) && T::is_zero(h1) && T::is_zero(h2);
  }
};

/// (matrix triple, slot layout, sign): ties a wave direction to the alpha
/// matrix playing each coordinate's role and to the component packing order.
struct DirectionFrame {
  Axis axis = Axis::y;
  Sign sign = Sign::minus;
  /// axis_matrix[k] is the alpha kind acting for coordinate axis k (x,y,z).
  std::array<MatrixKind, 3> axis_matrix{};
  std::array<ComponentRef, 4> layout{};

  const MatrixKind& matrix_for(Axis a) const {
    return axis_matrix[static_cast<std::size_t>(a)];
  }
};

/// The six frames: for wave axis a, alpha2 acts along a, alpha3 along the next
/// cyclic axis, alpha1 along the remaining one. The negative-direction frames
/// carry the counterclockwise component transposition of the base layout, the
/// positive-direction frames the clockwise one.
inline DirectionFrame direction_frame(Axis axis, Sign sign) {
  DirectionFrame f;
  f.axis = axis;
  f.sign = sign;
  const Axis b = next_axis(axis), c = next_axis(b);
  f.axis_matrix[static_cast<std::size_t>(axis)] = MatrixKind::alpha(2);
  f.axis_matrix[static_cast<std::size_t>(b)] = MatrixKind::alpha(3);
  f.axis_matrix[static_cast<std::size_t>(c)] = MatrixKind::alpha(1);
  const Axis first = (sign == Sign::minus) ? c : b;
  const Axis second = (sign == Sign::minus) ? b : c;
  f.layout = {ComponentRef{false, first}, ComponentRef{false, second},
              ComponentRef{true, first}, ComponentRef{true, second}};
  return f;
}

inline std::array<DirectionFrame, 6> direction_frames() {
  return {direction_frame(Axis::x, Sign::minus),
          direction_frame(Axis::y, Sign::minus),
          direction_frame(Axis::z, Sign::minus),
          direction_frame(Axis::x, Sign::plus),
          direction_frame(Axis::y, Sign::plus),
          direction_frame(Axis::z, Sign::plus)};
}

template <class S>
struct Bispinor {
  Vec4<S> c{};
  Axis axis = Axis::y;
  Sign sign = Sign::minus;
  Rep rep = Rep::standard;
};

/// Packs a field quad into a bispinor: electric slots verbatim, magnetic slots
/// with the explicit factor i.
template <class S>
Bispinor<S> to_bispinor(const FieldQuad<S>& q, const DirectionFrame& frame) {
  using T = scalar_traits<S>;
  Bispinor<S> psi;
  psi.axis = frame.axis;
  psi.sign = frame.sign;
  psi.c[0] = q.e1;
  psi.c[1] = q.e2;
  psi.c[2] = T::i() * q.h1;
  psi.c[3] = T::i() * q.h2;
  return psi;
}

/// Recovers the quad from a standard-layout bispinor (divides out the i).
template <class S>
FieldQuad<S> to_field_quad(const Bispinor<S>& psi) {
  using T = scalar_traits<S>;
  const S minus_i = -T::i();
  return {psi.c[0], psi.c[1], minus_i * psi.c[2], minus_i * psi.c[3]};
}

/// The formal adjoint row: flips the sign of the explicit i on the magnetic
/// slots without conjugating the field amplitudes. Not the Hermitian adjoint;
/// the two coincide on real-valued fields.
template <class S>
Vec4<S> paper_adjoint(const Bispinor<S>& psi) {
  if (psi.rep == Rep::primed)
    throw std::invalid_argument("paper_adjoint: primed layout has no formal row");
  return {psi.c[0], psi.c[1], -psi.c[2], -psi.c[3]};
}

/// The true conjugate-transpose row.
template <class S>
Vec4<S> hermitian_adjoint(const Bispinor<S>& psi) {
  using T = scalar_traits<S>;
  return {T::conj(psi.c[0]), T::conj(psi.c[1]), T::conj(psi.c[2]),
          T::conj(psi.c[3])};
}

/// Adjoint row transported to the primed representation: row' = row * U, so
/// that row' (U^+ M U) psi' = row M psi identically.
template <class S>
Vec4<S> transported_adjoint(const Vec4<S>& row, const Mat4<S>& u) {
  return row * u;
}

/// Matrix form of the charge conjugation: diag(1,-1,1,-1). It anticommutes
/// with the propagation matrix and commutes with beta, which is what converts
/// one current-sign system into the other.
template <class S>
Mat4<S> charge_conjugation_matrix() {
  using T = scalar_traits<S>;
  return Mat4<S>::diag(T::one(), -T::one(), T::one(), -T::one());
}

/// Sign flip of the second and fourth components, converting between the two
/// current-sign Maxwell systems. An involution.
template <class S>
Bispinor<S> charge_conjugate(const Bispinor<S>& psi) {
  if (psi.rep == Rep::primed)
    throw std::invalid_argument("charge_conjugate: standard layout required");
  Bispinor<S> out = psi;
  out.c[1] = -psi.c[1];
  out.c[3] = -psi.c[3];
  out.rep = (psi.rep == Rep::standard) ? Rep::retarded_conjugated : Rep::standard;
  return out;
}

/// psi' = S^+ psi for a unitary S.
template <class S>
Bispinor<S> to_primed(const Bispinor<S>& psi, const Mat4<S>& u) {
  if (!is_unitary(u))
    throw std::invalid_argument("to_primed: matrix is not unitary");
  Bispinor<S> out;
  out.c = u.adjoint() * psi.c;
  out.axis = psi.axis;
  out.sign = psi.sign;
  out.rep = Rep::primed;
  return out;
}

template <class S>
using Vec3 = std::array<S, 3>;

/// Scatters a frame quad into full 3-vectors (longitudinal components zero).
template <class S>
std::pair<Vec3<S>, Vec3<S>> fields_3d(const FieldQuad<S>& q,
                                      const DirectionFrame& frame) {
  Vec3<S> e{scalar_traits<S>::zero(), scalar_traits<S>::zero(),
            scalar_traits<S>::zero()};
  Vec3<S> h = e;
  const std::array<S, 4> vals{q.e1, q.e2, q.h1, q.h2};
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const ComponentRef& ref = frame.layout[slot];
    (ref.magnetic ? h : e)[static_cast<std::size_t>(ref.axis)] = vals[slot];
  }
  return {e, h};
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace nfb
