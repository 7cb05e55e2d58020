#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfbridge/bilinears.hpp"

namespace nfb {

/// Exact constants profile; natural units are c = hbar = 1 with rational m,
/// and any other all-rational profile is equally valid.
struct PhysicalConstants {
  Rational c{1};
  Rational hbar{1};
  Rational m{0};

  static PhysicalConstants natural(Rational mass = 0) {
    return {1, 1, std::move(mass)};
  }

  Rational omega0() const { return m * c * c / hbar; }  // m c^2 / hbar
  Rational compton_length() const {
    if (m == 0) throw std::domain_error("compton_length: massless profile");
    return hbar / (m * c);
  }
};

/// Per-component complex amplitudes sharing exp(-i(w t +- k y)); the sign
/// enum below is the exponent's sign, so prop_sign == plus is the wave moving
/// toward -y. Derivatives act multiplicatively on such a state.
template <class S>
struct PlaneWaveState {
  FieldQuad<S> amplitudes{};
  Rational omega{0};
  Rational k{0};
  Sign prop_sign = Sign::plus;

  int exponent_sign() const { return prop_sign == Sign::plus ? +1 : -1; }
};

/// Multiplicative images of the energy and momentum operators on a state.
template <class S>
struct OperatorRep {
  S energy_factor{};    // hbar w      (action of i hbar d/dt)
  S momentum_factor{};  // -+ hbar k   (action of -i hbar d/dy)

  static OperatorRep from(const PlaneWaveState<S>& state,
                          const PhysicalConstants& constants) {
    using T = scalar_traits<S>;
    OperatorRep rep;
    rep.energy_factor = T::from_rational(constants.hbar * state.omega);
    const Rational hk = constants.hbar * state.k;
    rep.momentum_factor =
        T::from_rational(state.prop_sign == Sign::plus ? -hk : hk);
    return rep;
  }
};

/// Multiplicative images of d/dt and d/dy on the state's phase.
template <class S>
S dt_factor(const PlaneWaveState<S>& state) {
  using T = scalar_traits<S>;
  return -T::i() * T::from_rational(state.omega);
}
template <class S>
S dy_factor(const PlaneWaveState<S>& state) {
  using T = scalar_traits<S>;
  return -T::i() *
         T::from_rational(Rational(state.exponent_sign()) * state.k);
}

/// The six printed equation forms. The bracketed operator reads
/// momentum_coeff * c * (alpha p) and mass_coeff * beta m c^2; row forms act
/// on the formal adjoint row from the right.
enum class EquationForm {
  massless_2_10,
  massless_2_11,
  massive_2_13p,
  massive_2_13pp,
  massive_2_16,
  massive_2_17,
};

inline bool is_row_form(EquationForm f) {
  return f == EquationForm::massless_2_10 || f == EquationForm::massive_2_13pp ||
         f == EquationForm::massive_2_17;
}
inline int momentum_coeff(EquationForm f) {
  switch (f) {
    case EquationForm::massless_2_11:
    case EquationForm::massive_2_13p:
    case EquationForm::massive_2_13pp: return +1;
    default: return -1;
  }
}
inline int mass_coeff(EquationForm f) {
  switch (f) {
    case EquationForm::massive_2_13p:
    case EquationForm::massive_2_13pp: return +1;
    case EquationForm::massive_2_16:
    case EquationForm::massive_2_17: return -1;
    default: return 0;
  }
}
inline std::string form_label(EquationForm f) {
  switch (f) {
    case EquationForm::massless_2_10: return "2.10";
    case EquationForm::massless_2_11: return "2.11";
    case EquationForm::massive_2_13p: return "2.13'";
    case EquationForm::massive_2_13pp: return "2.13''";
    case EquationForm::massive_2_16: return "2.16";
    case EquationForm::massive_2_17: return "2.17";
  }
  return "?";
}
inline EquationForm parse_form(const std::string& tag) {
  if (tag == "2.10") return EquationForm::massless_2_10;
  if (tag == "2.11") return EquationForm::massless_2_11;
  if (tag == "2.13'" || tag == "1.1") return EquationForm::massive_2_13p;
  if (tag == "2.13''") return EquationForm::massive_2_13pp;
  if (tag == "2.16") return EquationForm::massive_2_16;
  if (tag == "2.17" || tag == "1.2") return EquationForm::massive_2_17;
  throw std::invalid_argument("unknown equation form tag: " + tag);
}

/// The 4x4 operator of a form in the multiplicative representation, for the
/// frame whose propagation matrix acts along the state's axis.
template <class S>
Mat4<S> plane_wave_operator(EquationForm form, const PlaneWaveState<S>& state,
                            const PhysicalConstants& constants,
                            const DirectionFrame& frame) {
  using T = scalar_traits<S>;
  const auto rep = OperatorRep<S>::from(state, constants);
  const Mat4<S>& a0 = dirac_matrix_cached<S>(MatrixKind::alpha(0));
  const Mat4<S>& a_axis = dirac_matrix_cached<S>(frame.matrix_for(frame.axis));
  const Mat4<S>& beta = dirac_matrix_cached<S>(MatrixKind::beta_kind());
  const S mom = T::from_rational(Rational(momentum_coeff(form)) * constants.c) *
                rep.momentum_factor;
  Mat4<S> op = rep.energy_factor * a0 + mom * a_axis;
  if (mass_coeff(form) != 0) {
    const S mc2 = T::from_rational(Rational(mass_coeff(form)) * constants.m *
                                   constants.c * constants.c);
    op = op + mc2 * beta;
  }
  return op;
}

/// Residual of a form on a plane-wave state, at amplitude level (the common
/// phase divides out). Column forms return op * psi, row forms the formal
/// adjoint row times op.
template <class S>
Vec4<S> apply_dirac_in_frame(EquationForm form, const PlaneWaveState<S>& state,
                             const PhysicalConstants& constants,
                             const DirectionFrame& frame) {
  const Mat4<S> op = plane_wave_operator(form, state, constants, frame);
  const Bispinor<S> psi = to_bispinor(state.amplitudes, frame);
  if (is_row_form(form)) return paper_adjoint(psi) * op;
  return op * psi.c;
}

template <class S>
Vec4<S> apply_dirac(EquationForm form, const PlaneWaveState<S>& state,
                    const PhysicalConstants& constants) {
  return apply_dirac_in_frame(form, state, constants,
                              direction_frame(Axis::y, Sign::minus));
}

/// Converts operator-form residual components to the scalar field equations:
/// divides out i hbar c and the layout unit on magnetic slots (i for column
/// layouts, -i for the adjoint row).
template <class S>
Vec4<S> dirac_field_rows(EquationForm form, const PlaneWaveState<S>& state,
                         const PhysicalConstants& constants,
                         const DirectionFrame& frame) {
  using T = scalar_traits<S>;
  Vec4<S> raw = apply_dirac_in_frame(form, state, constants, frame);
  const S inv_ihc =
      T::one() / (T::i() * T::from_rational(constants.hbar * constants.c));
  const S inv_unit = is_row_form(form) ? T::i() : -T::i();  // 1/(-i), 1/i
  Vec4<S> rows;
  for (std::size_t r = 0; r < 4; ++r) {
    rows[r] = inv_ihc * raw[r];
    if (r >= 2) rows[r] = inv_unit * rows[r];
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Printed Maxwell systems with complex currents.

/// Identifies a printed Maxwell-with-current system. conj_2_18 is the system
/// obtained from the last printed one by flipping every current sign, as the
/// text prescribes for the remaining conjugate equation.
enum class MaxwellSystem { sys_2_14p, sys_2_14pp, sys_2_18, conj_2_18 };

inline std::string system_label(MaxwellSystem s) {
  switch (s) {
    case MaxwellSystem::sys_2_14p: return "2.14'";
    case MaxwellSystem::sys_2_14pp: return "2.14''";
    case MaxwellSystem::sys_2_18: return "2.18";
    case MaxwellSystem::conj_2_18: return "2.18-conjugate";
  }
  return "?";
}

inline MaxwellSystem system_for_form(EquationForm f) {
  switch (f) {
    case EquationForm::massive_2_13p: return MaxwellSystem::sys_2_14p;
    case EquationForm::massive_2_13pp: return MaxwellSystem::sys_2_14pp;
    case EquationForm::massive_2_16: return MaxwellSystem::sys_2_18;
    case EquationForm::massive_2_17: return MaxwellSystem::conj_2_18;
    case EquationForm::massless_2_11: return MaxwellSystem::sys_2_14p;
    case EquationForm::massless_2_10: return MaxwellSystem::sys_2_18;
  }
  throw std::logic_error("unreachable");
}

/// The left-hand sides of a printed system, in slot order (e1, e2, h1, h2),
/// evaluated multiplicatively on the state. The derivative pairing flips
/// between the (2.14)-family and the (2.18)-family.
template <class S>
Vec4<S> maxwell_lhs_rows(MaxwellSystem sys, const PlaneWaveState<S>& state,
                         const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  const S dt = dt_factor(state);
  const S dy = dy_factor(state);
  const S inv_c = T::from_rational(Rational(1) / constants.c);
  const auto& q = state.amplitudes;
  const bool flipped =
      (sys == MaxwellSystem::sys_2_18 || sys == MaxwellSystem::conj_2_18);
  const S sgn = flipped ? -T::one() : T::one();
  Vec4<S> rows;
  rows[0] = inv_c * dt * q.e1 - sgn * (dy * q.h2);
  rows[1] = inv_c * dt * q.e2 + sgn * (dy * q.h1);
  rows[2] = inv_c * dt * q.h1 + sgn * (dy * q.e2);
  rows[3] = inv_c * dt * q.h2 - sgn * (dy * q.e1);
  return rows;
}

/// 4 pi times the printed current right-hand sides, in slot order. Scaling by
/// 4 pi keeps the values inside the exact ring; the factor is restored in the
/// reported kappa.
template <class S>
Vec4<S> maxwell_rhs_scaled(MaxwellSystem sys, const PlaneWaveState<S>& state,
                           const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  const S iw0 = T::i() * T::from_rational(constants.omega0());
  const auto& q = state.amplitudes;
  const S sgn = (sys == MaxwellSystem::sys_2_14pp ||
                 sys == MaxwellSystem::conj_2_18)
                    ? -T::one()
                    : T::one();
  // Electric rows carry -j^e, magnetic rows +j^m in the base systems.
  return {sgn * (-(iw0 * q.e1)), sgn * (-(iw0 * q.e2)), sgn * (iw0 * q.h1),
          sgn * (iw0 * q.h2)};
}

/// Result of matching Dirac-form rows against a printed system: one shared
/// constant kappa with DiracFieldRow = MaxwellLHS - (kappa/4pi) * (4pi RHS).
template <class S>
struct CurrentCorrespondence {
  S kappa_over_4pi{};
  std::array<bool, 4> row_match{};
  Vec4<S> dirac_rows{};
  Vec4<S> lhs{};
  Vec4<S> rhs_scaled{};

  bool all_match() const {
    return row_match[0] && row_match[1] && row_match[2] && row_match[3];
  }
  std::complex<double> kappa() const {
    constexpr double four_pi = 4.0 * 3.14159265358979323846;
    return four_pi * scalar_traits<S>::to_complex(kappa_over_4pi);
  }
};

/// Matches precomputed field rows against a system evaluated on the state.
template <class S>
CurrentCorrespondence<S> match_rows(const Vec4<S>& dirac_rows,
                                    MaxwellSystem sys,
                                    const PlaneWaveState<S>& state,
                                    const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  CurrentCorrespondence<S> out;
  out.dirac_rows = dirac_rows;
  out.lhs = maxwell_lhs_rows(sys, state, constants);
  out.rhs_scaled = maxwell_rhs_scaled(sys, state, constants);
  std::optional<std::size_t> pivot;
  for (std::size_t r = 0; r < 4; ++r)
    if (!T::is_zero(out.rhs_scaled[r])) {
      pivot = r;
      break;
    }
  if (!pivot)
    throw std::invalid_argument(
        "current correspondence is degenerate: no nonzero current row");
  out.kappa_over_4pi =
      (out.lhs[*pivot] - dirac_rows[*pivot]) / out.rhs_scaled[*pivot];
  for (std::size_t r = 0; r < 4; ++r)
    out.row_match[r] = matches(
        dirac_rows[r], out.lhs[r] - out.kappa_over_4pi * out.rhs_scaled[r]);
  return out;
}

/// Full pipeline for a massive form on a state: Dirac rows in field form
/// matched against the form's printed partner system.
template <class S>
CurrentCorrespondence<S> current_correspondence(
    EquationForm form, const PlaneWaveState<S>& state,
    const PhysicalConstants& constants) {
  if (constants.m == 0)
    throw std::invalid_argument("current_correspondence: mass must be positive");
  if (state.amplitudes.is_zero())
    throw std::invalid_argument("current_correspondence: all-zero state");
  const auto frame = direction_frame(Axis::y, Sign::minus);
  return match_rows(dirac_field_rows(form, state, constants, frame),
                    system_for_form(form), state, constants);
}

// ---------------------------------------------------------------------------
// Klein-Gordon factorization.

template <class S>
struct KleinGordonCheck {
  Mat4<S> energy_defect{};    // (a0 e)^2 - e^2 I
  Mat4<S> momentum_defect{};  // c^2 [ (a p)^2 - p^2 I ]
  Mat4<S> factored{};         // (a0 e - c a p)(a0 e + c a p)
  S dispersion_scalar{};      // e^2 - c^2 p^2 = hbar^2 (w^2 - c^2 k^2)

  bool holds() const {
    return energy_defect.is_zero() && momentum_defect.is_zero() &&
           factored == dispersion_scalar * Mat4<S>::identity();
  }
};

template <class S>
KleinGordonCheck<S> klein_gordon_check(const PlaneWaveState<S>& state,
                                       const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  const auto frame = direction_frame(Axis::y, Sign::minus);
  const auto rep = OperatorRep<S>::from(state, constants);
  const Mat4<S>& a0 = dirac_matrix_cached<S>(MatrixKind::alpha(0));
  const Mat4<S>& ay = dirac_matrix_cached<S>(frame.matrix_for(frame.axis));
  const Mat4<S> id = Mat4<S>::identity();
  const S c = T::from_rational(constants.c);
  const S e = rep.energy_factor, p = rep.momentum_factor;

  KleinGordonCheck<S> out;
  const Mat4<S> a0e = e * a0;
  const Mat4<S> cap = (c * p) * ay;
  out.energy_defect = a0e * a0e - (e * e) * id;
  out.momentum_defect = ((p * ay) * (p * ay) - (p * p) * id);
  out.momentum_defect = (c * c) * out.momentum_defect;
  out.factored = (a0e - cap) * (a0e + cap);
  out.dispersion_scalar = e * e - (c * p) * (c * p);
  return out;
}

// ---------------------------------------------------------------------------
// Null-space analysis of the massless plane-wave matrix.

/// Null-space basis of the (2.11) plane-wave matrix for the state's (w, k).
template <class S>
std::vector<Vec4<S>> massless_null_space(const PlaneWaveState<S>& state,
                                         const PhysicalConstants& constants) {
  const auto frame = direction_frame(Axis::y, Sign::minus);
  return kernel(plane_wave_operator(EquationForm::massless_2_11, state,
                                    constants, frame));
}

/// Reads a null vector back into transverse field amplitudes.
template <class S>
FieldQuad<S> decode_null_vector(const Vec4<S>& v) {
  using T = scalar_traits<S>;
  const S minus_i = -T::i();
  return {v[0], v[1], minus_i * v[2], minus_i * v[3]};
}

/// On-shell state (w = c k) with amplitudes a * b1 + b * b2 in the computed
/// null-space basis; the polarization constraints come from the kernel, not
/// from assumed amplitude relations.
template <class S>
PlaneWaveState<S> on_shell_massless_state(const Rational& k, Sign prop_sign,
                                          const S& a, const S& b,
                                          const PhysicalConstants& constants) {
  PlaneWaveState<S> probe;
  probe.omega = constants.c * k;
  probe.k = k;
  probe.prop_sign = prop_sign;
  const auto basis = massless_null_space(probe, constants);
  if (basis.size() != 2)
    throw std::logic_error("on-shell null space is not 2-dimensional");
  const Vec4<S> v = a * basis[0] + b * basis[1];
  probe.amplitudes = decode_null_vector(v);
  return probe;
}

/// On-shell massive state: requires w^2 = c^2 k^2 + w0^2 to have an exact
/// rational solution (Pythagorean profiles such as w0=3, ck=4, w=5).
template <class S>
PlaneWaveState<S> on_shell_massive_state(const Rational& omega,
                                         const Rational& k, Sign prop_sign,
                                         const S& a, const S& b,
                                         const PhysicalConstants& constants,
                                         EquationForm form) {
  PlaneWaveState<S> probe;
  probe.omega = omega;
  probe.k = k;
  probe.prop_sign = prop_sign;
  const auto frame = direction_frame(Axis::y, Sign::minus);
  const auto basis =
      kernel(plane_wave_operator(form, probe, constants, frame));
  if (basis.size() != 2)
    throw std::invalid_argument(
        "massive state is off dispersion: null space is not 2-dimensional");
  probe.amplitudes = decode_null_vector(a * basis[0] + b * basis[1]);
  return probe;
}

// ---------------------------------------------------------------------------
// Per-axis systems.

template <class S>
struct PerAxisSystem {
  DirectionFrame frame{};
  Vec4<S> lhs{};
  Vec4<S> rhs_scaled{};
  Vec4<S> dirac_rows{};
  std::array<std::string, 4> labels{};
};

/// The printed per-axis Maxwell-with-current group for one frame, evaluated
/// multiplicatively, together with the frame-transposed Dirac rows. The wave
/// coordinate of the state is read along the frame's axis.
template <class S>
PerAxisSystem<S> per_axis_system(Axis axis, Sign sign,
                                 const PlaneWaveState<S>& state,
                                 const PhysicalConstants& constants) {
  PerAxisSystem<S> out;
  out.frame = direction_frame(axis, sign);
  out.lhs = maxwell_lhs_rows(MaxwellSystem::sys_2_18, state, constants);
  out.rhs_scaled = maxwell_rhs_scaled(MaxwellSystem::sys_2_18, state, constants);
  out.dirac_rows =
      dirac_field_rows(EquationForm::massive_2_16, state, constants, out.frame);
  const char* d = to_string(axis);
  const auto& L = out.frame.layout;
  out.labels = {
      "(1/c) dt " + L[0].name() + " + d" + d + " " + L[3].name() + " = -je_" +
          to_string(L[0].axis),
      "(1/c) dt " + L[1].name() + " - d" + d + " " + L[2].name() + " = -je_" +
          to_string(L[1].axis),
      "(1/c) dt " + L[2].name() + " - d" + d + " " + L[1].name() + " = +jm_" +
          to_string(L[2].axis),
      "(1/c) dt " + L[3].name() + " + d" + d + " " + L[0].name() + " = +jm_" +
          to_string(L[3].axis),
  };
  return out;
}

}  // namespace nfb
