#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "nfbridge/planewave.hpp"

namespace nfb {

using Cd = std::complex<double>;

/// Uniform (t, y) lattice of sampled field quads.
struct Grid1D {
  std::size_t nt = 0, ny = 0;
  double dt = 0, dy = 0;
  double t0 = 0, y0 = 0;
  std::vector<FieldQuad<Cd>> values;  // row-major, it * ny + iy

  const FieldQuad<Cd>& at(std::size_t it, std::size_t iy) const {
    return values[it * ny + iy];
  }
  FieldQuad<Cd>& at(std::size_t it, std::size_t iy) {
    return values[it * ny + iy];
  }
  double t_at(std::size_t it) const { return t0 + dt * double(it); }
  double y_at(std::size_t iy) const { return y0 + dy * double(iy); }
};

/// Analytic evaluation of a plane-wave state at the lattice points.
template <class S>
Grid1D sample_planewave(const PlaneWaveState<S>& state, std::size_t nt,
                        std::size_t ny, double dt, double dy, double t0 = 0,
                        double y0 = 0) {
  if (nt == 0 || ny == 0 || dt <= 0 || dy <= 0)
    throw std::invalid_argument("sample_planewave: nonpositive grid spec");
  Grid1D g;
  g.nt = nt;
  g.ny = ny;
  g.dt = dt;
  g.dy = dy;
  g.t0 = t0;
  g.y0 = y0;
  g.values.resize(nt * ny);
  const double w = to_double(state.omega), k = to_double(state.k);
  const double s = state.exponent_sign();
  const Cd e1 = scalar_traits<S>::to_complex(state.amplitudes.e1);
  const Cd e2 = scalar_traits<S>::to_complex(state.amplitudes.e2);
  const Cd h1 = scalar_traits<S>::to_complex(state.amplitudes.h1);
  const Cd h2 = scalar_traits<S>::to_complex(state.amplitudes.h2);
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double phase = -(w * g.t_at(it) + s * k * g.y_at(iy));
      const Cd f = std::exp(Cd(0.0, phase));
      g.at(it, iy) = {e1 * f, e2 * f, h1 * f, h2 * f};
    }
  return g;
}

/// Per-row sup and discrete L2 (RMS) norms of a residual evaluation, with the
/// spacing used and an optional Richardson order when a matched pair was run.
struct ResidualReport {
  struct RowNorm {
    double sup = 0, l2 = 0;
  };
  std::vector<RowNorm> rows;
  double h = 0;
  std::optional<double> convergence_order;

  double sup() const {
    double m = 0;
    for (const auto& r : rows) m = std::max(m, r.sup);
    return m;
  }
};

inline double richardson_order(double sup_h, double sup_half_h) {
  return std::log2(sup_h / sup_half_h);
}

/// Attaches the estimated order to the coarse report of a matched (h, h/2)
/// Richardson pair; orders are never reported from a single run.
inline ResidualReport with_convergence(ResidualReport coarse,
                                       const ResidualReport& fine) {
  coarse.convergence_order = richardson_order(coarse.sup(), fine.sup());
  return coarse;
}

namespace detail {

struct RowAccumulator {
  double sup = 0, sum_sq = 0;
  std::size_t count = 0;
  void add(const Cd& v) {
    const double a = std::abs(v);
    sup = std::max(sup, a);
    sum_sq += a * a;
    ++count;
  }
  ResidualReport::RowNorm norm() const {
    return {sup, count ? std::sqrt(sum_sq / double(count)) : 0.0};
  }
};

// Central differences of one quad component over the lattice interior.
template <class Get>
Cd central_dt(const Grid1D& g, Get get, std::size_t it, std::size_t iy) {
  return (get(g.at(it + 1, iy)) - get(g.at(it - 1, iy))) / Cd(2 * g.dt, 0);
}
template <class Get>
Cd central_dy(const Grid1D& g, Get get, std::size_t it, std::size_t iy) {
  return (get(g.at(it, iy + 1)) - get(g.at(it, iy - 1))) / Cd(2 * g.dy, 0);
}

}  // namespace detail

/// Residual of a printed Maxwell-with-current system on a sampled grid, with
/// second-order central differences at interior points and the current term
/// carried through the calibrated constant (kappa/4pi from the plane-wave
/// module). Boundary points are excluded from the norms.
inline ResidualReport maxwell_residual(MaxwellSystem sys, const Grid1D& grid,
                                       const PhysicalConstants& constants,
                                       const Cd& kappa_over_4pi) {
  if (grid.nt < 3 || grid.ny < 3)
    throw std::invalid_argument("maxwell_residual: grid too small");
  const double c = to_double(constants.c);
  const double w0 = to_double(constants.omega0());
  const bool flipped =
      (sys == MaxwellSystem::sys_2_18 || sys == MaxwellSystem::conj_2_18);
  const double lhs_sgn = flipped ? -1.0 : 1.0;
  const double rhs_sgn = (sys == MaxwellSystem::sys_2_14pp ||
                          sys == MaxwellSystem::conj_2_18)
                             ? -1.0
                             : 1.0;
  const Cd iw0 = Cd(0, w0);

  std::array<detail::RowAccumulator, 4> acc;
  auto ge1 = [](const FieldQuad<Cd>& q) { return q.e1; };
  auto ge2 = [](const FieldQuad<Cd>& q) { return q.e2; };
  auto gh1 = [](const FieldQuad<Cd>& q) { return q.h1; };
  auto gh2 = [](const FieldQuad<Cd>& q) { return q.h2; };
  for (std::size_t it = 1; it + 1 < grid.nt; ++it)
    for (std::size_t iy = 1; iy + 1 < grid.ny; ++iy) {
      const auto& q = grid.at(it, iy);
      using detail::central_dt;
      using detail::central_dy;
      const Cd r0 = central_dt(grid, ge1, it, iy) / c -
                    lhs_sgn * central_dy(grid, gh2, it, iy) -
                    kappa_over_4pi * (rhs_sgn * -(iw0 * q.e1));
      const Cd r1 = central_dt(grid, ge2, it, iy) / c +
                    lhs_sgn * central_dy(grid, gh1, it, iy) -
                    kappa_over_4pi * (rhs_sgn * -(iw0 * q.e2));
      const Cd r2 = central_dt(grid, gh1, it, iy) / c +
                    lhs_sgn * central_dy(grid, ge2, it, iy) -
                    kappa_over_4pi * (rhs_sgn * (iw0 * q.h1));
      const Cd r3 = central_dt(grid, gh2, it, iy) / c -
                    lhs_sgn * central_dy(grid, ge1, it, iy) -
                    kappa_over_4pi * (rhs_sgn * (iw0 * q.h2));
      acc[0].add(r0);
      acc[1].add(r1);
      acc[2].add(r2);
      acc[3].add(r3);
    }
  ResidualReport rep;
  rep.h = grid.dy;
  for (const auto& a : acc) rep.rows.push_back(a.norm());
  return rep;
}

/// FD residual of dU/dt + div S on the real part of the sampled fields, with
/// U and S computed pointwise from the field definitions.
inline ResidualReport continuity_residual(const Grid1D& grid,
                                          const PhysicalConstants& constants) {
  if (grid.nt < 3 || grid.ny < 3)
    throw std::invalid_argument("continuity_residual: grid too small");
  constexpr double kPi = 3.14159265358979323846;
  const double c = to_double(constants.c);
  auto u_of = [&](const FieldQuad<Cd>& q) {
    const double e1 = q.e1.real(), e2 = q.e2.real(), h1 = q.h1.real(),
                 h2 = q.h2.real();
    return Cd((e1 * e1 + e2 * e2 + h1 * h1 + h2 * h2) / (8 * kPi), 0);
  };
  auto s_of = [&](const FieldQuad<Cd>& q) {
    const double e1 = q.e1.real(), e2 = q.e2.real(), h1 = q.h1.real(),
                 h2 = q.h2.real();
    return Cd(c * (e2 * h1 - e1 * h2) / (4 * kPi), 0);  // [E x H]_axis scaled
  };
  detail::RowAccumulator acc;
  for (std::size_t it = 1; it + 1 < grid.nt; ++it)
    for (std::size_t iy = 1; iy + 1 < grid.ny; ++iy) {
      const Cd du = (u_of(grid.at(it + 1, iy)) - u_of(grid.at(it - 1, iy))) /
                    Cd(2 * grid.dt, 0);
      const Cd ds = (s_of(grid.at(it, iy + 1)) - s_of(grid.at(it, iy - 1))) /
                    Cd(2 * grid.dy, 0);
      acc.add(du + ds);
    }
  ResidualReport rep;
  rep.h = grid.dy;
  rep.rows.push_back(acc.norm());
  return rep;
}

// ---------------------------------------------------------------------------
// Lagrangian, quantum and electromagnetic forms.

/// Termwise values of the y-axis Lagrangian. quantum[k] are the three terms
/// of the bispinor form; em_scaled[k] are 4 pi times the field-form terms, so
/// the shared proportionality is quantum = em_scaled / c exactly.
template <class S>
struct LagrangianTerms {
  std::array<S, 3> quantum{};
  std::array<S, 3> em_scaled{};
  S em3_scaled_current_route{};  // mass term assembled from the currents

  S quantum_total() const { return quantum[0] + quantum[1] + quantum[2]; }
  S em_scaled_total() const {
    return em_scaled[0] + em_scaled[1] + em_scaled[2];
  }
  bool termwise_proportional(const S& inv_c) const {
    for (int k = 0; k < 3; ++k)
      if (!matches(quantum[k], inv_c * em_scaled[k])) return false;
    return matches(em_scaled[2], em3_scaled_current_route);
  }
};

/// Amplitude-level evaluation on a plane-wave state (the common squared phase
/// divides out, so the values are taken at the origin).
template <class S>
LagrangianTerms<S> lagrangian_eval(const PlaneWaveState<S>& state,
                                   const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  const auto& q = state.amplitudes;
  const S two = T::one() + T::one();
  const S inv_c = T::one() / T::from_rational(constants.c);
  const S dt = dt_factor(state), dy = dy_factor(state);
  const S iw0 = T::i() * T::from_rational(constants.omega0());
  const S e_sq = q.e1 * q.e1 + q.e2 * q.e2;
  const S h_sq = q.h1 * q.h1 + q.h2 * q.h2;
  const S flux = two * (q.e1 * q.h2 - q.e2 * q.h1);  // psi+ alpha_y psi

  LagrangianTerms<S> out;
  out.quantum[0] = inv_c * dt * (e_sq + h_sq);
  out.quantum[1] = -(dy * flux);
  out.quantum[2] = -(iw0 * inv_c * (e_sq - h_sq));
  // 4 pi d/dt U with 4 pi U = (E^2 + H^2)/2 and the squared phase doubling
  // the derivative factor.
  out.em_scaled[0] = dt * (e_sq + h_sq);
  // 4 pi div S with 4 pi S_y = c [E x H]_y.
  const S c_s = T::from_rational(constants.c);
  out.em_scaled[1] = two * dy * (c_s * (q.e2 * q.h1 - q.e1 * q.h2));
  out.em_scaled[2] = -(iw0 * (e_sq - h_sq));
  // Current route: -(j^e.E - j^m.H) with the 4 pi already divided out.
  out.em3_scaled_current_route = -(iw0 * e_sq - iw0 * h_sq);
  return out;
}

/// FD evaluation of both Lagrangian forms at one interior lattice point.
struct LagrangianGridPoint {
  Cd quantum{};
  Cd em_scaled{};
};

inline LagrangianGridPoint lagrangian_at(const Grid1D& grid,
                                         const PhysicalConstants& constants,
                                         std::size_t it, std::size_t iy) {
  const double c = to_double(constants.c);
  const double w0 = to_double(constants.omega0());
  const auto psi_of = [](const FieldQuad<Cd>& q) {
    return Vec4<Cd>{q.e1, q.e2, Cd(0, 1) * q.h1, Cd(0, 1) * q.h2};
  };
  const auto& q = grid.at(it, iy);
  const Vec4<Cd> psi = psi_of(q);
  const Vec4<Cd> row{psi[0], psi[1], -psi[2], -psi[3]};
  const Vec4<Cd> dpsi_dt =
      Cd(1.0 / (2 * grid.dt)) *
      (psi_of(grid.at(it + 1, iy)) - psi_of(grid.at(it - 1, iy)));
  const Vec4<Cd> dpsi_dy =
      Cd(1.0 / (2 * grid.dy)) *
      (psi_of(grid.at(it, iy + 1)) - psi_of(grid.at(it, iy - 1)));
  const Mat4<Cd>& ay = dirac_matrix_cached<Cd>(MatrixKind::alpha(2));
  const Mat4<Cd>& beta = dirac_matrix_cached<Cd>(MatrixKind::beta_kind());

  LagrangianGridPoint out;
  out.quantum = dot_row_col(row, dpsi_dt) / c -
                dot_row_col(row, ay * dpsi_dy) -
                Cd(0, w0 / c) * dot_row_col(row, beta * psi);
  // Field form, scaled by 4 pi: d/dt (E^2+H^2)/2 + d/dy c [E x H]_y
  //                             - i w0 (E^2 - H^2).
  auto u4pi = [](const FieldQuad<Cd>& f) {
    return (f.e1 * f.e1 + f.e2 * f.e2 + f.h1 * f.h1 + f.h2 * f.h2) / 2.0;
  };
  auto s4pi = [&](const FieldQuad<Cd>& f) {
    return c * (f.e2 * f.h1 - f.e1 * f.h2);
  };
  const Cd du = (u4pi(grid.at(it + 1, iy)) - u4pi(grid.at(it - 1, iy))) /
                Cd(2 * grid.dt, 0);
  const Cd ds = (s4pi(grid.at(it, iy + 1)) - s4pi(grid.at(it, iy - 1))) /
                Cd(2 * grid.dy, 0);
  const Cd esq = q.e1 * q.e1 + q.e2 * q.e2;
  const Cd hsq = q.h1 * q.h1 + q.h2 * q.h2;
  out.em_scaled = du + ds - Cd(0, w0) * (esq - hsq);
  return out;
}

/// Sup over interior points of |quantum - em_scaled / c|: the two routes
/// approximate the same analytic identity, so the gap shrinks at second
/// order.
inline ResidualReport lagrangian_route_gap(const Grid1D& grid,
                                           const PhysicalConstants& constants) {
  if (grid.nt < 3 || grid.ny < 3)
    throw std::invalid_argument("lagrangian_route_gap: grid too small");
  const double c = to_double(constants.c);
  detail::RowAccumulator acc;
  for (std::size_t it = 1; it + 1 < grid.nt; ++it)
    for (std::size_t iy = 1; iy + 1 < grid.ny; ++iy) {
      const auto p = lagrangian_at(grid, constants, it, iy);
      acc.add(p.quantum - p.em_scaled / c);
    }
  ResidualReport rep;
  rep.h = grid.dy;
  rep.rows.push_back(acc.norm());
  return rep;
}

/// Pointwise gap between the bilinear route and the field route for both
/// lattice quantities: psi+ alpha0 psi against 8 pi U and psi+ alpha_y psi
/// against -2 [E x H]_y, on the real snapshot of the grid.
inline double probability_energy_gap(const Grid1D& grid) {
  const auto frame = direction_frame(Axis::y, Sign::minus);
  double sup = 0;
  for (std::size_t it = 0; it < grid.nt; ++it)
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const auto& q = grid.at(it, iy);
      const double e1 = q.e1.real(), e2 = q.e2.real(), h1 = q.h1.real(),
                   h2 = q.h2.real();
      const FieldQuad<Cd> real_q{Cd(e1), Cd(e2), Cd(h1), Cd(h2)};
      const Cd bil_u = bilinear(MatrixKind::alpha(0), real_q, frame);
      const double scaled_u = e1 * e1 + e2 * e2 + h1 * h1 + h2 * h2;
      const Cd bil_s = bilinear(MatrixKind::alpha(2), real_q, frame);
      const double scaled_s = -2.0 * (e2 * h1 - e1 * h2);  // -2 [E x H]_y
      sup = std::max({sup, std::abs(bil_u - Cd(scaled_u)),
                      std::abs(bil_s - Cd(scaled_s))});
    }
  return sup;
}

}  // namespace nfb
