#pragma once

#include <optional>

#include "nfbridge/gridfields.hpp"

namespace nfb {

// ---------------------------------------------------------------------------
// Energy-momentum tensor and the symmetric-tensor force.

/// Symmetric energy-momentum tensor components: tau_ij with the standard
/// Kronecker delta, the Poynting row tau_i0 = [E x H], and tau_00 = the
/// half-sum of squares. (The source prints the delta definition backwards;
/// tau_00 printed in the same equation forces the standard convention.)
template <class S>
struct EMTensor {
  std::array<std::array<S, 3>, 3> tau{};
  Vec3<S> tau_i0{};
  S tau_00{};

  static EMTensor from_fields(const Vec3<S>& e, const Vec3<S>& h) {
    using T = scalar_traits<S>;
    const S half = T::one() / (T::one() + T::one());
    EMTensor out;
    const S sum_sq = dot(e, e) + dot(h, h);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        out.tau[a][b] = -(e[a] * e[b] + h[a] * h[b]);
        if (a == b) out.tau[a][b] += half * sum_sq;
      }
    out.tau_i0 = cross(e, h);
    out.tau_00 = half * sum_sq;
    return out;
  }

  bool symmetric() const {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (!(tau[a][b] == tau[b][a])) return false;
    return true;
  }
  S trace() const { return tau[0][0] + tau[1][1] + tau[2][2]; }
};

/// Force components from the symmetric tensor, for a y-wave carried by a
/// plane-wave state with possible longitudinal slots supplied explicitly.
/// Values are scaled by 4 pi. The transverse components vanish identically
/// for the ansatz; they are computed, not assumed.
template <class S>
struct SymmetricForce {
  S fx_4pi{}, fy_4pi{}, fz_4pi{}, f0_4pi{};
};

template <class S>
SymmetricForce<S> symmetric_force(const PlaneWaveState<S>& state,
                                  const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  const auto frame = direction_frame(Axis::y, Sign::minus);
  const auto [e3, h3] = fields_3d(state.amplitudes, frame);
  if (!T::is_zero(e3[1]) || !T::is_zero(h3[1]))
    throw std::invalid_argument("symmetric_force: y-wave ansatz violated");
  const auto tensor = EMTensor<S>::from_fields(e3, h3);
  // Quadratic fields carry the squared phase: derivatives double up.
  const S two = T::one() + T::one();
  const S ddt = two * dt_factor(state);
  const S ddy = two * dy_factor(state);
  const S inv_c = T::one() / T::from_rational(constants.c);

  SymmetricForce<S> out;
  // f_i = -(1/4pi) [ d_y tau_iy + (1/c) d_t tau_i0 ].
  out.fx_4pi = -(ddy * tensor.tau[0][1] + inv_c * ddt * tensor.tau_i0[0]);
  out.fy_4pi = -(ddy * tensor.tau[1][1] + inv_c * ddt * tensor.tau_i0[1]);
  out.fz_4pi = -(ddy * tensor.tau[2][1] + inv_c * ddt * tensor.tau_i0[2]);
  // f_0 = -(1/4pi) [ (1/c) d_t tau_00 + d_y tau_0y ].
  out.f0_4pi = -(inv_c * ddt * tensor.tau_00 + ddy * tensor.tau_i0[1]);
  return out;
}

// ---------------------------------------------------------------------------
// Ring force balance.

struct RingConfig {
  Rational rho_e{0};
  Rational j_tau{0};
  Rational e_p{0};
  Rational h_p{0};
  Rational r_p{1};
  Rational omega_p{0};
  // Volume element converting momentum and energy to their densities; no
  // physical default is asserted beyond positivity.
  Rational delta_tau{1};
};

/// g_p = p_p / delta_tau (and likewise U_p = eps_p / delta_tau).
inline Rational momentum_to_density(const Rational& value,
                                    const Rational& delta_tau) {
  if (delta_tau <= 0)
    throw std::invalid_argument("momentum_to_density: delta_tau must be positive");
  return value / delta_tau;
}

/// Radial force density rho_e (E_p - H_p) along the unit radius vector;
/// requires the tangential-current invariant rho_e c = j_tau.
inline Rational ring_force(const RingConfig& config,
                           const PhysicalConstants& constants) {
  if (config.rho_e * constants.c != config.j_tau)
    throw std::invalid_argument("ring_force: rho_e c = j_tau violated");
  return config.rho_e * (config.e_p - config.h_p);
}

// ---------------------------------------------------------------------------
// Spin-tensor force: bracket expansion and the spinning substitution.

/// The four free-wave rows of the standard system, reused as the force
/// brackets; each vanishes on shell.
template <class S>
struct SpinBrackets {
  S b_e1{}, b_e2{}, b_h1{}, b_h2{};

  static SpinBrackets from(const PlaneWaveState<S>& state,
                           const PhysicalConstants& constants) {
    using T = scalar_traits<S>;
    const S dt = dt_factor(state), dy = dy_factor(state);
    const S inv_c = T::one() / T::from_rational(constants.c);
    const auto& q = state.amplitudes;
    SpinBrackets out;
    out.b_e1 = inv_c * dt * q.e1 - dy * q.h2;
    out.b_e2 = inv_c * dt * q.e2 + dy * q.h1;
    out.b_h1 = inv_c * dt * q.h1 + dy * q.e2;
    out.b_h2 = inv_c * dt * q.h2 - dy * q.e1;
    return out;
  }
};

/// Which transverse pair carries the rotation; named by slot content, which
/// for the y/minus frame reads (E_x, H_z) and (E_z, H_x).
enum class SpinMode { e1_h2, e2_h1 };

struct Spinning {
  SpinMode mode = SpinMode::e1_h2;
  Rational omega{0};
};

/// Spin-tensor force components, scaled by 2 pi as printed. The two named
/// components are the field-content groupings of the bracket expansion; the
/// y and time components are identically zero because their tensor column
/// entries vanish. The spinning extras come from shifting both derivatives of
/// the mode's electric component by the rotation phase.
template <class S>
struct SpinForce {
  S fx_2pi{}, fz_2pi{};          // bracket parts
  S fx_2pi_spin{}, fz_2pi_spin{};  // spinning extras
  S fy{}, f0{};                  // identically zero

  S fx_2pi_total() const { return fx_2pi + fx_2pi_spin; }
  S fz_2pi_total() const { return fz_2pi + fz_2pi_spin; }
};

template <class S>
SpinForce<S> spin_force(const PlaneWaveState<S>& state,
                        const PhysicalConstants& constants,
                        const std::optional<Spinning>& spinning = {}) {
  using T = scalar_traits<S>;
  const auto br = SpinBrackets<S>::from(state, constants);
  const auto& q = state.amplitudes;
  SpinForce<S> out;
  out.fx_2pi = q.e1 * br.b_h2 + q.h2 * br.b_e1;
  out.fz_2pi = q.h1 * br.b_e2 + q.e2 * br.b_h1;
  if (spinning) {
    const S iw_c = T::i() * T::from_rational(spinning->omega / constants.c);
    if (spinning->mode == SpinMode::e1_h2) {
      // d/dt e1 -> i w e1 + d/dt e1 inside b_e1, and the matching spatial
      // shift d/dy e1 -> d/dy e1 - (i w / c) e1 inside b_h2.
      const S delta_b_e1 = iw_c * q.e1;
      const S delta_b_h2 = iw_c * q.e1;
      out.fx_2pi_spin = q.e1 * delta_b_h2 + q.h2 * delta_b_e1;
    } else {
      const S delta_b_e2 = iw_c * q.e2;
      const S delta_b_h1 = -(iw_c * q.e2);
      out.fz_2pi_spin = q.h1 * delta_b_e2 + q.e2 * delta_b_h1;
    }
  }
  return out;
}

/// Lattice of tensor bilinear values computed from sampled fields.
struct SpinTensorField {
  const Grid1D* grid = nullptr;
  // values[point][mu][nu] over the materialized index square.
  std::vector<std::array<std::array<Cd, 4>, 4>> values;

  static SpinTensorField from_grid(const Grid1D& g) {
    const auto frame = direction_frame(Axis::y, Sign::minus);
    SpinTensorField out;
    out.grid = &g;
    out.values.resize(g.nt * g.ny);
    for (std::size_t it = 0; it < g.nt; ++it)
      for (std::size_t iy = 0; iy < g.ny; ++iy) {
        auto& cell = out.values[it * g.ny + iy];
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu)
            cell[mu][nu] = (mu == nu)
                               ? Cd{}
                               : bilinear(MatrixKind::tensor(mu, nu),
                                          g.at(it, iy), frame);
      }
    return out;
  }

  const std::array<std::array<Cd, 4>, 4>& at(std::size_t it,
                                             std::size_t iy) const {
    return values[it * grid->ny + iy];
  }

  double antisymmetry_defect() const {
    double sup = 0;
    for (const auto& cell : values)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          sup = std::max(sup, std::abs(cell[mu][nu] + cell[nu][mu]));
    return sup;
  }
};

/// FD route for the force expansion: -(1/2)[d_y T(2,1) + (1/c) d_t T(1,0)]
/// approximates the sum of the two bracket groupings at interior points.
inline ResidualReport spin_force_fd_gap(const Grid1D& grid,
                                        const PhysicalConstants& constants) {
  if (grid.nt < 3 || grid.ny < 3)
    throw std::invalid_argument("spin_force_fd_gap: grid too small");
  const auto field = SpinTensorField::from_grid(grid);
  const double c = to_double(constants.c);
  detail::RowAccumulator acc;
  for (std::size_t it = 1; it + 1 < grid.nt; ++it)
    for (std::size_t iy = 1; iy + 1 < grid.ny; ++iy) {
      const Cd dy_t21 =
          (field.at(it, iy + 1)[2][1] - field.at(it, iy - 1)[2][1]) /
          Cd(2 * grid.dy, 0);
      const Cd dt_t10 =
          (field.at(it + 1, iy)[1][0] - field.at(it - 1, iy)[1][0]) /
          Cd(2 * grid.dt, 0);
      const Cd tensor_route = -0.5 * (dy_t21 + dt_t10 / c);
      // Bracket route, evaluated pointwise with central differences.
      const auto& q = grid.at(it, iy);
      using detail::central_dt;
      using detail::central_dy;
      auto ge1 = [](const FieldQuad<Cd>& f) { return f.e1; };
      auto ge2 = [](const FieldQuad<Cd>& f) { return f.e2; };
      auto gh1 = [](const FieldQuad<Cd>& f) { return f.h1; };
      auto gh2 = [](const FieldQuad<Cd>& f) { return f.h2; };
      const Cd b_e1 = central_dt(grid, ge1, it, iy) / c -
                      central_dy(grid, gh2, it, iy);
      const Cd b_e2 = central_dt(grid, ge2, it, iy) / c +
                      central_dy(grid, gh1, it, iy);
      const Cd b_h1 = central_dt(grid, gh1, it, iy) / c +
                      central_dy(grid, ge2, it, iy);
      const Cd b_h2 = central_dt(grid, gh2, it, iy) / c -
                      central_dy(grid, ge1, it, iy);
      const Cd bracket_route =
          q.e1 * b_h2 + q.h2 * b_e1 + q.h1 * b_e2 + q.e2 * b_h1;
      acc.add(tensor_route - bracket_route);
    }
  ResidualReport rep;
  rep.h = grid.dy;
  rep.rows.push_back(acc.norm());
  return rep;
}

// ---------------------------------------------------------------------------
// Heisenberg rate.

/// (1/ i hbar)(O H - H O); exact for the constant-potential representation.
template <class S>
Mat4<S> heisenberg_rate(const Mat4<S>& observable, const Mat4<S>& hamiltonian,
                        const Rational& hbar) {
  using T = scalar_traits<S>;
  const S coeff = -(T::i() / T::from_rational(hbar));  // 1/(i hbar)
  return coeff * commutator(observable, hamiltonian);
}

/// Plane-wave-representation Hamiltonian -c alpha.P - beta m c^2 + eps with
/// constant momentum components and energy shift.
template <class S>
Mat4<S> dirac_hamiltonian(const std::array<Rational, 3>& p, const Rational& m,
                          const Rational& eps,
                          const PhysicalConstants& constants) {
  using T = scalar_traits<S>;
  Mat4<S> h = T::from_rational(eps) * Mat4<S>::identity();
  for (int k = 0; k < 3; ++k) {
    const S coeff = T::from_rational(-(constants.c * p[k]));
    h = h + coeff * dirac_matrix_cached<S>(MatrixKind::alpha(k + 1));
  }
  const S mc2 = T::from_rational(-(m * constants.c * constants.c));
  return h + mc2 * dirac_matrix_cached<S>(MatrixKind::beta_kind());
}

// ---------------------------------------------------------------------------
// Hydrodynamic layer on 3D grids.

struct ScalarGrid3 {
  std::array<std::size_t, 3> n{};
  double h = 0;
  std::array<double, 3> origin{};
  std::vector<double> v;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * n[1] + j) * n[2] + k;
  }
  std::array<double, 3> pos(std::size_t i, std::size_t j,
                            std::size_t k) const {
    return {origin[0] + h * double(i), origin[1] + h * double(j),
            origin[2] + h * double(k)};
  }
  template <class F>
  static ScalarGrid3 fill(std::array<std::size_t, 3> n, double h,
                          std::array<double, 3> origin, F f) {
    ScalarGrid3 g{n, h, origin, {}};
    g.v.resize(n[0] * n[1] * n[2]);
    for (std::size_t i = 0; i < n[0]; ++i)
      for (std::size_t j = 0; j < n[1]; ++j)
        for (std::size_t k = 0; k < n[2]; ++k) {
          const auto p = g.pos(i, j, k);
          g.v[g.index(i, j, k)] = f(p[0], p[1], p[2]);
        }
    return g;
  }
};

struct VectorGrid3 {
  std::array<std::size_t, 3> n{};
  double h = 0;
  std::array<double, 3> origin{};
  std::vector<double> x, y, z;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * n[1] + j) * n[2] + k;
  }
  std::array<double, 3> pos(std::size_t i, std::size_t j,
                            std::size_t k) const {
    return {origin[0] + h * double(i), origin[1] + h * double(j),
            origin[2] + h * double(k)};
  }
  std::array<double, 3> at(std::size_t i, std::size_t j,
                           std::size_t k) const {
    const auto id = index(i, j, k);
    return {x[id], y[id], z[id]};
  }
  bool same_shape(const VectorGrid3& o) const {
    return n == o.n && h == o.h && origin == o.origin;
  }
  template <class F>
  static VectorGrid3 fill(std::array<std::size_t, 3> n, double h,
                          std::array<double, 3> origin, F f) {
    VectorGrid3 g{n, h, origin, {}, {}, {}};
    const std::size_t total = n[0] * n[1] * n[2];
    g.x.resize(total);
    g.y.resize(total);
    g.z.resize(total);
    for (std::size_t i = 0; i < n[0]; ++i)
      for (std::size_t j = 0; j < n[1]; ++j)
        for (std::size_t k = 0; k < n[2]; ++k) {
          const auto p = g.pos(i, j, k);
          const auto val = f(p[0], p[1], p[2]);
          const auto id = g.index(i, j, k);
          g.x[id] = val[0];
          g.y[id] = val[1];
          g.z[id] = val[2];
        }
    return g;
  }
  static VectorGrid3 zeros_like(const VectorGrid3& g) {
    VectorGrid3 out = g;
    std::fill(out.x.begin(), out.x.end(), 0.0);
    std::fill(out.y.begin(), out.y.end(), 0.0);
    std::fill(out.z.begin(), out.z.end(), 0.0);
    return out;
  }
};

/// Central-difference curl at interior points; boundary entries are zero.
inline VectorGrid3 curl_fd(const VectorGrid3& g) {
  VectorGrid3 out = VectorGrid3::zeros_like(g);
  const double inv2h = 1.0 / (2 * g.h);
  for (std::size_t i = 1; i + 1 < g.n[0]; ++i)
    for (std::size_t j = 1; j + 1 < g.n[1]; ++j)
      for (std::size_t k = 1; k + 1 < g.n[2]; ++k) {
        const auto id = g.index(i, j, k);
        const double dzy = (g.z[g.index(i, j + 1, k)] -
                            g.z[g.index(i, j - 1, k)]) * inv2h;
        const double dyz = (g.y[g.index(i, j, k + 1)] -
                            g.y[g.index(i, j, k - 1)]) * inv2h;
        const double dxz = (g.x[g.index(i, j, k + 1)] -
                            g.x[g.index(i, j, k - 1)]) * inv2h;
        const double dzx = (g.z[g.index(i + 1, j, k)] -
                            g.z[g.index(i - 1, j, k)]) * inv2h;
        const double dyx = (g.y[g.index(i + 1, j, k)] -
                            g.y[g.index(i - 1, j, k)]) * inv2h;
        const double dxy = (g.x[g.index(i, j + 1, k)] -
                            g.x[g.index(i, j - 1, k)]) * inv2h;
        out.x[id] = dzy - dyz;
        out.y[id] = dxz - dzx;
        out.z[id] = dyx - dxy;
      }
  return out;
}

/// Central-difference gradient at interior points; boundary entries zero.
inline VectorGrid3 grad_fd(const ScalarGrid3& g) {
  VectorGrid3 out;
  out.n = g.n;
  out.h = g.h;
  out.origin = g.origin;
  const std::size_t total = g.n[0] * g.n[1] * g.n[2];
  out.x.assign(total, 0.0);
  out.y.assign(total, 0.0);
  out.z.assign(total, 0.0);
  const double inv2h = 1.0 / (2 * g.h);
  for (std::size_t i = 1; i + 1 < g.n[0]; ++i)
    for (std::size_t j = 1; j + 1 < g.n[1]; ++j)
      for (std::size_t k = 1; k + 1 < g.n[2]; ++k) {
        const auto id = g.index(i, j, k);
        out.x[id] =
            (g.v[g.index(i + 1, j, k)] - g.v[g.index(i - 1, j, k)]) * inv2h;
        out.y[id] =
            (g.v[g.index(i, j + 1, k)] - g.v[g.index(i, j - 1, k)]) * inv2h;
        out.z[id] =
            (g.v[g.index(i, j, k + 1)] - g.v[g.index(i, j, k - 1)]) * inv2h;
      }
  return out;
}

inline VectorGrid3 cross_pointwise(const VectorGrid3& a,
                                   const VectorGrid3& b) {
  if (!a.same_shape(b))
    throw std::invalid_argument("cross_pointwise: shape mismatch");
  VectorGrid3 out = VectorGrid3::zeros_like(a);
  for (std::size_t id = 0; id < a.x.size(); ++id) {
    out.x[id] = a.y[id] * b.z[id] - a.z[id] * b.y[id];
    out.y[id] = a.z[id] * b.x[id] - a.x[id] * b.z[id];
    out.z[id] = a.x[id] * b.y[id] - a.y[id] * b.x[id];
  }
  return out;
}

struct LambGromeka {
  VectorGrid3 residual;       // dg/dt + grad U - v x curl g, interior
  VectorGrid3 lorentz_force;  // dg/dt + grad U
  ResidualReport report;      // componentwise norms over interior points
};

/// Motion-equation residual on matched grids; dgdt defaults to the static
/// case when absent.
inline LambGromeka lamb_gromeka_residual(const VectorGrid3& g,
                                         const ScalarGrid3& u,
                                         const VectorGrid3& v,
                                         const VectorGrid3* dgdt = nullptr) {
  if (!g.same_shape(v) || g.n != u.n || g.h != u.h || g.origin != u.origin)
    throw std::invalid_argument("lamb_gromeka_residual: shape mismatch");
  if (dgdt && !g.same_shape(*dgdt))
    throw std::invalid_argument("lamb_gromeka_residual: dgdt shape mismatch");
  const VectorGrid3 grad_u = grad_fd(u);
  const VectorGrid3 curl_g = curl_fd(g);
  const VectorGrid3 vxc = cross_pointwise(v, curl_g);

  LambGromeka out{VectorGrid3::zeros_like(g), VectorGrid3::zeros_like(g), {}};
  std::array<detail::RowAccumulator, 3> acc;
  for (std::size_t i = 1; i + 1 < g.n[0]; ++i)
    for (std::size_t j = 1; j + 1 < g.n[1]; ++j)
      for (std::size_t k = 1; k + 1 < g.n[2]; ++k) {
        const auto id = g.index(i, j, k);
        const double dgx = dgdt ? dgdt->x[id] : 0.0;
        const double dgy = dgdt ? dgdt->y[id] : 0.0;
        const double dgz = dgdt ? dgdt->z[id] : 0.0;
        out.lorentz_force.x[id] = dgx + grad_u.x[id];
        out.lorentz_force.y[id] = dgy + grad_u.y[id];
        out.lorentz_force.z[id] = dgz + grad_u.z[id];
        out.residual.x[id] = out.lorentz_force.x[id] - vxc.x[id];
        out.residual.y[id] = out.lorentz_force.y[id] - vxc.y[id];
        out.residual.z[id] = out.lorentz_force.z[id] - vxc.z[id];
        acc[0].add(Cd(out.residual.x[id], 0));
        acc[1].add(Cd(out.residual.y[id], 0));
        acc[2].add(Cd(out.residual.z[id], 0));
      }
  out.report.h = g.h;
  for (const auto& a : acc) out.report.rows.push_back(a.norm());
  return out;
}

/// Sup-norm residual of rho a_n - f_L over interior points.
inline ResidualReport newton_balance(const ScalarGrid3& rho,
                                     const VectorGrid3& a_n,
                                     const VectorGrid3& f_l) {
  if (!a_n.same_shape(f_l) || rho.n != a_n.n || rho.h != a_n.h)
    throw std::invalid_argument("newton_balance: shape mismatch");
  std::array<detail::RowAccumulator, 3> acc;
  for (std::size_t i = 1; i + 1 < rho.n[0]; ++i)
    for (std::size_t j = 1; j + 1 < rho.n[1]; ++j)
      for (std::size_t k = 1; k + 1 < rho.n[2]; ++k) {
        const auto id = rho.index(i, j, k);
        acc[0].add(Cd(rho.v[id] * a_n.x[id] - f_l.x[id], 0));
        acc[1].add(Cd(rho.v[id] * a_n.y[id] - f_l.y[id], 0));
        acc[2].add(Cd(rho.v[id] * a_n.z[id] - f_l.z[id], 0));
      }
  ResidualReport rep;
  rep.h = rho.h;
  for (const auto& a : acc) rep.rows.push_back(a.norm());
  return rep;
}

}  // namespace nfb
