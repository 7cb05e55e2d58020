#pragma once

#include <chrono>

#include "nfbridge/random.hpp"
#include "nfbridge/report.hpp"

namespace nfb {
namespace suites {

inline void add(std::vector<CheckResult>& out, std::string id, std::string eq,
                bool pass, std::string detail = "") {
  out.push_back({std::move(id), std::move(eq), pass, std::move(detail)});
}

/// Mode-aware zero test: exact zero in exact mode, 1e-12 absolute in float.
template <class S>
bool negligible(const S& v) {
  return matches(v, scalar_traits<S>::zero());
}
template <class S>
bool negligible4(const Vec4<S>& v) {
  for (const S& x : v.c)
    if (!negligible(x)) return false;
  return true;
}
/// Mixed comparison for float-mode identities whose two sides are both
/// computed quantities: 1e-12 absolute near zero, relative otherwise.
template <class S>
bool close(const S& a, const S& b) {
  if constexpr (scalar_traits<S>::exact) {
    return a == b;
  } else {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  }
}

template <class S>
bool mats_match(const Mat4<S>& a, const Mat4<S>& b) {
  for (std::size_t k = 0; k < 16; ++k) {
    if constexpr (scalar_traits<S>::exact) {
      if (!(a.e[k] == b.e[k])) return false;
    } else {
      if (std::abs(a.e[k] - b.e[k]) > 1e-12) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> algebra(const Scenario& sc) {
  using T = scalar_traits<S>;
  std::vector<CheckResult> out;
  const S o = T::one(), z = T::zero(), i = T::i();
  const Mat4<S> id = Mat4<S>::identity();
  const S two = o + o;

  {
    Mat2<S> s1, s2, s3, s0;
    s1.e = {z, o, o, z};
    s2.e = {z, -i, i, z};
    s3.e = {o, z, z, -o};
    s0.e = {o, z, z, o};
    bool pass = pauli<S>(1) == s1 && pauli<S>(2) == s2 && pauli<S>(3) == s3 &&
                pauli<S>(0) == s0;
    for (int k = 0; k < 4; ++k)
      pass = pass && (pauli<S>(k) * pauli<S>(k) == s0);
    add(out, "algebra.pauli-table", "1.4", pass);
  }
  {
    bool pass = true;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        const auto ac = anticommutator(dirac_matrix_cached<S>(MatrixKind::alpha(a)),
                                       dirac_matrix_cached<S>(MatrixKind::alpha(b)));
        pass = pass && (a == b ? ac == two * id : ac.is_zero());
      }
    add(out, "algebra.dirac-anticommutation", "1.4", pass);
  }
  {
    const Mat4<S> a5 = dirac_matrix<S>(MatrixKind::alpha5());
    Mat4<S> expected;
    expected.e = {z, z, -i, z, z, z, z, -i, i, z, z, z, z, i, z, z};
    bool pass = a5 == expected;
    for (int k = 1; k <= 4; ++k)
      pass = pass &&
             anticommutator(a5, dirac_matrix_cached<S>(MatrixKind::alpha(k)))
                 .is_zero();
    add(out, "algebra.alpha5", "3.1", pass);
  }
  {
    bool pass = true;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const auto& t = dirac_matrix_cached<S>(MatrixKind::tensor(mu, nu));
        pass = pass &&
               (mu == nu
                    ? t.is_zero()
                    : t == -dirac_matrix_cached<S>(MatrixKind::tensor(nu, mu)));
      }
    add(out, "algebra.tensor-antisymmetry", "3.1", pass);
  }
  {
    bool pass = true;
    for (int mu = 0; mu <= 4; ++mu) {
      pass = pass && classify_hermiticity(dirac_matrix_cached<S>(
                         MatrixKind::alpha(mu))) == Hermiticity::hermitian;
      const auto pv = classify_hermiticity(
          dirac_matrix_cached<S>(MatrixKind::pseudovector(mu)));
      pass = pass && pv == (mu == 0 ? Hermiticity::hermitian
                                    : Hermiticity::anti_hermitian);
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (mu != nu)
          pass = pass && classify_hermiticity(dirac_matrix_cached<S>(
                             MatrixKind::tensor(mu, nu))) ==
                             Hermiticity::hermitian;
    add(out, "algebra.hermiticity-classes", "3.1", pass,
        "vector+tensor hermitian, space pseudovectors anti-hermitian");
  }
  {
    const Mat4<S> s = canonical_s<S>();
    add(out, "algebra.s-unitary", "5.4",
        mats_match(s * s.adjoint(), id) && mats_match(s.adjoint() * s, id));
  }
  {
    const Mat4<S> s = canonical_s<S>();
    const Mat2<S> zero2{};
    const Mat2<S> sx = pauli<S>(1), sy = pauli<S>(2), sz = pauli<S>(3);
    Mat2<S> msy, isy, misy;
    for (std::size_t k = 0; k < 4; ++k) {
      msy.e[k] = -sy.e[k];
      isy.e[k] = i * sy.e[k];
      misy.e[k] = -(i * sy.e[k]);
    }
    const bool pass =
        mats_match(
            canonical_conjugate(s, dirac_matrix_cached<S>(MatrixKind::alpha(1))),
            Mat4<S>::from_blocks(sx, zero2, zero2, sx)) &&
        mats_match(
            canonical_conjugate(s, dirac_matrix_cached<S>(MatrixKind::alpha(2))),
            Mat4<S>::from_blocks(sy, zero2, zero2, msy)) &&
        mats_match(
            canonical_conjugate(s, dirac_matrix_cached<S>(MatrixKind::alpha(3))),
            Mat4<S>::from_blocks(sz, zero2, zero2, sz)) &&
        mats_match(
            canonical_conjugate(s, dirac_matrix_cached<S>(MatrixKind::alpha(4))),
            Mat4<S>::from_blocks(zero2, misy, isy, zero2)) &&
        mats_match(canonical_conjugate(s, id), id);
    add(out, "algebra.primed-set", "5.2", pass);
  }
  {
    const Mat4<S> s = canonical_s<S>();
    bool pass = true;
    std::array<Mat4<S>, 5> primed;
    for (int k = 1; k <= 4; ++k)
      primed[k] =
          canonical_conjugate(s, dirac_matrix_cached<S>(MatrixKind::alpha(k)));
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        const auto ac = anticommutator(primed[a], primed[b]);
        pass = pass && (a == b ? mats_match(ac, two * id)
                               : mats_match(ac, Mat4<S>::zero()));
      }
    add(out, "algebra.primed-anticommutation", "5.2", pass);
  }
  {
    Rng rng(sc.seed * 1000003 + 1);
    bool pass = true;
    for (int t = 0; t < std::max(5, sc.random_trials / 10); ++t) {
      Mat4<S> a, b, c;
      for (std::size_t k = 0; k < 16; ++k) {
        a.e[k] = rng.scalar<S>(true);
        b.e[k] = rng.scalar<S>(true);
        c.e[k] = rng.scalar<S>(true);
      }
      pass = pass && a.adjoint().adjoint() == a;
      if constexpr (scalar_traits<S>::exact)
        pass = pass && (a * b) * c == a * (b * c);
      else
        pass = pass && mats_match((a * b) * c, a * (b * c));
    }
    add(out, "algebra.matrix-laws", "1.4", pass, "adjoint involution, associativity");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> bilinears_suite(const Scenario& sc) {
  std::vector<CheckResult> out;
  const auto frame = direction_frame(Axis::y, Sign::minus);
  Rng rng(sc.seed * 1000003 + 2);

  {
    int failures = 0;
    for (int t = 0; t < sc.bilinear_trials; ++t) {
      const auto q = rng.field_quad<S>();
      for (const auto& r : verify_table(q, frame))
        if (!r.match) ++failures;
    }
    add(out, "bilinears.table", "3.1", failures == 0,
        "trials=" + std::to_string(sc.bilinear_trials) +
            " failures=" + std::to_string(failures));
  }
  {
    bool pass = true;
    for (int t = 0; t < std::max(10, sc.bilinear_trials / 10); ++t) {
      const auto q = rng.real_field_quad<S>();
      for (const auto& kind : enumerated_kinds())
        pass = pass && matches(bilinear_hermitian(kind, q, frame),
                               em_expected(kind, q));
    }
    add(out, "bilinears.hermitian-route", "2.12", pass,
        "formal and hermitian rows coincide on real snapshots");
  }
  {
    bool pass = true;
    for (int t = 0; t < sc.random_trials; ++t) {
      const auto q = rng.field_quad<S>();
      pass = pass && matches(bilinear(MatrixKind::pseudovector(0), q, frame),
                             bilinear(MatrixKind::alpha5(), q, frame));
    }
    add(out, "bilinears.pseudovector-time", "3.1", pass);
  }
  {
    bool pass = true;
    for (int t = 0; t < std::max(5, sc.random_trials / 5); ++t) {
      const auto q = rng.field_quad<S>();
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          if (mu != nu)
            pass = pass &&
                   matches(bilinear(MatrixKind::tensor(mu, nu), q, frame),
                           -bilinear(MatrixKind::tensor(nu, mu), q, frame));
    }
    add(out, "bilinears.tensor-antisymmetry", "3.1", pass);
  }
  {
    using T = scalar_traits<S>;
    bool pass = true;
    const S two = T::one() + T::one();
    for (int t = 0; t < sc.random_trials; ++t) {
      const auto q = rng.real_field_quad<S>();
      const auto [e3, h3] = fields_3d(q, frame);
      const auto em = EMQuantities<S>::from_fields(e3, h3);
      pass = pass && matches(bilinear(MatrixKind::alpha(0), q, frame),
                             em.scaled_energy_density());
      pass = pass && matches(bilinear(MatrixKind::alpha(2), q, frame),
                             -(two * em.scaled_poynting()[1]));
      const auto s_num = em.poynting(2.0);
      const auto g_num = em.momentum_density(2.0);
      for (int k = 0; k < 3; ++k)
        pass = pass && std::abs(s_num[k] - 4.0 * g_num[k]) < 1e-12;
    }
    add(out, "bilinears.momentum-energy-4vector", "§3", pass,
        "alpha0 = 8 pi U, alpha_y = -(8 pi / c) S_y, S = c^2 g");
  }
  {
    using T = scalar_traits<S>;
    const FieldQuad<S> null_q{T::one(), T::zero(), T::zero(), T::one()};
    add(out, "bilinears.null-field", "§3",
        T::is_zero(bilinear(MatrixKind::beta_kind(), null_q, frame)) &&
            T::is_zero(bilinear(MatrixKind::alpha5(), null_q, frame)));
  }
  {
    const auto status = audit_tensor_table();
    using St = TableEntryStatus;
    auto expect = [&](int r, int c, St want) { return status[r][c] == want; };
    bool pass = true;
    for (int k = 0; k < 4; ++k) pass = pass && expect(k, k, St::zero_matches_both);
    pass = pass && expect(0, 2, St::zero_matches_both) &&
           expect(2, 0, St::zero_matches_both) &&
           expect(1, 3, St::zero_matches_both) &&
           expect(3, 1, St::zero_matches_both);
    pass = pass && expect(0, 3, St::matches_row_major) &&
           expect(3, 0, St::matches_row_major) &&
           expect(2, 3, St::matches_row_major) &&
           expect(3, 2, St::matches_row_major);
    pass = pass && expect(1, 0, St::matches_transposed) &&
           expect(1, 2, St::matches_transposed) &&
           expect(2, 1, St::matches_transposed);
    pass = pass && expect(0, 1, St::mismatch);
    add(out, "bilinears.published-table-audit", "3.1", pass,
        "time column row-major, sigma block transposed, "
        "(1,2)-slot H signs misprinted");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> directions(const Scenario& sc) {
  using T = scalar_traits<S>;
  std::vector<CheckResult> out;
  Rng rng(sc.seed * 1000003 + 3);
  const S two = T::one() + T::one();

  {
    bool pass = true;
    for (const auto& f : direction_frames()) {
      const Mat4<S>& a_axis = dirac_matrix_cached<S>(f.matrix_for(f.axis));
      for (int t = 0; t < std::max(10, sc.random_trials / 2); ++t) {
        const auto q = rng.real_field_quad<S>();
        const auto psi = to_bispinor(q, f);
        const S value = dot_row_col(paper_adjoint(psi), a_axis * psi.c);
        const auto [e3, h3] = fields_3d(q, f);
        const S flux = cross(e3, h3)[static_cast<std::size_t>(f.axis)];
        const S expected =
            (f.sign == Sign::minus) ? -(two * flux) : two * flux;
        pass = pass && matches(value, expected);
      }
    }
    add(out, "directions.poynting-signs", "§5", pass,
        "-2[ExH] for counterclockwise, +2[ExH] for clockwise frames");
  }
  {
    const auto frames = direction_frames();
    bool pass = true;
    for (std::size_t a = 0; a < frames.size(); ++a)
      for (std::size_t b = a + 1; b < frames.size(); ++b)
        pass = pass && !(frames[a].axis == frames[b].axis &&
                         frames[a].sign == frames[b].sign);
    for (const auto& f : frames) {
      pass = pass && f.matrix_for(f.axis).tag == MatrixKind::Tag::alpha2;
      for (const auto& slot : f.layout) pass = pass && slot.axis != f.axis;
    }
    const auto fx = direction_frame(Axis::x, Sign::minus);
    pass = pass && fx.layout[0].name() == "Ez" && fx.layout[1].name() == "Ey";
    add(out, "directions.frames", "§5", pass,
        "six distinct frames, transversality per frame");
  }
  {
    PhysicalConstants pc = sc.physical_constants();
    if (pc.m == 0) pc.m = 1;
    PlaneWaveState<S> st;
    st.amplitudes = rng.field_quad<S>();
    st.omega = rng.rational();
    st.k = rng.rational();
    const S kap = T::one() / T::from_rational(pc.c);
    bool pass = true;
    std::vector<std::string> labels;
    for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
      const auto sys = per_axis_system(axis, Sign::plus, st, pc);
      for (std::size_t r = 0; r < 4; ++r)
        pass = pass && matches(sys.dirac_rows[r],
                               sys.lhs[r] - kap * sys.rhs_scaled[r]);
      for (const auto& l : sys.labels) labels.push_back(l);
    }
    add(out, "directions.per-axis-systems", "5.1", pass,
        "frame-transposed rows match under the shared constant");
    const std::vector<std::string> expected = {
        "(1/c) dt Ey + dx Hz = -je_y", "(1/c) dt Ez - dx Hy = -je_z",
        "(1/c) dt Hy - dx Ez = +jm_y", "(1/c) dt Hz + dx Ey = +jm_z",
        "(1/c) dt Ez + dy Hx = -je_z", "(1/c) dt Ex - dy Hz = -je_x",
        "(1/c) dt Hz - dy Ex = +jm_z", "(1/c) dt Hx + dy Ez = +jm_x",
        "(1/c) dt Ex + dz Hy = -je_x", "(1/c) dt Ey - dz Hx = -je_y",
        "(1/c) dt Hx - dz Ey = +jm_x", "(1/c) dt Hy + dz Ex = +jm_y"};
    add(out, "directions.twelve-equations", "5.1", labels == expected,
        "three groups of four rows cover all directions");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> canonical(const Scenario& sc) {
  using T = scalar_traits<S>;
  std::vector<CheckResult> out;
  Rng rng(sc.seed * 1000003 + 4);
  const Mat4<S> s = canonical_s<S>();
  const auto frame = direction_frame(Axis::y, Sign::minus);

  add(out, "canonical.s-unitary", "5.4", is_unitary(s));
  {
    bool pass = true;
    const S r = T::inv_sqrt2(), i = T::i();
    for (int t = 0; t < sc.random_trials; ++t) {
      const auto q = rng.field_quad<S>();
      const auto psi = to_bispinor(q, frame);
      const auto primed = to_primed(psi, s);
      pass = pass && matches(primed.c[0], r * (q.e1 + i * q.h1)) &&
             matches(primed.c[1], r * (q.e2 + i * q.h2)) &&
             matches(primed.c[2], r * (q.e2 - i * q.h2)) &&
             matches(primed.c[3], r * (-q.e1 + i * q.h1));
      pass = pass && matches(psi.c[0], r * (primed.c[0] - primed.c[3])) &&
             matches(psi.c[1], r * (primed.c[1] + primed.c[2])) &&
             matches(psi.c[2], r * (primed.c[0] + primed.c[3])) &&
             matches(psi.c[3], r * (primed.c[1] - primed.c[2]));
    }
    add(out, "canonical.primed-bispinor", "5.6", pass,
        "matches the closed form; reconstruction relations hold");
  }
  {
    bool pass = true;
    const int trials = std::max(5, sc.random_trials / 10);
    for (int t = 0; t < trials; ++t) {
      const auto q = rng.field_quad<S>();
      const auto psi = to_bispinor(q, frame);
      const auto row = paper_adjoint(psi);
      const auto primed = to_primed(psi, s);
      const auto row_primed = transported_adjoint(row, s);
      for (const auto& kind : enumerated_kinds()) {
        const Mat4<S>& m = dirac_matrix_cached<S>(kind);
        const Mat4<S> mp = s.adjoint() * m * s;
        pass = pass && close(dot_row_col(row_primed, mp * primed.c),
                             dot_row_col(row, m * psi.c));
      }
    }
    add(out, "canonical.bilinear-invariance", "§5.1", pass,
        "all enumerated bilinears invariant under the transported row");
  }
  {
    // The transported solution solves the transported equation: with
    // alpha' = S+ alpha S and psi' = S+ psi, the massless operator built
    // from the primed matrices annihilates psi' exactly.
    PhysicalConstants pc = sc.physical_constants();
    pc.m = 0;
    bool pass = true;
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto st = on_shell_massless_state<S>(
          rng.positive_rational(), sign, rng.scalar<S>(), rng.scalar<S>(), pc);
      const auto psi = to_bispinor(st.amplitudes, frame);
      const auto primed = to_primed(psi, s);
      const auto rep = OperatorRep<S>::from(st, pc);
      const Mat4<S> a2p =
          canonical_conjugate(s, dirac_matrix_cached<S>(MatrixKind::alpha(2)));
      const Mat4<S> op = rep.energy_factor * Mat4<S>::identity() +
                         (T::from_rational(pc.c) * rep.momentum_factor) * a2p;
      pass = pass && negligible4(op * primed.c);
    }
    add(out, "canonical.primed-dirac", "5.6", pass,
        "the primed bispinor solves the primed massless system");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> planewave_suite(const Scenario& sc) {
  std::vector<CheckResult> out;
  Rng rng(sc.seed * 1000003 + 5);
  PhysicalConstants pc0 = sc.physical_constants();
  pc0.m = 0;

  {
    bool pass = true;
    for (int t = 0; t < sc.random_trials; ++t) {
      PlaneWaveState<S> st;
      st.omega = rng.rational();
      st.k = rng.rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      pass = pass && klein_gordon_check(st, pc0).holds();
    }
    add(out, "planewave.klein-gordon", "2.8", pass,
        "operator squares and the factorization identity");
  }
  {
    PlaneWaveState<S> st;
    st.omega = 2;
    st.k = 1;
    const auto kg = klein_gordon_check(st, PhysicalConstants::natural());
    bool pass = kg.dispersion_scalar == S(3);
    st.omega = 1;
    pass = pass &&
           klein_gordon_check(st, PhysicalConstants::natural()).factored.is_zero();
    add(out, "planewave.factorization-value", "2.9", pass,
        "(w^2 - c^2 k^2) hbar^2 off shell, zero matrix on shell");
  }
  {
    bool pass = true;
    for (int t = 0; t < std::max(10, sc.random_trials / 2); ++t) {
      PlaneWaveState<S> st;
      st.k = rng.positive_rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      st.omega = pc0.c * st.k;
      const auto basis = massless_null_space(st, pc0);
      pass = pass && basis.size() == 2;
      if (basis.size() == 2) {
        PlaneWaveState<S> sol = st;
        sol.amplitudes = decode_null_vector(
            rng.scalar<S>() * basis[0] + rng.scalar<S>() * basis[1]);
        pass = pass &&
               negligible4(maxwell_lhs_rows(MaxwellSystem::sys_2_14p, sol, pc0));
      }
      PlaneWaveState<S> off = st;
      off.omega = st.omega + rng.positive_rational();
      pass = pass && massless_null_space(off, pc0).empty();
    }
    add(out, "planewave.null-space", "2.11", pass,
        "2-dimensional on dispersion, trivial off it, "
        "null vectors solve all four free rows");
  }
  {
    bool pass = true;
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto st = on_shell_massless_state<S>(
          rng.positive_rational(), sign, rng.scalar<S>(), rng.scalar<S>(), pc0);
      pass = pass &&
             negligible4(apply_dirac(EquationForm::massless_2_11, st, pc0));
      // The row equation pairs with the opposite null relations.
      auto row_state = on_shell_massless_state<S>(
          rng.positive_rational(), sign == Sign::plus ? Sign::minus : Sign::plus,
          rng.scalar<S>(), rng.scalar<S>(), pc0);
      row_state.prop_sign = sign;
      pass = pass && negligible4(
                         apply_dirac(EquationForm::massless_2_10, row_state, pc0));
    }
    add(out, "planewave.massless-solutions", "2.10", pass,
        "column and row forms annihilate their on-shell states");
  }
  {
    const auto pc = PhysicalConstants::natural(3);
    bool pass = true;
    try {
      const auto st = on_shell_massive_state<S>(
          5, 4, Sign::plus, rng.scalar<S>(), rng.scalar<S>(), pc,
          EquationForm::massive_2_13p);
      pass = negligible4(apply_dirac(EquationForm::massive_2_13p, st, pc));
    } catch (const std::exception&) {
      pass = false;
    }
    add(out, "planewave.massive-on-shell", "2.13'", pass,
        "pythagorean dispersion w0=3 ck=4 w=5");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> currents(const Scenario& sc) {
  using T = scalar_traits<S>;
  std::vector<CheckResult> out;
  Rng rng(sc.seed * 1000003 + 6);
  PhysicalConstants pc = sc.physical_constants();
  if (pc.m == 0) pc.m = 3;
  const S inv_c = T::one() / T::from_rational(pc.c);

  const struct {
    EquationForm form;
    int sign;  // expected kappa/4pi in units of 1/c
    const char* eq;
  } cases[] = {
      {EquationForm::massive_2_13p, -1, "2.14'"},
      {EquationForm::massive_2_13pp, +1, "2.14''"},
      {EquationForm::massive_2_16, +1, "2.18"},
      {EquationForm::massive_2_17, -1, "2.18"},
  };
  for (const auto& c : cases) {
    bool pass = true;
    S kappa{};
    for (int t = 0; t < sc.random_trials; ++t) {
      PlaneWaveState<S> st;
      st.amplitudes = rng.field_quad<S>();
      st.omega = rng.rational();
      st.k = rng.rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      const auto m = current_correspondence(c.form, st, pc);
      kappa = m.kappa_over_4pi;
      const S expected = c.sign > 0 ? inv_c : -inv_c;
      pass = pass && m.all_match() && matches(m.kappa_over_4pi, expected);
    }
    CurrentCorrespondence<S> probe;
    probe.kappa_over_4pi = kappa;
    add(out, std::string("currents.") + form_label(c.form) + "-kappa", c.eq,
        pass,
        "kappa=" + fmt(probe.kappa().real()) +
            (c.sign > 0 ? " (= +4pi/c)" : " (= -4pi/c)"));
  }
  {
    PlaneWaveState<S> st;
    st.amplitudes = rng.field_quad<S>();
    st.omega = rng.rational();
    st.k = rng.rational();
    const auto a = current_correspondence(EquationForm::massive_2_13p, st, pc);
    const auto b = current_correspondence(EquationForm::massive_2_13pp, st, pc);
    const auto c = current_correspondence(EquationForm::massive_2_16, st, pc);
    const auto d = current_correspondence(EquationForm::massive_2_17, st, pc);
    add(out, "currents.conjugate-pairs-flip", "§2.2",
        matches(a.kappa_over_4pi, -b.kappa_over_4pi) &&
            matches(c.kappa_over_4pi, -d.kappa_over_4pi),
        "hermitian-conjugate systems differ by the current directions");
  }
  {
    const auto frame = direction_frame(Axis::y, Sign::minus);
    const auto conj_m = charge_conjugation_matrix<S>();
    bool pass = true;
    for (int t = 0; t < std::max(10, sc.random_trials / 5); ++t) {
      PlaneWaveState<S> st;
      st.omega = rng.rational();
      st.k = rng.rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      PhysicalConstants flipped = pc;
      flipped.m = -pc.m;
      const auto lhs = conj_m * plane_wave_operator(
                                    EquationForm::massive_2_16, st, pc, frame);
      const auto rhs = plane_wave_operator(EquationForm::massive_2_13p, st,
                                           flipped, frame) *
                       conj_m;
      pass = pass && lhs == rhs;
    }
    add(out, "currents.charge-conjugation", "2.19", pass,
        "conjugation intertwines the systems with the current sign flipped");
  }
  {
    bool pass = true;
    PlaneWaveState<S> st;
    st.amplitudes = rng.field_quad<S>();
    st.omega = rng.rational();
    st.k = rng.rational();
    for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
      const auto sys = per_axis_system(axis, Sign::plus, st, pc);
      for (std::size_t r = 0; r < 4; ++r)
        pass = pass &&
               matches(sys.dirac_rows[r], sys.lhs[r] - inv_c * sys.rhs_scaled[r]);
    }
    add(out, "currents.kappa-across-axes", "5.1", pass,
        "one constant across E-rows, H-rows and the three axis frames");
  }
  {
    PhysicalConstants m0 = pc;
    m0.m = 0;
    PlaneWaveState<S> st;
    st.amplitudes = rng.field_quad<S>();
    st.omega = rng.rational();
    st.k = rng.rational();
    const bool same =
        apply_dirac(EquationForm::massive_2_13p, st, m0) ==
        apply_dirac(EquationForm::massless_2_11, st, m0);
    add(out, "currents.massless-limit", "2.15'", same,
        "currents vanish with the mass");
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> grid(const Scenario& sc) {
  using S = ExactComplex;
  std::vector<CheckResult> out;

  {
    PlaneWaveState<S> st;
    st.amplitudes = sc.has_custom_amplitudes
                        ? FieldQuad<S>{sc.amplitudes[0], sc.amplitudes[1],
                                       sc.amplitudes[2], sc.amplitudes[3]}
                        : FieldQuad<S>{S(1), S(0), S(0), S(0)};
    st.omega = 1;
    st.k = 1;
    const Grid1D g = sample_planewave(st, 9, 9, 0.125, 0.125);
    bool pass = std::abs(g.at(0, 0).e1 -
                         scalar_traits<S>::to_complex(st.amplitudes.e1)) <
                1e-15;
    const Grid1D fine = sample_planewave(st, 17, 17, 0.0625, 0.0625);
    for (std::size_t it = 0; it < g.nt; ++it)
      for (std::size_t iy = 0; iy < g.ny; ++iy)
        pass = pass &&
               std::abs(g.at(it, iy).e1 - fine.at(2 * it, 2 * iy).e1) < 1e-14;
    add(out, "grid.sampling", "2.1", pass,
        "analytic samples stable under refinement");
  }
  {
    const auto pc = PhysicalConstants::natural(3);
    const auto sol = on_shell_massive_state<S>(5, 4, Sign::plus, S(1),
                                               S(Rational(1, 2)), pc,
                                               EquationForm::massive_2_13p);
    auto run = [&](double h) {
      const auto n = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
      return maxwell_residual(MaxwellSystem::sys_2_14p,
                              sample_planewave(sol, n, n, h, h), pc,
                              Cd(-1.0, 0.0));
    };
    const auto fine = run(sc.grid.h / 2);
    const auto coarse = with_convergence(run(sc.grid.h), fine);
    const double order = *coarse.convergence_order;
    add(out, "grid.massive-residual-order", "2.14'",
        order > 1.9 && order < 2.1 && coarse.sup() < 0.1,
        "sup=" + fmt(coarse.sup()) + " order=" + fmt(order) +
            " h=" + fmt(sc.grid.h));
  }
  {
    PlaneWaveState<S> st;
    st.omega = 2;
    st.k = 1;
    const Grid1D g = sample_planewave(st, sc.grid.nt, sc.grid.ny, sc.grid.h,
                                      sc.grid.h);
    add(out, "grid.zero-field", "2.14'",
        maxwell_residual(MaxwellSystem::sys_2_14p, g,
                         PhysicalConstants::natural(1), Cd(-1.0, 0.0))
                .sup() == 0.0,
        "bitwise zero residual");
  }
  {
    PlaneWaveState<S> st;
    st.amplitudes = {S(1), S(0), S(0), S(1)};
    st.omega = 2;
    st.k = 1;
    const auto pc = PhysicalConstants::natural();
    auto sup_at = [&](double h) {
      const auto n = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
      return maxwell_residual(MaxwellSystem::sys_2_14p,
                              sample_planewave(st, n, n, h, h), pc, Cd{})
          .sup();
    };
    add(out, "grid.off-shell-bounded", "2.5",
        sup_at(1.0 / 16) > 0.5 && sup_at(1.0 / 32) > 0.5 &&
            sup_at(1.0 / 64) > 0.5,
        "residual does not vanish as h shrinks");
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> conservation(const Scenario& sc) {
  using S = ExactComplex;
  std::vector<CheckResult> out;
  // c = 2 keeps w and k distinct so the truncation terms cannot cancel by
  // grid symmetry; the analytic statement is c-independent.
  const PhysicalConstants pc{Rational(2), 1, 0};
  PlaneWaveState<S> wave;
  wave.amplitudes = {S(1), S(0), S(0), S(-1)};
  wave.omega = 2;
  wave.k = 1;
  wave.prop_sign = Sign::minus;

  {
    // Analytic oracle: dU/dt = -w sin(2 phi)/4pi against
    // div S = +c k sin(2 phi)/4pi, summed over sample points.
    const double w = 2, k = 1, c = 2;
    double sup = 0;
    for (int n = 0; n < 200; ++n) {
      const double t = 0.005 * n, y = 0.013 * n;
      const double phi = w * t - k * y;
      const double du = -w * std::sin(2 * phi);
      const double ds = c * k * std::sin(2 * phi);
      sup = std::max(sup, std::abs(du + ds));
    }
    add(out, "conservation.analytic-zero", "4.2", sup == 0.0,
        "traveling-wave transport balance is identically zero");
  }
  {
    auto run = [&](double h) {
      const auto n = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
      return continuity_residual(sample_planewave(wave, n, n, h, h), pc);
    };
    const auto fine = run(sc.grid.h / 2);
    const auto coarse = with_convergence(run(sc.grid.h), fine);
    const double order = *coarse.convergence_order;
    add(out, "conservation.fd-order", "4.2", order > 1.9 && order < 2.1,
        "sup=" + fmt(coarse.sup()) + " order=" + fmt(order) +
            " h=" + fmt(sc.grid.h));
  }
  {
    const Grid1D g = sample_planewave(wave, 17, 17, 1.0 / 16, 1.0 / 16);
    add(out, "conservation.probability-route", "4.1",
        probability_energy_gap(g) < 1e-12,
        "psi+ alpha0 psi = 8 pi U at every lattice point");
  }
  {
    PlaneWaveState<S> st;
    st.amplitudes = {S(2), S(1), S(-1), S(3)};
    st.omega = 0;
    st.k = 0;
    const Grid1D g = sample_planewave(st, 9, 9, 0.1, 0.1);
    add(out, "conservation.static-zero", "4.2",
        continuity_residual(g, pc).sup() == 0.0, "uniform field, bitwise zero");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> lagrangian(const Scenario& sc) {
  using T = scalar_traits<S>;
  std::vector<CheckResult> out;
  Rng rng(sc.seed * 1000003 + 7);
  const auto pc0 = PhysicalConstants::natural();

  {
    const auto massless = on_shell_massless_state<S>(
        Rational(2), Sign::plus, rng.scalar<S>(), rng.scalar<S>(), pc0);
    const auto lm = lagrangian_eval(massless, pc0);
    const auto pc3 = PhysicalConstants::natural(3);
    const auto massive = on_shell_massive_state<S>(
        5, 4, Sign::plus, rng.scalar<S>(), rng.scalar<S>(), pc3,
        EquationForm::massive_2_13p);
    const auto lv = lagrangian_eval(massive, pc3);
    bool pass;
    if constexpr (T::exact) {
      pass = lm.quantum_total().is_zero() && lm.em_scaled_total().is_zero() &&
             lv.quantum_total().is_zero() && lv.em_scaled_total().is_zero();
    } else {
      pass = std::abs(lm.quantum_total()) < 1e-10 &&
             std::abs(lm.em_scaled_total()) < 1e-10 &&
             std::abs(lv.quantum_total()) < 1e-10 &&
             std::abs(lv.em_scaled_total()) < 1e-10;
    }
    add(out, "lagrangian.on-shell-zero", "6.5", pass,
        "both forms vanish on massless and massive solutions");
  }
  {
    PhysicalConstants pc = sc.physical_constants();
    if (pc.m == 0) pc.m = Rational(5, 2);
    const S inv_c = T::one() / T::from_rational(pc.c);
    bool pass = true;
    for (int t = 0; t < sc.random_trials; ++t) {
      PlaneWaveState<S> st;
      st.amplitudes = rng.field_quad<S>();
      st.omega = rng.rational();
      st.k = rng.rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      const auto l = lagrangian_eval(st, pc);
      pass = pass && l.termwise_proportional(inv_c) &&
             matches(l.quantum_total(), inv_c * l.em_scaled_total());
    }
    add(out, "lagrangian.termwise", "6.3", pass,
        "each quantum term is 1/c times its 4pi-scaled field term");
    PlaneWaveState<S> st;
    st.amplitudes = rng.field_quad<S>();
    st.omega = rng.rational();
    st.k = rng.rational();
    const auto l = lagrangian_eval(st, pc);
    add(out, "lagrangian.current-route", "6.4",
        matches(l.em_scaled[2], l.em3_scaled_current_route),
        "mass term equals -(j^e.E - j^m.H)");
  }
  {
    const auto pc = PhysicalConstants::natural(2);
    PlaneWaveState<ExactComplex> st;
    st.amplitudes = {ExactComplex(1), ExactComplex(2), ExactComplex(-1),
                     ExactComplex(1)};
    st.omega = 2;
    st.k = 1;
    auto run = [&](double h) {
      const auto n = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
      return lagrangian_route_gap(sample_planewave(st, n, n, h, h), pc);
    };
    const auto coarse = run(sc.grid.h), fine = run(sc.grid.h / 2);
    const double order = richardson_order(coarse.sup(), fine.sup());
    add(out, "lagrangian.grid-route", "6.2", order > 1.8 && order < 2.2,
        "sup=" + fmt(coarse.sup()) + " order=" + fmt(order));
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> forces_suite(const Scenario& sc) {
  using T = scalar_traits<S>;
  std::vector<CheckResult> out;
  Rng rng(sc.seed * 1000003 + 8);
  const auto pc0 = PhysicalConstants::natural();
  const S i = T::i();

  {
    bool pass = true;
    std::string detail;
    try {
      const Rational f = ring_force(sc.ring, pc0);
      // The normalized profile H_p = 2 E_p collapses to f = -rho_e E_p.
      if (sc.ring.h_p == 2 * sc.ring.e_p)
        pass = f == -(sc.ring.rho_e * sc.ring.e_p);
      detail = "f=" + to_string(f) + " r^o-directed";
      if (sc.ring.h_p > sc.ring.e_p && sc.ring.rho_e > 0) pass = pass && f < 0;
    } catch (const std::invalid_argument& e) {
      pass = false;
      detail = e.what();
    }
    add(out, "forces.ring-balance", "7.7", pass, detail);

    RingConfig probe{2, 2, 1, 3, 1, 1};
    bool examples = ring_force(probe, pc0) == Rational(-4);
    probe = RingConfig{1, 1, Rational(7, 3), Rational(7, 3), 1, 1};
    examples = examples && ring_force(probe, pc0) == 0;
    probe.j_tau = 9;
    try {
      ring_force(probe, pc0);
      examples = false;
    } catch (const std::invalid_argument&) {
    }
    add(out, "forces.ring-examples", "7.4", examples,
        "substitution values and the rho c = j_tau gate");
  }
  {
    bool pass = true;
    for (int t = 0; t < sc.random_trials; ++t) {
      PlaneWaveState<S> st;
      st.amplitudes = rng.field_quad<S>();
      st.omega = rng.rational();
      st.k = rng.rational();
      const auto f = symmetric_force(st, pc0);
      pass = pass && T::is_zero(f.fx_4pi) && T::is_zero(f.fz_4pi);
    }
    add(out, "forces.symmetric-transverse", "7.20", pass,
        "f_x = f_z = 0 for every y-wave");
  }
  {
    const auto st = on_shell_massless_state<S>(Rational(2), Sign::minus,
                                               rng.scalar<S>(),
                                               rng.scalar<S>(), pc0);
    const auto f = symmetric_force(st, pc0);
    add(out, "forces.symmetric-conservation", "7.21",
        negligible(f.fy_4pi) && negligible(f.f0_4pi),
        "free wave: transport balance and energy conservation");
  }
  {
    bool pass = true;
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto st = on_shell_massless_state<S>(
          rng.positive_rational(), sign, rng.scalar<S>(), rng.scalar<S>(), pc0);
      const auto f = spin_force(st, pc0);
      pass = pass && negligible(f.fx_2pi) && negligible(f.fz_2pi) &&
             negligible(f.fy) && negligible(f.f0);
    }
    add(out, "forces.spin-on-shell-zero", "7.14", pass,
        "all brackets vanish for linear photons");
  }
  {
    bool pass = true;
    for (int t = 0; t < sc.random_trials; ++t) {
      PlaneWaveState<S> st;
      st.amplitudes = rng.field_quad<S>();
      st.omega = rng.rational();
      st.k = rng.rational();
      const Rational ws = rng.rational();
      const S iw_c = i * T::from_rational(ws / pc0.c);
      const auto fx = spin_force(st, pc0, Spinning{SpinMode::e1_h2, ws});
      const auto fz = spin_force(st, pc0, Spinning{SpinMode::e2_h1, ws});
      pass = pass &&
             matches(fx.fx_2pi_spin, iw_c * st.amplitudes.e1 *
                                         (st.amplitudes.e1 + st.amplitudes.h2));
      pass = pass &&
             matches(fz.fz_2pi_spin,
                     -(iw_c * st.amplitudes.e2 *
                       (st.amplitudes.e2 - st.amplitudes.h1)));
    }
    // The fixed substitution example: E_x = 1, H_z = 2, w = c = 1.
    PlaneWaveState<S> st;
    st.amplitudes = {T::one(), T::zero(), T::zero(), T::one() + T::one()};
    st.omega = 1;
    st.k = 1;
    const auto f = spin_force(st, pc0, Spinning{SpinMode::e1_h2, Rational(1)});
    pass = pass && matches(f.fx_2pi_spin, (T::one() + T::one() + T::one()) * i);
    add(out, "forces.spinning-closed-forms", "7.16", pass,
        "2pi zf_x = i(w/c) E_x (E_x + H_z); 2pi xf_z = -i(w/c) E_z (E_z - H_x)");
  }
  {
    const auto frame = direction_frame(Axis::y, Sign::minus);
    bool pass = true;
    for (int t = 0; t < std::max(5, sc.random_trials / 10); ++t) {
      const auto q = rng.field_quad<S>();
      pass = pass && negligible(bilinear(MatrixKind::tensor(2, 0), q, frame)) &&
             negligible(bilinear(MatrixKind::tensor(0, 2), q, frame));
    }
    add(out, "forces.spin-zeros", "7.18", pass,
        "f_y = f_0 = 0 via the vanishing tensor entries");
  }
  {
    bool pass = true;
    const S half = T::one() / (T::one() + T::one());
    for (int t = 0; t < sc.random_trials; ++t) {
      Vec3<S> e{rng.scalar<S>(), rng.scalar<S>(), rng.scalar<S>()};
      Vec3<S> h{rng.scalar<S>(), rng.scalar<S>(), rng.scalar<S>()};
      const auto tensor = EMTensor<S>::from_fields(e, h);
      pass = pass && tensor.symmetric() &&
             matches(tensor.tau_00, half * (dot(e, e) + dot(h, h))) &&
             matches(tensor.trace(), tensor.tau_00);
    }
    add(out, "forces.tensor-structure", "7.9", pass,
        "symmetry, tau_00 = (E^2+H^2)/2, trace = tau_00");
  }
  {
    const std::array<Rational, 3> p{Rational(2), Rational(-1), Rational(3, 2)};
    const Mat4<S> h =
        dirac_hamiltonian<S>(p, Rational(5, 4), Rational(2), pc0);
    const Mat4<S> beta = dirac_matrix_cached<S>(MatrixKind::beta_kind());
    const Mat4<S> expected = (-(i / T::from_rational(pc0.hbar))) *
                             (beta * h - h * beta);
    bool pass = heisenberg_rate(beta, h, pc0.hbar) == expected &&
                !expected.is_zero() &&
                heisenberg_rate(h, h, pc0.hbar).is_zero() &&
                classify_hermiticity(expected) == Hermiticity::hermitian;
    add(out, "forces.heisenberg-rate", "8.2", pass,
        "beta commutator oracle; hermitian rate for hermitian inputs");
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> hydro(const Scenario& sc) {
  std::vector<CheckResult> out;
  const double omega_p = to_double(sc.ring.omega_p) != 0.0
                             ? to_double(sc.ring.omega_p)
                             : 0.75;

  auto rigid = [&](double x, double y, double) {
    return std::array<double, 3>{-omega_p * y, omega_p * x, 0.0};
  };
  auto envelope = [](double x, double y, double z) {
    const double A = 0.3, a = 1.3, b = 0.9, c = 1.1;
    return std::array<double, 3>{
        A * a * std::cos(a * x) * std::cos(b * y) * std::sin(c * z),
        -A * b * std::sin(a * x) * std::sin(b * y) * std::sin(c * z),
        A * c * std::sin(a * x) * std::cos(b * y) * std::cos(c * z)};
  };
  auto velocity = [&](std::size_t n, double h, bool with_env) {
    return VectorGrid3::fill({n, n, n}, h, {-0.5, -0.5, -0.5},
                             [&](double x, double y, double z) {
                               auto v = rigid(x, y, z);
                               if (with_env) {
                                 const auto e = envelope(x, y, z);
                                 v[0] += e[0];
                                 v[1] += e[1];
                                 v[2] += e[2];
                               }
                               return v;
                             });
  };
  auto curl_error = [&](const VectorGrid3& v) {
    const auto c = curl_fd(v);
    double sup = 0;
    for (std::size_t a = 1; a + 1 < v.n[0]; ++a)
      for (std::size_t b = 1; b + 1 < v.n[1]; ++b)
        for (std::size_t d = 1; d + 1 < v.n[2]; ++d) {
          const auto val = c.at(a, b, d);
          sup = std::max({sup, std::abs(val[0]), std::abs(val[1]),
                          std::abs(val[2] - 2 * omega_p)});
        }
    return sup;
  };

  {
    const double exact_err = curl_error(velocity(9, 0.125, false));
    add(out, "hydro.curl-rigid", "8.11", exact_err < 1e-12,
        "rot v = 2 w_p exactly on the linear field, err=" + fmt(exact_err));
  }
  {
    const double e_coarse = curl_error(velocity(9, 0.125, true));
    const double e_fine = curl_error(velocity(17, 0.0625, true));
    const double ratio = e_coarse / e_fine;
    add(out, "hydro.curl-order", "8.11", ratio > 3.6 && ratio < 4.4,
        "irrotational envelope keeps rot v = 2 w_p, error ratio=" + fmt(ratio));
  }
  {
    const auto v = velocity(9, 0.125, false);
    const auto vxc = cross_pointwise(v, curl_fd(v));
    bool pass = true;
    for (std::size_t a = 1; a + 1 < v.n[0]; ++a)
      for (std::size_t b = 1; b + 1 < v.n[1]; ++b)
        for (std::size_t d = 1; d + 1 < v.n[2]; ++d) {
          const auto p = v.pos(a, b, d);
          const auto val = vxc.at(a, b, d);
          pass = pass &&
                 std::abs(0.5 * val[0] - omega_p * omega_p * p[0]) < 1e-12 &&
                 std::abs(0.5 * val[1] - omega_p * omega_p * p[1]) < 1e-12 &&
                 std::abs(val[2]) < 1e-12;
        }
    add(out, "hydro.centripetal", "8.12", pass,
        "(1/2) v x rot v = (v^2/r) r-hat pointwise off axis");
  }
  {
    const double rho0 = 1.3;
    auto newton_sup = [&](std::size_t n, double h) {
      const auto v = velocity(n, h, true);
      auto a_n = cross_pointwise(v, curl_fd(v));
      for (auto* comp : {&a_n.x, &a_n.y, &a_n.z})
        for (auto& val : *comp) val *= 0.5;
      const auto rho = ScalarGrid3::fill({n, n, n}, h, {-0.5, -0.5, -0.5},
                                         [&](double, double, double) {
                                           return rho0;
                                         });
      const auto f_l = VectorGrid3::fill(
          {n, n, n}, h, {-0.5, -0.5, -0.5},
          [&](double x, double y, double z) {
            auto v0 = rigid(x, y, z);
            const auto e = envelope(x, y, z);
            v0[0] += e[0];
            v0[1] += e[1];
            v0[2] += e[2];
            return std::array<double, 3>{rho0 * omega_p * v0[1],
                                         -rho0 * omega_p * v0[0], 0.0};
          });
      return newton_balance(rho, a_n, f_l).sup();
    };
    const double coarse = newton_sup(9, 0.125), fine = newton_sup(17, 0.0625);
    const double ratio = coarse / fine;
    add(out, "hydro.newton-balance", "8.13", ratio > 3.6 && ratio < 4.4,
        "rho a_n = f_L at second order, ratio=" + fmt(ratio));
  }
  {
    const std::array<std::size_t, 3> n{7, 7, 7};
    const std::array<double, 3> origin{-0.5, -0.5, -0.5};
    const auto g = VectorGrid3::fill(n, 0.2, origin,
                                     [](double, double, double) {
                                       return std::array<double, 3>{1, 2, 3};
                                     });
    const auto u = ScalarGrid3::fill(n, 0.2, origin,
                                     [](double, double, double) {
                                       return 5.0;
                                     });
    const auto v = velocity(7, 0.2, false);
    add(out, "hydro.lamb-gromeka-static", "8.9",
        lamb_gromeka_residual(g, u, v).report.sup() == 0.0,
        "constant g and U: exactly zero residual");
  }
  {
    using S = ExactComplex;
    const auto pc = PhysicalConstants::natural();
    const std::array<Rational, 3> p{Rational(2), Rational(-1), Rational(3, 2)};
    const Mat4<S> h = dirac_hamiltonian<S>(p, Rational(5, 4), Rational(2), pc);
    const Mat4<S> p_obs = S(p[1]) * Mat4<S>::identity();
    add(out, "hydro.heisenberg-constant", "8.2",
        heisenberg_rate(p_obs, h, pc.hbar).is_zero() &&
            heisenberg_rate(Mat4<S>::identity(), h, pc.hbar).is_zero(),
        "dP/dt = 0 for constant potentials");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<CheckResult> dispatch(const std::string& name, const Scenario& sc) {
  if (name == "algebra") return algebra<S>(sc);
  if (name == "bilinears") return bilinears_suite<S>(sc);
  if (name == "directions") return directions<S>(sc);
  if (name == "canonical") return canonical<S>(sc);
  if (name == "planewave") return planewave_suite<S>(sc);
  if (name == "currents") return currents<S>(sc);
  if (name == "grid") return grid(sc);
  if (name == "conservation") return conservation(sc);
  if (name == "lagrangian") return lagrangian<S>(sc);
  if (name == "forces") return forces_suite<S>(sc);
  if (name == "hydro") return hydro(sc);
  throw ConfigError("unknown suite: " + name);
}

}  // namespace suites

inline std::string scenario_echo_string(const Scenario& sc) {
  nlohmann::json j{{"suite", sc.suite},
                   {"mode", sc.mode},
                   {"seed", sc.seed},
                   {"constants", sc.constants},
                   {"mass", to_string(sc.mass)},
                   {"grid", {{"nt", sc.grid.nt}, {"ny", sc.grid.ny},
                             {"h", sc.grid.h}}},
                   {"trials", {{"bilinear", sc.bilinear_trials},
                               {"random", sc.random_trials}}}};
  return j.dump();
}

/// Runs one named suite (or all of them, in a fixed order) and assembles the
/// report. Deterministic for a given seed and scenario.
inline SuiteReport run_suite(const std::string& name, const Scenario& sc) {
  validate_scenario(sc);
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = name;
  report.mode = sc.mode;
  report.seed = sc.seed;
  report.scenario_echo = scenario_echo_string(sc);

  std::vector<std::string> to_run;
  if (name == "all") {
    for (const auto& n : suite_names())
      if (n != "all") to_run.push_back(n);
  } else {
    to_run.push_back(name);
  }
  for (const auto& n : to_run) {
    std::vector<CheckResult> checks;
    if (sc.mode == "float")
      checks = suites::dispatch<std::complex<double>>(n, sc);
    else
      checks = suites::dispatch<ExactComplex>(n, sc);
    for (auto& c : checks) report.checks.push_back(std::move(c));
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace nfb
