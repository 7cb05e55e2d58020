#include <catch2/catch_amalgamated.hpp>

#include "nfbridge/planewave.hpp"
#include "nfbridge/random.hpp"

using nfb::Axis;
using nfb::EquationForm;
using nfb::ExactComplex;
using nfb::FieldQuad;
using nfb::MaxwellSystem;
using nfb::PhysicalConstants;
using nfb::PlaneWaveState;
using nfb::Rational;
using nfb::Sign;
using nfb::Vec4;

namespace {
using S = ExactComplex;
const S i = ExactComplex::i();

PlaneWaveState<S> state_of(FieldQuad<S> q, Rational w, Rational k,
                           Sign s = Sign::plus) {
  return {std::move(q), std::move(w), std::move(k), s};
}

PhysicalConstants symbolic_profile(Rational m) {
  PhysicalConstants pc;
  pc.c = Rational(7, 2);
  pc.hbar = Rational(3, 5);
  pc.m = std::move(m);
  return pc;
}
}  // namespace

TEST_CASE("constants: omega0 times compton length equals c") {
  for (const auto& pc :
       {PhysicalConstants::natural(Rational(3, 7)), symbolic_profile(2)}) {
    REQUIRE(pc.omega0() * pc.compton_length() == pc.c);
  }
  REQUIRE_THROWS_AS(PhysicalConstants::natural(0).compton_length(),
                    std::domain_error);
}

TEST_CASE("operator factors are the multiplicative images") {
  const auto pc = symbolic_profile(0);
  auto st = state_of({S(1), S(0), S(0), S(0)}, Rational(5), Rational(2),
                     Sign::plus);
  auto rep = nfb::OperatorRep<S>::from(st, pc);
  REQUIRE(rep.energy_factor == S(Rational(3, 5) * 5));
  REQUIRE(rep.momentum_factor == S(-(Rational(3, 5) * 2)));
  st.prop_sign = Sign::minus;
  rep = nfb::OperatorRep<S>::from(st, pc);
  REQUIRE(rep.momentum_factor == S(Rational(3, 5) * 2));
  // d/dt multiplies by -i w, d/dy by -+ i k.
  REQUIRE(nfb::dt_factor(st) == -i * S(5));
  REQUIRE(nfb::dy_factor(st) == i * S(2));
}

TEST_CASE("on-shell massless states solve form 2.11 exactly") {
  for (const auto& pc : {PhysicalConstants::natural(), symbolic_profile(0)}) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto st = nfb::on_shell_massless_state<S>(
          Rational(3, 2), sign, S(2), S(Rational(-1, 3)), pc);
      const auto residual =
          nfb::apply_dirac(EquationForm::massless_2_11, st, pc);
      REQUIRE(residual.is_zero());
    }
  }
}

TEST_CASE("plus-phase polarization pairing: E_x = H_z, E_z = -H_x") {
  const auto pc = PhysicalConstants::natural();
  PlaneWaveState<S> st;
  st.omega = 2;
  st.k = 2;
  st.prop_sign = Sign::plus;
  st.amplitudes = {S(3), S(-5), S(5), S(3)};  // E_x=H_z=3, E_z=-H_x=-5
  REQUIRE(nfb::apply_dirac(EquationForm::massless_2_11, st, pc).is_zero());
}

TEST_CASE("zero amplitudes give zero residuals for every form") {
  const auto pc = PhysicalConstants::natural(Rational(2));
  const auto st = state_of({}, Rational(4), Rational(1));
  for (const auto form :
       {EquationForm::massless_2_10, EquationForm::massless_2_11,
        EquationForm::massive_2_13p, EquationForm::massive_2_13pp,
        EquationForm::massive_2_16, EquationForm::massive_2_17})
    REQUIRE(nfb::apply_dirac(form, st, pc).is_zero());
}

TEST_CASE("off dispersion at least one residual is nonzero") {
  nfb::Rng rng(31);
  const auto pc = PhysicalConstants::natural();
  for (int t = 0; t < 50; ++t) {
    auto st = state_of(rng.field_quad<S>(), rng.positive_rational(),
                       rng.positive_rational());
    if (st.omega == pc.c * st.k) st.omega += 1;
    REQUIRE_FALSE(
        nfb::apply_dirac(EquationForm::massless_2_11, st, pc).is_zero());
  }
}

TEST_CASE("massless null space: 2-dimensional on shell, trivial off shell") {
  nfb::Rng rng(32);
  for (const auto& pc : {PhysicalConstants::natural(), symbolic_profile(0)}) {
    for (int t = 0; t < 25; ++t) {
      PlaneWaveState<S> st;
      st.k = rng.positive_rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      st.omega = pc.c * st.k;
      const auto basis = nfb::massless_null_space(st, pc);
      REQUIRE(basis.size() == 2);
      // Every null vector decodes to fields satisfying all four free rows.
      const S a = rng.exact_complex(), b = rng.exact_complex();
      PlaneWaveState<S> sol = st;
      sol.amplitudes = nfb::decode_null_vector(a * basis[0] + b * basis[1]);
      const auto rows =
          nfb::maxwell_lhs_rows(MaxwellSystem::sys_2_14p, sol, pc);
      REQUIRE(rows.is_zero());
      // Off dispersion the kernel is trivial.
      PlaneWaveState<S> off = st;
      off.omega = st.omega + rng.positive_rational();
      REQUIRE(nfb::massless_null_space(off, pc).empty());
    }
  }
}

TEST_CASE("Klein-Gordon factorization holds for arbitrary (w, k)") {
  nfb::Rng rng(33);
  for (const auto& pc : {PhysicalConstants::natural(), symbolic_profile(0)}) {
    for (int t = 0; t < 40; ++t) {
      PlaneWaveState<S> st;
      st.omega = rng.rational();
      st.k = rng.rational();
      st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
      const auto kg = nfb::klein_gordon_check(st, pc);
      REQUIRE(kg.energy_defect.is_zero());
      REQUIRE(kg.momentum_defect.is_zero());
      REQUIRE(kg.factored == kg.dispersion_scalar * nfb::Mat4<S>::identity());
      REQUIRE(kg.holds());
    }
  }
}

TEST_CASE("factored product takes the stated value off shell") {
  // w = 2, k = 1, c = hbar = 1: (w^2 - c^2 k^2) hbar^2 = 3.
  const auto pc = PhysicalConstants::natural();
  PlaneWaveState<S> st;
  st.omega = 2;
  st.k = 1;
  const auto kg = nfb::klein_gordon_check(st, pc);
  REQUIRE(kg.dispersion_scalar == S(3));
  REQUIRE(kg.factored == S(3) * nfb::Mat4<S>::identity());
  // On shell the factored product is the zero matrix.
  st.omega = 1;
  REQUIRE(nfb::klein_gordon_check(st, pc).factored.is_zero());
}

TEST_CASE("current correspondence: one shared kappa per system") {
  nfb::Rng rng(34);
  const struct {
    EquationForm form;
    Rational kappa_over_4pi_times_c;  // expected kappa/4pi multiplied by c
  } cases[] = {
      {EquationForm::massive_2_13p, -1},
      {EquationForm::massive_2_13pp, 1},
      {EquationForm::massive_2_16, 1},
      {EquationForm::massive_2_17, -1},
  };
  for (const auto& pc : {PhysicalConstants::natural(Rational(5, 3)),
                         symbolic_profile(Rational(2, 7))}) {
    for (const auto& c : cases) {
      for (int t = 0; t < 25; ++t) {
        PlaneWaveState<S> st;
        st.amplitudes = rng.field_quad<S>();
        st.omega = rng.rational();
        st.k = rng.rational();
        st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
        const auto match = nfb::current_correspondence(c.form, st, pc);
        REQUIRE(match.all_match());
        REQUIRE(match.kappa_over_4pi == S(c.kappa_over_4pi_times_c / pc.c));
      }
    }
  }
}

TEST_CASE("conjugate pairs flip the current sign") {
  const auto pc = PhysicalConstants::natural(Rational(1, 2));
  nfb::Rng rng(35);
  PlaneWaveState<S> st;
  st.amplitudes = rng.field_quad<S>();
  st.omega = Rational(3);
  st.k = Rational(2);
  const auto a =
      nfb::current_correspondence(EquationForm::massive_2_13p, st, pc);
  const auto b =
      nfb::current_correspondence(EquationForm::massive_2_13pp, st, pc);
  REQUIRE(a.kappa_over_4pi == -b.kappa_over_4pi);
  const auto c =
      nfb::current_correspondence(EquationForm::massive_2_16, st, pc);
  const auto d =
      nfb::current_correspondence(EquationForm::massive_2_17, st, pc);
  REQUIRE(c.kappa_over_4pi == -d.kappa_over_4pi);
}

TEST_CASE("charge conjugation intertwines the two current-sign systems") {
  nfb::Rng rng(36);
  const auto frame = nfb::direction_frame(Axis::y, Sign::minus);
  const auto conj_m = nfb::charge_conjugation_matrix<S>();
  for (int t = 0; t < 20; ++t) {
    PhysicalConstants pc = PhysicalConstants::natural(rng.positive_rational());
    PlaneWaveState<S> st;
    st.omega = rng.rational();
    st.k = rng.rational();
    st.prop_sign = (t % 2 == 0) ? Sign::plus : Sign::minus;
    // C Op(2.16) = Op(2.13' with m -> -m) C: conjugation flips only the
    // current term of the converted system.
    PhysicalConstants flipped = pc;
    flipped.m = -pc.m;
    const auto lhs =
        conj_m * nfb::plane_wave_operator(EquationForm::massive_2_16, st, pc,
                                          frame);
    const auto rhs = nfb::plane_wave_operator(EquationForm::massive_2_13p, st,
                                              flipped, frame) *
                     conj_m;
    REQUIRE(lhs == rhs);
  }
  // Conjugating an exact solution of the 2.18-type system yields a solution
  // of the 2.14-structure system whose kappa has the opposite sign.
  const auto pc = PhysicalConstants::natural(3);
  const auto sol = nfb::on_shell_massive_state<S>(
      5, 4, Sign::plus, S(1), S(Rational(1, 2)), pc,
      EquationForm::massive_2_16);
  const auto direct =
      nfb::current_correspondence(EquationForm::massive_2_13p, sol, pc);
  PlaneWaveState<S> conj = sol;
  conj.amplitudes = {sol.amplitudes.e1, -sol.amplitudes.e2, sol.amplitudes.h1,
                     -sol.amplitudes.h2};
  const auto via_conj =
      nfb::match_rows(Vec4<S>{}, MaxwellSystem::sys_2_14p, conj, pc);
  REQUIRE(via_conj.all_match());
  REQUIRE(via_conj.kappa_over_4pi == -direct.kappa_over_4pi);
  REQUIRE(via_conj.kappa_over_4pi == S(1) / S(pc.c));
}

TEST_CASE("m -> 0 reduces the massive form to the massless check") {
  const auto pc0 = PhysicalConstants::natural(0);
  nfb::Rng rng(37);
  PlaneWaveState<S> st;
  st.amplitudes = rng.field_quad<S>();
  st.omega = Rational(5, 2);
  st.k = Rational(1, 3);
  REQUIRE(nfb::apply_dirac(EquationForm::massive_2_13p, st, pc0) ==
          nfb::apply_dirac(EquationForm::massless_2_11, st, pc0));
  REQUIRE_THROWS_AS(
      nfb::current_correspondence(EquationForm::massive_2_13p, st, pc0),
      std::invalid_argument);
}

TEST_CASE("degenerate all-zero state is rejected") {
  const auto pc = PhysicalConstants::natural(1);
  PlaneWaveState<S> st;
  st.omega = 1;
  st.k = 1;
  REQUIRE_THROWS_AS(
      nfb::current_correspondence(EquationForm::massive_2_13p, st, pc),
      std::invalid_argument);
}

TEST_CASE("on-shell massive states solve their form exactly") {
  // Pythagorean profile: w0 = 3, c k = 4, w = 5 in natural units.
  const auto pc = PhysicalConstants::natural(3);
  const auto st = nfb::on_shell_massive_state<S>(
      5, 4, Sign::plus, S(1), S(Rational(2, 3)), pc,
      EquationForm::massive_2_13p);
  REQUIRE(nfb::apply_dirac(EquationForm::massive_2_13p, st, pc).is_zero());
  REQUIRE_THROWS_AS(
      nfb::on_shell_massive_state<S>(6, 4, Sign::plus, S(1), S(1), pc,
                                     EquationForm::massive_2_13p),
      std::invalid_argument);
}

TEST_CASE("per-axis systems cover the twelve printed equations") {
  const auto pc = PhysicalConstants::natural(Rational(1, 2));
  nfb::Rng rng(38);
  PlaneWaveState<S> st;
  st.amplitudes = rng.field_quad<S>();
  st.omega = Rational(2);
  st.k = Rational(3, 2);

  std::vector<std::string> labels;
  for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const auto sys = nfb::per_axis_system(axis, Sign::plus, st, pc);
    // The frame-transposed Dirac rows reproduce the group under the shared
    // constant: rows == lhs - (kappa/4pi) * rhs_scaled with kappa/4pi = 1/c.
    const S kap = S(1) / S(pc.c);
    for (std::size_t r = 0; r < 4; ++r)
      REQUIRE(sys.dirac_rows[r] == sys.lhs[r] - kap * sys.rhs_scaled[r]);
    for (const auto& l : sys.labels) labels.push_back(l);
  }
  const std::vector<std::string> expected = {
      // x-direction group
      "(1/c) dt Ey + dx Hz = -je_y", "(1/c) dt Ez - dx Hy = -je_z",
      "(1/c) dt Hy - dx Ez = +jm_y", "(1/c) dt Hz + dx Ey = +jm_z",
      // y-direction group
      "(1/c) dt Ez + dy Hx = -je_z", "(1/c) dt Ex - dy Hz = -je_x",
      "(1/c) dt Hz - dy Ex = +jm_z", "(1/c) dt Hx + dy Ez = +jm_x",
      // z-direction group
      "(1/c) dt Ex + dz Hy = -je_x", "(1/c) dt Ey - dz Hx = -je_y",
      "(1/c) dt Hx - dz Ey = +jm_x", "(1/c) dt Hy + dz Ex = +jm_y",
  };
  REQUIRE(labels == expected);
}

TEST_CASE("zero fields give zero per-axis residuals") {
  const auto pc = PhysicalConstants::natural(1);
  PlaneWaveState<S> st;
  st.omega = 1;
  st.k = 1;
  const auto sys = nfb::per_axis_system(Axis::x, Sign::plus, st, pc);
  REQUIRE(sys.lhs.is_zero());
  REQUIRE(sys.dirac_rows.is_zero());
}

TEST_CASE("form tags parse, including the aliased introduction forms") {
  REQUIRE(nfb::parse_form("2.11") == EquationForm::massless_2_11);
  REQUIRE(nfb::parse_form("1.1") == EquationForm::massive_2_13p);
  REQUIRE(nfb::parse_form("1.2") == EquationForm::massive_2_17);
  REQUIRE(nfb::parse_form("2.13'") == EquationForm::massive_2_13p);
  REQUIRE_THROWS_AS(nfb::parse_form("9.9"), std::invalid_argument);
}

TEST_CASE("negative-direction frames carry the same per-axis structure") {
  const auto pc = PhysicalConstants::natural(Rational(1, 2));
  nfb::Rng rng(39);
  PlaneWaveState<S> st;
  st.amplitudes = rng.field_quad<S>();
  st.omega = Rational(3, 2);
  st.k = Rational(2);
  const S kap = S(1) / S(pc.c);
  for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const auto sys = nfb::per_axis_system(axis, Sign::minus, st, pc);
    for (std::size_t r = 0; r < 4; ++r)
      REQUIRE(sys.dirac_rows[r] == sys.lhs[r] - kap * sys.rhs_scaled[r]);
    REQUIRE(sys.frame.sign == Sign::minus);
  }
}
