#include <catch2/catch_amalgamated.hpp>

#include "nfbridge/bilinears.hpp"
#include "nfbridge/random.hpp"

using nfb::Axis;
using nfb::Bispinor;
using nfb::DirectionFrame;
using nfb::ExactComplex;
using nfb::FieldQuad;
using nfb::Mat4;
using nfb::MatrixKind;
using nfb::Rational;
using nfb::Rep;
using nfb::Sign;
using nfb::Vec4;

namespace {
using S = ExactComplex;
const S i = ExactComplex::i();

FieldQuad<S> quad(long e1, long e2, long h1, long h2) {
  return {S(e1), S(e2), S(h1), S(h2)};
}
}  // namespace

TEST_CASE("packing the y-minus quad puts i on the magnetic slots") {
  const auto f = nfb::direction_frame(Axis::y, Sign::minus);
  const Bispinor<S> psi = nfb::to_bispinor(quad(1, 2, 3, 4), f);
  REQUIRE(psi.c == Vec4<S>{S(1), S(2), S(3) * i, S(4) * i});
  REQUIRE(nfb::to_bispinor(FieldQuad<S>{}, f).c.is_zero());

  const auto fp = nfb::direction_frame(Axis::y, Sign::plus);
  const Bispinor<S> psip = nfb::to_bispinor(quad(1, 2, 3, 4), fp);
  REQUIRE(psip.c == Vec4<S>{S(1), S(2), S(3) * i, S(4) * i});
  REQUIRE(fp.layout[0].name() == "Ez");
  REQUIRE(fp.layout[1].name() == "Ex");
}

TEST_CASE("formal adjoint flips the explicit i without conjugating") {
  const auto f = nfb::direction_frame(Axis::y, Sign::minus);
  const Bispinor<S> psi = nfb::to_bispinor(quad(1, 2, 3, 4), f);
  REQUIRE(nfb::paper_adjoint(psi) ==
          Vec4<S>{S(1), S(2), -(S(3) * i), -(S(4) * i)});
  REQUIRE(nfb::paper_adjoint(nfb::to_bispinor(FieldQuad<S>{}, f)).is_zero());

  // Complex amplitude: the formal row keeps 1+i; the Hermitian row conjugates.
  FieldQuad<S> q{S(1) + i, S(0), S(0), S(0)};
  const Bispinor<S> psic = nfb::to_bispinor(q, f);
  REQUIRE(nfb::paper_adjoint(psic)[0] == S(1) + i);
  REQUIRE(nfb::hermitian_adjoint(psic)[0] == S(1) - i);
}

TEST_CASE("charge conjugation flips the second and fourth components") {
  const auto f = nfb::direction_frame(Axis::y, Sign::minus);
  const Bispinor<S> psi = nfb::to_bispinor(quad(1, 2, 3, 4), f);
  const Bispinor<S> conj = nfb::charge_conjugate(psi);
  REQUIRE(conj.c == Vec4<S>{S(1), S(-2), S(3) * i, -(S(4) * i)});
  REQUIRE(conj.rep == Rep::retarded_conjugated);
  const Bispinor<S> twice = nfb::charge_conjugate(conj);
  REQUIRE(twice.c == psi.c);
  REQUIRE(twice.rep == Rep::standard);
}

TEST_CASE("charge conjugation preserves the energy bilinear") {
  nfb::Rng rng(11);
  const auto f = nfb::direction_frame(Axis::y, Sign::minus);
  const Mat4<S> a0 = nfb::dirac_matrix<S>(MatrixKind::alpha(0));
  for (int t = 0; t < 50; ++t) {
    const auto q = rng.field_quad<S>();
    const auto psi = nfb::to_bispinor(q, f);
    const auto conj = nfb::charge_conjugate(psi);
    REQUIRE(nfb::dot_row_col(nfb::paper_adjoint(psi), a0 * psi.c) ==
            nfb::dot_row_col(nfb::paper_adjoint(conj), a0 * conj.c));
  }
}

TEST_CASE("primed bispinor matches the closed form") {
  const Mat4<S> s = nfb::canonical_s<S>();
  const auto f = nfb::direction_frame(Axis::y, Sign::minus);
  nfb::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto q = rng.field_quad<S>();
    const Bispinor<S> psi = nfb::to_bispinor(q, f);
    const Bispinor<S> primed = nfb::to_primed(psi, s);
    REQUIRE(primed.rep == Rep::primed);
    // psi' = (sqrt2/2) (Ex + iHx, Ez + iHz, Ez - iHz, -Ex + iHx)
    const S r = ExactComplex::inv_sqrt2();
    REQUIRE(primed.c[0] == r * (q.e1 + i * q.h1));
    REQUIRE(primed.c[1] == r * (q.e2 + i * q.h2));
    REQUIRE(primed.c[2] == r * (q.e2 - i * q.h2));
    REQUIRE(primed.c[3] == r * (-q.e1 + i * q.h1));
    // The printed reconstruction: psi_1 = (psi'_1 - psi'_4)/sqrt2 and cyclic.
    REQUIRE(psi.c[0] == r * (primed.c[0] - primed.c[3]));
    REQUIRE(psi.c[1] == r * (primed.c[1] + primed.c[2]));
    REQUIRE(psi.c[2] == r * (primed.c[0] + primed.c[3]));
    REQUIRE(psi.c[3] == r * (primed.c[1] - primed.c[2]));
    // And S psi' must recover psi.
    REQUIRE(s * primed.c == psi.c);
  }
  const Bispinor<S> psi = nfb::to_bispinor(quad(1, 2, 3, 4), f);
  REQUIRE(nfb::to_primed(psi, Mat4<S>::identity()).c == psi.c);
}

TEST_CASE("the six frames are pairwise distinct and use each alpha once") {
  const auto frames = nfb::direction_frames();
  for (std::size_t a = 0; a < frames.size(); ++a)
    for (std::size_t b = a + 1; b < frames.size(); ++b) {
      const bool same_layout = frames[a].layout == frames[b].layout;
      const bool same_id = frames[a].axis == frames[b].axis &&
                           frames[a].sign == frames[b].sign;
      REQUIRE(!same_id);
      if (same_layout)
        REQUIRE(frames[a].axis_matrix != frames[b].axis_matrix);
    }
  for (const auto& f : frames) {
    std::array<bool, 4> used{};
    for (const auto& kind : f.axis_matrix) {
      REQUIRE((kind.tag == MatrixKind::Tag::alpha1 ||
               kind.tag == MatrixKind::Tag::alpha2 ||
               kind.tag == MatrixKind::Tag::alpha3));
      int which = kind.tag == MatrixKind::Tag::alpha1   ? 1
                  : kind.tag == MatrixKind::Tag::alpha2 ? 2
                                                        : 3;
      REQUIRE(!used[which]);
      used[which] = true;
    }
    REQUIRE(f.matrix_for(f.axis).tag == MatrixKind::Tag::alpha2);
  }
}

TEST_CASE("printed frame layouts") {
  const auto fx = nfb::direction_frame(Axis::x, Sign::minus);
  REQUIRE(fx.layout[0].name() == "Ez");
  REQUIRE(fx.layout[1].name() == "Ey");
  REQUIRE(fx.layout[2].name() == "Hz");
  REQUIRE(fx.layout[3].name() == "Hy");
  const auto fz = nfb::direction_frame(Axis::z, Sign::minus);
  REQUIRE(fz.layout[0].name() == "Ey");
  REQUIRE(fz.layout[1].name() == "Ex");
  const auto fzp = nfb::direction_frame(Axis::z, Sign::plus);
  REQUIRE(fzp.layout[0].name() == "Ex");
  REQUIRE(fzp.layout[1].name() == "Ey");
}

TEST_CASE("Poynting sign law across all six frames") {
  nfb::Rng rng(13);
  for (const auto& f : nfb::direction_frames()) {
    const Mat4<S> a_axis = nfb::dirac_matrix<S>(f.matrix_for(f.axis));
    for (int t = 0; t < 40; ++t) {
      const auto q = rng.real_field_quad<S>();
      const auto psi = nfb::to_bispinor(q, f);
      const S value = nfb::dot_row_col(nfb::paper_adjoint(psi), a_axis * psi.c);
      const auto [e3, h3] = nfb::fields_3d(q, f);
      const S flux = nfb::cross(e3, h3)[static_cast<std::size_t>(f.axis)];
      const S expected =
          (f.sign == Sign::minus) ? -(S(2) * flux) : S(2) * flux;
      REQUIRE(value == expected);
      // Real fields: the Hermitian row gives the same number.
      REQUIRE(nfb::dot_row_col(nfb::hermitian_adjoint(psi), a_axis * psi.c) ==
              value);
    }
  }
}

TEST_CASE("bilinears are invariant under the transported representation") {
  nfb::Rng rng(14);
  const Mat4<S> s = nfb::canonical_s<S>();
  const auto f = nfb::direction_frame(Axis::y, Sign::minus);
  for (int t = 0; t < 10; ++t) {
    const auto q = rng.field_quad<S>();
    const auto psi = nfb::to_bispinor(q, f);
    const auto row = nfb::paper_adjoint(psi);
    const auto primed = nfb::to_primed(psi, s);
    const auto row_primed = nfb::transported_adjoint(row, s);
    for (const auto& kind : nfb::enumerated_kinds()) {
      const Mat4<S> m = nfb::dirac_matrix<S>(kind);
      const Mat4<S> mp = nfb::canonical_conjugate(s, m);
      REQUIRE(nfb::dot_row_col(row_primed, mp * primed.c) ==
              nfb::dot_row_col(row, m * psi.c));
    }
  }
}

TEST_CASE("transversality is per frame: the longitudinal pair is absent") {
  for (const auto& f : nfb::direction_frames()) {
    for (const auto& slot : f.layout) REQUIRE(slot.axis != f.axis);
    // All three axes appear across layouts of distinct frames, so E_y, H_y in
    // an x-frame layout is expected; only the frame's own axis is excluded.
  }
}
