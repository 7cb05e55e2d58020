#include <catch2/catch_amalgamated.hpp>

#include "nfbridge/dirac.hpp"
#include "nfbridge/random.hpp"

using nfb::ExactComplex;
using nfb::Hermiticity;
using nfb::Mat2;
using nfb::Mat4;
using nfb::MatrixKind;

namespace {

using S = ExactComplex;
const S o = S(1), z = S(0), i = ExactComplex::i();

Mat4<S> alpha(int k) { return nfb::dirac_matrix<S>(MatrixKind::alpha(k)); }

Mat4<S> mat(std::array<S, 16> e) {
  Mat4<S> m;
  m.e = e;
  return m;
}

}  // namespace

TEST_CASE("pauli matrices match the printed set") {
  const auto s1 = nfb::pauli<S>(1);
  REQUIRE(s1.e == std::array<S, 4>{z, o, o, z});
  const auto s2 = nfb::pauli<S>(2);
  REQUIRE(s2.e == std::array<S, 4>{z, -i, i, z});
  const auto s3 = nfb::pauli<S>(3);
  REQUIRE(s3.e == std::array<S, 4>{o, z, z, -o});
  REQUIRE(nfb::pauli<S>(0).e == std::array<S, 4>{o, z, z, o});
  // Square of each by direct 2x2 multiplication.
  for (int k = 0; k < 4; ++k)
    REQUIRE(nfb::pauli<S>(k) * nfb::pauli<S>(k) == nfb::pauli<S>(0));
  REQUIRE_THROWS_AS(nfb::pauli<S>(4), std::invalid_argument);
}

TEST_CASE("beta is diag(1,1,-1,-1)") {
  REQUIRE(nfb::dirac_matrix<S>(MatrixKind::beta_kind()) ==
          Mat4<S>::diag(o, o, -o, -o));
}

TEST_CASE("alpha5 equals the brute-force product of a1 a2 a3 a4") {
  // Oracle: multiply the four matrices assembled here from the Pauli blocks.
  const Mat2<S> zero2{};
  auto block = [&](int k) {
    return Mat4<S>::from_blocks(zero2, nfb::pauli<S>(k), nfb::pauli<S>(k),
                                zero2);
  };
  const Mat4<S> beta = Mat4<S>::diag(o, o, -o, -o);
  const Mat4<S> product = block(1) * block(2) * block(3) * beta;
  REQUIRE(nfb::dirac_matrix<S>(MatrixKind::alpha5()) == product);
  // Frozen explicit value of that product.
  REQUIRE(product == mat({z, z, -i, z,
                          z, z, z, -i,
                          i, z, z, z,
                          z, i, z, z}));
}

TEST_CASE("anticommutator examples") {
  const Mat4<S> two_id = (o + o) * Mat4<S>::identity();
  REQUIRE(nfb::anticommutator(alpha(1), alpha(1)) == two_id);
  REQUIRE(nfb::anticommutator(alpha(1), alpha(2)).is_zero());
  REQUIRE(nfb::anticommutator(alpha(3), alpha(4)).is_zero());
}

TEST_CASE("the alpha set is a Dirac set") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const Mat4<S> ac = nfb::anticommutator(alpha(a), alpha(b));
      if (a == b)
        REQUIRE(ac == (o + o) * Mat4<S>::identity());
      else
        REQUIRE(ac.is_zero());
    }
  for (int a = 1; a <= 3; ++a)
    REQUIRE(nfb::anticommutator(alpha(a), alpha(4)).is_zero());
  REQUIRE(alpha(4) * alpha(4) == Mat4<S>::identity());
}

TEST_CASE("alpha5 anticommutes with alpha1..alpha4") {
  const Mat4<S> a5 = nfb::dirac_matrix<S>(MatrixKind::alpha5());
  for (int k = 1; k <= 4; ++k)
    REQUIRE(nfb::anticommutator(a5, alpha(k)).is_zero());
  REQUIRE(a5 * a5 == Mat4<S>::identity());
}

TEST_CASE("tensor family: diagonal zero, antisymmetry, index-4 rejection") {
  REQUIRE(nfb::dirac_matrix<S>(MatrixKind::tensor(2, 2)).is_zero());
  REQUIRE(nfb::dirac_matrix<S>(MatrixKind::tensor(4, 4)).is_zero());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      REQUIRE(nfb::dirac_matrix<S>(MatrixKind::tensor(mu, nu)) ==
              -nfb::dirac_matrix<S>(MatrixKind::tensor(nu, mu)));
    }
  REQUIRE_THROWS_AS(nfb::dirac_matrix<S>(MatrixKind::tensor(1, 4)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(nfb::dirac_matrix<S>(MatrixKind::tensor(4, 0)),
                    std::invalid_argument);
}

TEST_CASE("hermiticity classification of the whole enumeration") {
  using H = Hermiticity;
  auto kind_of = [](const MatrixKind& k) {
    return nfb::classify_hermiticity(nfb::dirac_matrix<S>(k));
  };
  for (int mu = 0; mu <= 4; ++mu)
    REQUIRE(kind_of(MatrixKind::alpha(mu)) == H::hermitian);
  REQUIRE(kind_of(MatrixKind::alpha5()) == H::hermitian);
  REQUIRE(kind_of(MatrixKind::pseudovector(0)) == H::hermitian);
  for (int mu = 1; mu <= 4; ++mu)
    REQUIRE(kind_of(MatrixKind::pseudovector(mu)) == H::anti_hermitian);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      REQUIRE(kind_of(MatrixKind::tensor(mu, nu)) == H::hermitian);
    }
}

TEST_CASE("matrix adjoint is an involution; products associate") {
  nfb::Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Mat4<S> a, b, c;
    for (std::size_t k = 0; k < 16; ++k) {
      a.e[k] = rng.exact_complex(true);
      b.e[k] = rng.exact_complex(true);
      c.e[k] = rng.exact_complex(true);
    }
    REQUIRE(a.adjoint().adjoint() == a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("canonical transformation matrix is exactly unitary") {
  const Mat4<S> s = nfb::canonical_s<S>();
  REQUIRE(nfb::is_unitary(s));
  REQUIRE(s * s.adjoint() == Mat4<S>::identity());
  REQUIRE(s.adjoint() * s == Mat4<S>::identity());
}

TEST_CASE("conjugation by the identity is the identity map") {
  const Mat4<S> m = nfb::dirac_matrix<S>(MatrixKind::pseudovector(3));
  REQUIRE(nfb::canonical_conjugate(Mat4<S>::identity(), m) == m);
}

TEST_CASE("conjugation by S reproduces the printed primed set") {
  const Mat4<S> s = nfb::canonical_s<S>();
  const Mat2<S> zero2{};
  const Mat2<S> sx = nfb::pauli<S>(1), sy = nfb::pauli<S>(2),
                sz = nfb::pauli<S>(3);
  Mat2<S> msy, isy, misy;
  for (std::size_t k = 0; k < 4; ++k) {
    msy.e[k] = -sy.e[k];
    isy.e[k] = i * sy.e[k];
    misy.e[k] = -(i * sy.e[k]);
  }
  const Mat4<S> ap1 = Mat4<S>::from_blocks(sx, zero2, zero2, sx);
  const Mat4<S> ap2 = Mat4<S>::from_blocks(sy, zero2, zero2, msy);
  const Mat4<S> ap3 = Mat4<S>::from_blocks(sz, zero2, zero2, sz);
  const Mat4<S> ap4 = Mat4<S>::from_blocks(zero2, misy, isy, zero2);

  REQUIRE(nfb::canonical_conjugate(s, alpha(1)) == ap1);
  REQUIRE(nfb::canonical_conjugate(s, alpha(2)) == ap2);
  REQUIRE(nfb::canonical_conjugate(s, alpha(3)) == ap3);
  REQUIRE(nfb::canonical_conjugate(s, alpha(4)) == ap4);
  REQUIRE(nfb::canonical_conjugate(s, alpha(0)) == alpha(0));
}

TEST_CASE("conjugation preserves the anticommutation relations") {
  const Mat4<S> s = nfb::canonical_s<S>();
  std::array<Mat4<S>, 5> primed;
  for (int k = 0; k <= 4; ++k)
    primed[k] = nfb::canonical_conjugate(s, alpha(k));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Mat4<S> ac = nfb::anticommutator(primed[a], primed[b]);
      if (a == b)
        REQUIRE(ac == (o + o) * Mat4<S>::identity());
      else
        REQUIRE(ac.is_zero());
    }
}

TEST_CASE("non-unitary conjugation is rejected") {
  Mat4<S> bad = Mat4<S>::identity();
  bad(0, 0) = S(2);
  REQUIRE_THROWS_AS(nfb::canonical_conjugate(bad, alpha(1)),
                    std::invalid_argument);
}

TEST_CASE("kernel of singular and regular matrices") {
  // alpha2 has eigenvalues +-1, so I - alpha2 has a 2-dimensional kernel.
  const Mat4<S> m = Mat4<S>::identity() - alpha(2);
  const auto basis = nfb::kernel(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) REQUIRE((m * v).is_zero());
  REQUIRE(nfb::kernel(nfb::canonical_s<S>()).empty());
}
