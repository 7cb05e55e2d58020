#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nfbridge/matrix.hpp"

namespace nfb {

/// Names one matrix of the 16-element enumeration: the five vector matrices
/// (alpha0..alpha3 plus beta in the index-4 slot), the pseudoscalar alpha5,
/// the pseudovector products alpha5*alpha_mu, and the antisymmetric tensor
/// family t(mu,nu). Indices run over {0,1,2,3,4} with 4 the beta slot.
struct MatrixKind {
  enum class Tag { alpha0, alpha1, alpha2, alpha3, beta, alpha5, pseudovector, tensor };

  Tag tag = Tag::alpha0;
  int mu = -1;
  int nu = -1;

  static MatrixKind alpha(int k) {
    switch (k) {
      case 0: return {Tag::alpha0};
      case 1: return {Tag::alpha1};
      case 2: return {Tag::alpha2};
      case 3: return {Tag::alpha3};
      case 4: return {Tag::beta};
      default: throw std::invalid_argument("alpha index out of range");
    }
  }
  static MatrixKind beta_kind() { return {Tag::beta}; }
  static MatrixKind alpha5() { return {Tag::alpha5}; }
  static MatrixKind pseudovector(int mu) {
    if (mu < 0 || mu > 4) throw std::invalid_argument("pseudovector index");
    return {Tag::pseudovector, mu};
  }
  static MatrixKind tensor(int mu, int nu) {
    if (mu < 0 || mu > 4 || nu < 0 || nu > 4)
      throw std::invalid_argument("tensor index");
    return {Tag::tensor, mu, nu};
  }

  friend bool operator==(const MatrixKind& a, const MatrixKind& b) {
    return a.tag == b.tag && a.mu == b.mu && a.nu == b.nu;
  }

  std::string name() const {
    switch (tag) {
      case Tag::alpha0: return "alpha0";
      case Tag::alpha1: return "alpha1";
      case Tag::alpha2: return "alpha2";
      case Tag::alpha3: return "alpha3";
      case Tag::beta: return "beta";
      case Tag::alpha5: return "alpha5";
      case Tag::pseudovector: return "a5*a" + std::to_string(mu);
      case Tag::tensor:
        return "t(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
    }
    return "?";
  }
};

/// Pauli matrices exactly as printed; index 0 is the 2x2 identity.
template <class S>
Mat2<S> pauli(int index) {
  using T = scalar_traits<S>;
  const S o = T::one(), z = T::zero(), i = T::i();
  Mat2<S> m;
  switch (index) {
    case 0: m.e = {o, z, z, o}; break;
    case 1: m.e = {z, o, o, z}; break;
    case 2: m.e = {z, -i, i, z}; break;
    case 3: m.e = {o, z, z, -o}; break;
    default: throw std::invalid_argument("pauli index out of range");
  }
  return m;
}

namespace detail {

template <class S>
Mat4<S> alpha_matrix(int k) {
  const Mat2<S> s0 = pauli<S>(0);
  Mat2<S> zero2{};
  switch (k) {
    case 0: return Mat4<S>::from_blocks(s0, zero2, zero2, s0);
    case 1:
    case 2:
    case 3: {
      const Mat2<S> sk = pauli<S>(k);
      return Mat4<S>::from_blocks(zero2, sk, sk, zero2);
    }
    case 4: {
      Mat2<S> minus_s0;
      for (std::size_t j = 0; j < 4; ++j) minus_s0.e[j] = -s0.e[j];
      return Mat4<S>::from_blocks(s0, zero2, zero2, minus_s0);
    }
    default: throw std::invalid_argument("alpha index out of range");
  }
}

}  // namespace detail

/// The enumerated Dirac matrix for a kind. alpha5 is always computed as the
/// product a1*a2*a3*a4; tensor(mu,nu) as i*a_nu*beta*a_mu for mu != nu and the
/// zero matrix on the diagonal. Off-diagonal tensor pairs touching index 4 are
/// rejected: the defining product is symmetric there, which contradicts the
/// declared antisymmetry, and no such entry appears in the enumeration table.
template <class S>
Mat4<S> dirac_matrix(const MatrixKind& kind) {
  using Tag = MatrixKind::Tag;
  using T = scalar_traits<S>;
  switch (kind.tag) {
    case Tag::alpha0: return detail::alpha_matrix<S>(0);
    case Tag::alpha1: return detail::alpha_matrix<S>(1);
    case Tag::alpha2: return detail::alpha_matrix<S>(2);
    case Tag::alpha3: return detail::alpha_matrix<S>(3);
    case Tag::beta: return detail::alpha_matrix<S>(4);
    case Tag::alpha5:
      return detail::alpha_matrix<S>(1) * detail::alpha_matrix<S>(2) *
             detail::alpha_matrix<S>(3) * detail::alpha_matrix<S>(4);
    case Tag::pseudovector:
      return dirac_matrix<S>(MatrixKind::alpha5()) *
             detail::alpha_matrix<S>(kind.mu);
    case Tag::tensor: {
      if (kind.mu == kind.nu) return Mat4<S>::zero();
      if (kind.mu == 4 || kind.nu == 4)
        throw std::invalid_argument(
            "tensor pair with index 4 is not part of the enumeration");
      return T::i() * (detail::alpha_matrix<S>(kind.nu) *
                       detail::alpha_matrix<S>(4) *
                       detail::alpha_matrix<S>(kind.mu));
    }
  }
  throw std::logic_error("unreachable");
}

/// Cached lookup for the finite set of materializable kinds. The table is
/// built once on first use and read-only afterwards.
template <class S>
const Mat4<S>& dirac_matrix_cached(const MatrixKind& kind) {
  using Tag = MatrixKind::Tag;
  static const auto table = [] {
    std::vector<std::pair<MatrixKind, Mat4<S>>> t;
    for (int mu = 0; mu <= 4; ++mu) {
      t.emplace_back(MatrixKind::alpha(mu), dirac_matrix<S>(MatrixKind::alpha(mu)));
      t.emplace_back(MatrixKind::pseudovector(mu),
                     dirac_matrix<S>(MatrixKind::pseudovector(mu)));
      t.emplace_back(MatrixKind::tensor(mu, mu), Mat4<S>::zero());
    }
    t.emplace_back(MatrixKind::alpha5(), dirac_matrix<S>(MatrixKind::alpha5()));
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (mu != nu)
          t.emplace_back(MatrixKind::tensor(mu, nu),
                         dirac_matrix<S>(MatrixKind::tensor(mu, nu)));
    return t;
  }();
  for (const auto& [k, m] : table)
    if (k == kind) return m;
  if (kind.tag == Tag::tensor)
    throw std::invalid_argument(
        "tensor pair with index 4 is not part of the enumeration");
  throw std::invalid_argument("unknown kind");
}

template <class S>
Mat4<S> anticommutator(const Mat4<S>& a, const Mat4<S>& b) {
  return a * b + b * a;
}

template <class S>
Mat4<S> commutator(const Mat4<S>& a, const Mat4<S>& b) {
  return a * b - b * a;
}

template <class S>
bool is_unitary(const Mat4<S>& u) {
  const Mat4<S> id = Mat4<S>::identity();
  const Mat4<S> ud = u.adjoint();
  if constexpr (scalar_traits<S>::exact) {
    return u * ud == id && ud * u == id;
  } else {
    auto close = [](const Mat4<S>& m, const Mat4<S>& n) {
      for (std::size_t k = 0; k < 16; ++k)
        if (std::abs(m.e[k] - n.e[k]) > 1e-12) return false;
      return true;
    };
    return close(u * ud, id) && close(ud * u, id);
  }
}

/// S_dagger * M * S, the primed representation of M. Checks unitarity first.
template <class S>
Mat4<S> canonical_conjugate(const Mat4<S>& u, const Mat4<S>& m) {
  if (!is_unitary(u))
    throw std::invalid_argument("canonical_conjugate: matrix is not unitary");
  return u.adjoint() * m * u;
}

/// The unitary change of basis with the 1/sqrt2 entries that links the
/// standard representation to the block-diagonal primed one.
template <class S>
Mat4<S> canonical_s() {
  using T = scalar_traits<S>;
  const S r = T::inv_sqrt2(), z = T::zero();
  Mat4<S> m;
  m.e = {r, z, z, -r,
         z, r, r, z,
         r, z, z, r,
         z, r, -r, z};
  return m;
}

enum class Hermiticity { hermitian, anti_hermitian, neither };

inline const char* to_string(Hermiticity h) {
  switch (h) {
    case Hermiticity::hermitian: return "hermitian";
    case Hermiticity::anti_hermitian: return "anti-hermitian";
    default: return "neither";
  }
}

template <class S>
Hermiticity classify_hermiticity(const Mat4<S>& m) {
  const Mat4<S> adj = m.adjoint();
  if (adj == m) return Hermiticity::hermitian;
  if (adj == -m) return Hermiticity::anti_hermitian;
  return Hermiticity::neither;
}

/// Every kind with a printed closed form in the enumeration table: the scalar,
/// the four vector components, the pseudoscalar, pseudovectors 0..3 and the
/// 16 tensor slots over {0,1,2,3}.
inline std::vector<MatrixKind> enumerated_kinds() {
  std::vector<MatrixKind> kinds;
  kinds.push_back(MatrixKind::beta_kind());
  for (int mu = 0; mu < 4; ++mu) kinds.push_back(MatrixKind::alpha(mu));
  kinds.push_back(MatrixKind::alpha5());
  for (int mu = 0; mu < 4; ++mu) kinds.push_back(MatrixKind::pseudovector(mu));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) kinds.push_back(MatrixKind::tensor(mu, nu));
  return kinds;
}

}  // namespace nfb
