#pragma once

#include <optional>
#include <vector>

#include "nfbridge/bridge.hpp"

namespace nfb {

/// O = psi^+ A psi with the formal adjoint row, for one enumerated matrix.
template <class S>
S bilinear(const MatrixKind& kind, const FieldQuad<S>& q,
           const DirectionFrame& frame) {
  const Bispinor<S> psi = to_bispinor(q, frame);
  const Mat4<S>& m = dirac_matrix_cached<S>(kind);
  return dot_row_col(paper_adjoint(psi), m * psi.c);
}

/// Same bilinear with the true Hermitian adjoint; coincides with the formal
/// one on real-valued fields.
template <class S>
S bilinear_hermitian(const MatrixKind& kind, const FieldQuad<S>& q,
                     const DirectionFrame& frame) {
  const Bispinor<S> psi = to_bispinor(q, frame);
  const Mat4<S>& m = dirac_matrix_cached<S>(kind);
  return dot_row_col(hermitian_adjoint(psi), m * psi.c);
}

/// The printed closed form for a kind, evaluated on the quad's slot variables
/// (for the y/minus frame the slots read E_x, E_z, H_x, H_z). Kinds without a
/// printed closed form (pseudovector(4)) are rejected.
template <class S>
S em_expected(const MatrixKind& kind, const FieldQuad<S>& q) {
  using Tag = MatrixKind::Tag;
  using T = scalar_traits<S>;
  const S two = T::one() + T::one();
  const S& e1 = q.e1;
  const S& e2 = q.e2;
  const S& h1 = q.h1;
  const S& h2 = q.h2;
  switch (kind.tag) {
    case Tag::beta:
      return e1 * e1 + e2 * e2 - h1 * h1 - h2 * h2;  // 8*pi*I1
    case Tag::alpha0:
      return e1 * e1 + e2 * e2 + h1 * h1 + h2 * h2;  // 8*pi*U
    case Tag::alpha1:
    case Tag::alpha3:
      return T::zero();  // transverse flux components vanish for this frame
    case Tag::alpha2:
      return two * (e1 * h2 - e2 * h1);  // -(8*pi/c) S_axis
    case Tag::alpha5:
      return two * (e1 * h1 + e2 * h2);  // 2 (E.H)
    case Tag::pseudovector:
      switch (kind.mu) {
        case 0: return two * (e1 * h1 + e2 * h2);
        case 1: return -T::i() * (two * (e1 * e2 - h1 * h2));
        case 2: return T::zero();
        case 3: return -T::i() * (e1 * e1 - e2 * e2 - h1 * h1 + h2 * h2);
        default:
          throw std::invalid_argument("no printed closed form for " +
                                      kind.name());
      }
    case Tag::tensor: {
      const int mu = kind.mu, nu = kind.nu;
      if (mu == nu) return T::zero();
      if (mu == 4 || nu == 4)
        throw std::invalid_argument("no printed closed form for " +
                                    kind.name());
      // Closed forms for the (mu, nu) orientation of the defining product
      // i*a_nu*beta*a_mu; the reversed pair is the negation.
      auto oriented = [&](int a, int b, S v) {
        return (mu == a && nu == b) ? v : -v;
      };
      if ((mu == 1 && nu == 2) || (mu == 2 && nu == 1))
        return oriented(1, 2, -(e1 * e1) + e2 * e2 + h1 * h1 - h2 * h2);
      if ((mu == 2 && nu == 3) || (mu == 3 && nu == 2))
        return oriented(2, 3, -(two * (e1 * e2 - h1 * h2)));
      if ((mu == 1 && nu == 3) || (mu == 3 && nu == 1)) return T::zero();
      if ((mu == 1 && nu == 0) || (mu == 0 && nu == 1))
        return oriented(1, 0, -(two * (e1 * h2 + e2 * h1)));
      if ((mu == 2 && nu == 0) || (mu == 0 && nu == 2)) return T::zero();
      if ((mu == 3 && nu == 0) || (mu == 0 && nu == 3))
        return oriented(3, 0, -(two * (e1 * h1 - e2 * h2)));
      throw std::invalid_argument("no printed closed form for " + kind.name());
    }
  }
  throw std::logic_error("unreachable");
}

template <class S>
struct BilinearResult {
  MatrixKind kind;
  S value{};
  S em_expected{};
  bool match = false;
};

/// One result per enumerated kind with a printed closed form; the headline
/// property is match == true for arbitrary quads.
template <class S>
std::vector<BilinearResult<S>> verify_table(const FieldQuad<S>& q,
                                            const DirectionFrame& frame) {
  std::vector<BilinearResult<S>> out;
  for (const MatrixKind& kind : enumerated_kinds()) {
    BilinearResult<S> r;
    r.kind = kind;
    r.value = bilinear(kind, q, frame);
    r.em_expected = em_expected(kind, q);
    r.match = matches(r.value, r.em_expected);
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic-form view and the audit of the published tensor table.

/// psi^+ M psi as a quadratic form in the slot variables: q^T (D' M D) q with
/// D = diag(1,1,i,i), D' = diag(1,1,-i,-i), symmetrized so polynomial equality
/// is matrix equality.
template <class S>
Mat4<S> bilinear_quadratic_form(const MatrixKind& kind) {
  using T = scalar_traits<S>;
  const S i = T::i();
  Mat4<S> d = Mat4<S>::diag(T::one(), T::one(), i, i);
  Mat4<S> dp = Mat4<S>::diag(T::one(), T::one(), -i, -i);
  Mat4<S> a = dp * dirac_matrix_cached<S>(kind) * d;
  Mat4<S> sym = a + a.transpose();
  const S half = T::one() / (T::one() + T::one());
  return half * sym;
}

enum class TableEntryStatus {
  zero_matches_both,   // printed zero, computed zero either way
  matches_row_major,   // printed = computed with row index as mu
  matches_transposed,  // printed = computed with column index as mu
  mismatch             // printed agrees with neither orientation
};

inline const char* to_string(TableEntryStatus s) {
  switch (s) {
    case TableEntryStatus::zero_matches_both: return "zero";
    case TableEntryStatus::matches_row_major: return "row-major";
    case TableEntryStatus::matches_transposed: return "transposed";
    default: return "MISMATCH";
  }
}

namespace detail {

/// The published 4x4 tensor table, verbatim, as quadratic forms in the slot
/// variables. Grid order (1,2,3,0): the time slot is printed last.
template <class S>
std::array<std::array<Mat4<S>, 4>, 4> published_tensor_table() {
  using T = scalar_traits<S>;
  auto form = [](std::initializer_list<std::pair<std::pair<int, int>, int>>
                     coeffs) {
    // Entries are symmetric integer quadratic forms q_a q_b with coefficient c.
    Mat4<S> m;
    for (const auto& [ab, c] : coeffs) {
      const auto [a, b] = ab;
      const S half_c = T::from_rational(Rational(c, a == b ? 1 : 2));
      m(a, b) = m(a, b) + half_c;
      if (a != b) m(b, a) = m(b, a) + half_c;
    }
    return m;
  };
  std::array<std::array<Mat4<S>, 4>, 4> t;
  // row 0: [0, e1^2 - e2^2 + h1^2 - h2^2, 0, -2(e1 h2 + e2 h1)]
  t[0][1] = form({{{0, 0}, 1}, {{1, 1}, -1}, {{2, 2}, 1}, {{3, 3}, -1}});
  t[0][3] = form({{{0, 3}, -2}, {{1, 2}, -2}});
  // row 1: [-(e1^2 - e2^2 - h1^2 + h2^2), 0, 2(e1 e2 - h1 h2), 0]
  t[1][0] = form({{{0, 0}, -1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, -1}});
  t[1][2] = form({{{0, 1}, 2}, {{2, 3}, -2}});
  // row 2: [0, -2(e1 e2 - h1 h2), 0, -2(e1 h1 - e2 h2)]
  t[2][1] = form({{{0, 1}, -2}, {{2, 3}, 2}});
  t[2][3] = form({{{0, 2}, -2}, {{1, 3}, 2}});
  // row 3: [2(e1 h2 + e2 h1), 0, 2(e1 h1 - e2 h2), 0]
  t[3][0] = form({{{0, 3}, 2}, {{1, 2}, 2}});
  t[3][2] = form({{{0, 2}, 2}, {{1, 3}, -2}});
  return t;
}

}  // namespace detail

/// Compares every published tensor-table entry against the computed bilinear
/// form under both index orientations and reports where the publication
/// deviates (it is not internally consistent; see the mismatch entry).
inline std::array<std::array<TableEntryStatus, 4>, 4> audit_tensor_table() {
  using S = ExactComplex;
  constexpr std::array<int, 4> grid_index{1, 2, 3, 0};
  const auto published = detail::published_tensor_table<S>();
  std::array<std::array<TableEntryStatus, 4>, 4> status{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int mu = grid_index[i], nu = grid_index[j];
      const Mat4<S> row_major =
          bilinear_quadratic_form<S>(MatrixKind::tensor(mu, nu));
      const Mat4<S> transposed =
          bilinear_quadratic_form<S>(MatrixKind::tensor(nu, mu));
      const Mat4<S>& p = published[i][j];
      const bool rm = (p == row_major), tr = (p == transposed);
      if (rm && tr)
        status[i][j] = TableEntryStatus::zero_matches_both;
      else if (rm)
        status[i][j] = TableEntryStatus::matches_row_major;
      else if (tr)
        status[i][j] = TableEntryStatus::matches_transposed;
      else
        status[i][j] = TableEntryStatus::mismatch;
    }
  }
  return status;
}

// ---------------------------------------------------------------------------

/// Field invariants in the printed units. The exact-mode accessors return the
/// 8*pi-scaled combinations so every identity stays in the ring; the float
/// accessors divide the pi factors out numerically.
template <class S>
struct EMQuantities {
  S e_sq{}, h_sq{}, e_dot_h{};
  Vec3<S> cross_eh{};

  static EMQuantities from_fields(const Vec3<S>& e, const Vec3<S>& h) {
    EMQuantities q;
    q.e_sq = dot(e, e);
    q.h_sq = dot(h, h);
    q.e_dot_h = dot(e, h);
    q.cross_eh = cross(e, h);
    return q;
  }

  S scaled_first_invariant() const { return e_sq - h_sq; }            // 8 pi I1
  S scaled_energy_density() const { return e_sq + h_sq; }             // 8 pi U
  S scaled_pseudoscalar() const {                                     // 2 E.H
    const S two = scalar_traits<S>::one() + scalar_traits<S>::one();
    return two * e_dot_h;
  }
  /// (4 pi / c) S_k = [E x H]_k; momentum density obeys S = c^2 g.
  const Vec3<S>& scaled_poynting() const { return cross_eh; }

  double first_invariant() const { return real_of(scaled_first_invariant()) / (8 * kPi); }
  double energy_density() const { return real_of(scaled_energy_density()) / (8 * kPi); }
  double pseudoscalar() const { return real_of(e_dot_h); }
  double second_invariant() const {
    const double eh = real_of(e_dot_h);
    return eh * eh;
  }
  Vec3<double> poynting(double c) const {
    return {real_of(cross_eh[0]) * c / (4 * kPi),
            real_of(cross_eh[1]) * c / (4 * kPi),
            real_of(cross_eh[2]) * c / (4 * kPi)};
  }
  Vec3<double> momentum_density(double c) const {
    return {real_of(cross_eh[0]) / (4 * kPi * c),
            real_of(cross_eh[1]) / (4 * kPi * c),
            real_of(cross_eh[2]) / (4 * kPi * c)};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static double real_of(const S& v) {
    return scalar_traits<S>::to_complex(v).real();
  }
};

}  // namespace nfb
