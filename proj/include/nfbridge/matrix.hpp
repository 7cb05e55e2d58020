#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "nfbridge/scalar.hpp"

namespace nfb {

template <class S>
struct Vec4 {
  std::array<S, 4> c{};

  S& operator[](std::size_t k) { return c[k]; }
  const S& operator[](std::size_t k) const { return c[k]; }

  friend bool operator==(const Vec4& a, const Vec4& b) { return a.c == b.c; }
  friend Vec4 operator+(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (std::size_t k = 0; k < 4; ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend Vec4 operator-(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (std::size_t k = 0; k < 4; ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend Vec4 operator*(const S& s, const Vec4& v) {
    Vec4 r;
    for (std::size_t k = 0; k < 4; ++k) r[k] = s * v[k];
    return r;
  }
  bool is_zero() const {
    for (const S& x : c)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }
};

/// 2x2 matrix; only used to spell out the Pauli blocks.
template <class S>
struct Mat2 {
  std::array<S, 4> e{};  // row-major

  S& operator()(std::size_t r, std::size_t c) { return e[2 * r + c]; }
  const S& operator()(std::size_t r, std::size_t c) const {
    return e[2 * r + c];
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        S acc = a(i, 0) * b(0, j);
        acc += a(i, 1) * b(1, j);
        r(i, j) = acc;
      }
    return r;
  }
};

template <class S>
struct Mat4 {
  std::array<S, 16> e{};  // row-major

  S& operator()(std::size_t r, std::size_t c) { return e[4 * r + c]; }
  const S& operator()(std::size_t r, std::size_t c) const {
    return e[4 * r + c];
  }

  static Mat4 zero() { return {}; }
  static Mat4 identity() {
    Mat4 m;
    for (std::size_t k = 0; k < 4; ++k) m(k, k) = scalar_traits<S>::one();
    return m;
  }
  static Mat4 diag(const S& a, const S& b, const S& c, const S& d) {
    Mat4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
  }
  /// Assembles [[A,B],[C,D]] from 2x2 blocks.
  static Mat4 from_blocks(const Mat2<S>& a, const Mat2<S>& b, const Mat2<S>& c,
                          const Mat2<S>& d) {
    Mat4 m;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        m(i, j) = a(i, j);
        m(i, j + 2) = b(i, j);
        m(i + 2, j) = c(i, j);
        m(i + 2, j + 2) = d(i, j);
      }
    return m;
  }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  Mat4 operator-() const {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = -e[k];
    return r;
  }
  friend Mat4 operator*(const S& s, const Mat4& m) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e[k] = s * m.e[k];
    return r;
  }
  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        S acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < 4; ++k) acc += a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }
  friend Vec4<S> operator*(const Mat4& m, const Vec4<S>& v) {
    Vec4<S> r;
    for (std::size_t i = 0; i < 4; ++i) {
      S acc = m(i, 0) * v[0];
      for (std::size_t k = 1; k < 4; ++k) acc += m(i, k) * v[k];
      r[i] = acc;
    }
    return r;
  }
  /// Row-vector action: (v^T M)_j.
  friend Vec4<S> operator*(const Vec4<S>& v, const Mat4& m) {
    Vec4<S> r;
    for (std::size_t j = 0; j < 4; ++j) {
      S acc = v[0] * m(0, j);
      for (std::size_t k = 1; k < 4; ++k) acc += v[k] * m(k, j);
      r[j] = acc;
    }
    return r;
  }

  Mat4 adjoint() const {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        r(i, j) = scalar_traits<S>::conj((*this)(j, i));
    return r;
  }
  Mat4 transpose() const {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  bool is_zero() const {
    for (const S& x : e)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat4& m) {
    for (std::size_t i = 0; i < 4; ++i) {
      os << "[ ";
      for (std::size_t j = 0; j < 4; ++j) os << m(i, j) << " ";
      os << "]\n";
    }
    return os;
  }
};

/// Exact reduced row echelon form (in place); returns the rank. Requires a
/// field scalar (ExactComplex or complex<double>); float pivots fall back to
/// the traits' negligibility threshold.
template <class S>
std::size_t rref_in_place(Mat4<S>& m) {
  using T = scalar_traits<S>;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 4 && rank < 4; ++col) {
    std::size_t pivot = rank;
    while (pivot < 4 && T::negligible(m(pivot, col))) ++pivot;
    if (pivot == 4) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < 4; ++j) std::swap(m(pivot, j), m(rank, j));
    const S inv = T::one() / m(rank, col);
    for (std::size_t j = 0; j < 4; ++j) m(rank, j) = inv * m(rank, j);
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == rank || T::negligible(m(i, col))) continue;
      const S f = m(i, col);
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Null-space basis of a 4x4 matrix, exact in exact mode.
template <class S>
std::vector<Vec4<S>> kernel(Mat4<S> m) {
  using T = scalar_traits<S>;
  const std::size_t rank = rref_in_place(m);
  std::array<int, 4> pivot_col_of_row{-1, -1, -1, -1};
  std::array<bool, 4> is_pivot_col{};
  {
    std::size_t row = 0;
    for (std::size_t col = 0; col < 4 && row < rank; ++col) {
      if (!T::negligible(m(row, col))) {
        pivot_col_of_row[row] = static_cast<int>(col);
        is_pivot_col[col] = true;
        ++row;
      }
    }
  }
  std::vector<Vec4<S>> basis;
  for (std::size_t free_col = 0; free_col < 4; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    Vec4<S> v;
    v[free_col] = T::one();
    for (std::size_t row = 0; row < rank; ++row) {
      const auto pc = static_cast<std::size_t>(pivot_col_of_row[row]);
      v[pc] = -m(row, free_col);
    }
    basis.push_back(v);
  }
  return basis;
}

template <class S>
S dot_row_col(const Vec4<S>& row, const Vec4<S>& col) {
  S acc = row[0] * col[0];
  for (std::size_t k = 1; k < 4; ++k) acc += row[k] * col[k];
  return acc;
}

}  // namespace nfb
