#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Matrices are plain Eigen dense matrices whose scalar is a big integer. The
// algorithms are templates on the scalar so they also run on fixed-width
// integers in tests.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "plumb/error.hpp"

namespace plumb {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;

namespace detail {
template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}
}  // namespace detail

template <typename Scalar>
Scalar gcd(Scalar a, Scalar b) {
  a = detail::abs_value(a);
  b = detail::abs_value(b);
  while (b != Scalar(0)) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <typename Scalar>
Scalar lcm(const Scalar& a, const Scalar& b) {
  if (a == Scalar(0) || b == Scalar(0)) return Scalar(0);
  return detail::abs_value(Scalar(a / gcd(a, b) * b));
}

/// U * A * V == D with U, V unimodular and d_1 | d_2 | ... on the diagonal
/// of D (all non-negative). Row i of V gives the coordinates of basis vector
/// e_i in the diagonal basis, whose vectors are the rows of `V_inverse`.
template <typename Scalar>
struct SnfResult {
  Matrix<Scalar> D;
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Matrix<Scalar> V_inverse;

  /// Diagonal entries d_1..d_min(rows, cols).
  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const auto k = std::min(D.rows(), D.cols());
    out.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) out.push_back(D(i, i));
    return out;
  }
};

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> I = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = Scalar(1);
  return I;
}

/// Smith normal form with smallest-absolute-value pivoting.
template <typename Derived>
SnfResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index rows = input.rows();
  const Index cols = input.cols();

  SnfResult<Scalar> r{input, identity<Scalar>(rows), identity<Scalar>(cols),
                      identity<Scalar>(cols)};
  auto& A = r.D;

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    A.row(i).swap(A.row(j));
    r.U.row(i).swap(r.U.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    A.col(i).swap(A.col(j));
    r.V.col(i).swap(r.V.col(j));
    r.V_inverse.row(i).swap(r.V_inverse.row(j));
  };
  // row_i -= q * row_t
  auto row_axpy = [&](Index i, Index t, const Scalar& q) {
    for (Index c = 0; c < cols; ++c) A(i, c) -= q * A(t, c);
    for (Index c = 0; c < rows; ++c) r.U(i, c) -= q * r.U(t, c);
  };
  // col_j -= q * col_t
  auto col_axpy = [&](Index j, Index t, const Scalar& q) {
    for (Index c = 0; c < rows; ++c) A(c, j) -= q * A(c, t);
    for (Index c = 0; c < cols; ++c) r.V(c, j) -= q * r.V(c, t);
    for (Index c = 0; c < cols; ++c) r.V_inverse(t, c) += q * r.V_inverse(j, c);
  };

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      Index pi = -1, pj = -1;
      Scalar best(0);
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (A(i, j) == Scalar(0)) continue;
          Scalar a = detail::abs_value(A(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return r;  // remaining block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (A(i, t) == Scalar(0)) continue;
        row_axpy(i, t, Scalar(A(i, t) / A(t, t)));
        if (A(i, t) != Scalar(0)) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (A(t, j) == Scalar(0)) continue;
        col_axpy(j, t, Scalar(A(t, j) / A(t, t)));
        if (A(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (A(i, j) % A(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(t, bad, Scalar(-1));
    }
    if (A(t, t) < Scalar(0)) {
      A.row(t) *= Scalar(-1);
      r.U.row(t) *= Scalar(-1);
    }
  }
  return r;
}

/// Fraction-free (Bareiss) determinant.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (input.rows() != input.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const Index n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> M = input;
  Scalar sign(1), prev(1);
  for (Index k = 0; k < n - 1; ++k) {
    if (M(k, k) == Scalar(0)) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (M(i, k) != Scalar(0)) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      M.row(k).swap(M.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

/// Coefficients of det(xI - A), lowest degree first (Faddeev-LeVerrier; every
/// division is exact for integer matrices).
template <typename Derived>
std::vector<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (input.rows() != input.cols()) throw Error(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
  const Index n = input.rows();
  const Matrix<Scalar> A = input;
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = Scalar(0);
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> M = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Index k = 1; k <= n; ++k) {
    // hand-rolled: Eigen's operator* trips a Boost trait on matrix operands
    Matrix<Scalar> AM = Matrix<Scalar>::Constant(n, n, Scalar(0));
    for (Index i = 0; i < n; ++i)
      for (Index l = 0; l < n; ++l)
        if (A(i, l) != Scalar(0))
          for (Index j = 0; j < n; ++j) AM(i, j) += A(i, l) * M(l, j);
    M = std::move(AM);
    for (Index i = 0; i < n; ++i) M(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    Scalar trace(0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) trace += A(i, j) * M(j, i);
    c[static_cast<std::size_t>(n - k)] = -trace / Scalar(k);
  }
  return c;
}

struct Signature {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric integer matrix, read off its characteristic
/// polynomial by Descartes' rule (exact because the spectrum is real).
Signature signature(const IntMatrix& M);

/// Exact test of m == sum_i d_i / b_i.
bool rational_sum_eq(const BigInt& m, std::span<const BigInt> b, std::span<const BigInt> d);

}  // namespace plumb
