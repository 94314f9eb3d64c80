#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "frobmark/cyclo.hpp"
#include "frobmark/error.hpp"

namespace frobmark {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using CycloMatrix = DenseMatrix<Cyclo>;
using RatMatrix = DenseMatrix<Rat>;

/// Division-free determinant by Laplace expansion over column subsets.
///
/// minor[S] is the determinant of rows 0..|S|-1 restricted to the columns in S,
/// built by expanding along the last row; all 2^n minors are cached, so this is
/// for small n only. `entry(i, j)` yields matrix entries; any commutative ring
/// scalar with `is_zero()` works (Rat, Cyclo, MultiPoly).
template <typename Scalar, typename Entry>
Scalar laplace_subset_det(int n, Entry&& entry, const Scalar& one) {
  if (n > 20) throw Error(ErrorKind::SizeLimit, "subset determinant limited to 20x20");
  const Scalar zero = one - one;
  std::vector<Scalar> minors(std::size_t{1} << n, zero);
  minors[0] = one;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int row = std::popcount(s) - 1;
    Scalar acc = zero;
    int position = 0;
    for (int j = 0; j < n; ++j) {
      if ((s & (1U << j)) == 0) continue;
      const auto& e = entry(row, j);
      const auto& sub = minors[s & ~(1U << j)];
      if (!e.is_zero() && !sub.is_zero()) {
        if ((row + position) % 2 == 0) {
          acc += e * sub;
        } else {
          acc -= e * sub;
        }
      }
      ++position;
    }
    minors[s] = std::move(acc);
  }
  return minors.back();
}

template <typename Derived>
typename Derived::Scalar det_subsets(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.cols() != m.rows()) throw Error(ErrorKind::DimensionError, "determinant of a non-square matrix");
  const DenseMatrix<Scalar> a = m;
  return laplace_subset_det<Scalar>(static_cast<int>(a.rows()),
                                    [&](int i, int j) -> const Scalar& { return a(i, j); }, Scalar(1));
}

/// Determinant by Gaussian elimination; the scalar must be a field.
template <typename Derived>
typename Derived::Scalar det_elimination(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const auto n = input.rows();
  if (input.cols() != n) throw Error(ErrorKind::DimensionError, "determinant of a non-square matrix");
  DenseMatrix<Scalar> a = input;
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && a(pivot, c) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    const Scalar p = a(c, c);
    det *= p;
    const Scalar pinv = Scalar(1) / p;
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c) == Scalar(0)) continue;
      const Scalar f = a(r, c) * pinv;
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

/// Exact product of two dense matrices. Eigen's product kernels assume
/// POD-like scalars, so exact types go through this plain triple loop.
template <typename Scalar>
DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionError, "matrix product shape mismatch");
  DenseMatrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename Scalar>
Scalar trace(const DenseMatrix<Scalar>& a) {
  Scalar acc(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

template <typename Scalar>
DenseMatrix<Scalar> identity(Eigen::Index n) {
  DenseMatrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = Scalar(i == j ? 1 : 0);
  }
  return out;
}

}  // namespace frobmark
