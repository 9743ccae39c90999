#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "chipfire/integer.hpp"
#include "chipfire/types.hpp"

namespace chipfire {

/// Column-style Hermite decomposition A * V = H, V unimodular, H lower
/// echelon: pivot k sits at (pivot_rows[k], k), is positive, and every entry
/// left of it in its row lies in [0, pivot). Columns rank..n-1 of H are zero
/// and the matching columns of V span the integer kernel of A.
template <typename Scalar>
struct HermiteDecomposition {
  MatrixX<Scalar> H;
  MatrixX<Scalar> V;
  std::vector<Index> pivot_rows;

  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

namespace detail {

// Replace columns (p, j) of m by (x*cp + y*cj, s*cp + t*cj).
template <typename Scalar>
void combine_columns(MatrixX<Scalar>& m, Index p, Index j, Scalar x, Scalar y, Scalar s, Scalar t) {
  for (Index r = 0; r < m.rows(); ++r) {
    const Scalar a = m(r, p), b = m(r, j);
    m(r, p) = checked_add(checked_mul(x, a), checked_mul(y, b));
    m(r, j) = checked_add(checked_mul(s, a), checked_mul(t, b));
  }
}

// col_dst -= factor * col_src
template <typename Scalar>
void axpy_column(MatrixX<Scalar>& m, Index dst, Index src, Scalar factor) {
  if (factor == Scalar(0)) return;
  for (Index r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(factor, m(r, src)));
}

template <typename Scalar>
void axpy_row(MatrixX<Scalar>& m, Index dst, Index src, Scalar factor) {
  if (factor == Scalar(0)) return;
  for (Index c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(factor, m(src, c)));
}

}  // namespace detail

template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_column_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  HermiteDecomposition<Scalar> out;
  out.H = a;
  const Index n = out.H.cols();
  out.V = MatrixX<Scalar>::Identity(n, n);
  auto& H = out.H;
  auto& V = out.V;

  Index p = 0;
  for (Index r = 0; r < H.rows() && p < n; ++r) {
    for (Index j = p + 1; j < n; ++j) {
      if (H(r, j) == Scalar(0)) continue;
      const Scalar x0 = H(r, p), y0 = H(r, j);
      auto [g, x, y] = extended_gcd(x0, y0);
      // [x  -y0/g; y  x0/g] has determinant 1
      const Scalar s = -(y0 / g), t = x0 / g;
      detail::combine_columns(H, p, j, x, y, s, t);
      detail::combine_columns(V, p, j, x, y, s, t);
    }
    if (H(r, p) == Scalar(0)) continue;
    if (H(r, p) < Scalar(0)) {
      H.col(p) = -H.col(p);
      V.col(p) = -V.col(p);
    }
    for (Index k = 0; k < p; ++k) {
      const Scalar f = floor_div(H(r, k), H(r, p));
      detail::axpy_column(H, k, p, f);
      detail::axpy_column(V, k, p, f);
    }
    out.pivot_rows.push_back(r);
    ++p;
  }
  return out;
}

/// One integer solution of A x = b (free coordinates set to zero), or nullopt
/// when the system has no integer solution.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_integer(const HermiteDecomposition<Scalar>& hd, const VectorX<Scalar>& b) {
  const auto& H = hd.H;
  if (b.size() != H.rows()) return std::nullopt;
  VectorX<Scalar> y = VectorX<Scalar>::Zero(H.cols());
  for (Index k = 0; k < hd.rank(); ++k) {
    const Index r = hd.pivot_rows[static_cast<std::size_t>(k)];
    Scalar rest = b(r);
    for (Index j = 0; j < k; ++j) rest = checked_sub(rest, checked_mul(H(r, j), y(j)));
    if (rest % H(r, k) != Scalar(0)) return std::nullopt;
    y(k) = rest / H(r, k);
  }
  for (Index r = 0; r < H.rows(); ++r) {
    Scalar acc = 0;
    for (Index j = 0; j < hd.rank(); ++j) acc = checked_add(acc, checked_mul(H(r, j), y(j)));
    if (acc != b(r)) return std::nullopt;
  }
  VectorX<Scalar> x = VectorX<Scalar>::Zero(H.cols());
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = 0; j < hd.rank(); ++j) x(i) = checked_add(x(i), checked_mul(hd.V(i, j), y(j)));
  }
  return x;
}

/// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_r followed by
/// zeros, min(rows, cols) entries in total.
template <typename Derived>
std::vector<typename Derived::Scalar> smith_diagonal(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  const Index rows = m.rows(), cols = m.cols();
  const Index steps = std::min(rows, cols);
  std::vector<Scalar> diag;

  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero magnitude in the trailing block becomes the pivot
      Index pr = -1, pc = -1;
      for (Index i = t; i < rows; ++i) {
        for (Index j = t; j < cols; ++j) {
          if (m(i, j) != Scalar(0) && (pr < 0 || abs_value(m(i, j)) < abs_value(m(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) {
        for (Index k = t; k < steps; ++k) diag.push_back(Scalar(0));
        return diag;
      }
      m.row(t).swap(m.row(pr));
      m.col(t).swap(m.col(pc));

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        detail::axpy_row(m, i, t, m(i, t) / m(t, t));
        if (m(i, t) != Scalar(0)) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        detail::axpy_column(m, j, t, m(t, j) / m(t, t));
        if (m(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the block
      bool divides = true;
      for (Index i = t + 1; i < rows && divides; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != Scalar(0)) {
            for (Index c = 0; c < cols; ++c) m(t, c) = checked_add(m(t, c), m(i, c));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs_value(m(t, t)));
  }
  return diag;
}

}  // namespace chipfire
