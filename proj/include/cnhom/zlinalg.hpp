#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace cnhom::zlinalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <typename Scalar>
Scalar abs_of(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : Scalar(v);
}

}  // namespace detail

/**
 * Smith normal form of an integer matrix: U * M * V = S with U, V unimodular
 * and S diagonal with positive entries d_1 | d_2 | ... | d_rank.
 * u_inv and v_inv are the exact inverses of U and V.
 */
template <typename Scalar>
struct SnfResult {
  DenseMatrix<Scalar> u, s, v;
  DenseMatrix<Scalar> u_inv, v_inv;
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    d.reserve(static_cast<std::size_t>(rank));
    for (Eigen::Index i = 0; i < rank; ++i) d.push_back(s(i, i));
    return d;
  }
};

/**
 * Computes the Smith normal form. Deterministic: the pivot is the nonzero
 * entry of minimal absolute value, ties broken by lowest row then lowest
 * column; elimination order is fixed.
 */
template <typename Derived>
SnfResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m_in) {
  using Scalar = typename Derived::Scalar;
  using Mat = DenseMatrix<Scalar>;
  using Idx = Eigen::Index;

  SnfResult<Scalar> r;
  Mat& s = r.s;
  s = m_in;
  const Idx rows = s.rows(), cols = s.cols();
  r.u = Mat::Identity(rows, rows);
  r.u_inv = Mat::Identity(rows, rows);
  r.v = Mat::Identity(cols, cols);
  r.v_inv = Mat::Identity(cols, cols);

  auto swap_rows = [&](Idx a, Idx b) {
    s.row(a).swap(s.row(b));
    r.u.row(a).swap(r.u.row(b));
    r.u_inv.col(a).swap(r.u_inv.col(b));
  };
  auto swap_cols = [&](Idx a, Idx b) {
    s.col(a).swap(s.col(b));
    r.v.col(a).swap(r.v.col(b));
    r.v_inv.row(a).swap(r.v_inv.row(b));
  };
  // row[a] -= q * row[b]
  auto row_sub = [&](Idx a, Idx b, const Scalar& q) {
    s.row(a) -= q * s.row(b);
    r.u.row(a) -= q * r.u.row(b);
    r.u_inv.col(b) += q * r.u_inv.col(a);
  };
  // col[a] -= q * col[b]
  auto col_sub = [&](Idx a, Idx b, const Scalar& q) {
    s.col(a) -= q * s.col(b);
    r.v.col(a) -= q * r.v.col(b);
    r.v_inv.row(b) += q * r.v_inv.row(a);
  };
  auto negate_row = [&](Idx a) {
    s.row(a) = -s.row(a);
    r.u.row(a) = -r.u.row(a);
    r.u_inv.col(a) = -r.u_inv.col(a);
  };

  Idx t = 0;
  while (t < rows && t < cols) {
    // Pivot: minimal absolute value in the trailing block, lowest row then column.
    Idx pr = -1, pc = -1;
    Scalar best(0);
    for (Idx i = t; i < rows; ++i) {
      for (Idx j = t; j < cols; ++j) {
        if (s(i, j) == Scalar(0)) continue;
        Scalar a = detail::abs_of(s(i, j));
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    if (pr != t) swap_rows(t, pr);
    if (pc != t) swap_cols(t, pc);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t.
      for (Idx i = t + 1; i < rows; ++i) {
        if (s(i, t) == Scalar(0)) continue;
        Scalar q = s(i, t) / s(t, t);
        if (q != Scalar(0)) row_sub(i, t, q);
        if (s(i, t) != Scalar(0)) {
          // Remainder is strictly smaller than the pivot: promote it.
          swap_rows(t, i);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // Clear row t.
      for (Idx j = t + 1; j < cols; ++j) {
        if (s(t, j) == Scalar(0)) continue;
        Scalar q = s(t, j) / s(t, t);
        if (q != Scalar(0)) col_sub(j, t, q);
        if (s(t, j) != Scalar(0)) {
          swap_cols(t, j);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // Pivot must divide every entry of the trailing block.
      for (Idx i = t + 1; i < rows && !dirty; ++i) {
        for (Idx j = t + 1; j < cols && !dirty; ++j) {
          if (s(i, j) % s(t, t) != Scalar(0)) {
            col_sub(t, j, Scalar(-1));  // col t += col j, then re-clear
            dirty = true;
          }
        }
      }
    }
    if (s(t, t) < Scalar(0)) negate_row(t);
    ++t;
  }
  r.rank = t;
  return r;
}

/**
 * Basis of the integer kernel of M, returned as the columns of a matrix.
 * The basis spans a saturated submodule: every integer kernel vector is an
 * integer combination of the columns.
 */
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  auto f = snf(m);
  return f.v.rightCols(m.cols() - f.rank);
}

enum class SolveStatus {
  integral,      // integer solution returned
  rational_only, // a rational solution exists but no integer one
  inconsistent   // no solution even over the rationals
};

template <typename Scalar>
struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::optional<DenseVector<Scalar>> x;
};

namespace detail {

template <typename Scalar, typename DerivedB>
SolveResult<Scalar> solve_with_snf(const SnfResult<Scalar>& f, const Eigen::MatrixBase<DerivedB>& b) {
  using Idx = Eigen::Index;
  const Idx rows = f.u.rows(), cols = f.v.rows();
  if (b.size() != rows) throw std::invalid_argument("solve_integer: dimension mismatch");
  DenseVector<Scalar> c = f.u * b;
  for (Idx i = f.rank; i < rows; ++i)
    if (c(i) != Scalar(0)) return {SolveStatus::inconsistent, std::nullopt};
  DenseVector<Scalar> y = DenseVector<Scalar>::Zero(cols);
  for (Idx i = 0; i < f.rank; ++i) {
    if (c(i) % f.s(i, i) != Scalar(0)) return {SolveStatus::rational_only, std::nullopt};
    y(i) = c(i) / f.s(i, i);
  }
  return {SolveStatus::integral, DenseVector<Scalar>(f.v * y)};
}

}  // namespace detail

/**
 * Solves M * x = b over the integers. Absent results distinguish a rational
 * solution that fails to be integral from no rational solution at all.
 */
template <typename DerivedM, typename DerivedB>
SolveResult<typename DerivedM::Scalar> solve_integer(const Eigen::MatrixBase<DerivedM>& m,
                                                     const Eigen::MatrixBase<DerivedB>& b) {
  return detail::solve_with_snf(snf(m), b);
}

/** Isomorphism type of a finitely generated abelian group. */
template <typename Scalar>
struct AbelianPresentation {
  Eigen::Index free_rank = 0;
  std::vector<Scalar> invariant_factors;  // each > 1, each dividing the next

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  bool operator==(const AbelianPresentation&) const = default;
};

/**
 * Presentation of (span of kernel columns) / (span of image columns),
 * with generators for every free and torsion summand expressed in the
 * ambient coordinates of the kernel.
 */
template <typename Scalar>
struct QuotientPresentation {
  AbelianPresentation<Scalar> presentation;
  DenseMatrix<Scalar> free_generators;  // ambient column per free summand
  std::vector<std::pair<DenseVector<Scalar>, Scalar>> torsion_generators;  // (ambient column, order)

  // Data for expressing further vectors in quotient coordinates.
  DenseMatrix<Scalar> kernel;     // the kernel basis K, one column per generator
  SnfResult<Scalar> kernel_snf;   // reused for solving K * y = c
  DenseMatrix<Scalar> transform;  // U of snf(relations): kernel coords -> summand coords
  std::vector<Scalar> diagonal;   // invariant diagonal of the relation matrix
  Eigen::Index rank = 0;          // rank of the relation matrix
};

/**
 * Quotient of the lattice spanned by the kernel basis by the lattice spanned
 * by the image columns. Every image column must be an integer combination of
 * kernel columns; violations indicate an inconsistent chain complex upstream
 * and throw std::logic_error.
 */
template <typename DerivedK, typename DerivedB>
QuotientPresentation<typename DerivedK::Scalar> quotient_presentation(
    const Eigen::MatrixBase<DerivedK>& kernel, const Eigen::MatrixBase<DerivedB>& image) {
  using Scalar = typename DerivedK::Scalar;
  using Idx = Eigen::Index;

  QuotientPresentation<Scalar> q;
  q.kernel = kernel;
  q.kernel_snf = snf(kernel);
  const Idx k = kernel.cols();

  DenseMatrix<Scalar> relations(k, image.cols());
  for (Idx j = 0; j < image.cols(); ++j) {
    auto sr = detail::solve_with_snf(q.kernel_snf, image.col(j));
    if (!sr.x) throw std::logic_error("quotient_presentation: image generator outside the kernel span");
    relations.col(j) = *sr.x;
  }

  auto f = snf(relations);
  q.transform = f.u;
  q.diagonal = f.diagonal();
  q.rank = f.rank;
  q.presentation.free_rank = k - f.rank;
  for (const Scalar& d : q.diagonal)
    if (d > Scalar(1)) q.presentation.invariant_factors.push_back(d);

  // Summand i of Z^k / relations is generated by column i of U^{-1}.
  q.free_generators = q.kernel * f.u_inv.rightCols(k - f.rank);
  for (Idx i = 0; i < f.rank; ++i) {
    if (f.s(i, i) > Scalar(1))
      q.torsion_generators.emplace_back(DenseVector<Scalar>(q.kernel * f.u_inv.col(i)), f.s(i, i));
  }
  return q;
}

/** Coordinates of a vector's class in a quotient presentation. */
template <typename Scalar>
struct GroupCoordinates {
  std::vector<Scalar> free;     // one per free summand
  std::vector<Scalar> torsion;  // residue in [0, d) per invariant factor d > 1

  bool all_zero() const {
    for (const Scalar& v : free)
      if (v != Scalar(0)) return false;
    for (const Scalar& v : torsion)
      if (v != Scalar(0)) return false;
    return true;
  }
  bool operator==(const GroupCoordinates&) const = default;
};

template <typename Scalar, typename Derived>
GroupCoordinates<Scalar> group_coordinates(const QuotientPresentation<Scalar>& q,
                                           const Eigen::MatrixBase<Derived>& ambient) {
  auto sr = detail::solve_with_snf(q.kernel_snf, ambient);
  if (!sr.x) throw std::invalid_argument("group_coordinates: vector outside the kernel span");
  DenseVector<Scalar> z = q.transform * (*sr.x);
  GroupCoordinates<Scalar> g;
  for (Eigen::Index i = q.rank; i < z.size(); ++i) g.free.push_back(z(i));
  for (Eigen::Index i = 0; i < q.rank; ++i) {
    const Scalar& d = q.diagonal[static_cast<std::size_t>(i)];
    if (d > Scalar(1)) {
      Scalar m = z(i) % d;
      if (m < Scalar(0)) m += d;
      g.torsion.push_back(m);
    }
  }
  return g;
}

/** Rank over the rationals (count of nonzero Smith diagonal entries). */
template <typename Derived>
Eigen::Index rational_rank(const Eigen::MatrixBase<Derived>& m) {
  return snf(m).rank;
}

/** Exact determinant by fraction-free (Bareiss) elimination. */
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m_in) {
  using Scalar = typename Derived::Scalar;
  using Idx = Eigen::Index;
  if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Idx n = m_in.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> a = m_in;
  Scalar sign(1), prev(1);
  for (Idx k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Idx swap = -1;
      for (Idx i = k + 1; i < n; ++i)
        if (a(i, k) != Scalar(0)) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Idx i = k + 1; i < n; ++i)
      for (Idx j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact division
    prev = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

}  // namespace cnhom::zlinalg
