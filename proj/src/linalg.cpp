#include "leibniz/linalg.hpp"

#include <stdexcept>

namespace leibniz {

bool is_zero(const VectorQ& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return false;
  return true;
}

bool is_zero(const MatrixQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool mat_equal(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

VectorQ unit_vector(Eigen::Index dim, Eigen::Index k) {
  VectorQ v = VectorQ::Zero(dim);
  v[k] = Scalar(1);
  return v;
}

RrefResult rref(const MatrixQ& m) {
  RrefResult res;
  res.matrix = m;
  MatrixQ& a = res.matrix;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = static_cast<int>(r);
  return res;
}

int rank(const MatrixQ& m) { return rref(m).rank; }

MatrixQ kernel_basis(const MatrixQ& m) {
  const Eigen::Index n = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  MatrixQ out = MatrixQ::Zero(static_cast<Eigen::Index>(free_cols.size()), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    Eigen::Index fc = free_cols[k];
    out(k, fc) = Scalar(1);
    for (int p = 0; p < rr.rank; ++p)
      out(k, rr.pivot_cols[p]) = -rr.matrix(p, fc);
  }
  return rref(out).matrix;  // canonical form
}

Scalar determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
  MatrixQ a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = Scalar(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

bool is_invertible(const MatrixQ& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
  const Eigen::Index n = m.rows();
  MatrixQ aug(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = MatrixQ::Identity(n, n);
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_cols[n - 1] >= n)
    throw std::invalid_argument("inverse: singular matrix");
  return rr.matrix.block(0, n, n, n);
}

bool solve_in_rowspace(const MatrixQ& a, const VectorQ& b, VectorQ& coords) {
  // Row-reduce [a | I] so each surviving row is tracked as a combination of
  // the original rows, then match b against the reduced rows.
  const Eigen::Index k = a.rows(), n = a.cols();
  MatrixQ aug(k, n + k);
  aug.block(0, 0, k, n) = a;
  aug.block(0, n, k, k) = MatrixQ::Identity(k, k);

  // Eliminate using only the first n columns as pivot candidates.
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < n && r < k; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < k; ++i)
      if (!aug(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) aug.row(piv).swap(aug.row(r));
    Scalar inv = Scalar(1) / aug(r, c);
    aug.row(r) *= inv;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      Scalar f = aug(i, c);
      aug.row(i) -= f * aug.row(r);
    }
    pivots.push_back(c);
    ++r;
  }

  VectorQ residual = b;
  VectorQ combo = VectorQ::Zero(k);
  for (Eigen::Index p = 0; p < r; ++p) {
    Scalar coeff = residual[pivots[p]];
    if (coeff.is_zero()) continue;
    for (Eigen::Index j = 0; j < n; ++j) residual[j] -= coeff * aug(p, j);
    for (Eigen::Index j = 0; j < k; ++j) combo[j] += coeff * aug(p, n + j);
  }
  if (!is_zero(residual)) return false;
  coords = combo;
  return true;
}

}  // namespace leibniz
