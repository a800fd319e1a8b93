#include "leibniz/subspace.hpp"

#include <stdexcept>

namespace leibniz {

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace operation: ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::zero(Eigen::Index ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = MatrixQ(0, ambient_dim);
  return s;
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = MatrixQ::Identity(ambient_dim, ambient_dim);
  return s;
}

Subspace Subspace::span(Eigen::Index ambient_dim, const MatrixQ& vectors) {
  if (vectors.cols() != ambient_dim && vectors.rows() != 0)
    throw std::invalid_argument("span: vector length != ambient dimension");
  RrefResult rr = rref(vectors);
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = rr.matrix.topRows(rr.rank);
  return s;
}

Subspace Subspace::span(const std::vector<VectorQ>& vectors, Eigen::Index ambient_dim) {
  MatrixQ m(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != ambient_dim)
      throw std::invalid_argument("span: vector length != ambient dimension");
    m.row(k) = vectors[k].transpose();
  }
  return span(ambient_dim, m);
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("contains: vector length != ambient dimension");
  // Reduce v against the rref basis rows.
  VectorQ r = v;
  for (Eigen::Index row = 0; row < basis_.rows(); ++row) {
    Eigen::Index pc = 0;
    while (pc < ambient_dim_ && basis_(row, pc).is_zero()) ++pc;
    if (pc == ambient_dim_) continue;
    Scalar f = r[pc];
    if (f.is_zero()) continue;
    for (Eigen::Index j = 0; j < ambient_dim_; ++j) r[j] -= f * basis_(row, j);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(*this, other);
  for (Eigen::Index k = 0; k < other.basis_.rows(); ++k)
    if (!contains(other.basis_vector(k))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  MatrixQ stacked(a.basis_.rows() + b.basis_.rows(), a.ambient_dim_);
  stacked << a.basis_, b.basis_;
  return Subspace::span(a.ambient_dim_, stacked);
}

Subspace Subspace::intersect(const Subspace& b) const {
  check_same_ambient(*this, b);
  const Eigen::Index da = basis_.rows(), db = b.basis_.rows(), n = ambient_dim_;
  if (da == 0 || db == 0) return Subspace::zero(n);
  // x in A∩B  <=>  x = A^T u = B^T v; kernel of [A^T  -B^T] gives (u, v).
  MatrixQ c(n, da + db);
  c.block(0, 0, n, da) = basis_.transpose();
  c.block(0, da, n, db) = -b.basis_.transpose();
  MatrixQ ker = kernel_basis(c);  // rows (u, v)
  MatrixQ vecs(ker.rows(), n);
  for (Eigen::Index k = 0; k < ker.rows(); ++k) {
    VectorQ x = VectorQ::Zero(n);
    for (Eigen::Index r = 0; r < da; ++r) {
      Scalar u = ker(k, r);
      if (u.is_zero()) continue;
      for (Eigen::Index j = 0; j < n; ++j) x[j] += u * basis_(r, j);
    }
    vecs.row(k) = x.transpose();
  }
  return Subspace::span(n, vecs);
}

MatrixQ Subspace::complement_in(const Subspace& inner) const {
  check_same_ambient(*this, inner);
  if (!contains(inner))
    throw std::invalid_argument("complement_in: inner subspace not contained");
  MatrixQ reps(dim() - inner.dim(), ambient_dim_);
  Subspace acc = inner;
  Eigen::Index out = 0;
  for (Eigen::Index k = 0; k < basis_.rows(); ++k) {
    VectorQ v = basis_vector(k);
    if (acc.contains(v)) continue;
    reps.row(out++) = v.transpose();
    MatrixQ ext(acc.basis().rows() + 1, ambient_dim_);
    ext << acc.basis(), v.transpose();
    acc = Subspace::span(ambient_dim_, ext);
  }
  if (out != reps.rows()) throw std::logic_error("complement_in: extension failed");
  return reps;
}

}  // namespace leibniz
