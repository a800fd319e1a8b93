#ifndef LEIBNIZ_SUBSPACE_HPP
#define LEIBNIZ_SUBSPACE_HPP

#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Subspace of Q(i)^n, stored as a basis in canonical reduced row-echelon
/// form (one basis vector per row).  Canonicity makes equality of subspaces
/// plain matrix equality.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(Eigen::Index ambient_dim);
  static Subspace full(Eigen::Index ambient_dim);
  /// Span of the rows of `vectors` (rows may be dependent or zero).
  static Subspace span(Eigen::Index ambient_dim, const MatrixQ& vectors);
  static Subspace span(const std::vector<VectorQ>& vectors, Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const MatrixQ& basis() const { return basis_; }
  VectorQ basis_vector(Eigen::Index k) const { return basis_.row(k).transpose(); }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  Subspace intersect(const Subspace& b) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && mat_equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Greedy extension of `inner` to a basis of *this using rows of *this;
  /// returns the complement representatives (dim() - inner.dim() rows).
  MatrixQ complement_in(const Subspace& inner) const;

private:
  Eigen::Index ambient_dim_ = 0;
  MatrixQ basis_;  // rref, no zero rows
};

}  // namespace leibniz

#endif
