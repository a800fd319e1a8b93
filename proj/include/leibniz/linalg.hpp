#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using MatrixQ = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

bool is_zero(const VectorQ& v);
bool is_zero(const MatrixQ& m);
bool mat_equal(const MatrixQ& a, const MatrixQ& b);

VectorQ unit_vector(Eigen::Index dim, Eigen::Index k);

/// Canonical reduced row-echelon form: pivots are 1, pivot columns are
/// cleared above and below, zero rows sink to the bottom.  Two matrices
/// with the same row space have identical rref.
struct RrefResult {
  MatrixQ matrix;
  int rank = 0;
  std::vector<Eigen::Index> pivot_cols;
};

RrefResult rref(const MatrixQ& m);
int rank(const MatrixQ& m);

/// Rows span the kernel {x : m*x = 0}; result is in rref.
MatrixQ kernel_basis(const MatrixQ& m);

Scalar determinant(const MatrixQ& m);
bool is_invertible(const MatrixQ& m);
MatrixQ inverse(const MatrixQ& m);  // throws std::invalid_argument if singular

/// Solves a^T * x = b treating the rows of `a` as spanning vectors; returns
/// true and fills `coords` when b lies in the row space.
bool solve_in_rowspace(const MatrixQ& a, const VectorQ& b, VectorQ& coords);

}  // namespace leibniz

#endif
