#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// Finite-dimensional algebra law given by structure constants: a sparse
/// table (i,j) -> coordinate vector of [e_i, e_j].  Absent entries are zero
/// products.  Indices are 0-based internally; basis labels carry the
/// human-facing names (e1..en, X0..Y, ...).
class AlgebraLaw {
public:
  AlgebraLaw() = default;
  explicit AlgebraLaw(Eigen::Index dim);
  AlgebraLaw(Eigen::Index dim, std::vector<std::string> labels);

  Eigen::Index dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int label_index(const std::string& name) const;  // -1 if unknown

  /// Sets [e_i, e_j] = value (value of length dim; zero vectors are dropped).
  void set_product(Eigen::Index i, Eigen::Index j, const VectorQ& value);
  void add_to_product(Eigen::Index i, Eigen::Index j, Eigen::Index target, const Scalar& c);
  /// [e_i, e_j] as a dense vector (zero if absent).
  VectorQ product(Eigen::Index i, Eigen::Index j) const;

  const std::map<std::pair<Eigen::Index, Eigen::Index>, VectorQ>& table() const {
    return table_;
  }

  bool leibniz_verified() const { return leibniz_verified_; }
  void mark_leibniz_verified(bool v = true) { leibniz_verified_ = v; }

  friend bool operator==(const AlgebraLaw& a, const AlgebraLaw& b);
  friend bool operator!=(const AlgebraLaw& a, const AlgebraLaw& b) { return !(a == b); }

private:
  Eigen::Index dim_ = 0;
  std::vector<std::string> labels_;
  std::map<std::pair<Eigen::Index, Eigen::Index>, VectorQ> table_;
  bool leibniz_verified_ = false;
};

std::vector<std::string> default_labels(Eigen::Index dim);  // e1..en

/// Bilinear extension of the structure-constant table.
VectorQ bracket(const AlgebraLaw& law, const VectorQ& x, const VectorQ& y);

/// Residual [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j].
VectorQ leibniz_residual(const AlgebraLaw& law, Eigen::Index i, Eigen::Index j,
                         Eigen::Index k);

struct LeibnizViolation {
  Eigen::Index i, j, k;
  VectorQ residual;
};

struct LeibnizReport {
  bool pass = true;
  std::vector<LeibnizViolation> violations;
};

/// Exhaustive check over all basis triples (sufficient by trilinearity).
LeibnizReport leibniz_check(const AlgebraLaw& law);

struct LieReport {
  bool is_lie = true;
  Eigen::Index i = -1, j = -1;  // offending pair when not Lie
};

LieReport lie_check(const AlgebraLaw& law);
bool is_lie(const AlgebraLaw& law);

/// Lower central series L^1 = L, L^{k+1} = [L^k, L].
struct SeriesReport {
  std::vector<Subspace> subspaces;  // L^1, L^2, ... down to the first zero term
  std::vector<int> dims;            // matching dims (last entry 0 when nilpotent)
  std::optional<int> nilindex;      // smallest k with L^k = 0; empty if not reached
  bool nilpotent() const { return nilindex.has_value(); }
};

SeriesReport lower_central_series(const AlgebraLaw& law);

struct Annihilators {
  Subspace left;    // {x : [x, L] = 0}
  Subspace right;   // {y : [L, y] = 0}
  Subspace center;  // left ∩ right
};

Annihilators annihilators(const AlgebraLaw& law);

/// dim(center) - dim(center ∩ L^2): the number of central directions that
/// split off as an abelian direct summand complementing L^2.
int split_abelian_rank(const AlgebraLaw& law);

AlgebraLaw direct_sum(const AlgebraLaw& a, const AlgebraLaw& b);
AlgebraLaw abelian_law(Eigen::Index dim);

}  // namespace leibniz

#endif
