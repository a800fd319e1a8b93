#include "leibniz/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibniz {

std::vector<std::string> default_labels(Eigen::Index dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (Eigen::Index k = 1; k <= dim; ++k) labels.push_back("e" + std::to_string(k));
  return labels;
}

AlgebraLaw::AlgebraLaw(Eigen::Index dim) : AlgebraLaw(dim, default_labels(dim)) {}

AlgebraLaw::AlgebraLaw(Eigen::Index dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (static_cast<Eigen::Index>(labels_.size()) != dim_)
    throw std::invalid_argument("AlgebraLaw: label count != dimension");
}

int AlgebraLaw::label_index(const std::string& name) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == name) return static_cast<int>(k);
  return -1;
}

void AlgebraLaw::set_product(Eigen::Index i, Eigen::Index j, const VectorQ& value) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::invalid_argument("set_product: index out of range");
  if (value.size() != dim_)
    throw std::invalid_argument("set_product: value length != dimension");
  if (is_zero(value))
    table_.erase({i, j});
  else
    table_[{i, j}] = value;
  leibniz_verified_ = false;
}

void AlgebraLaw::add_to_product(Eigen::Index i, Eigen::Index j, Eigen::Index target,
                                const Scalar& c) {
  if (c.is_zero()) return;
  VectorQ v = product(i, j);
  v[target] += c;
  set_product(i, j, v);
}

VectorQ AlgebraLaw::product(Eigen::Index i, Eigen::Index j) const {
  auto it = table_.find({i, j});
  if (it == table_.end()) return VectorQ::Zero(dim_);
  return it->second;
}

bool operator==(const AlgebraLaw& a, const AlgebraLaw& b) {
  if (a.dim_ != b.dim_) return false;
  // Sparse tables never store zero vectors, so key sets must agree.
  if (a.table_.size() != b.table_.size()) return false;
  auto ia = a.table_.begin();
  auto ib = b.table_.begin();
  for (; ia != a.table_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    for (Eigen::Index k = 0; k < a.dim_; ++k)
      if (ia->second[k] != ib->second[k]) return false;
  }
  return true;
}

VectorQ bracket(const AlgebraLaw& law, const VectorQ& x, const VectorQ& y) {
  if (x.size() != law.dim() || y.size() != law.dim())
    throw std::invalid_argument("bracket: vector length != dimension");
  VectorQ out = VectorQ::Zero(law.dim());
  for (const auto& [key, value] : law.table()) {
    const Scalar& xi = x[key.first];
    const Scalar& yj = y[key.second];
    if (xi.is_zero() || yj.is_zero()) continue;
    Scalar c = xi * yj;
    for (Eigen::Index k = 0; k < law.dim(); ++k)
      if (!value[k].is_zero()) out[k] += c * value[k];
  }
  return out;
}

namespace {

// [v, e_j] for a coordinate vector v: cheap right-multiplication step.
VectorQ bracket_with_basis(const AlgebraLaw& law, const VectorQ& v, Eigen::Index j) {
  VectorQ out = VectorQ::Zero(law.dim());
  for (Eigen::Index m = 0; m < law.dim(); ++m) {
    if (v[m].is_zero()) continue;
    auto it = law.table().find({m, j});
    if (it == law.table().end()) continue;
    for (Eigen::Index k = 0; k < law.dim(); ++k)
      if (!it->second[k].is_zero()) out[k] += v[m] * it->second[k];
  }
  return out;
}

VectorQ basis_bracket_with(const AlgebraLaw& law, Eigen::Index i, const VectorQ& v) {
  VectorQ out = VectorQ::Zero(law.dim());
  for (Eigen::Index m = 0; m < law.dim(); ++m) {
    if (v[m].is_zero()) continue;
    auto it = law.table().find({i, m});
    if (it == law.table().end()) continue;
    for (Eigen::Index k = 0; k < law.dim(); ++k)
      if (!it->second[k].is_zero()) out[k] += v[m] * it->second[k];
  }
  return out;
}

}  // namespace

VectorQ leibniz_residual(const AlgebraLaw& law, Eigen::Index i, Eigen::Index j,
                         Eigen::Index k) {
  const auto& table = law.table();
  auto jk = table.find({j, k});
  auto ij = table.find({i, j});
  auto ik = table.find({i, k});
  VectorQ res = VectorQ::Zero(law.dim());
  if (jk != table.end()) res += basis_bracket_with(law, i, jk->second);
  if (ij != table.end()) res -= bracket_with_basis(law, ij->second, k);
  if (ik != table.end()) res += bracket_with_basis(law, ik->second, j);
  return res;
}

LeibnizReport leibniz_check(const AlgebraLaw& law) {
  LeibnizReport report;
  const Eigen::Index n = law.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        VectorQ res = leibniz_residual(law, i, j, k);
        if (!is_zero(res)) {
          report.pass = false;
          report.violations.push_back({i, j, k, res});
        }
      }
  return report;
}

LieReport lie_check(const AlgebraLaw& law) {
  const Eigen::Index n = law.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      VectorQ sum = law.product(i, j) + law.product(j, i);
      if (!is_zero(sum)) return {false, i, j};
    }
  return {};
}

bool is_lie(const AlgebraLaw& law) { return lie_check(law).is_lie; }

SeriesReport lower_central_series(const AlgebraLaw& law) {
  const Eigen::Index n = law.dim();
  SeriesReport report;
  Subspace current = Subspace::full(n);
  report.subspaces.push_back(current);
  report.dims.push_back(current.dim());
  for (int k = 1; k <= n + 1 && current.dim() > 0; ++k) {
    std::vector<VectorQ> products;
    for (Eigen::Index r = 0; r < current.dim(); ++r) {
      VectorQ u = current.basis_vector(r);
      for (Eigen::Index j = 0; j < n; ++j) {
        VectorQ w = bracket_with_basis(law, u, j);
        if (!is_zero(w)) products.push_back(w);
      }
    }
    Subspace next = Subspace::span(products, n);
    if (next == current) break;  // stabilized above zero: not nilpotent
    current = next;
    report.subspaces.push_back(current);
    report.dims.push_back(current.dim());
    if (current.dim() == 0) {
      report.nilindex = static_cast<int>(report.dims.size());
      break;
    }
  }
  return report;
}

Annihilators annihilators(const AlgebraLaw& law) {
  const Eigen::Index n = law.dim();
  // left annihilator: kernel of the stacked right-multiplication operators.
  MatrixQ right_ops = MatrixQ::Zero(n * n, n);
  MatrixQ left_ops = MatrixQ::Zero(n * n, n);
  for (const auto& [key, value] : law.table()) {
    auto [i, j] = key;
    // z -> [z, e_j]: contributes value to column i of block j.
    for (Eigen::Index k = 0; k < n; ++k) {
      right_ops(j * n + k, i) += value[k];
      left_ops(i * n + k, j) += value[k];
    }
  }
  Annihilators ann;
  ann.left = Subspace::span(n, kernel_basis(right_ops));
  ann.right = Subspace::span(n, kernel_basis(left_ops));
  ann.center = ann.left.intersect(ann.right);
  return ann;
}

int split_abelian_rank(const AlgebraLaw& law) {
  Annihilators ann = annihilators(law);
  SeriesReport series = lower_central_series(law);
  const Subspace& l2 = series.subspaces.size() > 1 ? series.subspaces[1]
                                                   : Subspace::zero(law.dim());
  return ann.center.dim() - ann.center.intersect(l2).dim();
}

AlgebraLaw direct_sum(const AlgebraLaw& a, const AlgebraLaw& b) {
  const Eigen::Index na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels = a.labels();
  for (const auto& name : b.labels()) {
    std::string candidate = name;
    while (std::find(labels.begin(), labels.end(), candidate) != labels.end())
      candidate += "'";
    labels.push_back(candidate);
  }
  AlgebraLaw out(n, std::move(labels));
  for (const auto& [key, value] : a.table()) {
    VectorQ v = VectorQ::Zero(n);
    v.head(na) = value;
    out.set_product(key.first, key.second, v);
  }
  for (const auto& [key, value] : b.table()) {
    VectorQ v = VectorQ::Zero(n);
    v.tail(nb) = value;
    out.set_product(na + key.first, na + key.second, v);
  }
  // block-diagonal residuals split by summand, so verification carries over
  if (a.leibniz_verified() && b.leibniz_verified()) out.mark_leibniz_verified();
  return out;
}

AlgebraLaw abelian_law(Eigen::Index dim) {
  AlgebraLaw law(dim);
  law.mark_leibniz_verified();  // empty table: every residual is zero
  return law;
}

}  // namespace leibniz
