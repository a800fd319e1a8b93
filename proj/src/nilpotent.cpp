#include "leibniz/nilpotent.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace leibniz {

MatrixQ right_mult_matrix(const AlgebraLaw& law, const VectorQ& x) {
  const Eigen::Index n = law.dim();
  if (x.size() != n) throw std::invalid_argument("right_mult_matrix: bad vector length");
  MatrixQ m = MatrixQ::Zero(n, n);
  for (const auto& [key, value] : law.table()) {
    auto [i, j] = key;
    if (x[j].is_zero()) continue;
    // column i accumulates x_j * [e_i, e_j]
    for (Eigen::Index k = 0; k < n; ++k)
      if (!value[k].is_zero()) m(k, i) += x[j] * value[k];
  }
  return m;
}

MatrixQ left_mult_matrix(const AlgebraLaw& law, const VectorQ& x) {
  const Eigen::Index n = law.dim();
  if (x.size() != n) throw std::invalid_argument("left_mult_matrix: bad vector length");
  MatrixQ m = MatrixQ::Zero(n, n);
  for (const auto& [key, value] : law.table()) {
    auto [i, j] = key;
    if (x[i].is_zero()) continue;
    for (Eigen::Index k = 0; k < n; ++k)
      if (!value[k].is_zero()) m(k, j) += x[i] * value[k];
  }
  return m;
}

int CharSeq::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string CharSeq::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << ")";
  return os.str();
}

CharSeq jordan_partition(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan_partition: square required");
  const Eigen::Index n = m.rows();
  std::vector<int> ranks;  // rank(M^0), rank(M^1), ...
  ranks.push_back(static_cast<int>(n));
  MatrixQ power = m;
  while (ranks.back() > 0) {
    ranks.push_back(rank(power));
    if (static_cast<Eigen::Index>(ranks.size()) > n + 1) break;
    power = power * m;
  }
  if (ranks.back() != 0) throw std::invalid_argument("jordan_partition: matrix not nilpotent");
  CharSeq seq;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    int blocks_ge_k = ranks[k - 1] - ranks[k];
    int blocks_ge_k1 = k < ranks.size() - 1 ? ranks[k] - ranks[k + 1] : 0;
    for (int b = 0; b < blocks_ge_k - blocks_ge_k1; ++b)
      seq.parts.push_back(static_cast<int>(k));
  }
  std::sort(seq.parts.begin(), seq.parts.end(), std::greater<int>());
  return seq;
}

namespace {

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

VectorQ random_vector(Eigen::Index n, std::mt19937_64& rng) {
  VectorQ v(n);
  for (Eigen::Index k = 0; k < n; ++k) v[k] = Scalar(random_small_rational(rng));
  return v;
}

std::vector<VectorQ> char_seq_candidates(const AlgebraLaw& law, const Subspace& l2,
                                         int extra_samples, std::uint64_t seed) {
  const Eigen::Index n = law.dim();
  std::vector<VectorQ> candidates;
  for (Eigen::Index k = 0; k < n; ++k) {
    VectorQ v = unit_vector(n, k);
    if (!l2.contains(v)) candidates.push_back(v);
  }
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      VectorQ v = unit_vector(n, a) + unit_vector(n, b);
      if (!l2.contains(v)) candidates.push_back(v);
    }
  std::mt19937_64 rng(seed);
  int made = 0, tries = 0;
  while (made < extra_samples && tries < 50 * (extra_samples + 1)) {
    ++tries;
    VectorQ v = random_vector(n, rng);
    if (is_zero(v) || l2.contains(v)) continue;
    candidates.push_back(v);
    ++made;
  }
  return candidates;
}

}  // namespace

CharSeqResult characteristic_sequence(const AlgebraLaw& law, int extra_samples,
                                      std::uint64_t seed) {
  SeriesReport series = lower_central_series(law);
  if (!series.nilpotent())
    throw std::invalid_argument("characteristic_sequence: law is not nilpotent");
  const Subspace& l2 =
      series.subspaces.size() > 1 ? series.subspaces[1] : Subspace::zero(law.dim());
  CharSeqResult best;
  for (const VectorQ& x : char_seq_candidates(law, l2, extra_samples, seed)) {
    CharSeq seq = jordan_partition(right_mult_matrix(law, x));
    if (best.witness.size() == 0 || best.sequence < seq) {
      best.sequence = std::move(seq);
      best.witness = x;
    }
  }
  if (best.witness.size() == 0)
    throw std::logic_error("characteristic_sequence: no candidate outside L^2");
  return best;
}

Gradation natural_gradation(const AlgebraLaw& law) {
  SeriesReport series = lower_central_series(law);
  if (!series.nilpotent())
    throw std::invalid_argument("natural_gradation: law is not nilpotent");
  const Eigen::Index n = law.dim();
  Gradation g;
  const auto& subs = series.subspaces;  // L^1 … L^c (last has dim 0)
  for (std::size_t k = 0; k + 1 < subs.size(); ++k) {
    MatrixQ reps = subs[k].complement_in(subs[k + 1]);
    g.layers.push_back(Subspace::span(n, reps));
    g.layer_dims.push_back(static_cast<int>(reps.rows()));
  }
  if (subs.size() == 1) {  // abelian of dim 0 edge
    g.layers.push_back(subs[0]);
    g.layer_dims.push_back(subs[0].dim());
  }
  // [layer_i, layer_j] ⊆ L^{i+j}
  const std::size_t depth = g.layers.size();
  for (std::size_t a = 0; a < depth; ++a)
    for (std::size_t b = 0; b < depth; ++b) {
      std::size_t target = a + b + 2;  // 1-based degree sum
      const Subspace& bound = target - 1 < subs.size()
                                  ? subs[target - 1]
                                  : Subspace::zero(n);
      for (Eigen::Index u = 0; u < g.layers[a].dim(); ++u)
        for (Eigen::Index v = 0; v < g.layers[b].dim(); ++v) {
          VectorQ w = bracket(law, g.layers[a].basis_vector(u), g.layers[b].basis_vector(v));
          if (!bound.contains(w))
            throw std::logic_error("natural_gradation: [L_" + std::to_string(a + 1) +
                                   ", L_" + std::to_string(b + 1) +
                                   "] escapes L^" + std::to_string(target));
        }
    }
  return g;
}

std::string to_string(AlgebraType t) {
  switch (t) {
    case AlgebraType::TypeI: return "TypeI";
    case AlgebraType::TypeII: return "TypeII";
    default: return "NotApplicable";
  }
}

FiliformProfile filiform_profile(const AlgebraLaw& law, int extra_samples,
                                 std::uint64_t seed) {
  const Eigen::Index n = law.dim();
  SeriesReport series = lower_central_series(law);
  if (!series.nilpotent())
    throw std::invalid_argument("filiform_profile: law is not nilpotent");

  FiliformProfile profile;
  CharSeqResult cs = characteristic_sequence(law, extra_samples, seed);
  profile.char_seq = cs.sequence;
  profile.witness = cs.witness;

  // p-filiform shape: (n-p, 1, ..., 1)
  const auto& parts = cs.sequence.parts;
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k] != 1) return profile;  // NotApplicable
  const int head = parts.empty() ? 0 : parts[0];
  profile.p = static_cast<int>(parts.size()) - 1;
  if (head < 2) return profile;  // no distinguished chain, type undefined

  // Type I iff some max-attaining candidate heads its own maximal chain.
  const Subspace& l2 =
      series.subspaces.size() > 1 ? series.subspaces[1] : Subspace::zero(n);
  bool type1 = false;
  VectorQ type1_witness;
  auto consider = [&](const VectorQ& x) {
    if (type1 || l2.contains(x)) return;
    MatrixQ r = right_mult_matrix(law, x);
    if (jordan_partition(r) != cs.sequence) return;
    VectorQ v = x;
    for (int step = 0; step < head - 1; ++step) v = r * v;
    if (!is_zero(v)) {
      type1 = true;
      type1_witness = x;
    }
  };
  consider(cs.witness);
  for (Eigen::Index k = 0; k < n && !type1; ++k) consider(unit_vector(n, k));
  for (Eigen::Index a = 0; a < n && !type1; ++a)
    for (Eigen::Index b = a + 1; b < n && !type1; ++b)
      consider(unit_vector(n, a) + unit_vector(n, b));
  profile.algebra_type = type1 ? AlgebraType::TypeI : AlgebraType::TypeII;
  const VectorQ& x = type1 ? type1_witness : cs.witness;
  profile.witness = x;

  // positions: gradation degrees of ker R_x minus one copy of the chain
  // tail degree (the tail spans im R_x^{head-1}).
  MatrixQ r = right_mult_matrix(law, x);
  Subspace kernel = Subspace::span(n, kernel_basis(r));
  MatrixQ power = MatrixQ::Identity(n, n);
  for (int step = 0; step < head - 1; ++step) power = r * power;
  Subspace tail_space = Subspace::span(n, MatrixQ(power.transpose()));  // im R^{head-1}
  if (tail_space.dim() != 1)
    throw std::logic_error("filiform_profile: chain tail not one-dimensional");
  VectorQ tail = tail_space.basis_vector(0);

  auto degree_of = [&](const VectorQ& v) {
    int deg = 0;
    for (std::size_t k = 0; k < series.subspaces.size(); ++k) {
      if (series.subspaces[k].contains(v))
        deg = static_cast<int>(k) + 1;
      else
        break;
    }
    return deg;
  };

  std::vector<int> degrees;
  // filtration degrees of the kernel: degree d appears with multiplicity
  // dim(K ∩ L^d) - dim(K ∩ L^{d+1})
  for (std::size_t d = 0; d < series.subspaces.size(); ++d) {
    const Subspace ld1 = d + 1 < series.subspaces.size() ? series.subspaces[d + 1]
                                                         : Subspace::zero(n);
    int mult = kernel.intersect(series.subspaces[d]).dim() - kernel.intersect(ld1).dim();
    for (int c = 0; c < mult; ++c) degrees.push_back(static_cast<int>(d) + 1);
  }
  int tail_degree = degree_of(tail);
  auto it = std::find(degrees.begin(), degrees.end(), tail_degree);
  if (it == degrees.end())
    throw std::logic_error("filiform_profile: tail degree missing from kernel degrees");
  degrees.erase(it);
  std::sort(degrees.begin(), degrees.end());
  profile.positions = std::move(degrees);
  return profile;
}

}  // namespace leibniz
