#ifndef LEIBNIZ_TESTS_ORACLES_HPP
#define LEIBNIZ_TESTS_ORACLES_HPP

// Test-only helpers: deterministic random generators and an independent
// Jordan-structure oracle.  Nothing here is used by the library itself.

#include <algorithm>
#include <random>
#include <stdexcept>

#include "leibniz/nilpotent.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz::testing {

inline Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline Scalar rand_scalar(std::mt19937_64& rng) {
  return Scalar(rand_rational(rng), rand_rational(rng));
}

inline MatrixQ rand_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  MatrixQ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rand_scalar(rng);
  return m;
}

inline MatrixQ random_nilpotent(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  MatrixQ m = MatrixQ::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (keep(rng) > 0) m(i, j) = Scalar(value(rng));
  return m;
}

/// Independent Jordan-structure oracle: builds explicit chains through the
/// kernel filtration and reads off their lengths.  Self-validating: the
/// chain union must be a basis and M must shift every chain by one step.
inline CharSeq jordan_chain_oracle(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  std::vector<Subspace> ker;  // ker M^1, ker M^2, ...
  MatrixQ power = m;
  while (true) {
    ker.push_back(Subspace::span(n, kernel_basis(power)));
    if (ker.back().dim() == n) break;
    if (ker.size() > static_cast<std::size_t>(n))
      throw std::logic_error("jordan_chain_oracle: matrix is not nilpotent");
    power = power * m;
  }
  const int maxh = static_cast<int>(ker.size());

  std::vector<std::vector<VectorQ>> chains;  // chain[0] = kernel end
  for (int h = maxh; h >= 1; --h) {
    std::vector<VectorQ> blockers;
    Subspace lower = h >= 2 ? ker[h - 2] : Subspace::zero(n);
    for (Eigen::Index r = 0; r < lower.dim(); ++r)
      blockers.push_back(lower.basis_vector(r));
    for (const auto& chain : chains)
      if (static_cast<int>(chain.size()) > h) blockers.push_back(chain[h - 1]);
    Subspace blocked = Subspace::span(blockers, n);
    for (Eigen::Index r = 0; r < ker[h - 1].dim(); ++r) {
      VectorQ v = ker[h - 1].basis_vector(r);
      if (blocked.contains(v)) continue;
      std::vector<VectorQ> chain(h);
      chain[h - 1] = v;
      for (int step = h - 2; step >= 0; --step) chain[step] = m * chain[step + 1];
      chains.push_back(chain);
      blockers.push_back(v);
      blocked = Subspace::span(blockers, n);
    }
  }

  std::vector<VectorQ> all;
  for (const auto& chain : chains) {
    if (!is_zero(VectorQ(m * chain[0])))
      throw std::logic_error("jordan_chain_oracle: chain does not end in the kernel");
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      if (VectorQ(m * chain[k + 1]) != chain[k])
        throw std::logic_error("jordan_chain_oracle: chain does not shift");
    for (const auto& v : chain) all.push_back(v);
  }
  if (Subspace::span(all, n).dim() != n)
    throw std::logic_error("jordan_chain_oracle: chains do not form a basis");

  CharSeq seq;
  for (const auto& chain : chains) seq.parts.push_back(static_cast<int>(chain.size()));
  std::sort(seq.parts.begin(), seq.parts.end(), std::greater<int>());
  return seq;
}

}  // namespace leibniz::testing

#endif
