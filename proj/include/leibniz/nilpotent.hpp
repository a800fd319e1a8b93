#ifndef LEIBNIZ_NILPOTENT_HPP
#define LEIBNIZ_NILPOTENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Matrix of the right-multiplication operator z -> [z, x] (column j is
/// [e_j, x] in coordinates).
MatrixQ right_mult_matrix(const AlgebraLaw& law, const VectorQ& x);
MatrixQ left_mult_matrix(const AlgebraLaw& law, const VectorQ& x);

/// Decreasing partition of n, compared lexicographically.
struct CharSeq {
  std::vector<int> parts;

  int sum() const;
  friend bool operator==(const CharSeq& a, const CharSeq& b) { return a.parts == b.parts; }
  friend bool operator!=(const CharSeq& a, const CharSeq& b) { return !(a == b); }
  friend bool operator<(const CharSeq& a, const CharSeq& b) { return a.parts < b.parts; }
  std::string str() const;
};

/// Jordan block sizes of a nilpotent matrix, decreasing.  The number of
/// blocks of size >= k is rank(M^{k-1}) - rank(M^k).
/// Throws std::invalid_argument when M is not nilpotent.
CharSeq jordan_partition(const MatrixQ& m);

struct CharSeqResult {
  CharSeq sequence;
  VectorQ witness;
};

/// Characteristic sequence: lexicographic max of the Jordan partition of
/// R_x over x outside L^2.  Candidates are the basis vectors outside L^2,
/// their pairwise sums, and `extra_samples` deterministic pseudo-random
/// rational vectors (seeded); the reported value is a certified lower
/// bound, exact on the catalog laws where the adapted generator attains it.
CharSeqResult characteristic_sequence(const AlgebraLaw& law, int extra_samples = 25,
                                      std::uint64_t seed = 12345);

struct Gradation {
  std::vector<Subspace> layers;  // representatives of L^i/L^{i+1} inside L
  std::vector<int> layer_dims;
};

/// Natural gradation with degree-1 layer read as a complement of L^2 in L.
/// Verifies [layer_i, layer_j] ⊆ L^{i+j}; throws std::logic_error naming
/// the offending pair when the table is not gradation-compatible.
Gradation natural_gradation(const AlgebraLaw& law);

enum class AlgebraType { TypeI, TypeII, NotApplicable };
std::string to_string(AlgebraType t);

struct FiliformProfile {
  int p = -1;
  AlgebraType algebra_type = AlgebraType::NotApplicable;
  std::vector<int> positions;  // gradation degrees r_1 <= ... <= r_p
  CharSeq char_seq;
  VectorQ witness;
};

/// p-filiform profile: p from the characteristic sequence shape
/// (n-p, 1, ..., 1); type I when some witness x attaining the maximum
/// satisfies R_x^{n-p-1}(x) != 0 (the generator heads its own chain),
/// type II otherwise; positions are the gradation degrees of the
/// complement of the maximal chain (kernel degrees minus the chain tail).
FiliformProfile filiform_profile(const AlgebraLaw& law, int extra_samples = 25,
                                 std::uint64_t seed = 12345);

}  // namespace leibniz

#endif
