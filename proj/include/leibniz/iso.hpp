#ifndef LEIBNIZ_ISO_HPP
#define LEIBNIZ_ISO_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibniz/nilpotent.hpp"

namespace leibniz {

/// Invertible change of basis; row i holds the coordinates of the new
/// basis vector e_i' in the old basis.
struct BasisChange {
  MatrixQ matrix;
};

/// Structure constants rewritten in the new basis.  Throws
/// std::invalid_argument when the matrix is singular or sized wrong.
AlgebraLaw change_of_basis(const AlgebraLaw& law, const BasisChange& p);

/// True iff change_of_basis(a, p) has exactly b's table.
bool verify_isomorphism(const AlgebraLaw& a, const AlgebraLaw& b, const BasisChange& p);

/// Associated graded algebra: basis = concatenated natural-gradation layer
/// representatives, products projected onto their graded component.
AlgebraLaw gr_law(const AlgebraLaw& law);

/// Root-multiplicity pattern of the binary cubic y -> [[y,y],y] on the
/// degree-1 layer of gr(L), defined when that layer is 2-dimensional and
/// the degree-3 layer is a line: {} for the zero form, {-1} when not
/// applicable.  Separates laws the coarser battery entries cannot (the
/// vanishing locus of the cubic transforms covariantly, so the pattern is
/// an isomorphism invariant).
std::vector<int> cube_form_pattern(const AlgebraLaw& law);

/// Root-multiplicity pattern of the rank-drop divisor of R_y on gr(L) as
/// y sweeps the projectivized 2-dimensional degree-1 layer: gcd of the
/// g x g minors of u*A + v*B (g = generic rank).  {-1} when the layer is
/// not 2-dimensional.
struct RankDropProfile {
  int generic_rank = -1;
  std::vector<int> drop_pattern;
};
RankDropProfile rank_drop_profile(const AlgebraLaw& law);

struct InvariantVector {
  int dim = 0;
  std::vector<int> lc_dims;
  int nilindex = -1;  // -1 when not nilpotent
  int left_dim = 0, right_dim = 0, center_dim = 0;
  int split_rank = 0;
  std::vector<int> char_seq;
  std::vector<int> layer_dims;
  bool lie = false;
  int p = -1;
  AlgebraType type = AlgebraType::NotApplicable;
  std::vector<int> positions;
  std::vector<int> cube_pattern;
  int generic_rank = -1;
  std::vector<int> rank_drop_pattern;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  std::string str() const;
};

InvariantVector invariant_vector(const AlgebraLaw& law);

enum class IsoVerdict { Found, NotFoundWithinGrid, NotIsomorphic };

struct GradedIsoResult {
  IsoVerdict verdict = IsoVerdict::NotFoundWithinGrid;
  std::optional<BasisChange> witness;  // set iff Found; always verified
  long candidates_tried = 0;
};

/// Grid search for a graded isomorphism a -> b through generator images
/// (degree-1 layer must be 2-dimensional and must generate both algebras).
/// Found witnesses always pass verify_isomorphism; NotFoundWithinGrid is
/// evidence, not proof.
GradedIsoResult graded_iso_search(const AlgebraLaw& a, const AlgebraLaw& b,
                                  long budget = 25000);

}  // namespace leibniz

#endif
