#ifndef LEIBNIZ_TEMPLATES_HPP
#define LEIBNIZ_TEMPLATES_HPP

#include <map>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/poly.hpp"

namespace leibniz {

/// Multiplication table whose entries are polynomials in named parameters.
/// Substituting any scalar assignment yields a plain AlgebraLaw.
class ParamLaw {
public:
  ParamLaw() = default;
  ParamLaw(Eigen::Index dim, PolyRingPtr ring);

  Eigen::Index dim() const { return dim_; }
  const PolyRingPtr& ring() const { return ring_; }

  void add_product(Eigen::Index i, Eigen::Index j, Eigen::Index target, const Poly& coeff);
  std::vector<Poly> product(Eigen::Index i, Eigen::Index j) const;  // dim polys
  const std::map<std::pair<Eigen::Index, Eigen::Index>, std::vector<Poly>>& table() const {
    return table_;
  }

  /// Symbolic substitution on every entry (same ring).
  ParamLaw substitute(const std::map<int, Poly>& assignment) const;
  /// Full numeric evaluation at a parameter point (indexed by ring vars).
  AlgebraLaw at(const std::vector<Scalar>& point) const;

private:
  Eigen::Index dim_ = 0;
  PolyRingPtr ring_;
  std::map<std::pair<Eigen::Index, Eigen::Index>, std::vector<Poly>> table_;
};

/// Symbolic Leibniz residuals over all basis triples, nonzero components
/// only, deduplicated after normalizing the leading coefficient to 1.
std::vector<Poly> leibniz_residuals(const ParamLaw& t);

/// Restrictions of one lemma: the recorded equations (= 0), an ordered
/// solution substitution (later entries may reference earlier ones), and
/// genericity clauses (each clause: at least one entry nonzero).
struct RestrictionSet {
  std::string name;
  std::vector<std::pair<std::string, Poly>> equations;
  std::vector<std::pair<int, Poly>> solution;  // var -> rhs, applied in order
  std::vector<std::vector<Poly>> side_clauses;

  /// Fully composed substitution map (solution entries folded in order).
  std::map<int, Poly> solution_map() const;
};

// Parameterized families behind the classification lemmas.  Parameter naming
// follows the families: alpha_i / beta_i / gamma_i for type I, alpha_i_j
// for the type-II families.  Every ring also carries the scalar "A" used
// by rank conditions.
ParamLaw make_T_I11(int n);          // n >= 5
ParamLaw make_T_I12(int n);          // n >= 6
ParamLaw make_T_II_r(int n, int r);  // n >= 5, 2 < r <= n-2
ParamLaw make_T_II_1(int n);         // n >= 5
ParamLaw make_T_II_2(int n);         // n >= 5
ParamLaw make_T_Lalpha5();
ParamLaw make_T_dim4();
/// Name dispatch for the CLI: T_I11(6), T_II_r(7,3), T_Lalpha5, T_dim4, ...
ParamLaw make_template(const std::string& name);

RestrictionSet restrictions_I11(const ParamLaw& t, int n);
RestrictionSet restrictions_I12(const ParamLaw& t, int n);
/// branch_alpha is the chosen root of alpha(alpha+1) = 0: 0 or -1.
RestrictionSet restrictions_II_r(const ParamLaw& t, int n, int r, int branch_alpha);
RestrictionSet restrictions_II_1(const ParamLaw& t, int n, int branch_alpha);
RestrictionSet restrictions_II_2(const ParamLaw& t, int n, int branch_alpha);

struct EquationNecessity {
  std::string equation;
  int samples = 0;
  int detected = 0;             // detected_residual + detected_hypothesis
  int detected_residual = 0;    // a Leibniz residual fired
  int detected_hypothesis = 0;  // residuals silent, but the graded char-seq
                                // hypothesis (n-2,1,...) is violated instead
  int side_relaxed = 0;         // samples needing extra nonzero side-clause vars
};

struct RestrictionReport {
  std::string set_name;
  bool sufficiency_all_zero = false;  // residuals identically zero after solution
  int nonzero_residuals = 0;
  bool equations_vanish = false;  // recorded equations -> 0 under solution
  bool empty_branch = false;      // solution contradicts a genericity clause
  std::vector<EquationNecessity> necessity;
};

RestrictionReport verify_restrictions(const ParamLaw& t, const RestrictionSet& rs,
                                      int samples);

/// Minors of size bound+1 of the right-multiplication matrix of the
/// parameterized vector x_expr, as polynomials; zero minors dropped,
/// duplicates removed.
std::vector<Poly> rank_conditions(const ParamLaw& t, const std::vector<Poly>& x_expr,
                                  int bound);

// ---- reproduction experiments ---------------------------------------------

struct Dim4Point {
  std::vector<Scalar> params;  // alpha1, beta1, beta2
  std::string status;          // survivor | rejected_rank | rejected_split
  bool witness_verified = false;
};

struct Dim4Report {
  std::vector<Dim4Point> points;
  int survivors = 0, rejected_rank = 0, rejected_split = 0;
  bool all_survivors_verified = false;
  bool rejections_as_stated = false;  // beta2 != 0 -> rank, beta1=beta2=0 -> split
  bool ok() const { return all_survivors_verified && rejections_as_stated && survivors > 0; }
};

Dim4Report reproduce_dim4();

struct Dim5Report {
  bool annihilator_separation = false;  // left dims 3 vs 2, center 2 vs 1, all alpha
  bool eps0_normalizations = false;     // L(a,0) -> mu1 (a != 0) / mu2 (a = 0)
  bool case1_to_mu4 = false;            // alpha in {2, 1/2, -3} land on mu4
  int case2_samples = 0;                // admissible changes tested at alpha = i
  int case2_preserved = 0;              // 1 + alpha'^2 = 0 held
  int case2_witnesses = 0;              // full change-of-basis verifications
  bool b1_forced_zero = false;          // sampled b1 != 0 changes all break [e4',e1'] = 0
  bool transform_formula = false;       // alpha' formula matches verified witnesses
  bool ok() const {
    return annihilator_separation && eps0_normalizations && case1_to_mu4 &&
           case2_samples >= 1000 && case2_preserved == case2_samples &&
           case2_witnesses > 0 && b1_forced_zero && transform_formula;
  }
};

Dim5Report reproduce_dim5(int case2_min_samples = 1000);

struct ThmI12Report {
  int n = 0;
  bool minor_factor_found = false;   // ±(1+A*alpha)^{n-3} * A * gamma_{n-1} among minors
  bool minors_vanish_at_gamma0 = false;
  bool gamma_nonzero_excluded = false;  // sampled gamma_{n-1} != 0 laws exceed (n-2,1,1)
  int grid_points = 0;
  int verified_variant1 = 0;  // alpha != 0 points with verified witness
  int verified_variant2 = 0;  // alpha = 0 points with verified witness
  int failed = 0;
  bool ok() const {
    return minor_factor_found && minors_vanish_at_gamma0 && gamma_nonzero_excluded &&
           failed == 0 && verified_variant1 > 0 && verified_variant2 > 0;
  }
};

ThmI12Report reproduce_thm_I12(int n);

struct TypeIIPointOutcome {
  std::vector<Scalar> params;
  std::string category;
};

/// Classification of the associated graded algebra of each Leibniz-valid
/// grid point (the lemmas concern naturally graded algebras, and gr(L) is
/// always naturally graded):
///   lie                - graded algebra is a Lie algebra
///   split              - central abelian summand splits off
///   type_I_like        - 2-filiform with a self-chaining characteristic
///                        vector (the "converts to type I" outcome)
///   excluded_char_seq  - characteristic sequence exceeds (n-2,1,1), so the
///                        point violates the lemma's 2-filiform hypothesis
///   counterexample     - graded 2-filiform type II, non-split, non-Lie:
///                        would contradict the classification (never expected)
struct TypeIIReport {
  int n = 0, r = 0, branch_alpha = 0;
  int grid_points = 0;
  int leibniz_valid = 0;
  int lie = 0, split = 0, type_I_like = 0, excluded_char_seq = 0, counterexamples = 0;
  bool type_I_conversion_verified = false;  // r = 2 canonical point only
  std::vector<TypeIIPointOutcome> exceptions;  // the counterexample points
  bool ok() const { return counterexamples == 0 && leibniz_valid > 0; }
};

TypeIIReport verify_typeII_lemma(int n, int r, int branch_alpha, long budget = 20000);
std::vector<TypeIIReport> verify_typeII_lemmas(int n_lo, int n_hi, long budget = 20000);

struct Theorem1Report {
  int catalog_laws_checked = 0;
  int template_points_checked = 0;
  int type_I_profiles = 0;
  int violations = 0;  // type-I profiles with some r_s > s
  bool ok() const { return violations == 0 && type_I_profiles > 0; }
};

/// r_s <= s for every type-I catalog law and every Leibniz-valid grid
/// point of the type-I templates in the given dimension range.
Theorem1Report verify_theorem1(int n_lo, int n_hi, long budget = 20000);

/// Documented deterministic grid: 0, ±1, ±2, ±1/2, ±i, 1±i.
const std::vector<Scalar>& parameter_grid();

}  // namespace leibniz

#endif
