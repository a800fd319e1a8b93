#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

// Filiform Lie families on X_0..X_{n-1}.
AlgebraLaw build_Ln(int n);  // n >= 3
AlgebraLaw build_Qn(int n);  // n >= 6 even

// 2-filiform Lie families on X_0..X_{n-2}, Y.
AlgebraLaw build_L_nr(int n, int r);   // n >= 5, r odd, 3 <= r <= 2*floor((n-1)/2)-1
AlgebraLaw build_Q_nr(int n, int r);   // n >= 7 odd, r odd, 3 <= r <= n-4
AlgebraLaw build_tau_n4(int n);        // n >= 7 odd
AlgebraLaw build_tau_n3(int n);        // n >= 6 even

// Non-Lie constructions.
AlgebraLaw build_nullfiliform(int n);      // [e_i,e_1]=e_{i+1}
AlgebraLaw build_filiform_typeI(int m);    // chain + twin action of f, dim m
AlgebraLaw build_dim4();
AlgebraLaw build_mu(int k);  // k in 1..4, the five-dimensional laws
AlgebraLaw build_L_alpha_eps(const Scalar& alpha, int eps);  // eps in {0,1}
AlgebraLaw build_thm_I12(int n, int variant);  // n >= 6, variant in {1,2}

struct CatalogEntry {
  std::string name;
  std::string provenance;  // nonlie_nonsplit | split_typeI | lie_family
  AlgebraLaw law;
};

/// The asserted classification list of graded 2-filiform laws at dimension n:
/// the non-Lie non-split laws, the two split type-I sums, and the Lie
/// families valid at n.
std::vector<CatalogEntry> classify_graded_2filiform(int n);  // n >= 4

/// All catalog laws of dimension <= max_dim with their CLI names (used by
/// the identity sweeps).
std::vector<CatalogEntry> all_catalog_laws(int max_dim);

/// Resolves a CLI catalog name: Ln(8), Qn(6), L(7,3), Q(7,3), tau(7,3),
/// tau(6,3), NF(6), F1(5), dim4, mu1..mu4, Lalpha(1/2,1), thmI12(8,1),
/// abelian(n).  Throws std::invalid_argument for unknown names.
AlgebraLaw catalog_law(const std::string& name);
std::vector<std::string> catalog_name_patterns();

}  // namespace leibniz

#endif
