#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/nilpotent.hpp"

using namespace leibniz;

TEST_CASE("constructor side conditions") {
  CHECK_THROWS_AS(build_Ln(2), std::invalid_argument);
  CHECK_THROWS_AS(build_Qn(7), std::invalid_argument);   // parity
  CHECK_THROWS_AS(build_Qn(4), std::invalid_argument);   // bound
  CHECK_THROWS_AS(build_L_nr(5, 4), std::invalid_argument);  // r even
  CHECK_THROWS_AS(build_L_nr(5, 5), std::invalid_argument);  // r too large
  CHECK_THROWS_AS(build_L_nr(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_Q_nr(8, 3), std::invalid_argument);  // n even
  CHECK_THROWS_AS(build_Q_nr(7, 5), std::invalid_argument);  // r > n-4
  CHECK_THROWS_AS(build_tau_n4(8), std::invalid_argument);
  CHECK_THROWS_AS(build_tau_n3(7), std::invalid_argument);
  CHECK_THROWS_AS(build_mu(5), std::invalid_argument);
  CHECK_THROWS_AS(build_thm_I12(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_thm_I12(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_filiform_typeI(2), std::invalid_argument);
}

TEST_CASE("defining products, spot checks") {
  // Ln(3): only [X0,X1] = X2 and its antisymmetric partner
  AlgebraLaw l3 = build_Ln(3);
  CHECK(l3.table().size() == 2);
  CHECK(bracket(l3, unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));

  // Q6: [X1, X4] = X5 (sign (-1)^0 = +1)
  AlgebraLaw q6 = build_Qn(6);
  CHECK(bracket(q6, unit_vector(6, 1), unit_vector(6, 4)) == unit_vector(6, 5));
  CHECK(bracket(q6, unit_vector(6, 2), unit_vector(6, 3)) == -unit_vector(6, 5));

  // L(5,3): [X0,X1]=X2, [X0,X2]=X3, [X1,X2]=Y
  AlgebraLaw l53 = build_L_nr(5, 3);
  CHECK(bracket(l53, unit_vector(5, 0), unit_vector(5, 1)) == unit_vector(5, 2));
  CHECK(bracket(l53, unit_vector(5, 0), unit_vector(5, 2)) == unit_vector(5, 3));
  CHECK(bracket(l53, unit_vector(5, 1), unit_vector(5, 2)) == unit_vector(5, 4));
  CHECK(l53.labels().back() == "Y");

  // tau(6,3): [X1, Y] = ((4-6)/2) X4 = -X4
  AlgebraLaw t63 = build_tau_n3(6);
  CHECK(bracket(t63, unit_vector(6, 1), unit_vector(6, 5)) == -unit_vector(6, 4));

  // tau(7,3): [X2, Y] = ((5-7)/2) X5 = -X5 touches X_{n-2}
  AlgebraLaw t73 = build_tau_n4(7);
  CHECK(bracket(t73, unit_vector(7, 2), unit_vector(7, 6)) == -unit_vector(7, 5));

  // mu3: [e1,e4] = i e2 + e5 and [e5,e4] = e3
  AlgebraLaw mu3 = build_mu(3);
  VectorQ v = bracket(mu3, unit_vector(5, 0), unit_vector(5, 3));
  CHECK(v[1] == Scalar::i());
  CHECK(v[4] == Scalar(1));
  CHECK(bracket(mu3, unit_vector(5, 4), unit_vector(5, 3)) == unit_vector(5, 2));

  // thmI12(n,2): only the chain and [e1, e_{n-1}] = e_n
  AlgebraLaw thm = build_thm_I12(7, 2);
  CHECK(thm.table().size() == 5);
  CHECK(bracket(thm, unit_vector(7, 0), unit_vector(7, 5)) == unit_vector(7, 6));

  // L(alpha,1) with the substituted f2 = e5: [f2, e4] = e3
  AlgebraLaw la = build_L_alpha_eps(Scalar::fraction(3, 7), 1);
  CHECK(bracket(la, unit_vector(5, 4), unit_vector(5, 3)) == unit_vector(5, 2));
}

TEST_CASE("identity checks across the catalog") {
  for (const CatalogEntry& e : all_catalog_laws(10)) {
    CAPTURE(e.name);
    CHECK(e.law.leibniz_verified());
    if (e.provenance == "lie_family") CHECK(is_lie(e.law));
    if (e.provenance == "nonlie_nonsplit") CHECK_FALSE(is_lie(e.law));
  }
  for (int n = 3; n <= 10; ++n) CHECK(is_lie(build_Ln(n)));
}

TEST_CASE("classification lists") {
  CHECK_THROWS_AS(classify_graded_2filiform(3), std::invalid_argument);

  auto count = [](const std::vector<CatalogEntry>& list, const std::string& prov) {
    int c = 0;
    for (const auto& e : list)
      if (e.provenance == prov) ++c;
    return c;
  };

  auto l4 = classify_graded_2filiform(4);
  CHECK(count(l4, "nonlie_nonsplit") == 1);
  CHECK(count(l4, "split_typeI") == 2);
  CHECK(count(l4, "lie_family") == 0);

  auto l5 = classify_graded_2filiform(5);
  CHECK(count(l5, "nonlie_nonsplit") == 4);  // exactly mu1..mu4
  for (const auto& e : l5)
    if (e.provenance == "nonlie_nonsplit") CHECK(e.name.substr(0, 2) == "mu");
  CHECK(count(l5, "lie_family") == 1);  // L(5,3)

  auto l6 = classify_graded_2filiform(6);
  CHECK(count(l6, "nonlie_nonsplit") == 2);  // the two theorem laws
  CHECK(count(l6, "lie_family") == 2);       // L(6,3), tau(6,3)

  auto l7 = classify_graded_2filiform(7);
  CHECK(count(l7, "lie_family") == 4);  // L(7,3), L(7,5), Q(7,3), tau(7,3)

  // every listed law passes the identity check and is 2-filiform
  for (int n : {4, 5, 6, 7}) {
    for (const CatalogEntry& e : classify_graded_2filiform(n)) {
      CAPTURE(e.name);
      CHECK(e.law.leibniz_verified());
      FiliformProfile prof = filiform_profile(e.law);
      CHECK(prof.p == 2);
      if (e.provenance != "split_typeI") CHECK(split_abelian_rank(e.law) == 0);
      if (e.provenance == "split_typeI") CHECK(split_abelian_rank(e.law) >= 1);
    }
  }
}

TEST_CASE("catalog name dispatch") {
  CHECK(catalog_law("mu3") == build_mu(3));
  CHECK(catalog_law("Ln(8)") == build_Ln(8));
  CHECK(catalog_law("L(7,3)") == build_L_nr(7, 3));
  CHECK(catalog_law("tau(7,3)") == build_tau_n4(7));
  CHECK(catalog_law("tau(6,3)") == build_tau_n3(6));
  CHECK(catalog_law("NF(4)") == build_nullfiliform(4));
  CHECK(catalog_law("Lalpha(1/2+i,1)") == build_L_alpha_eps(Scalar(Rational(1, 2), Rational(1)), 1));
  CHECK(catalog_law("thmI12(6,2)") == build_thm_I12(6, 2));
  CHECK_THROWS_AS(catalog_law("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_law("tau(7,2)"), std::invalid_argument);
}
