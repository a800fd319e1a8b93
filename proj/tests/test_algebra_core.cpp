#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/nilpotent.hpp"

using namespace leibniz;

TEST_CASE("bracket is the bilinear extension of the table") {
  AlgebraLaw ln = build_Ln(5);
  // [X0, X1] = X2
  CHECK(bracket(ln, unit_vector(5, 0), unit_vector(5, 1)) == unit_vector(5, 2));
  CHECK(is_zero(bracket(ln, unit_vector(5, 1), VectorQ::Zero(5))));

  AlgebraLaw d4 = build_dim4();
  CHECK(bracket(d4, unit_vector(4, 0), unit_vector(4, 2)) == unit_vector(4, 3));

  // bilinearity on mixed combinations
  VectorQ x = unit_vector(5, 0) * Scalar(3) + unit_vector(5, 2) * Scalar::fraction(1, 2);
  VectorQ y = unit_vector(5, 1) - unit_vector(5, 3) * Scalar::i();
  VectorQ lhs = bracket(ln, x + y, y);
  VectorQ rhs = bracket(ln, x, y) + bracket(ln, y, y);
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(bracket(ln, VectorQ::Zero(4), VectorQ::Zero(5)), std::invalid_argument);
}

TEST_CASE("leibniz_check catches a broken table") {
  // [e1,e1]=e2, [e2,e1]=e3, [e1,e2]=e3 violates the identity at (1,1,1):
  // [e1,[e1,e1]] = e3 while [[e1,e1],e1] - [[e1,e1],e1] = 0.
  AlgebraLaw law(3);
  law.add_to_product(0, 0, 1, Scalar(1));
  law.add_to_product(1, 0, 2, Scalar(1));
  law.add_to_product(0, 1, 2, Scalar(1));
  LeibnizReport rep = leibniz_check(law);
  CHECK_FALSE(rep.pass);
  bool found_111 = false;
  for (const auto& v : rep.violations)
    if (v.i == 0 && v.j == 0 && v.k == 0) {
      found_111 = true;
      CHECK(v.residual == unit_vector(3, 2));
    }
  CHECK(found_111);

  CHECK(leibniz_check(abelian_law(4)).pass);
}

TEST_CASE("lie_check reports the offending pair") {
  LieReport rep = lie_check(build_dim4());
  CHECK_FALSE(rep.is_lie);
  CHECK(rep.i == 0);
  CHECK(rep.j == 0);  // [e1,e1] = e2 != 0
  CHECK(is_lie(abelian_law(3)));
  CHECK(is_lie(build_L_nr(6, 3)));
  CHECK_FALSE(is_lie(build_filiform_typeI(5)));
}

TEST_CASE("lower central series") {
  SeriesReport ab = lower_central_series(abelian_law(6));
  CHECK(ab.dims == std::vector<int>{6, 0});
  CHECK(ab.nilindex == 2);

  // type-(I,1,2) law at n = 6: dims follow the r = 2 pattern
  // dim L^2 = n-2, dim L^i = n-1-i afterwards
  SeriesReport thm = lower_central_series(build_thm_I12(6, 1));
  CHECK(thm.dims == std::vector<int>{6, 4, 2, 1, 0});
  CHECK(thm.nilindex == 5);

  // the r = 1 pattern dim L^i = n-1-i on the split law NF(n-2) + C^2
  SeriesReport split = lower_central_series(direct_sum(build_nullfiliform(6), abelian_law(2)));
  CHECK(split.dims == std::vector<int>{8, 5, 4, 3, 2, 1, 0});
  CHECK(split.nilindex == 7);

  // containment L^{k+1} <= L^k
  for (const CatalogEntry& e : all_catalog_laws(7)) {
    SeriesReport s = lower_central_series(e.law);
    for (std::size_t k = 0; k + 1 < s.subspaces.size(); ++k)
      CHECK(s.subspaces[k].contains(s.subspaces[k + 1]));
  }

  // a non-nilpotent table stabilizes without a nilindex
  AlgebraLaw bad(2);
  bad.add_to_product(0, 0, 0, Scalar(1));
  CHECK_FALSE(lower_central_series(bad).nilpotent());
}

TEST_CASE("annihilators of the five-dimensional parameter laws") {
  for (const Scalar& a : {Scalar(0), Scalar(1), Scalar(2), Scalar::i()}) {
    Annihilators a0 = annihilators(build_L_alpha_eps(a, 0));
    CHECK(a0.left.dim() == 3);   // e3, e4, e5
    CHECK(a0.right.dim() == 3);  // e2, e3, e5
    CHECK(a0.center.dim() == 2);
    CHECK(a0.left.contains(unit_vector(5, 3)));
    CHECK(a0.left.contains(unit_vector(5, 4)));

    Annihilators a1 = annihilators(build_L_alpha_eps(a, 1));
    CHECK(a1.left.dim() == 2);  // e3, e4
    CHECK(a1.right.dim() == 3);
    CHECK(a1.center.dim() == 1);
    CHECK(a1.left.contains(unit_vector(5, 3)));
  }

  Annihilators ab = annihilators(abelian_law(4));
  CHECK(ab.left.dim() == 4);
  CHECK(ab.right.dim() == 4);
  CHECK(ab.center.dim() == 4);

  // [left, L] = 0 and [L, right] = 0, re-verified by direct evaluation
  for (const CatalogEntry& e : all_catalog_laws(6)) {
    Annihilators ann = annihilators(e.law);
    const Eigen::Index n = e.law.dim();
    for (Eigen::Index k = 0; k < ann.left.dim(); ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        CHECK(is_zero(bracket(e.law, ann.left.basis_vector(k), unit_vector(n, j))));
    for (Eigen::Index k = 0; k < ann.right.dim(); ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        CHECK(is_zero(bracket(e.law, unit_vector(n, j), ann.right.basis_vector(k))));
  }
}

TEST_CASE("split abelian rank") {
  CHECK(split_abelian_rank(direct_sum(build_nullfiliform(5), abelian_law(2))) == 2);
  CHECK(split_abelian_rank(build_thm_I12(6, 1)) == 0);
  CHECK(split_abelian_rank(build_thm_I12(7, 2)) == 0);
  CHECK(split_abelian_rank(abelian_law(5)) == 5);
  CHECK(split_abelian_rank(build_mu(2)) == 0);
  CHECK(split_abelian_rank(direct_sum(build_filiform_typeI(5), abelian_law(1))) == 1);
}

TEST_CASE("direct sums") {
  AlgebraLaw mu3 = build_mu(3);
  CHECK(direct_sum(mu3, abelian_law(0)) == mu3);

  AlgebraLaw sum = direct_sum(build_nullfiliform(4), build_filiform_typeI(4));
  CHECK(leibniz_check(sum).pass);
  CHECK(sum.dim() == 8);
  CHECK(is_zero(bracket(sum, unit_vector(8, 1), unit_vector(8, 5))));

  // F1(n-1) + C is 2-filiform of type I with positions (1,1)
  FiliformProfile prof = filiform_profile(direct_sum(build_filiform_typeI(6), abelian_law(1)));
  CHECK(prof.p == 2);
  CHECK(prof.algebra_type == AlgebraType::TypeI);
  CHECK(prof.positions == std::vector<int>{1, 1});
}
