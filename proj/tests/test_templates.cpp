#include <doctest.h>

#include <set>

#include "leibniz/catalog.hpp"
#include "leibniz/templates.hpp"

using namespace leibniz;

namespace {

Poly var(const ParamLaw& t, const std::string& name) {
  REQUIRE(t.ring()->var_index(name) >= 0);
  return Poly::variable(t.ring(), name);
}

std::string idx(int /*n*/, int i, int j) {
  return "alpha_" + std::to_string(i) + "_" + std::to_string(j);
}

bool contains_poly(const std::vector<Poly>& set, const Poly& p) {
  Poly norm = p.monic();
  for (const Poly& q : set)
    if (q == norm || q == (-p).monic()) return true;
  return false;
}

// exact linear-span membership over the monomial coefficient matrix
bool in_linear_span(const std::vector<Poly>& set, const Poly& target) {
  std::set<std::vector<std::uint16_t>> monomials;
  for (const Poly& p : set)
    for (const auto& [e, c] : p.terms()) monomials.insert(e);
  for (const auto& [e, c] : target.terms()) monomials.insert(e);
  std::vector<std::vector<std::uint16_t>> cols(monomials.begin(), monomials.end());
  auto row_of = [&](const Poly& p) {
    VectorQ row = VectorQ::Zero(static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto it = p.terms().find(cols[k]);
      if (it != p.terms().end()) row[k] = it->second;
    }
    return row;
  };
  MatrixQ m(static_cast<Eigen::Index>(set.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < set.size(); ++r) m.row(r) = row_of(set[r]).transpose();
  MatrixQ ext(m.rows() + 1, m.cols());
  ext << m, row_of(target).transpose();
  return rank(m) == rank(ext);
}

}  // namespace

TEST_CASE("template parameter lists") {
  int n = 7;
  ParamLaw t = make_T_I11(n);
  const auto& ring = t.ring();
  for (int i = 1; i <= n - 3; ++i) {
    CHECK(ring->var_index("alpha_" + std::to_string(i)) >= 0);
    CHECK(ring->var_index("beta_" + std::to_string(i)) >= 0);
  }
  CHECK(ring->var_index("alpha_" + std::to_string(n - 2)) < 0);  // chain tail unused
  CHECK(ring->var_index("alpha_" + std::to_string(n - 1)) >= 0);
  CHECK(ring->var_index("alpha_" + std::to_string(n)) >= 0);
  CHECK(ring->var_index("beta_" + std::to_string(n - 1)) >= 0);
  CHECK(ring->var_index("beta_" + std::to_string(n)) >= 0);

  // [e_n, e_n] = alpha_n_n e_{2r+1} exists only when r <= (n-2)/2
  CHECK(make_T_II_r(8, 3).ring()->var_index("alpha_8_8") >= 0);
  CHECK(make_T_II_r(8, 4).ring()->var_index("alpha_8_8") < 0);

  CHECK_THROWS_AS(make_T_I11(4), std::invalid_argument);
  CHECK_THROWS_AS(make_T_I12(5), std::invalid_argument);
  CHECK_THROWS_AS(make_T_II_r(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_template("T_bogus(6)"), std::invalid_argument);
  CHECK(make_template("T_II_r(7,3)").dim() == 7);
}

TEST_CASE("all-zero substitution of T_I11 is the split law") {
  for (int n : {5, 6, 8}) {
    ParamLaw t = make_T_I11(n);
    std::vector<Scalar> zeros(t.ring()->size(), Scalar(0));
    CHECK(t.at(zeros) == direct_sum(build_nullfiliform(n - 2), abelian_law(2)));
  }
}

TEST_CASE("symbolic residual content") {
  // abelian template: no residuals at all
  auto ring = std::make_shared<PolyRing>();
  CHECK(leibniz_residuals(ParamLaw(4, ring)).empty());

  // T_I11: adjacent alpha differences appear verbatim
  int n = 6;
  ParamLaw t11 = make_T_I11(n);
  std::vector<Poly> res11 = leibniz_residuals(t11);
  for (int i = 1; i <= n - 4; ++i) {
    CHECK(contains_poly(res11, var(t11, "alpha_" + std::to_string(i + 1)) -
                                    var(t11, "alpha_" + std::to_string(i))));
    CHECK(contains_poly(res11, var(t11, "beta_" + std::to_string(i + 1)) -
                                    var(t11, "beta_" + std::to_string(i))));
  }
  CHECK(contains_poly(res11, var(t11, "alpha_" + std::to_string(n - 1))));
  CHECK(contains_poly(res11, var(t11, "alpha_" + std::to_string(n))));

  // T_I12: the product beta_i * gamma_1 lies in the residual span
  ParamLaw t12 = make_T_I12(n);
  std::vector<Poly> res12 = leibniz_residuals(t12);
  CHECK(contains_poly(res12, var(t12, "alpha_2") - var(t12, "alpha_1")));
  for (int i = 1; i <= n - 4; ++i)
    CHECK(in_linear_span(res12, var(t12, "beta_" + std::to_string(i)) * var(t12, "gamma_1")));

  // the five-dimensional two-parameter family is Leibniz for every (alpha, gamma)
  CHECK(leibniz_residuals(make_T_Lalpha5()).empty());
  // ... and so is the dim-4 three-parameter family
  CHECK(leibniz_residuals(make_T_dim4()).empty());

  // substituting mu3's parameters into the dim-5 template gives mu3
  ParamLaw t5 = make_T_Lalpha5();
  std::vector<Scalar> point(t5.ring()->size(), Scalar(0));
  point[t5.ring()->var_index("alpha")] = Scalar::i();
  point[t5.ring()->var_index("gamma")] = Scalar(1);
  CHECK(t5.at(point) == build_mu(3));
}

TEST_CASE("restriction verification, type-I lemmas") {
  for (int n : {5, 6, 7}) {
    ParamLaw t = make_T_I11(n);
    RestrictionReport r = verify_restrictions(t, restrictions_I11(t, n), 60);
    CHECK(r.sufficiency_all_zero);
    CHECK(r.equations_vanish);
    CHECK_FALSE(r.empty_branch);
    for (const auto& e : r.necessity) {
      CHECK(e.samples > 0);
      CHECK(e.detected * 100 >= 95 * e.samples);
    }
  }
  for (int n : {6, 7}) {
    ParamLaw t = make_T_I12(n);
    RestrictionReport r = verify_restrictions(t, restrictions_I12(t, n), 60);
    CHECK(r.sufficiency_all_zero);
    CHECK(r.equations_vanish);
    for (const auto& e : r.necessity) {
      CHECK(e.samples > 0);
      CHECK(e.detected * 100 >= 95 * e.samples);
    }
  }
}

TEST_CASE("even-dimensional diagonal relations follow from the residuals") {
  // In the alpha = -1 branch of the r > 2 family at even n, the relations
  // that force alpha_{n/2,n/2} = 0 are linear consequences of the Leibniz
  // residuals:
  //   alpha_{n/2,n/2} - alpha_{n/2,n/2-1} + alpha_{n/2+1,n/2-1}
  //   alpha_{n/2,n/2-1} + alpha_{n/2-1,n/2}
  //   alpha_{n/2,n/2} - alpha_{n/2+1,n/2-1} - alpha_{n/2-1,n/2}
  for (int n : {8, 10}) {
    const int h = n / 2, r = 3;
    ParamLaw t = make_T_II_r(n, r);
    const auto& ring = t.ring();
    // substitute only the first restriction block (alpha chain + gamma_1,
    // alpha_{1,n}, alpha_{n,n}), keeping the bulk parameters symbolic
    std::map<int, Poly> block1;
    for (int i = 2; i <= n - 2; ++i)
      block1[ring->var_index(idx(n, 1, i))] = Poly::constant(ring, Scalar(-1));
    block1[ring->var_index("gamma_1")] = Poly(ring);
    block1[ring->var_index("alpha_1_" + std::to_string(n))] = Poly(ring);
    if (ring->var_index("alpha_" + std::to_string(n) + "_" + std::to_string(n)) >= 0)
      block1[ring->var_index("alpha_" + std::to_string(n) + "_" + std::to_string(n))] =
          Poly(ring);
    std::vector<Poly> res = leibniz_residuals(t.substitute(block1));

    auto a = [&](int i, int j) { return var(t, idx(n, i, j)); };
    CHECK(in_linear_span(res, a(h, h) - a(h, h - 1) + a(h + 1, h - 1)));
    CHECK(in_linear_span(res, a(h, h - 1) + a(h - 1, h)));
    CHECK(in_linear_span(res, a(h, h) - a(h + 1, h - 1) - a(h - 1, h)));
    CHECK(in_linear_span(res, a(h, h)));  // their consequence
  }

  // at the boundary r = n-3 the third relation picks up a quadratic
  // correction gamma_2 * alpha_{1,n}, since alpha_{1,n} is not eliminated
  {
    const int n = 6, h = 3;
    ParamLaw t = make_T_II_r(n, 3);
    const auto& ring = t.ring();
    std::map<int, Poly> block1;
    for (int i = 2; i <= n - 2; ++i)
      block1[ring->var_index(idx(n, 1, i))] = Poly::constant(ring, Scalar(-1));
    block1[ring->var_index("gamma_1")] = Poly(ring);
    std::vector<Poly> res = leibniz_residuals(t.substitute(block1));
    auto a = [&](int i, int j) { return var(t, idx(n, i, j)); };
    CHECK(in_linear_span(res, a(h, h) - a(h, h - 1) + a(h + 1, h - 1)));
    CHECK(in_linear_span(res, a(h, h - 1) + a(h - 1, h)));
    CHECK_FALSE(in_linear_span(res, a(h, h) - a(h + 1, h - 1) - a(h - 1, h)));
    CHECK(in_linear_span(res, a(h, h) - a(h + 1, h - 1) - a(h - 1, h) +
                                  var(t, "gamma_2") * var(t, "alpha_1_6")));
  }
}

TEST_CASE("restriction verification, type-II lemmas") {
  int n = 6;
  {  // r = 1 and r = 2, alpha = 0: complete eliminations
    ParamLaw t1 = make_T_II_1(n);
    RestrictionReport r1 = verify_restrictions(t1, restrictions_II_1(t1, n, 0), 40);
    CHECK(r1.sufficiency_all_zero);
    CHECK(r1.equations_vanish);

    ParamLaw t2 = make_T_II_2(n);
    RestrictionReport r2 = verify_restrictions(t2, restrictions_II_2(t2, n, 0), 40);
    CHECK(r2.sufficiency_all_zero);
    CHECK(r2.equations_vanish);
  }
  {  // r > 2, alpha = 0: the branch contradicts genericity (gamma = 0)
    ParamLaw t = make_T_II_r(n, 3);
    RestrictionReport r = verify_restrictions(t, restrictions_II_r(t, n, 3, 0), 40);
    CHECK(r.empty_branch);
    CHECK(r.equations_vanish);
  }
  {  // alpha = -1 keeps quadratic constraints alive: not identically zero
    ParamLaw t = make_T_II_r(n, 3);
    RestrictionReport r = verify_restrictions(t, restrictions_II_r(t, n, 3, -1), 40);
    CHECK_FALSE(r.sufficiency_all_zero);
    CHECK(r.equations_vanish);
  }
}

TEST_CASE("rank conditions") {
  // dim-4: rank(R_{e1 + A e3}) <= 1 forces beta_2 = 0, through the minor
  // (1 + A alpha_1) A beta_2
  ParamLaw t = make_T_dim4();
  std::vector<Poly> x(4, Poly(t.ring()));
  x[0] = Poly::constant(t.ring(), Scalar(1));
  x[2] = var(t, "A");
  std::vector<Poly> minors = rank_conditions(t, x, 1);
  Poly expected = (Poly::constant(t.ring(), Scalar(1)) + var(t, "A") * var(t, "alpha_1")) *
                  var(t, "A") * var(t, "beta_2");
  CHECK(contains_poly(minors, expected));
  // killing beta_2 kills every minor
  std::map<int, Poly> kill = {{t.ring()->var_index("beta_2"), Poly(t.ring())}};
  for (const Poly& m : minors) CHECK(m.substitute(kill).is_zero());

  // zero template: no minors at all
  auto ring = std::make_shared<PolyRing>();
  ring->add_var("A");
  ParamLaw zero(4, ring);
  std::vector<Poly> zx(4, Poly(ring));
  zx[0] = Poly::constant(ring, Scalar(1));
  CHECK(rank_conditions(zero, zx, 1).empty());
}

TEST_CASE("dim-4 reproduction") {
  Dim4Report r = reproduce_dim4();
  CHECK(r.ok());
  CHECK(r.survivors > 0);
  CHECK(r.rejected_rank > 0);
  CHECK(r.rejected_split > 0);
  CHECK(r.survivors + r.rejected_rank + r.rejected_split ==
        static_cast<int>(r.points.size()));

  // the normal form itself: point (0, 1, 0) survives with the identity witness
  bool found = false;
  for (const auto& p : r.points)
    if (p.params[0] == Scalar(0) && p.params[1] == Scalar(1) && p.params[2] == Scalar(0)) {
      found = true;
      CHECK(p.status == "survivor");
      CHECK(p.witness_verified);
    }
  CHECK(found);

  // beta_2 != 0 is always a rank rejection, beta_1 = beta_2 = 0 always split
  for (const auto& p : r.points) {
    if (!p.params[2].is_zero()) CHECK(p.status == "rejected_rank");
    if (p.params[1].is_zero() && p.params[2].is_zero()) CHECK(p.status == "rejected_split");
  }
}

TEST_CASE("theorem (I,1,2) reproduction at n = 6") {
  ThmI12Report r = reproduce_thm_I12(6);
  CHECK(r.ok());
  CHECK(r.minor_factor_found);
  CHECK(r.minors_vanish_at_gamma0);
  CHECK(r.gamma_nonzero_excluded);
  CHECK(r.verified_variant1 > 0);
  CHECK(r.verified_variant2 > 0);
  CHECK(r.failed == 0);
}

TEST_CASE("type-II lemma verification at n = 5") {
  for (int rr : {1, 2, 3})
    for (int branch : {0, -1}) {
      TypeIIReport rep = verify_typeII_lemma(5, rr, branch, 5000);
      CAPTURE(rr);
      CAPTURE(branch);
      CHECK(rep.counterexamples == 0);
      CHECK(rep.leibniz_valid > 0);
      if (rr == 2 && branch == 0) CHECK(rep.type_I_conversion_verified);
      if (branch == -1) CHECK(rep.lie > 0);
    }
}

TEST_CASE("theorem 1 bound r_s <= s") {
  Theorem1Report r = verify_theorem1(5, 6, 2000);
  CHECK(r.ok());
  CHECK(r.type_I_profiles > 0);
  CHECK(r.template_points_checked > 0);
  CHECK(r.violations == 0);
}
