#include <doctest.h>

#include <random>

#include "leibniz/subspace.hpp"

using namespace leibniz;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

Scalar rand_scalar(std::mt19937_64& rng) {
  return Scalar(rand_rational(rng), rand_rational(rng));
}

MatrixQ rand_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  MatrixQ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rand_scalar(rng);
  return m;
}

}  // namespace

TEST_CASE("scalar field arithmetic") {
  Scalar i = Scalar::i();
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  CHECK(i * i == Scalar(-1));
  CHECK(Scalar::fraction(1, 2) + Scalar::fraction(1, 3) == Scalar::fraction(5, 6));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);

  // exactness: (a/b)*b = a over many random rationals
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10000; ++k) {
    Scalar a = rand_scalar(rng);
    Scalar b = rand_scalar(rng);
    if (b.is_zero()) continue;
    CHECK(a / b * b == a);
  }
}

TEST_CASE("scalar text format") {
  CHECK(Scalar::parse("1/2+3/4*i") == Scalar(Rational(1, 2), Rational(3, 4)));
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("-5/2") == Scalar::fraction(-5, 2));
  CHECK(Scalar::parse("0") == Scalar(0));
  CHECK(Scalar::parse("2-i") == Scalar(Rational(2), Rational(-1)));
  CHECK_THROWS_AS(Scalar::parse("3/"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    Scalar s = rand_scalar(rng);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar(Rational(1), Rational(1)).str() == "1+i");
  CHECK(Scalar(Rational(0), Rational(-3, 2)).str() == "-3/2*i");
}

TEST_CASE("rref basics") {
  CHECK(rref(MatrixQ::Zero(3, 4)).rank == 0);
  CHECK(rref(MatrixQ::Identity(5, 5)).rank == 5);

  // nilpotent single Jordan block of size 4 has rank 3
  MatrixQ j = MatrixQ::Zero(4, 4);
  for (int k = 0; k < 3; ++k) j(k, k + 1) = Scalar(1);
  CHECK(rank(j) == 3);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    MatrixQ m = rand_matrix(4, 6, rng);
    RrefResult once = rref(m);
    RrefResult twice = rref(once.matrix);
    CHECK(mat_equal(once.matrix, twice.matrix));
    CHECK(once.rank == twice.rank);
  }
}

TEST_CASE("rank inequalities") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    MatrixQ m = rand_matrix(4, 4, rng);
    MatrixQ n = rand_matrix(4, 4, rng);
    int rm = rank(m), rn = rank(n);
    CHECK(rm <= 4);
    CHECK(rank(MatrixQ(m * n)) <= std::min(rm, rn));
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937_64 rng(13);
  int invertible = 0;
  for (int k = 0; k < 30; ++k) {
    MatrixQ m = rand_matrix(4, 4, rng);
    Scalar d = determinant(m);
    if (d.is_zero()) {
      CHECK(rank(m) < 4);
      CHECK_THROWS_AS(inverse(m), std::invalid_argument);
      continue;
    }
    ++invertible;
    MatrixQ inv = inverse(m);
    CHECK(mat_equal(MatrixQ(m * inv), MatrixQ(MatrixQ::Identity(4, 4))));
    CHECK(determinant(inv) * d == Scalar(1));
  }
  CHECK(invertible > 20);  // random rational matrices are almost surely invertible
}

TEST_CASE("kernel basis") {
  MatrixQ j = MatrixQ::Zero(4, 4);
  for (int k = 0; k < 3; ++k) j(k, k + 1) = Scalar(1);
  MatrixQ ker = kernel_basis(j);
  CHECK(ker.rows() == 1);
  for (Eigen::Index r = 0; r < ker.rows(); ++r)
    CHECK(is_zero(VectorQ(j * ker.row(r).transpose())));

  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    MatrixQ m = rand_matrix(3, 5, rng);
    MatrixQ ker2 = kernel_basis(m);
    CHECK(ker2.rows() == 5 - rank(m));
    for (Eigen::Index r = 0; r < ker2.rows(); ++r)
      CHECK(is_zero(VectorQ(m * ker2.row(r).transpose())));
  }
}

TEST_CASE("subspace operations") {
  std::mt19937_64 rng(23);
  Subspace a = Subspace::span(4, rand_matrix(2, 4, rng));
  CHECK(a + a == a);
  CHECK(a.intersect(Subspace::zero(4)) == Subspace::zero(4));
  CHECK(Subspace::full(4).contains(a));
  CHECK_THROWS_AS(a + Subspace::zero(5), std::invalid_argument);

  // canonical rref basis: equal subspaces from different spanning sets
  MatrixQ base = rand_matrix(2, 4, rng);
  MatrixQ mixed(3, 4);
  mixed.row(0) = base.row(0) + base.row(1);
  mixed.row(1) = base.row(1) * Scalar(7);
  mixed.row(2) = base.row(0) * Scalar::fraction(1, 3);
  CHECK(Subspace::span(4, base) == Subspace::span(4, mixed));
}

TEST_CASE("grassmann dimension identity on random subspace pairs") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 100; ++k) {
    std::uniform_int_distribution<int> rows(0, 4);
    Subspace a = Subspace::span(6, rand_matrix(rows(rng), 6, rng));
    Subspace b = Subspace::span(6, rand_matrix(rows(rng), 6, rng));
    Subspace sum = a + b;
    Subspace meet = a.intersect(b);
    CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(sum.contains(a));
    CHECK(sum.contains(b));
  }
}
