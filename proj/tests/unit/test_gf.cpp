#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mrt/gf/io.hpp"
#include "mrt/gf/matrix.hpp"
#include "mrt/util/error.hpp"
#include "mrt/util/prng.hpp"

using namespace mrt;
using gf::Fel;
using gf::Field;
using gf::Matrix;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Prng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Fel(rng.below(f.size())));
  return m;
}

// test-local schoolbook product, independent of the library paths
Matrix schoolbook(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix r(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Fel acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      r.set(i, j, acc);
    }
  return r;
}

// independent row reduction for the rank oracle
std::size_t rank_oracle(Matrix m) {
  const Field& f = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t piv = m.rows();
    for (std::size_t i = rank; i < m.rows(); ++i)
      if (m.at(i, col)) { piv = i; break; }
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Fel t = m.at(rank, j);
      m.set(rank, j, m.at(piv, j));
      m.set(piv, j, t);
    }
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (!m.at(i, col)) continue;
      Fel ratio = f.mul(m.at(i, col), f.inv(m.at(rank, col)));
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(ratio, m.at(rank, j))));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
  CHECK_THROWS_AS(Field::prime(4), math_error);
  CHECK_THROWS_AS(Field::prime(253), math_error);
  Field f7 = Field::prime(7);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.pow(3, 6) == 1);
  Field f9 = Field::extension(3, 2);
  CHECK(f9.size() == 9);
  // defining polynomial must be irreducible: x^2 + 2 = (x-1)(x+1) over F_3
  CHECK_THROWS_AS(Field::extension(3, std::vector<std::uint8_t>{2, 0, 1}), math_error);
  CHECK_NOTHROW(Field::extension(3, std::vector<std::uint8_t>{1, 0, 1}));  // x^2 + 1
}

TEST_CASE("field axioms on randomized triples in extension fields") {
  Prng rng(21);
  for (Field f : {Field::extension(2, 4), Field::extension(5, 2), Field::extension(3, 3)}) {
    for (int t = 0; t < 100; ++t) {
      Fel a = Fel(rng.below(f.size())), b = Fel(rng.below(f.size())), c = Fel(rng.below(f.size()));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("mat_mul: identity, hand example, schoolbook oracle") {
  Field f3 = Field::prime(3);
  Prng rng(1);
  Matrix m = random_matrix(f3, 3, 3, rng);
  CHECK(Matrix::identity(f3, 3) * m == m);

  Matrix a(f3, 2, 2), b(f3, 2, 2);
  a.set(0, 0, 1); a.set(0, 1, 2); a.set(1, 0, 0); a.set(1, 1, 1);
  b.set(0, 0, 1); b.set(0, 1, 1); b.set(1, 0, 1); b.set(1, 1, 0);
  Matrix ab = a * b;
  CHECK(ab.at(0, 0) == 0);
  CHECK(ab.at(0, 1) == 1);
  CHECK(ab.at(1, 0) == 1);
  CHECK(ab.at(1, 1) == 0);

  Field f7 = Field::prime(7);
  Matrix x = random_matrix(f7, 50, 50, rng);
  Matrix y = random_matrix(f7, 50, 50, rng);
  CHECK(x * y == schoolbook(x, y));

  CHECK_THROWS_AS(random_matrix(f3, 2, 3, rng) * random_matrix(f3, 2, 3, rng), math_error);
  CHECK_THROWS_AS(random_matrix(f3, 2, 2, rng) * random_matrix(f7, 2, 2, rng), math_error);
}

TEST_CASE("packed paths agree with the generic path") {
  Prng rng(7);
  for (unsigned p : {2u, 3u}) {
    Field f = Field::prime(p);
    Matrix a = random_matrix(f, 130, 95, rng);
    Matrix b = random_matrix(f, 95, 170, rng);
    CHECK(a * b == a.mul_generic(b));
  }
}

TEST_CASE("rref: zero, identity, rank oracle, idempotence") {
  Field f3 = Field::prime(3);
  Matrix z(f3, 4, 5);
  CHECK(z.rref().rank == 0);
  CHECK(Matrix::identity(f3, 4).rref().rank == 4);
  Prng rng(3);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_matrix(f3, 20, 30, rng);
    auto e = a.rref();
    CHECK(e.rank == rank_oracle(a));
    CHECK(e.reduced.rref().reduced == e.reduced);
  }
}

TEST_CASE("nullspace: identity, hand case, verification") {
  Field f2 = Field::prime(2);
  CHECK(Matrix::identity(f2, 5).nullspace().rows() == 0);
  Matrix row(f2, 1, 2);
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  Matrix ns = row.nullspace();
  CHECK(ns.rows() == 1);
  CHECK(ns.at(0, 0) == 1);
  CHECK(ns.at(0, 1) == 1);
  Prng rng(4);
  Field f5 = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(f5, 6, 9, rng);
    Matrix n = a.nullspace();
    CHECK(n.rows() == a.cols() - a.rank());
    // every basis row is in the right kernel
    CHECK((a * n.transpose()).is_zero());
  }
}

TEST_CASE("kron: block-diagonal shape, trace multiplicativity, index oracle") {
  Field f5 = Field::prime(5);
  Prng rng(5);
  Matrix m = random_matrix(f5, 2, 2, rng);
  Matrix k = Matrix::identity(f5, 2).kron(m);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(k.at(i, j) == m.at(i, j));
      CHECK(k.at(2 + i, 2 + j) == m.at(i, j));
      CHECK(k.at(i, 2 + j) == 0);
    }
  Matrix a = random_matrix(f5, 3, 3, rng), b = random_matrix(f5, 3, 3, rng);
  CHECK(a.kron(b).trace() == f5.mul(a.trace(), b.trace()));
  Matrix kk = a.kron(b);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      CHECK(kk.at(i, j) == f5.mul(a.at(i / 3, j / 3), b.at(i % 3, j % 3)));
}

TEST_CASE("trace examples") {
  Field f7 = Field::prime(7);
  CHECK(Matrix::identity(f7, 10).trace() == 3);  // 10 mod 7
  CHECK(Matrix(f7, 4, 4).trace() == 0);
  CHECK_THROWS_AS(Matrix(f7, 2, 3).trace(), math_error);
  Prng rng(6);
  Matrix m = random_matrix(f7, 8, 8, rng);
  Fel s = 0;
  for (std::size_t i = 0; i < 8; ++i) s = f7.add(s, m.at(i, i));
  CHECK(m.trace() == s);
}

TEST_CASE("GFMAT round trip and strictness") {
  Prng rng(8);
  for (Field f : {Field::prime(2), Field::prime(251), Field::extension(3, 2)}) {
    Matrix m = random_matrix(f, 4, 6, rng);
    std::string text = gf::format_matrix(m);
    CHECK(gf::parse_matrix(text) == m);
    CHECK(gf::format_matrix(gf::parse_matrix(text)) == text);
  }
  CHECK_THROWS_AS(gf::parse_matrix("GFMAT 4 1 1 1\n0\n"), math_error);     // 4 not prime
  CHECK_THROWS_AS(gf::parse_matrix("GFMAT 3 1 2 2\n0 1\n"), input_error);  // truncated
  CHECK_THROWS_AS(gf::parse_matrix("GFMAT 3 1 1 2\n0 5\n"), input_error);  // not canonical
  CHECK_THROWS_AS(gf::parse_matrix("GFMAT 3 1 1 2\n0 1 2\n"), input_error);  // trailing
  CHECK_THROWS_AS(gf::parse_matrix("NOPE 3 1 1 1\n0\n"), input_error);
}

TEST_CASE("express_in_rows solves row-space membership") {
  Field f3 = Field::prime(3);
  Prng rng(9);
  Matrix basis = random_matrix(f3, 3, 6, rng);
  Matrix coeff = random_matrix(f3, 2, 3, rng);
  Matrix target = coeff * basis;
  auto sol = target.express_in_rows(basis);
  REQUIRE(sol.has_value());
  CHECK(*sol * basis == target);
}
