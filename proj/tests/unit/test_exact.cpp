#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "mrt/exact/cyclotomic.hpp"
#include "mrt/exact/param.hpp"
#include "mrt/exact/ratsolve.hpp"
#include "mrt/util/error.hpp"
#include "mrt/util/prng.hpp"

using namespace mrt;
using exact::Cyclotomic;
using exact::Int;
using exact::ParamInt;
using exact::ParamPoly;
using exact::ParamSystem;
using exact::Rational;
using C = Cyclotomic;

namespace {

C random_cyclotomic(std::uint64_t n, Prng& rng) {
  C v;
  for (int i = 0; i < 3; ++i)
    v += C(Rational(static_cast<long long>(rng.below(9)) - 4)) *
         C::root_of_unity(n, rng.below(n));
  return v;
}

}  // namespace

TEST_CASE("cyclotomic identities") {
  CHECK((C::root_of_unity(3, 1) + C::root_of_unity(3, 2)).rational_value() == -1);
  CHECK(C(Rational(7, 3)).conj() == C(Rational(7, 3)));
  CHECK((C::root_of_unity(5, 1) + C::root_of_unity(5, 4)) *
            (C::root_of_unity(5, 2) + C::root_of_unity(5, 3)) ==
        C(-1));
  // conductor minimization
  CHECK(C::root_of_unity(6, 1).conductor() == 3);
  CHECK(C::root_of_unity(12, 4) == C::root_of_unity(3, 1));
  CHECK((C::root_of_unity(8, 2)) == C::root_of_unity(4, 1));
  CHECK(C::root_of_unity(4, 1) * C::root_of_unity(4, 1) == C(-1));
}

TEST_CASE("cyclotomic ring laws on random triples") {
  Prng rng(11);
  for (int t = 0; t < 100; ++t) {
    std::uint64_t n = 2 + rng.below(20);
    C a = random_cyclotomic(n, rng), b = random_cyclotomic(n, rng), c = random_cyclotomic(n, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("trace form of v conj(v) is a nonnegative rational") {
  Prng rng(12);
  for (int t = 0; t < 50; ++t) {
    std::uint64_t n = 3 + rng.below(15);
    C v = random_cyclotomic(n, rng);
    C norm = v * v.conj();
    // sum over the Galois orbit is rational and >= 0
    C tr;
    std::uint64_t cond = norm.conductor();
    for (std::uint64_t j = 1; j <= cond; ++j) {
      if (std::gcd(j, cond) != 1) continue;
      tr += norm.galois(j);
    }
    REQUIRE(tr.is_rational());
    CHECK(tr.rational_value() >= 0);
  }
}

TEST_CASE("sign evaluation") {
  // golden ratio (1+sqrt5)/2 = -(z5^2+z5^3) > 0; its conjugate < 0
  C pos = -(C::root_of_unity(5, 2) + C::root_of_unity(5, 3));
  C neg = C(1) - pos;  // (1-sqrt5)/2
  CHECK(pos.sign() == 1);
  CHECK(neg.sign() == -1);
  CHECK(C(0).sign() == 0);
  CHECK(C(Rational(-3, 7)).sign() == -1);
  // sqrt(-7)-ish value is not real
  C s7 = C::root_of_unity(7, 1) + C::root_of_unity(7, 2) + C::root_of_unity(7, 4);
  CHECK(!s7.is_real());
  CHECK_THROWS_AS(s7.sign(), math_error);
  // 2 cos(2 pi / 7) > 0, 2 cos(3 * 2 pi / 7) < 0
  CHECK((C::root_of_unity(7, 1) + C::root_of_unity(7, 6)).sign() == 1);
  CHECK((C::root_of_unity(7, 3) + C::root_of_unity(7, 4)).sign() == -1);
}

TEST_CASE("reduction mod p: examples and homomorphism") {
  auto f3 = gf::Field::prime(3);
  auto f7 = gf::Field::prime(7);
  CHECK(C(5).reduce_mod_p(f3) == 2);
  CHECK(C(-1).reduce_mod_p(f7) == 6);
  auto f9 = gf::Field::extension(3, 2);
  gf::Fel i4 = C::root_of_unity(4, 1).reduce_mod_p(f9);
  CHECK(f9.mul(i4, i4) == f9.neg(1));
  CHECK_THROWS_AS(C::root_of_unity(3, 1).reduce_mod_p(f3), math_error);   // p | n
  CHECK_THROWS_AS(C::root_of_unity(5, 1).reduce_mod_p(f3), math_error);   // 5 does not divide 2
  CHECK_THROWS_AS(C(Rational(1, 3)).reduce_mod_p(f3), math_error);        // p | denominator
  Prng rng(13);
  for (int t = 0; t < 100; ++t) {
    auto f = gf::Field::extension(3, 4);  // 3^4 - 1 = 80
    std::uint64_t n = t % 2 ? 16 : 80;
    C a = random_cyclotomic(n, rng), b = random_cyclotomic(n, rng);
    CHECK(f.add(a.reduce_mod_p(f), b.reduce_mod_p(f)) == (a + b).reduce_mod_p(f));
    CHECK(f.mul(a.reduce_mod_p(f), b.reduce_mod_p(f)) == (a * b).reduce_mod_p(f));
  }
}

TEST_CASE("cyclotomic literals round trip") {
  Prng rng(14);
  CHECK(C::parse("3/2+E(8)^1-E(8)^3").to_string() == "3/2+E(8)^1-E(8)^3");
  CHECK(C::parse("0").is_zero());
  CHECK(C::parse("-5/3") == C(Rational(-5, 3)));
  CHECK(C::parse("2*E(7)^2") == C(2) * C::root_of_unity(7, 2));
  CHECK_THROWS_AS(C::parse(""), input_error);
  CHECK_THROWS_AS(C::parse("E(0)"), input_error);
  CHECK_THROWS_AS(C::parse("1+"), input_error);
  CHECK_THROWS_AS(C::parse("x"), input_error);
  for (int t = 0; t < 100; ++t) {
    C v = random_cyclotomic(2 + rng.below(24), rng);
    CHECK(C::parse(v.to_string()) == v);
  }
}

TEST_CASE("rat_solve") {
  using exact::RatMat;
  using exact::RatVec;
  // identity: solution = rhs, integral iff rhs integral
  RatMat id{{1, 0}, {0, 1}};
  auto s = exact::rat_solve(id, RatVec{Rational(3), Rational(-2)});
  REQUIRE(s.status == exact::RatSolve::Status::unique);
  CHECK(s.integral);
  auto s2 = exact::rat_solve(id, RatVec{Rational(1, 2), Rational(0)});
  CHECK(!s2.integral);
  // inconsistent
  RatMat a{{1, 1}, {1, 1}};
  auto s3 = exact::rat_solve(a, RatVec{Rational(0), Rational(1)});
  CHECK(s3.status == exact::RatSolve::Status::inconsistent);
  // underdetermined
  auto s4 = exact::rat_solve(RatMat{{1, 1}}, RatVec{Rational(1)});
  CHECK(s4.status == exact::RatSolve::Status::underdetermined);
  CHECK(s4.nullity == 1);
  // unimodular systems have integral solutions (adjugate oracle)
  Prng rng(15);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + rng.below(4);
    RatMat u(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    for (int steps = 0; steps < 12; ++steps) {
      std::size_t i = rng.below(n), j = rng.below(n);
      if (i == j) continue;
      Rational c = Rational(static_cast<long long>(rng.below(5)) - 2);
      for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
    }
    RatVec x(n);
    for (auto& v : x) v = Rational(static_cast<long long>(rng.below(9)) - 4);
    RatVec b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) b[i] += u[i][k] * x[k];
    auto sol = exact::rat_solve(u, b);
    REQUIRE(sol.status == exact::RatSolve::Status::unique);
    CHECK(sol.integral);
    CHECK(sol.solution == x);
  }
}

TEST_CASE("param_eval and substitution") {
  ParamSystem sys;
  sys.declare("a", 0, 4);
  sys.declare("at", 0, 4);
  ParamInt expr = ParamInt::param("a") + ParamInt::param("at");
  CHECK(sys.eval(expr, {{"a", 3}, {"at", 1}}) == 4);
  CHECK(sys.eval(ParamInt(9), {}) == 9);
  CHECK_THROWS_AS(sys.eval(expr, {{"a", 7}, {"at", 0}}), math_error);  // out of domain
  CHECK_THROWS_AS(sys.eval(expr, {{"a", 1}}), math_error);             // missing
  // ct under c = 1 with x~ = 1 - x
  ParamInt ct = ParamInt(1) - ParamInt::param("c");
  CHECK(ct.substitute({{"c", 1}}).constant() == 0);
}

TEST_CASE("param_solve examples") {
  {
    ParamSystem sys;
    sys.declare("b", 0, 1);
    sys.declare("bt", 0, 1);
    sys.require_eq0(ParamPoly(ParamInt::param("b") + ParamInt::param("bt") - ParamInt(1)));
    sys.require_geq0(ParamPoly(ParamInt(1) - ParamInt::param("bt").scaled(2)));
    auto r = sys.solve();
    REQUIRE(r.survivors.size() == 1);
    CHECK(r.survivors[0].at("b") == 1);
    CHECK(r.survivors[0].at("bt") == 0);
  }
  {
    // a~ d~ + a d = 0 with complements forces d = a~
    ParamSystem sys;
    for (auto n : {"a", "at", "d", "dt"}) sys.declare(n, 0, 1);
    sys.require_eq0(ParamPoly(ParamInt::param("a") + ParamInt::param("at") - ParamInt(1)));
    sys.require_eq0(ParamPoly(ParamInt::param("d") + ParamInt::param("dt") - ParamInt(1)));
    ParamPoly quad = sys.mul(ParamPoly(ParamInt::param("at")), ParamPoly(ParamInt::param("dt"))) +
                     sys.mul(ParamPoly(ParamInt::param("a")), ParamPoly(ParamInt::param("d")));
    sys.require_eq0(quad);
    auto r = sys.solve();
    REQUIRE(r.survivors.size() == 2);
    for (auto& s : r.survivors) CHECK(s.at("d") == s.at("at"));
  }
  {
    ParamSystem sys;
    sys.declare("x", 0, 1);
    CHECK(sys.solve().survivors.size() == 2);
  }
  {
    // x^2 = x collapse is rejected outside 0/1 domains
    ParamSystem sys;
    sys.declare("x", 0, 2);
    CHECK_THROWS_AS(sys.mul(ParamPoly(ParamInt::param("x")), ParamPoly(ParamInt::param("x"))),
                    math_error);
  }
}

TEST_CASE("affine literal round trips") {
  for (const char* text : {"0", "3", "-2", "a", "-a", "1-a", "3-2b", "a+at", "1-2bt"}) {
    CHECK(ParamInt::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(ParamInt::parse(""), input_error);
  CHECK_THROWS_AS(ParamInt::parse("+"), input_error);
  CHECK_THROWS_AS(ParamInt::parse("a+"), input_error);
}

TEST_CASE("param matrix evaluation and permutation") {
  exact::ParamMatrix m(2, 2);
  m.at(0, 0) = ParamInt::param("a");
  m.at(0, 1) = ParamInt(1) - ParamInt::param("a");
  m.at(1, 0) = m.at(0, 1);
  m.at(1, 1) = ParamInt::param("a");
  auto v = m.eval({{"a", 1}});
  CHECK(v[0][0] == 1);
  CHECK(v[0][1] == 0);
  // swapping rows equals swapping columns for this symmetric layout
  CHECK(m.permuted({1, 0}, {0, 1}) == m.permuted({0, 1}, {1, 0}));
}
