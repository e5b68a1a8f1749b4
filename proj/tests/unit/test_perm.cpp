#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "mrt/perm/group.hpp"
#include "mrt/perm/steinberg.hpp"
#include "mrt/util/error.hpp"
#include "../support/oracle_groups.hpp"

using namespace mrt;
using perm::Perm;

TEST_CASE("perm arithmetic and orders") {
  CHECK(Perm(5).order() == 1);
  CHECK(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}}).order() == 6);
  Perm a = Perm::from_cycles(4, {{0, 1, 2, 3}});
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Perm::from_images1({1, 1, 3}), math_error);
  CHECK_THROWS_AS(Perm(3) * Perm(4), math_error);
  CHECK(Perm::from_cycles(5, {{0, 1}}).fixed_points() == 3);
  CHECK(Perm::from_cycles(5, {{0, 1}}).to_cycle_string() == "(1 2)");
}

TEST_CASE("enumeration") {
  perm::Group c2(2, {Perm::from_cycles(2, {{0, 1}})});
  CHECK(c2.order() == 2);
  CHECK(testsupport::s4().order() == 24);
  CHECK(testsupport::a5().order() == 60);  // matches 5!/2
  CHECK(testsupport::l27().order() == 168);
  CHECK(testsupport::pgl27().order() == 336);
  CHECK_THROWS_AS(testsupport::s5().enumerate(50), budget_error);
  // words reconstruct elements
  const perm::Group s4 = testsupport::s4();
  const perm::Enumeration& en = s4.enumerate();
  for (std::size_t i = 0; i < en.elements.size(); ++i) {
    Perm p(4);
    for (auto gi : s4.word_of(i)) p = p * s4.generators()[gi];
    CHECK(p == en.elements[i]);
  }
}

TEST_CASE("conjugacy classes") {
  perm::Group s3(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  const perm::ClassData& cd3 = s3.conjugacy_classes();
  std::multiset<std::size_t> sizes;
  for (auto& c : cd3.classes) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  const perm::Group s4 = testsupport::s4();
  const perm::ClassData& cd = s4.conjugacy_classes();
  CHECK(cd.classes.size() == 5);
  std::size_t total = 0;
  for (auto& c : cd.classes) total += c.size;
  CHECK(total == 24);
  // brute-force conjugation oracle: class of each element by direct sweep
  const perm::Enumeration& en = s4.enumerate();
  for (std::size_t i = 0; i < en.elements.size(); ++i) {
    std::set<Perm> orbit;
    for (const Perm& t : en.elements) orbit.insert(en.elements[i].conjugated_by(t));
    CHECK(orbit.size() == cd.classes[cd.class_of[i]].size);
  }
  // power maps respect orders
  for (auto& [p, pm] : cd.power_maps)
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
      std::uint64_t n = cd.classes[c].order;
      CHECK(cd.classes[pm[c]].order == n / std::gcd(n, p));
    }
}

TEST_CASE("coset distribution") {
  const perm::Group s5 = testsupport::s5();
  // V = {1}: singleton multiset with the invariants of y
  Perm y = Perm::from_cycles(5, {{0, 1}});
  auto d1 = perm::coset_distribution(s5, y, {Perm(5)});
  REQUIRE(d1.lines.size() == 1);
  CHECK(d1.lines[0].order == 2);
  CHECK(d1.lines[0].count == 1);

  // Klein four group: multiset matches the elementwise conjugacy-test oracle
  std::vector<Perm> v{Perm(5), Perm::from_cycles(5, {{0, 1}, {2, 3}}),
                      Perm::from_cycles(5, {{0, 2}, {1, 3}}), Perm::from_cycles(5, {{0, 3}, {1, 2}})};
  auto d = perm::coset_distribution(s5, y, v);
  std::size_t total = 0;
  for (auto& line : d.lines) total += line.count;
  CHECK(total == v.size());
  // oracle: count class membership of each yv by brute conjugation
  const perm::Enumeration& en = s5.enumerate();
  const perm::ClassData& cd = s5.conjugacy_classes();
  std::map<std::size_t, std::size_t> oracle;
  for (const Perm& vi : v) ++oracle[cd.class_of[en.index.at(y * vi)]];
  std::map<std::size_t, std::size_t> got;
  for (auto& line : d.lines) got[*line.class_index] += line.count;
  CHECK(got == oracle);
}

TEST_CASE("filtered pair search") {
  // empty predicate list: all |C|^2 ordered pairs
  std::vector<Perm> c{Perm(3), Perm::from_cycles(3, {{0, 1}})};
  CHECK(perm::filtered_pair_search(c, {}).size() == 4);

  // S4 transpositions with |st| = 3: 24 ordered pairs
  const perm::Group s4 = testsupport::s4();
  std::vector<Perm> transpositions;
  for (const Perm& g : s4.enumerate().elements)
    if (g.order() == 2 && g.fixed_points() == 2) transpositions.push_back(g);
  REQUIRE(transpositions.size() == 6);
  auto pairs = perm::filtered_pair_search(transpositions, {perm::product_order_is(3)});
  CHECK(pairs.size() == 24);

  // relabeling invariance: conjugating all inputs permutes the output pairs
  Perm relabel = Perm::from_cycles(4, {{0, 2, 1}});
  std::vector<Perm> conj;
  for (const Perm& t : transpositions) conj.push_back(t.conjugated_by(relabel));
  auto pairs2 = perm::filtered_pair_search(conj, {perm::product_order_is(3)});
  CHECK(pairs2.size() == pairs.size());

  // intersection-size and centralizer predicates on a small case
  std::vector<Perm> u;
  for (const Perm& g : s4.enumerate().elements)
    if (g.order() <= 2 && (g.is_identity() || g.fixed_points() == 0)) u.push_back(g);  // V4
  REQUIRE(u.size() == 4);
  auto inter = perm::intersection_size_is(u, 4, true);
  CHECK(inter.test(Perm(4), Perm(4)));  // V4 is normal in S4
  auto nontriv = perm::centralizer_in_set_trivial(u);
  CHECK(!nontriv.test(Perm(4), Perm(4)));
}

TEST_CASE("sylow subgroups") {
  const perm::Group s4 = testsupport::s4();
  auto syl2 = s4.sylow_subgroup(2);
  CHECK(syl2.size() == 8);
  auto syl3 = s4.sylow_subgroup(3);
  CHECK(syl3.size() == 3);
  // x-invariant Sylow: inner involution
  Perm x = Perm::from_cycles(4, {{0, 1}});
  auto inv = s4.invariant_sylow(2, x);
  CHECK(inv.subgroup.size() == 8);
  std::set<Perm> set(inv.subgroup.begin(), inv.subgroup.end());
  for (const Perm& s : inv.subgroup) CHECK(set.count(s.conjugated_by(x)));
  // x = identity: any Sylow subgroup is invariant
  auto inv2 = s4.invariant_sylow(3, Perm(4));
  CHECK(inv2.subgroup.size() == 3);
  // abelian group: the whole Sylow subgroup is trivially invariant
  perm::Group c6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  auto inv3 = c6.invariant_sylow(3, Perm(6));
  CHECK(inv3.subgroup.size() == 3);
}

TEST_CASE("PERM file round trip") {
  const perm::Group s4 = testsupport::s4();
  std::ostringstream os;
  perm::write_perms(os, 4, s4.generators());
  std::istringstream is(os.str());
  std::size_t degree = 0;
  auto back = perm::read_perms(is, degree);
  CHECK(degree == 4);
  CHECK(back == s4.generators());
  std::istringstream bad("PERM 3\n1 2\n");
  CHECK_THROWS_AS(perm::read_perms(bad, degree), input_error);
  std::istringstream empty("");
  CHECK_THROWS_AS(perm::read_perms(empty, degree), input_error);
}

TEST_CASE("BN data validation") {
  perm::BNData bn = testsupport::sl32_bn();
  CHECK_NOTHROW(bn.validate());
  CHECK(bn.u_elements.size() == 8);
  CHECK(bn.w_elements.size() == 6);
  // breaking the length function is caught
  perm::BNData bad = bn;
  bad.w_elements[1].second = 2;
  CHECK_THROWS_AS(bad.validate(), math_error);
  // U must be closed
  perm::BNData bad2 = bn;
  bad2.u_elements.pop_back();
  CHECK_THROWS_AS(bad2.validate(), math_error);
}

TEST_CASE("steinberg module on the trivial group") {
  perm::BNData triv{perm::Group(1, {Perm(1)}), {Perm(1)}, {{Perm(1), 0}}, {}};
  auto st = perm::steinberg_element_module(triv, gf::Field::prime(3));
  CHECK(st.dim == 1);
  CHECK(st.gens[0].at(0, 0) == 1);
}
