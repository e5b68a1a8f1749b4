#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mrt/chartab/automorphism.hpp"
#include "mrt/chartab/blocks.hpp"
#include "mrt/chartab/bruteforce.hpp"
#include "mrt/chartab/extension.hpp"
#include "mrt/chartab/io.hpp"
#include "mrt/util/error.hpp"
#include "../support/oracle_groups.hpp"

#ifndef MRT_DATA_DIR
#define MRT_DATA_DIR "data"
#endif

using namespace mrt;
using chartab::CharVector;
using chartab::Table;
using exact::Cyclotomic;
using exact::Rational;

namespace {

chartab::GroupTable& s4_table() {
  static chartab::GroupTable t = chartab::table_from_group(testsupport::s4(), "S4", 0);
  return t;
}

chartab::GroupTable& a4_table() {
  static chartab::GroupTable t = chartab::table_from_group(testsupport::a4(), "A4", 0);
  return t;
}

}  // namespace

TEST_CASE("brute-force tables validate") {
  CHECK_NOTHROW(s4_table().table.validate());
  CHECK_NOTHROW(a4_table().table.validate());
  chartab::GroupTable s5 = chartab::table_from_group(testsupport::s5(), "S5", 0);
  CHECK_NOTHROW(s5.table.validate());
  CHECK(s5.table.num_classes() == 7);
}

TEST_CASE("shipped S4 fixture matches the brute-force table") {
  std::ifstream f(std::string(MRT_DATA_DIR) + "/tables/s4.tbl");
  REQUIRE(bool(f));
  Table t = chartab::read_table(f);
  CHECK_NOTHROW(t.validate());
  std::ostringstream ours, shipped;
  chartab::write_table(ours, s4_table().table);
  chartab::write_table(shipped, t);
  CHECK(ours.str() == shipped.str());
}

TEST_CASE("table validation catches corruption") {
  const Table& good = s4_table().table;
  // corrupt a centralizer order
  auto classes = good.classes();
  classes[1].centralizer += 1;
  Table bad(good.name(), good.group_order(), classes, good.power_maps(), good.irreducibles(),
            good.char_names());
  CHECK_THROWS_AS(bad.validate(), math_error);
  // corrupt a character value: orthogonality must fail
  auto irr = good.irreducibles();
  irr[2][3] += Cyclotomic(1);
  Table bad2(good.name(), good.group_order(), good.classes(), good.power_maps(), irr,
             good.char_names());
  CHECK_THROWS_AS(bad2.validate(), math_error);
}

TEST_CASE("scalar products and the regular character") {
  const Table& t = s4_table().table;
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
    for (std::size_t j = 0; j < t.irreducibles().size(); ++j)
      CHECK(chartab::scalar_product(t, t.irreducible(i), t.irreducible(j)) ==
            (i == j ? Rational(1) : Rational(0)));
  CharVector reg = chartab::regular_character(t);
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
    CHECK(chartab::scalar_product(t, reg, t.irreducible(i)) == Rational(t.degree(i)));
}

TEST_CASE("induction and restriction") {
  const Table& tS = s4_table().table;
  const Table& tA = a4_table().table;
  chartab::Fusion fus = chartab::fusion_from_groups(testsupport::a4(), a4_table(),
                                                    testsupport::s4(), s4_table());
  CHECK_NOTHROW(fus.validate(tA, tS));

  // induced trivial character = 1 + eps
  CharVector ind1 = chartab::induce(fus, tA, tS, tA.irreducible(0));
  std::size_t ones = 0;
  for (std::size_t j = 0; j < tS.irreducibles().size(); ++j) {
    Rational m = chartab::scalar_product(tS, ind1, tS.irreducible(j));
    if (tS.degree(j) == 1) {
      CHECK(m == 1);
      ++ones;
    } else {
      CHECK(m == 0);
    }
  }
  CHECK(ones == 2);

  // restrict(induce(chi)) = chi + chi^sigma for every A4 character
  chartab::ExtensionLabeling lab = [&] {
    std::size_t xclass = 0;
    std::vector<bool> inside(tS.num_classes(), false);
    for (auto j : fus.map) inside[j] = true;
    for (std::size_t c = 0; c < tS.num_classes(); ++c)
      if (!inside[c]) { xclass = c; break; }
    return chartab::label_extension(tA, tS, fus, xclass);
  }();
  for (std::size_t i = 0; i < tA.irreducibles().size(); ++i) {
    CharVector back = chartab::restrict_char(fus, tA, tS,
                                             chartab::induce(fus, tA, tS, tA.irreducible(i)));
    CharVector expect = tA.irreducible(i);
    const CharVector& twisted = tA.irreducible(lab.sigma_chars[i]);
    for (std::size_t c = 0; c < expect.size(); ++c) expect[c] += twisted[c];
    CHECK(back == expect);
  }

  // Frobenius reciprocity on all pairs
  for (std::size_t i = 0; i < tA.irreducibles().size(); ++i)
    for (std::size_t j = 0; j < tS.irreducibles().size(); ++j) {
      CharVector ind = chartab::induce(fus, tA, tS, tA.irreducible(i));
      CharVector res = chartab::restrict_char(fus, tA, tS, tS.irreducible(j));
      CHECK(chartab::scalar_product(tS, ind, tS.irreducible(j)) ==
            chartab::scalar_product(tA, tA.irreducible(i), res));
    }

  // tensor basics: eps (x) eps is the trivial character, a (x) 1 = a
  CharVector eps = tS.irreducible(lab.eps_index);
  CharVector trivial(tS.num_classes(), Cyclotomic(1));
  CHECK(chartab::tensor(eps, eps) == trivial);
  CHECK(chartab::tensor(tS.irreducible(3), trivial) == tS.irreducible(3));
  for (std::size_t c = 0; c < tS.num_classes(); ++c)
    CHECK(chartab::tensor(tS.irreducible(3), tS.irreducible(1))[c] ==
          tS.irreducible(3)[c] * tS.irreducible(1)[c]);
}

TEST_CASE("block partition") {
  const Table& t = s4_table().table;
  auto b3 = chartab::block_partition(t, 3);
  REQUIRE(b3.size() == 3);
  CHECK(b3[0].members.size() == 3);
  CHECK(b3[0].defect == 1);
  CHECK(b3[1].defect == 0);
  // p not dividing |G|: all singletons of defect 0
  auto b5 = chartab::block_partition(t, 5);
  CHECK(b5.size() == t.num_classes());
  for (auto& b : b5) {
    CHECK(b.defect == 0);
    CHECK(b.members.size() == 1);
  }
  // independence of the splitting-field degree
  auto b3_bigger = chartab::block_partition(t, 3, 2);
  REQUIRE(b3_bigger.size() == b3.size());
  for (std::size_t i = 0; i < b3.size(); ++i) CHECK(b3[i].members == b3_bigger[i].members);
  // blocks are permuted by tensoring with eps
  chartab::Fusion fus = chartab::fusion_from_groups(testsupport::a4(), a4_table(),
                                                    testsupport::s4(), s4_table());
  std::size_t xclass = 2;  // transpositions lie outside A4
  chartab::ExtensionLabeling lab = chartab::label_extension(a4_table().table, t, fus, xclass);
  for (auto& b : b3) {
    std::set<std::size_t> twisted;
    for (auto m : b.members) twisted.insert(lab.eps_twist(m));
    bool found = false;
    for (auto& b2 : b3)
      if (std::set<std::size_t>(b2.members.begin(), b2.members.end()) == twisted) found = true;
    CHECK(found);
  }
}

TEST_CASE("table automorphisms") {
  const Table& tS = s4_table().table;
  std::vector<std::size_t> id(tS.num_classes());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  CHECK(chartab::table_automorphism_check(tS, id));
  // swapping two classes of different orders fails
  perm::Group s3(3, {perm::Perm::from_cycles(3, {{0, 1}}), perm::Perm::from_cycles(3, {{0, 1, 2}})});
  chartab::GroupTable t3 = chartab::table_from_group(s3, "S3", 0);
  CHECK(!chartab::table_automorphism_check(t3.table, {0, 2, 1}));
  // A4 admits the automorphism swapping the two order-3 classes
  const Table& tA = a4_table().table;
  auto auts = chartab::enumerate_table_automorphisms(tA);
  CHECK(auts.size() == 2);
  std::vector<std::size_t> swap_classes = auts.back();
  std::vector<std::size_t> char_perm;
  CHECK(chartab::table_automorphism_check(tA, swap_classes, &char_perm));
  // fusion orbit under the automorphisms
  chartab::Fusion fus = chartab::fusion_from_groups(testsupport::a4(), a4_table(),
                                                    testsupport::s4(), s4_table());
  auto s_auts = chartab::enumerate_table_automorphisms(tS);
  auto orbit = chartab::automorphism_orbit_of_fusions(fus, auts, s_auts);
  CHECK(orbit.size() >= 1);
  for (auto& f : orbit) {
    chartab::Fusion fo{fus.source_name, fus.target_name, f};
    CHECK_NOTHROW(fo.validate(tA, tS));
  }
}

TEST_CASE("extension labeling A4 < S4") {
  const Table& tS = s4_table().table;
  const Table& tA = a4_table().table;
  chartab::Fusion fus = chartab::fusion_from_groups(testsupport::a4(), a4_table(),
                                                    testsupport::s4(), s4_table());
  std::vector<bool> inside(tS.num_classes(), false);
  for (auto j : fus.map) inside[j] = true;
  std::size_t xclass = 0;
  for (std::size_t c = 0; c < tS.num_classes(); ++c)
    if (!inside[c] && tS.classes()[c].order == 2) xclass = c;
  auto lab = chartab::label_extension(tA, tS, fus, xclass);

  std::size_t splits = 0, fused = 0;
  for (std::size_t i = 0; i < lab.labels.size(); ++i) {
    const auto& l = lab.labels[i];
    if (!l.split) {
      ++fused;
      // the omega pair fuses to the 2-dimensional character
      CHECK(tS.degree(l.fused_index) == 2 * 1);
      continue;
    }
    ++splits;
    CHECK(!l.convention_dependent);
    // chi^- = eps (x) chi^+
    CHECK(lab.eps_twist(l.plus_index) == l.minus_index);
    // sign convention: chi^+(x) > 0
    CHECK(tS.irreducible(l.plus_index)[xclass].sign() == 1);
    // (chi^+ + chi^-)|_H = 2 chi and chi^+ - chi^- vanishes inside H
    for (std::size_t c = 0; c < tA.num_classes(); ++c) {
      Cyclotomic sum = tS.irreducible(l.plus_index)[fus.map[c]] +
                       tS.irreducible(l.minus_index)[fus.map[c]];
      CHECK(sum == tA.irreducible(i)[c] * Cyclotomic(2));
    }
  }
  CHECK(splits == 2);
  CHECK(fused == 2);
}

TEST_CASE("CHARTAB and FUSION files round trip and reject junk") {
  const Table& t = s4_table().table;
  std::ostringstream os;
  chartab::write_table(os, t, 3);
  std::istringstream is(os.str());
  std::optional<std::uint64_t> prime;
  Table back = chartab::read_table(is, &prime);
  REQUIRE(prime.has_value());
  CHECK(*prime == 3);
  std::ostringstream os2;
  chartab::write_table(os2, back, 3);
  CHECK(os.str() == os2.str());

  std::istringstream junk("CHARTAB X 6\n1a 1 1 6\nPOW 2: 1 5\n");
  CHECK_THROWS_AS(chartab::read_table(junk), input_error);
  std::istringstream empty("");
  CHECK_THROWS_AS(chartab::read_table(empty), input_error);

  chartab::Fusion fus = chartab::fusion_from_groups(testsupport::a4(), a4_table(),
                                                    testsupport::s4(), s4_table());
  std::ostringstream fo;
  chartab::write_fusion(fo, fus);
  std::istringstream fi(fo.str());
  chartab::Fusion back_f = chartab::read_fusion(fi);
  CHECK(back_f.map == fus.map);
  std::ostringstream fo2;
  chartab::write_fusion(fo2, back_f);
  CHECK(fo.str() == fo2.str());
}
