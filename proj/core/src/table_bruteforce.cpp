#include "mrt/chartab/bruteforce.hpp"

#include <algorithm>
#include <numeric>

#include "mrt/mtx/brauerchar.hpp"
#include "mrt/mtx/simples.hpp"
#include "mrt/util/error.hpp"

namespace mrt::chartab {

using exact::Cyclotomic;
using exact::Int;

namespace {

// smallest splitting field F_{q^k}, q prime not dividing |G|, with
// exponent | q^k - 1; table-backed field sizes preferred
gf::Field pick_coprime_splitting_field(std::uint64_t group_order_mod_small,
                                       const std::vector<std::uint64_t>& order_primes,
                                       std::uint64_t exponent) {
  (void)group_order_mod_small;
  struct Cand {
    std::uint64_t size;
    unsigned q, k;
  };
  std::optional<Cand> best;
  for (unsigned q = 2; q <= 251; ++q) {
    if (!gf::is_prime(q)) continue;
    if (std::find(order_primes.begin(), order_primes.end(), q) != order_primes.end()) continue;
    unsigned k;
    try {
      k = mtx::multiplicative_order_mod(q, exponent);
    } catch (const math_error&) {
      continue;
    }
    double bits = k * std::log2(double(q));
    if (bits >= 31) continue;
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) size *= q;
    if (!best || size < best->size) best = Cand{size, q, k};
  }
  if (!best) throw math_error("table_from_group: no usable splitting field below the size cap");
  return best->k == 1 ? gf::Field::prime(best->q) : gf::Field::extension(best->q, best->k);
}

}  // namespace

GroupTable table_from_group(const perm::Group& g, const std::string& name, std::uint64_t seed) {
  const perm::Enumeration& en = g.enumerate();
  const perm::ClassData& cd = g.conjugacy_classes();
  const std::size_t ncl = cd.classes.size();

  // sorted class order: identity first, then by (element order, size, first appearance)
  std::vector<std::size_t> sorted(ncl);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = cd.classes[a];
    const auto& cb = cd.classes[b];
    if (ca.order != cb.order) return ca.order < cb.order;
    if (ca.size != cb.size) return ca.size < cb.size;
    return ca.rep < cb.rep;
  });
  std::vector<std::size_t> position(ncl);
  for (std::size_t i = 0; i < ncl; ++i) position[sorted[i]] = i;

  std::vector<ClassInfo> classes(ncl);
  std::vector<std::size_t> reps(ncl);
  {
    std::map<std::uint64_t, unsigned> letter;
    for (std::size_t i = 0; i < ncl; ++i) {
      const auto& c = cd.classes[sorted[i]];
      unsigned l = letter[c.order]++;
      std::string suffix;
      do {
        suffix.insert(suffix.begin(), char('a' + l % 26));
        l /= 26;
      } while (l);
      classes[i] = {std::to_string(c.order) + suffix, c.order, Int(c.size), Int(c.centralizer)};
      reps[i] = cd.classes[sorted[i]].rep;
    }
  }

  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
  for (const auto& [p, pm] : cd.power_maps) {
    std::vector<std::size_t> out(ncl);
    for (std::size_t i = 0; i < ncl; ++i) out[i] = position[pm[sorted[i]]];
    power_maps[p] = std::move(out);
  }

  std::vector<std::uint64_t> order_primes = gf::prime_factors(en.elements.size());
  gf::Field F = pick_coprime_splitting_field(0, order_primes, cd.exponent);
  std::vector<mtx::Module> simples = mtx::simples_closure(g, F, ncl, seed);

  // character values by eigenvalue lifting; q coprime to |G| makes these the
  // ordinary characters
  std::vector<CharVector> chars(simples.size(), CharVector(ncl));
  for (std::size_t ci = 0; ci < ncl; ++ci) {
    std::vector<std::size_t> word = g.word_of(reps[ci]);
    for (std::size_t si = 0; si < simples.size(); ++si) {
      gf::Matrix m = simples[si].act_word(word);
      chars[si][ci] = mtx::brauer_character_value(m, classes[ci].order);
    }
  }
  std::vector<std::size_t> char_order(simples.size());
  std::iota(char_order.begin(), char_order.end(), 0);
  std::sort(char_order.begin(), char_order.end(), [&](std::size_t a, std::size_t b) {
    if (simples[a].dim != simples[b].dim) return simples[a].dim < simples[b].dim;
    return std::lexicographical_compare(chars[a].begin(), chars[a].end(), chars[b].begin(),
                                        chars[b].end());
  });
  std::vector<CharVector> irreducibles;
  for (auto i : char_order) irreducibles.push_back(chars[i]);

  GroupTable out;
  out.table = Table(name, Int(static_cast<long long>(en.elements.size())), std::move(classes),
                    std::move(power_maps), std::move(irreducibles));
  out.table.validate();
  out.class_rep_element = reps;
  out.table_class_of = position;
  return out;
}

Fusion fusion_from_groups(const perm::Group& sub, const GroupTable& sub_table,
                          const perm::Group& big, const GroupTable& big_table) {
  const perm::Enumeration& ben = big.enumerate();
  const perm::ClassData& bcd = big.conjugacy_classes();
  const perm::Enumeration& sen = sub.enumerate();
  Fusion f;
  f.source_name = sub_table.table.name();
  f.target_name = big_table.table.name();
  for (std::size_t i = 0; i < sub_table.table.num_classes(); ++i) {
    const perm::Perm& rep = sen.elements[sub_table.class_rep_element[i]];
    auto it = ben.index.find(rep);
    if (it == ben.index.end()) throw math_error("fusion_from_groups: subgroup element outside the group");
    f.map.push_back(big_table.table_class_of[bcd.class_of[it->second]]);
  }
  f.validate(sub_table.table, big_table.table);
  return f;
}

}  // namespace mrt::chartab
