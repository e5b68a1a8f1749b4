#include "mrt/chartab/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "mrt/gf/field.hpp"
#include "mrt/util/error.hpp"

namespace mrt::chartab {

using exact::Cyclotomic;
using exact::Int;
using exact::Rational;

namespace {

std::uint64_t nu_p(Int n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::vector<Block> block_partition(const Table& t, std::uint64_t p, unsigned degree_multiplier) {
  if (!gf::is_prime(p)) throw math_error("block_partition: p must be prime");
  const std::size_t k = t.num_classes();
  std::vector<Block> blocks;
  std::uint64_t g_val = nu_p(t.group_order(), p);

  if (g_val == 0) {
    for (std::size_t i = 0; i < k; ++i) blocks.push_back({p, {i}, 0, 0});
  } else {
    // splitting field: p^m with multiplicative order of p modulo the lcm of
    // p-regular class element orders
    std::uint64_t m_reg = 1;
    std::vector<std::size_t> reg_classes;
    for (std::size_t c = 0; c < k; ++c)
      if (t.classes()[c].order % p != 0) {
        reg_classes.push_back(c);
        m_reg = std::lcm(m_reg, t.classes()[c].order);
      }
    unsigned deg = 1;
    {
      std::uint64_t pow = p % m_reg;
      while (pow != 1 % m_reg) {
        pow = pow * p % m_reg;
        ++deg;
        if (deg > 16) throw math_error("block_partition: splitting field degree exceeds 16");
      }
    }
    if (degree_multiplier == 0) throw math_error("block_partition: zero degree multiplier");
    deg *= degree_multiplier;
    if (deg > 16) throw math_error("block_partition: requested splitting degree exceeds 16");
    gf::Field F = deg == 1 ? gf::Field::prime(unsigned(p)) : gf::Field::extension(unsigned(p), deg);

    std::vector<std::vector<gf::Fel>> omega(t.irreducibles().size());
    for (std::size_t i = 0; i < t.irreducibles().size(); ++i) {
      Int d = t.degree(i);
      for (std::size_t c : reg_classes) {
        Cyclotomic w = t.irreducible(i)[c] * Cyclotomic(Rational(t.classes()[c].size, d));
        omega[i].push_back(w.reduce_mod_p(F));
      }
    }
    std::vector<bool> assigned(omega.size(), false);
    for (std::size_t i = 0; i < omega.size(); ++i) {
      if (assigned[i]) continue;
      Block b;
      b.prime = p;
      for (std::size_t j = i; j < omega.size(); ++j)
        if (!assigned[j] && omega[j] == omega[i]) {
          assigned[j] = true;
          b.members.push_back(j);
        }
      blocks.push_back(std::move(b));
    }
    for (Block& b : blocks) {
      std::uint64_t min_height = UINT64_MAX;
      for (std::size_t i : b.members) min_height = std::min(min_height, nu_p(t.degree(i), p));
      b.defect = g_val - min_height;
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.defect != b.defect) return a.defect > b.defect;
    return a.members.front() < b.members.front();
  });
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].label = i;
  return blocks;
}

std::size_t block_of(const std::vector<Block>& blocks, std::size_t char_index) {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t m : blocks[b].members)
      if (m == char_index) return b;
  throw math_error("block_of: character not found in any block");
}

}  // namespace mrt::chartab
