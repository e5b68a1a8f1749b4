#include "mrt/brauer/clifford.hpp"

#include <algorithm>
#include <set>

#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::Int;
using exact::ParamInt;

CliffordCaseResult clifford_case(const chartab::Table& sub, const chartab::Table& big,
                                 const chartab::ExtensionLabeling& lab,
                                 const std::vector<chartab::Block>& sub_blocks,
                                 const std::vector<chartab::Block>& big_blocks,
                                 std::size_t block_index) {
  (void)sub;
  CliffordCaseResult out;
  out.block_index = block_index;
  const chartab::Block& b = sub_blocks.at(block_index);

  std::set<std::size_t> members(b.members.begin(), b.members.end());
  bool invariant = true;
  for (std::size_t m : b.members)
    if (!members.count(lab.sigma_chars[m])) { invariant = false; break; }

  std::set<std::size_t> covers;
  for (std::size_t m : b.members) {
    const auto& l = lab.labels[m];
    if (l.split) {
      covers.insert(chartab::block_of(big_blocks, l.plus_index));
      covers.insert(chartab::block_of(big_blocks, l.minus_index));
    } else {
      covers.insert(chartab::block_of(big_blocks, l.fused_index));
    }
  }
  out.covering_blocks.assign(covers.begin(), covers.end());

  if (!invariant) {
    out.tag = CliffordCase::not_invariant;
    if (covers.size() != 1)
      throw math_error("clifford_case: non-invariant block covered by several blocks");
    // restriction bijection: chi^0 <-> the B-constituent of its restriction
    std::vector<std::pair<std::size_t, std::size_t>> transport;
    std::set<std::size_t> seen_big;
    for (std::size_t m : b.members) {
      const auto& l = lab.labels[m];
      if (l.split) throw math_error("clifford_case: split character in a non-invariant block");
      if (seen_big.insert(l.fused_index).second) transport.emplace_back(l.fused_index, m);
    }
    out.row_transport.push_back(std::move(transport));
    return out;
  }
  if (covers.size() == 2) {
    out.tag = CliffordCase::invariant_two_covers;
    for (std::size_t cover : out.covering_blocks) {
      std::vector<std::pair<std::size_t, std::size_t>> transport;
      for (std::size_t m : b.members) {
        const auto& l = lab.labels[m];
        if (!l.split)
          throw math_error("clifford_case: fused character in a block with two covers");
        std::size_t which = chartab::block_of(big_blocks, l.plus_index) == cover ? l.plus_index
                                                                                 : l.minus_index;
        if (chartab::block_of(big_blocks, which) != cover)
          throw math_error("clifford_case: extension lands outside both covering blocks");
        transport.emplace_back(which, m);
      }
      out.row_transport.push_back(std::move(transport));
    }
    return out;
  }
  if (covers.size() != 1) throw math_error("clifford_case: index-2 block covered by > 2 blocks");
  out.tag = CliffordCase::invariant_one_cover;
  return out;
}

SplitColumns clifford_split(const std::vector<Int>& pim_mults, const chartab::Block& sub_block,
                            const chartab::Block& big_block, const chartab::ExtensionLabeling& lab,
                            std::size_t pim_index, exact::ParamSystem& system) {
  if (pim_mults.size() != sub_block.members.size())
    throw math_error("clifford_split: multiplicity vector length mismatch");

  auto member_pos = [&](std::size_t ch) {
    auto it = std::find(sub_block.members.begin(), sub_block.members.end(), ch);
    if (it == sub_block.members.end())
      throw math_error("clifford_split: sigma image leaves the block");
    return std::size_t(it - sub_block.members.begin());
  };
  auto big_pos = [&](std::size_t ch) {
    auto it = std::find(big_block.members.begin(), big_block.members.end(), ch);
    if (it == big_block.members.end())
      throw math_error("clifford_split: constituent lands outside the covering block");
    return std::size_t(it - big_block.members.begin());
  };

  bool sigma_fixed = true;
  for (std::size_t i = 0; i < sub_block.members.size(); ++i) {
    std::size_t image = lab.sigma_chars[sub_block.members[i]];
    if (pim_mults[member_pos(image)] != pim_mults[i]) { sigma_fixed = false; break; }
  }

  SplitColumns out;
  const std::size_t rows = big_block.members.size();
  if (!sigma_fixed) {
    out.split_pair = false;
    out.column_names = {"pim" + std::to_string(pim_index) + "^0"};
    std::vector<ParamInt> col(rows);
    for (std::size_t i = 0; i < sub_block.members.size(); ++i) {
      if (pim_mults[i] == 0) continue;
      std::size_t ch = sub_block.members[i];
      const auto& l = lab.labels[ch];
      if (l.split) {
        // sigma-fixed constituent of a moved PIM: both extensions appear
        col[big_pos(l.plus_index)] += ParamInt(pim_mults[i]);
        col[big_pos(l.minus_index)] += ParamInt(pim_mults[i]);
      } else {
        col[big_pos(l.fused_index)] += ParamInt(pim_mults[i]);
      }
    }
    out.columns.push_back(std::move(col));
    return out;
  }

  out.split_pair = true;
  std::string base = "pim" + std::to_string(pim_index);
  out.column_names = {base + "^+", base + "^-"};
  std::vector<ParamInt> plus(rows), minus(rows);
  std::set<std::size_t> done;
  for (std::size_t i = 0; i < sub_block.members.size(); ++i) {
    if (pim_mults[i] == 0) continue;
    std::size_t ch = sub_block.members[i];
    if (done.count(ch)) continue;
    const auto& l = lab.labels[ch];
    if (lab.sigma_chars[ch] != ch) {
      // sigma-moved constituent pair: fixed multiplicity on both sides
      done.insert(ch);
      done.insert(lab.sigma_chars[ch]);
      std::size_t row = big_pos(l.fused_index);
      plus[row] += ParamInt(pim_mults[i]);
      minus[row] += ParamInt(pim_mults[i]);
    } else {
      done.insert(ch);
      // sigma-fixed constituent of multiplicity b: fresh c + c~ = b
      Int b = pim_mults[i];
      std::string cn = base + "_r" + std::to_string(ch) + "_c";
      std::string cnt = cn + "t";
      long long hi = exact::to_ll(b);
      system.declare(cn, 0, hi);
      system.declare(cnt, 0, hi);
      ParamInt c = ParamInt::param(cn), ct = ParamInt::param(cnt);
      system.require_eq0(exact::ParamPoly(c + ct - ParamInt(b)), cn + "+~=" + std::to_string(hi));
      plus[big_pos(l.plus_index)] += c;
      plus[big_pos(l.minus_index)] += ct;
      minus[big_pos(l.plus_index)] += ct;
      minus[big_pos(l.minus_index)] += c;
    }
  }
  out.columns.push_back(std::move(plus));
  out.columns.push_back(std::move(minus));
  return out;
}

}  // namespace mrt::brauer
