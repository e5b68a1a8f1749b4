#pragma once

#include "mrt/brauer/basicset.hpp"
#include "mrt/chartab/blocks.hpp"
#include "mrt/chartab/extension.hpp"

namespace mrt::brauer {

enum class CliffordCase { not_invariant, invariant_two_covers, invariant_one_cover };

struct CliffordCaseResult {
  CliffordCase tag = CliffordCase::invariant_one_cover;
  std::size_t block_index = 0;                       // block of H
  std::vector<std::size_t> covering_blocks;          // block indices of H.2
  // Morita transport for cases 1 and 2: per covering block, the restriction
  // bijection Irr(B~) -> Irr(B) as (big char index, sub char index) pairs.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> row_transport;
};

// Classification of the covering situation for one p-block of the index-2
// subgroup, per the three standard cases.
CliffordCaseResult clifford_case(const chartab::Table& sub, const chartab::Table& big,
                                 const chartab::ExtensionLabeling& lab,
                                 const std::vector<chartab::Block>& sub_blocks,
                                 const std::vector<chartab::Block>& big_blocks,
                                 std::size_t block_index);

// One PIM of B pushed to the unique covering block B~. If the PIM is not
// sigma-invariant its induction is indecomposable (one column); otherwise it
// splits into a pair whose columns carry fresh 0..b parameters c, c~ with
// c + c~ = b for every sigma-fixed constituent of multiplicity b, while
// sigma-moved constituent pairs contribute their multiplicity to both
// columns. Fresh parameters are declared in `system`.
struct SplitColumns {
  bool split_pair = false;
  std::vector<std::string> column_names;
  // entries over the big block's members (ascending char index), one vector
  // per produced column
  std::vector<std::vector<exact::ParamInt>> columns;
};
SplitColumns clifford_split(const std::vector<exact::Int>& pim_mults,  // over Irr(B), member order
                            const chartab::Block& sub_block, const chartab::Block& big_block,
                            const chartab::ExtensionLabeling& lab, std::size_t pim_index,
                            exact::ParamSystem& system);

}  // namespace mrt::brauer
