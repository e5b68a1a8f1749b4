#pragma once

#include "mrt/chartab/table.hpp"

namespace mrt::chartab {

struct Block {
  std::uint64_t prime = 0;
  std::vector<std::size_t> members;  // character indices, ascending
  std::uint64_t defect = 0;
  std::size_t label = 0;  // position under (defect desc, min member asc)
};

// p-blocks via central characters omega_chi(C) = |C| chi(C) / chi(1),
// compared on p-regular classes under the pinned reduction into a splitting
// field F_{p^k}. For p not dividing the group order every character forms
// its own defect-0 block.
std::vector<Block> block_partition(const Table& t, std::uint64_t p,
                                   unsigned degree_multiplier = 1);

// index of the block containing character i
std::size_t block_of(const std::vector<Block>& blocks, std::size_t char_index);

}  // namespace mrt::chartab
