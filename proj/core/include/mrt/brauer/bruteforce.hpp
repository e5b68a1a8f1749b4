#pragma once

#include "mrt/brauer/basicset.hpp"
#include "mrt/chartab/bruteforce.hpp"
#include "mrt/mtx/module.hpp"

namespace mrt::brauer {

// Chop-based decomposition data for a small permutation group: all simple
// modules over a splitting field F_{p^k}, their Brauer characters, and the
// full decomposition matrix (rows in the table's character order). This is
// the independent oracle route; the basic-set/Clifford engine never feeds
// back into it.
struct BruteDecomposition {
  gf::Field field;
  std::vector<std::size_t> regular_classes;        // table class indices
  std::vector<mtx::Module> simples;                // discovery order
  std::vector<chartab::CharVector> brauer_chars;   // full-length vectors; zero on p-singular
  std::vector<std::vector<exact::Int>> matrix;     // rows = Irr(table), cols = simples
};

BruteDecomposition brute_decomposition(const perm::Group& g, const chartab::GroupTable& gt,
                                       std::uint64_t p, std::uint64_t seed);

// Columns of the brute-force matrix restricted to one block: the PIMs of
// that block, as multiplicity vectors over the block members. Column order
// follows the triangular-first convention (ascending leading member).
struct BlockPims {
  std::vector<std::size_t> simple_indices;              // which simples belong to the block
  std::vector<std::vector<exact::Int>> columns;         // over block members
};
BlockPims block_pims(const BruteDecomposition& d, const std::vector<std::size_t>& block_members);

// The unique cyclotomic class functions phi_j on the given classes with
// chi|classes = sum_j D[chi][j] phi_j for every row chi of D (rows indexed
// by all table characters). Returned vectors are full length, zero off the
// given classes. Throws when the system is not uniquely solvable.
std::vector<chartab::CharVector> brauer_values_from_matrix(
    const chartab::Table& t, const std::vector<std::vector<exact::Int>>& matrix,
    const std::vector<std::size_t>& classes);

}  // namespace mrt::brauer
