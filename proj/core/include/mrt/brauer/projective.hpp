#pragma once

#include "mrt/brauer/basicset.hpp"
#include "mrt/chartab/blocks.hpp"

namespace mrt::brauer {

// A projective character, cut to one block: multiplicities over the block's
// ordinary characters plus (when relations are available) coordinates over
// the basic set.
struct ProjChar {
  std::string name;
  std::string provenance;
  std::vector<exact::Int> block_mults;   // over block members (ascending char index)
  std::vector<exact::Int> basic_coords;  // over the basic set (may be empty)
};

// <value, chi> multiplicities over the block members; requires nonnegative
// integers (a genuine character containing the block part).
std::vector<exact::Int> cut_to_block(const chartab::Table& t, const chartab::Block& block,
                                     const chartab::CharVector& value);

std::vector<exact::Int> block_mults_to_basic(const Relations& relations,
                                             const std::vector<std::size_t>& block_members,
                                             const std::vector<exact::Int>& mults);

// Product of a defect-0 character with an arbitrary ordinary character, cut
// to the target block. Errors when the first factor is not of defect 0.
ProjChar projective_from_tensor(const chartab::Table& t, std::uint64_t p,
                                const std::vector<chartab::Block>& blocks,
                                std::size_t defect0_char, std::size_t other_char,
                                const chartab::Block& target,
                                const Relations* relations = nullptr);

// Induction of a projective character of a subgroup, cut to the target
// block. When `assume_projective` is false the character must be of defect
// 0 for p in the subgroup.
ProjChar induce_projective(const chartab::Fusion& f, const chartab::Table& sub,
                           const chartab::Table& big, const chartab::CharVector& sub_char,
                           bool assume_projective, std::uint64_t p, const chartab::Block& target,
                           const Relations* relations = nullptr);

// Ordinary character built back from block multiplicities.
chartab::CharVector character_from_block_mults(const chartab::Table& t,
                                               const chartab::Block& block,
                                               const std::vector<exact::Int>& mults);

bool vanishes_on_p_singular(const chartab::Table& t, std::uint64_t p,
                            const chartab::CharVector& values);

// Greedy triangular peeling: subtract the supplied known PIM columns, in
// ascending order of their leading rows, with the multiplicity forced by
// the candidate's current entry at that leading row. Every intermediate
// value must stay entrywise nonnegative over all admissible assignments.
struct PeelOutcome {
  std::vector<std::pair<std::size_t, exact::ParamInt>> certificate;  // (known index, multiplicity)
  std::vector<exact::ParamInt> residual;
};
PeelOutcome peel_pims(const std::vector<exact::ParamInt>& candidate,
                      const std::vector<std::vector<exact::ParamInt>>& knowns,
                      const exact::ParamSystem& system);

}  // namespace mrt::brauer
