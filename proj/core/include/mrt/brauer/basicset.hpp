#pragma once

#include <optional>
#include <string>

#include "mrt/chartab/table.hpp"
#include "mrt/exact/param.hpp"
#include "mrt/exact/ratsolve.hpp"

namespace mrt::brauer {

// Labeled, possibly parametrized matrix: decomposition matrices, relation
// matrices and projective-column tables all share this carrier.
struct DecMatrix {
  std::string name;
  exact::ParamSystem system;
  std::vector<std::string> row_names;  // display names; duplicates allowed
  exact::ParamMatrix matrix;
};

struct BasicSet {
  std::vector<std::size_t> char_indices;  // into Irr(table)
  std::vector<std::string> display_names;
};

// Expansions of the other block characters in the basic set on p-regular
// classes: row i is the expansion of nonbasic_indices[i].
struct Relations {
  BasicSet basic;
  std::vector<std::size_t> nonbasic_indices;
  std::vector<std::vector<exact::Int>> rows;
};

struct BasicSetCheck {
  bool ok = false;
  std::string failure;
  Relations relations;
};

// Verifies that the candidate characters restrict to a Z-basis for the
// block's p-regular restrictions: unique integral expansion for every block
// character. `ell` is the number of irreducible Brauer characters when
// known (supplied or oracle-computed); the candidate size must match it.
BasicSetCheck verify_basic_set(const chartab::Table& t, std::uint64_t p,
                               const std::vector<std::size_t>& block_members,
                               const std::vector<std::size_t>& candidate,
                               std::optional<std::size_t> ell = std::nullopt);

Relations relations_matrix(const chartab::Table& t, std::uint64_t p,
                           const std::vector<std::size_t>& block_members,
                           const std::vector<std::size_t>& candidate,
                           std::optional<std::size_t> ell = std::nullopt);

// Full decomposition matrix from the basic-set block X and the relations Y:
// basic rows first, then one row Y_i * X per non-basic character.
DecMatrix expand_nonbasic(const DecMatrix& basic_part, const Relations& relations,
                          const std::vector<std::string>& nonbasic_names);

// p-regular class indices of a table
std::vector<std::size_t> p_regular_classes(const chartab::Table& t, std::uint64_t p);

// Exact expansion of `value` rows over `basis` rows on the given classes
// (cyclotomic linear algebra flattened over a common cyclotomic basis).
struct ExpandResult {
  enum class Status { unique, underdetermined, inconsistent };
  Status status;
  exact::RatVec coefficients;
  bool integral = false;
};
ExpandResult expand_on_classes(const std::vector<chartab::CharVector>& basis,
                               const chartab::CharVector& value,
                               const std::vector<std::size_t>& classes);

}  // namespace mrt::brauer
