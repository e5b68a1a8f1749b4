#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrt/mtx/module.hpp"
#include "mrt/util/prng.hpp"

namespace mrt::mtx {

// Smallest invariant subspace containing the seed row; echelonized basis.
gf::Matrix spin(const Module& m, const gf::Matrix& seed_row);

struct CompositionSeries {
  struct Factor {
    Module module;
    std::size_t multiplicity = 0;
  };
  std::vector<Factor> factors;  // pairwise non-isomorphic

  // Filtration data on the ambient module: `flag` rows are an ambient basis
  // listing an invariant flag bottom-up; slice i covers rows
  // [slice_offset[i], slice_offset[i] + slice_dim[i]) and is isomorphic to
  // factors[slice_factor[i]].
  gf::Matrix flag;
  std::vector<std::size_t> slice_offset;
  std::vector<std::size_t> slice_dim;
  std::vector<std::size_t> slice_factor;

  std::uint64_t seed = 0;
  std::string certificate;  // replayable textual log

  std::size_t ambient_dim() const { return flag.rows(); }
};

// Full composition series by recursive MeatAxe splitting. Deterministic for
// a fixed seed; throws budget_error with the partial certificate in the
// message after 200 failed split attempts on one node.
CompositionSeries chop(const Module& m, std::uint64_t seed);

// Module isomorphism via the standard-basis method. Intended for
// irreducible inputs (chop factors); `intertwiner` (optional out) satisfies
// a.gens[i] * T == T * b.gens[i].
bool iso(const Module& a, const Module& b, gf::Matrix* intertwiner = nullptr,
         std::uint64_t seed = 0);

// Trace of `element` (ambient coordinates) on the chosen factor. Requires
// the flag to be invariant under `element`; all slices belonging to the
// factor must agree on the trace, else a math_error reports the mismatch
// (the element then does not normalize the chop algebra's filtration).
gf::Fel factor_trace(const CompositionSeries& series, const gf::Matrix& element,
                     std::size_t factor_index);

// Check each slice stays irreducible when the action of the extra ambient
// elements is adjoined to the chop generators; returns one report line per
// slice. The extras must preserve the flag.
std::vector<std::string> verify_factors_irreducible(const CompositionSeries& series,
                                                    const Module& ambient,
                                                    const std::vector<gf::Matrix>& extra,
                                                    std::uint64_t seed);

}  // namespace mrt::mtx
