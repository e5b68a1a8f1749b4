#pragma once

#include "mrt/chartab/table.hpp"

namespace mrt::chartab {

// True when the class permutation preserves orders, sizes, centralizers and
// power maps, and permutes the set of irreducible value vectors. On success
// `char_perm_out` (optional) receives the induced character permutation.
bool table_automorphism_check(const Table& t, const std::vector<std::size_t>& class_perm,
                              std::vector<std::size_t>* char_perm_out = nullptr);

// All table automorphisms, by backtracking over invariant-compatible class
// images. `budget` bounds the search tree size.
std::vector<std::vector<std::size_t>> enumerate_table_automorphisms(const Table& t,
                                                                    std::size_t budget = 1 << 20);

// Orbit of a fusion under source and target table automorphisms,
// deterministically sorted.
std::vector<std::vector<std::size_t>> automorphism_orbit_of_fusions(
    const Fusion& f, const std::vector<std::vector<std::size_t>>& src_auts,
    const std::vector<std::vector<std::size_t>>& dst_auts);

}  // namespace mrt::chartab
