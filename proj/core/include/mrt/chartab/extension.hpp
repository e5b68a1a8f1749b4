#pragma once

#include "mrt/chartab/table.hpp"

namespace mrt::chartab {

// Labeling of the irreducible characters of an index-2 extension:
// a sigma-moved character chi of H induces irreducibly (chi^0); a
// sigma-fixed chi has two extensions chi^+ and chi^-, with chi^- =
// eps tensor chi^+ and the sign fixed by chi^+(x) > 0 whenever that value
// is real and nonzero.
struct ExtensionLabeling {
  Fusion fusion;                 // H -> H.2, index 2
  std::size_t eps_index = 0;     // the linear character with kernel H
  std::size_t x_class = 0;       // chosen class of H.2 outside H

  std::vector<std::size_t> sigma_classes;  // induced class permutation of H
  std::vector<std::size_t> sigma_chars;    // induced character permutation of H

  struct Label {
    bool split = false;
    std::size_t fused_index = 0;   // chi^0 when !split
    std::size_t plus_index = 0;    // when split
    std::size_t minus_index = 0;   // when split
    bool convention_dependent = false;  // chi^pm(x) zero or non-real
  };
  std::vector<Label> labels;  // one per irreducible of H

  std::size_t eps_twist(std::size_t big_char_index) const;  // index of eps tensor chi
  std::vector<std::size_t> eps_twist_perm;                  // full twist permutation on Irr(H.2)
};

// Requires [H.2 : H] = 2. `x_class` must lie outside the fusion image.
ExtensionLabeling label_extension(const Table& sub, const Table& big, const Fusion& fusion,
                                  std::size_t x_class);

}  // namespace mrt::chartab
