#pragma once

#include "mrt/chartab/table.hpp"
#include "mrt/mtx/module.hpp"
#include "mrt/perm/group.hpp"

namespace mrt::chartab {

// A character table computed from a concrete permutation group, with the
// bookkeeping needed to relate table classes back to group elements.
struct GroupTable {
  Table table;
  std::vector<std::size_t> class_rep_element;  // enumeration index per table class
  std::vector<std::size_t> table_class_of;     // group class index -> table class index
};

// Ordinary character table of a small permutation group. The irreducible
// values are obtained as Brauer characters over a modular splitting field
// F_{q^k} with q coprime to |G| (they coincide with the ordinary characters
// there); the result is validated against both orthogonality relations.
GroupTable table_from_group(const perm::Group& g, const std::string& name, std::uint64_t seed = 0);

// Class fusion induced by an inclusion of permutation groups on the same
// points.
Fusion fusion_from_groups(const perm::Group& sub, const GroupTable& sub_table,
                          const perm::Group& big, const GroupTable& big_table);

}  // namespace mrt::chartab
