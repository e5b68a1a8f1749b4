#pragma once

#include <vector>

#include "mrt/mtx/module.hpp"
#include "mrt/perm/group.hpp"

namespace mrt::perm {

// Split BN-pair data, caller-supplied as explicit element lists.
struct BNData {
  Group group;
  std::vector<Perm> u_elements;                          // the unipotent subgroup U = B
  std::vector<std::pair<Perm, unsigned>> w_elements;     // Weyl group with lengths
  std::vector<Perm> coxeter_gens;

  // U closed under multiplication; l(1) = 0; |l(ws) - l(w)| = 1 for Coxeter
  // generators s; (-1)^l multiplicative on W.
  void validate() const;
};

// The module e FG for the Steinberg element
//   e = (sum_{u in U} u)(sum_{w in W} (-1)^{l(w)} w),
// realized inside the group algebra with the distinguished basis
// {e u : u in U}. Generator matrices follow bn.group.generators().
// Throws when {e u} is linearly dependent (wrong BN data).
mtx::Module steinberg_element_module(const BNData& bn, const gf::Field& field);

}  // namespace mrt::perm
