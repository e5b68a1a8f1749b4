#pragma once

#include "mrt/exact/cyclotomic.hpp"
#include "mrt/gf/matrix.hpp"

namespace mrt::mtx {

// Brauer character value of a representing matrix `a` of a group element of
// the given order: eigenvalues of the p'-part of `a` are n-th roots of unity
// in the matrix field; each is lifted through the pinned embedding
// zeta_n -> r^{(q-1)/n} and summed. For p-singular elements this evaluates
// the Brauer character at the p'-part, which matches the matrix trace after
// reduction. Requires n' | q - 1 for the p'-part n' of the element order.
exact::Cyclotomic brauer_character_value(const gf::Matrix& a, std::uint64_t elem_order);

gf::Matrix matrix_power(const gf::Matrix& a, std::uint64_t e);

}  // namespace mrt::mtx
