#pragma once

#include "mrt/mtx/meataxe.hpp"
#include "mrt/perm/group.hpp"

namespace mrt::mtx {

// All pairwise non-isomorphic simple modules of F[G] over the given field,
// found by chopping the natural permutation module and tensor products of
// already-found simples until `target_count` simples are known. The natural
// module is faithful, so tensor closure reaches every simple. Discovery
// order is deterministic for a fixed seed.
std::vector<Module> simples_closure(const perm::Group& g, const gf::Field& field,
                                    std::size_t target_count, std::uint64_t seed);

// Splitting-field degree: multiplicative order of p modulo n (n coprime
// to p), capped at `max_degree`.
unsigned multiplicative_order_mod(std::uint64_t p, std::uint64_t n, unsigned max_degree = 16);

}  // namespace mrt::mtx
