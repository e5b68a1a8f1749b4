#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mrt/gf/io.hpp"
#include "mrt/gf/matrix.hpp"
#include "mrt/perm/perm.hpp"

namespace mrt::mtx {

// Representation of a group (or algebra) by generator matrices acting on
// row vectors: v -> v * gen[i].
struct Module {
  gf::Field field;
  std::size_t dim = 0;
  std::vector<gf::Matrix> gens;
  std::vector<std::string> labels;

  Module() = default;
  Module(gf::Field f, std::vector<gf::Matrix> generators, std::vector<std::string> names = {});

  // Group representations must have invertible generators; condensed
  // algebra modules may be singular, so the check is explicit.
  void require_invertible() const;

  // Matrix of a word in the generators (empty word = identity).
  gf::Matrix act_word(const std::vector<std::size_t>& word) const;

  Module tensor(const Module& o) const;

  // Reinterpret a prime-field module over an extension of the same
  // characteristic (entries are prime-subfield elements in both encodings).
  Module extend_scalars(const gf::Field& bigger) const;
};

// Permutation module: basis indexed by points, v_i * g = v_{g(i)}.
Module permutation_module(const gf::Field& f, const std::vector<perm::Perm>& gens);

// module file: `FGMOD p k dim ngens` followed by ngens GFMAT blocks
void write_module(std::ostream& os, const Module& m);
Module read_module(std::istream& is);

}  // namespace mrt::mtx
