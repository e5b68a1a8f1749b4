#pragma once

#include <iosfwd>

#include "mrt/brauer/basicset.hpp"

namespace mrt::brauer {

// Decomposition-matrix file format, bit-exact round trip:
//   DECMAT <block> params{a:0..4,at:0..4} constraints{a+at=4;...}
//   <charname>: e1 e2 ...
// Entries are canonical affine literals (`0`, `3`, `a`, `1-a`, `3-2b`).
// Constraints are `<affine>=<affine>` or `<affine>>=<affine>`.
void write_decmat(std::ostream& os, const DecMatrix& d);
DecMatrix read_decmat(std::istream& is);
DecMatrix read_decmat_file(const std::string& path);

}  // namespace mrt::brauer
