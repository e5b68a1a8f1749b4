#pragma once

#include <iosfwd>
#include <string>

#include "mrt/gf/matrix.hpp"

namespace mrt::gf {

// Matrix text format, bit-exact:
//   GFMAT p k rows cols
// followed by `rows` lines of `cols` space-separated canonical entries.
// Prime-field entries are integers 0..p-1; extension-field entries are the
// k digits joined by '.', constant term first.
void write_matrix(std::ostream& os, const Matrix& m);
std::string format_matrix(const Matrix& m);

// Strict reader: rejects any deviation from the writer's output.
Matrix read_matrix(std::istream& is);
Matrix parse_matrix(const std::string& text);

}  // namespace mrt::gf
