#pragma once

#include <cstddef>
#include <vector>

#include "mrt/exact/rational.hpp"

namespace mrt::exact {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

struct RatEchelon {
  RatMat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RatEchelon rat_rref(RatMat m);

struct RatSolve {
  enum class Status { unique, underdetermined, inconsistent };
  Status status = Status::inconsistent;
  RatVec solution;           // populated when status == unique
  bool integral = false;     // all solution entries integers (unique case)
  std::size_t nullity = 0;   // solution-space dimension when solvable
};

// Solve A x = b exactly.
RatSolve rat_solve(const RatMat& a, const RatVec& b);

}  // namespace mrt::exact
