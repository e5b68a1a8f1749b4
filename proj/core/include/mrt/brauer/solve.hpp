#pragma once

#include "mrt/brauer/basicset.hpp"

namespace mrt::brauer {

// target column = sum coeff_i * column_i of the decomposition matrix,
// entrywise; optionally all coefficients must stay nonnegative (expansion
// of a projective character in PIMs).
struct ColumnFact {
  std::string label;
  std::vector<exact::ParamInt> target;                         // length = matrix rows
  std::vector<std::pair<std::size_t, exact::ParamInt>> terms;  // (column, coefficient)
  bool require_nonneg_coeffs = true;
};

// Condensation trace fact: among the listed decomposition-matrix columns
// (whose simple modules condense to the observed slot), the parametrized
// multiplicities grouped by predicted F_p-trace must reproduce the observed
// (trace, count) multiset.
struct TraceFact {
  std::string label;
  std::uint64_t prime = 0;
  struct Term {
    std::size_t column;
    std::uint64_t predicted_trace;  // canonical representative mod p
    exact::ParamInt multiplicity;
  };
  std::vector<Term> terms;
  std::vector<std::pair<std::uint64_t, std::size_t>> observed;  // (trace, count)
};

struct SolveOutcome {
  exact::ParamSystem narrowed;  // original system plus fact constraints
  exact::ParamSystem::SolveResult result;
};

// Adds every fact as constraints and enumerates the admissible assignments.
// Throws math_error naming the eliminating fact when nothing survives.
SolveOutcome solve_parameters(const DecMatrix& d, const std::vector<ColumnFact>& column_facts,
                              const std::vector<TraceFact>& trace_facts);

}  // namespace mrt::brauer
