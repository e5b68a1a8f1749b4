#include "mrt/brauer/solve.hpp"

#include <map>

#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::ParamInt;
using exact::ParamPoly;

SolveOutcome solve_parameters(const DecMatrix& d, const std::vector<ColumnFact>& column_facts,
                              const std::vector<TraceFact>& trace_facts) {
  SolveOutcome out;
  out.narrowed = d.system;
  exact::ParamSystem& sys = out.narrowed;

  for (const ColumnFact& f : column_facts) {
    for (std::size_t r = 0; r < d.matrix.rows(); ++r) {
      ParamPoly acc{f.target.at(r)};
      for (const auto& [col, coeff] : f.terms) {
        if (col >= d.matrix.cols()) throw math_error("solve_parameters: column index out of range");
        acc = acc - sys.mul(ParamPoly(coeff), ParamPoly(d.matrix.at(r, col)));
      }
      sys.require_eq0(acc, f.label + " row " + std::to_string(r));
    }
    if (f.require_nonneg_coeffs)
      for (const auto& [col, coeff] : f.terms)
        if (!coeff.is_constant() || coeff.constant() < 0)
          sys.require_geq0(ParamPoly(coeff), f.label + " coefficient >= 0");
  }

  for (const TraceFact& f : trace_facts) {
    if (f.prime < 2) throw math_error("solve_parameters: trace fact needs a prime");
    std::map<std::uint64_t, ParamPoly> by_trace;
    std::map<std::uint64_t, std::size_t> observed;
    for (const auto& [t, c] : f.observed) observed[t % f.prime] += c;
    for (const auto& term : f.terms)
      by_trace[term.predicted_trace % f.prime] += ParamPoly(term.multiplicity);
    for (auto& [t, sum] : by_trace) {
      auto it = observed.find(t);
      long long want = it == observed.end() ? 0 : static_cast<long long>(it->second);
      sys.require_eq0(sum - ParamPoly(ParamInt(want)),
                      f.label + " trace " + std::to_string(t));
    }
    for (auto& [t, c] : observed)
      if (!by_trace.count(t) && c > 0)
        throw math_error("solve_parameters: observed trace " + std::to_string(t) +
                         " has no candidate column in fact " + f.label);
  }

  out.result = sys.solve();
  if (out.result.survivors.empty()) {
    std::string which = "facts are inconsistent";
    if (!out.result.eliminations.empty()) {
      // the deepest-reaching elimination names the contradicting fact
      std::size_t ci = 0;
      for (const auto& e : out.result.eliminations) ci = std::max(ci, e.constraint_index);
      which = "no assignment survives; contradicting constraint '" +
              sys.constraints().at(ci).label + "'";
    }
    throw math_error("solve_parameters: " + which);
  }
  return out;
}

}  // namespace mrt::brauer
