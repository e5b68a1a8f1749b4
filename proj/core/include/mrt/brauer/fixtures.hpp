#pragma once

#include <iosfwd>

#include "mrt/brauer/solve.hpp"

namespace mrt::brauer {

// eps-twist involutions for a shipped matrix: swapping the +/- rows must
// equal swapping the split PIM column pairs.
struct TwistData {
  std::string name;
  std::vector<std::pair<std::size_t, std::size_t>> row_swaps;  // 0-based
  std::vector<std::pair<std::size_t, std::size_t>> col_swaps;
};
TwistData read_twist(std::istream& is);

std::vector<std::size_t> involution_perm(std::size_t n,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& swaps);

// exact symbolic check: row-swapped matrix equals column-swapped matrix
bool eps_twist_holds(const DecMatrix& d, const TwistData& twist);

// Facts file: COLFACT/TRACEFACT lines against a decomposition matrix, with
// targets drawn from a separate projective-column table. Fresh parameters
// (unknown expansion coefficients) are declared into dec.system.
struct FactsData {
  std::vector<ColumnFact> column_facts;
  std::vector<TraceFact> trace_facts;
};
FactsData read_facts(std::istream& is, DecMatrix& dec, const DecMatrix* projectives);

// Shipped condensation factor degrees; the loader derives and asserts
// sum(degrees) = dim_st / v_order.
struct CondensedFactors {
  exact::Int dim_st;
  std::uint64_t v_order = 0;
  std::vector<std::uint64_t> degrees;
};
CondensedFactors read_condensed_factors(std::istream& is);

// Coset class-distribution fixture (order / class / centralizer multisets
// plus character sums). The loader derives |V| and cross-checks the three
// multisets against each other.
struct CosetFixture {
  struct ZSet {
    std::string name;
    std::vector<std::pair<std::string, std::size_t>> classes;
    std::vector<std::pair<std::uint64_t, std::size_t>> orders;
    std::vector<std::pair<std::uint64_t, std::size_t>> centralizers;
    long long chi_plus_sum = 0;
  };
  std::vector<ZSet> sets;
  std::uint64_t pair_count = 0;
  std::uint64_t v_order = 0;  // derived
};
CosetFixture read_coset_fixture(std::istream& is);

}  // namespace mrt::brauer
