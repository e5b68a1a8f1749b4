#pragma once

#include <vector>

#include "mrt/exact/cyclotomic.hpp"
#include "mrt/mtx/module.hpp"
#include "mrt/perm/perm.hpp"

namespace mrt::mtx {

// Fixed-point condensation data: subgroup V (explicit element list) with
// gcd(|V|, p) = 1, so the idempotent iota = 1/|V| sum_{v in V} v exists
// over F_p.
struct CondensationSetup {
  gf::Field field;
  std::vector<perm::Perm> v_elements;  // permutation form (for point actions)

  void validate() const;
};

// Matrix of iota * g * iota on the orbit-sum basis of the condensed
// permutation module F[points] * iota. Entry (i, j) counts
// |O_i ^ g^{-1} O_j| / |O_j|.
gf::Matrix condense_permutation(const CondensationSetup& setup, const perm::Perm& g);

// V-orbits on points, each sorted, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> v_orbits(const CondensationSetup& setup, std::size_t degree);

// Condensation of a matrix module: `v_action` gives the matrices of the
// elements of V on m, `g` is the matrix to condense. Returns the matrix of
// iota g iota on a basis of the V-fixed space (rows of `fixed_basis` when
// supplied by the overload below).
struct MatrixCondenser {
  MatrixCondenser(const Module& m, const std::vector<gf::Matrix>& v_action);

  const gf::Matrix& fixed_basis() const { return basis_; }    // rows span M * iota
  const gf::Matrix& idempotent() const { return iota_; }      // dim x dim
  std::size_t condensed_dim() const { return basis_.rows(); }

  gf::Matrix condense(const gf::Matrix& g) const;  // matrix of iota g iota

 private:
  gf::Matrix iota_;
  gf::Matrix basis_;
  gf::Matrix expand_;  // solves coordinates: basis coords of projected rows
};

// (1/|V|) * sum over the classified coset of character values: the Brauer
// character average of Lemma-style trace predictions. `class_counts` pairs
// (value of the character on that class, multiplicity in {y v : v in V}).
exact::Cyclotomic trace_formula_average(
    const std::vector<std::pair<exact::Cyclotomic, std::size_t>>& class_counts,
    std::size_t v_order);

}  // namespace mrt::mtx
