#include "mrt/brauer/basicset.hpp"

#include <algorithm>
#include <numeric>

#include "mrt/exact/ratsolve.hpp"
#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::Cyclotomic;
using exact::Int;
using exact::Rational;

std::vector<std::size_t> p_regular_classes(const chartab::Table& t, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    if (t.classes()[c].order % p != 0) out.push_back(c);
  return out;
}

ExpandResult expand_on_classes(const std::vector<chartab::CharVector>& basis,
                               const chartab::CharVector& value,
                               const std::vector<std::size_t>& classes) {
  exact::RatMat a;
  exact::RatVec b;
  for (std::size_t c : classes) {
    std::uint64_t level = value[c].conductor();
    for (const auto& base : basis) level = std::lcm(level, base[c].conductor());
    if (level % 4 == 2) level *= 2;  // keep a storable basis level
    std::map<std::uint64_t, std::vector<Rational>> rows;  // basis exponent -> coefficients
    auto add = [&](std::size_t col, const Cyclotomic& v, std::size_t width) {
      for (auto& [e, coeff] : v.coefficients_at(level)) {
        auto& row = rows[e];
        row.resize(width, Rational(0));
        row[col] = coeff;
      }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add(j, basis[j][c], basis.size() + 1);
    add(basis.size(), value[c], basis.size() + 1);
    for (auto& [e, row] : rows) {
      row.resize(basis.size() + 1, Rational(0));
      a.emplace_back(row.begin(), row.begin() + basis.size());
      b.push_back(row[basis.size()]);
    }
  }
  exact::RatSolve s = exact::rat_solve(a, b);
  ExpandResult out;
  switch (s.status) {
    case exact::RatSolve::Status::unique:
      out.status = ExpandResult::Status::unique;
      out.coefficients = s.solution;
      out.integral = s.integral;
      break;
    case exact::RatSolve::Status::underdetermined:
      out.status = ExpandResult::Status::underdetermined;
      break;
    case exact::RatSolve::Status::inconsistent:
      out.status = ExpandResult::Status::inconsistent;
      break;
  }
  return out;
}

BasicSetCheck verify_basic_set(const chartab::Table& t, std::uint64_t p,
                               const std::vector<std::size_t>& block_members,
                               const std::vector<std::size_t>& candidate,
                               std::optional<std::size_t> ell) {
  BasicSetCheck out;
  if (ell && candidate.size() != *ell) {
    out.failure = "candidate size " + std::to_string(candidate.size()) +
                  " differs from l(B) = " + std::to_string(*ell);
    return out;
  }
  for (std::size_t ci : candidate)
    if (std::find(block_members.begin(), block_members.end(), ci) == block_members.end()) {
      out.failure = "candidate character " + t.char_names()[ci] + " is not in the block";
      return out;
    }
  std::vector<std::size_t> classes = p_regular_classes(t, p);
  std::vector<chartab::CharVector> basis;
  for (std::size_t ci : candidate) basis.push_back(t.irreducible(ci));

  Relations rel;
  rel.basic.char_indices = candidate;
  for (std::size_t ci : candidate) rel.basic.display_names.push_back(t.char_names()[ci]);
  for (std::size_t m : block_members) {
    if (std::find(candidate.begin(), candidate.end(), m) != candidate.end()) continue;
    ExpandResult e = expand_on_classes(basis, t.irreducible(m), classes);
    if (e.status != ExpandResult::Status::unique) {
      out.failure = "expansion of " + t.char_names()[m] +
                    (e.status == ExpandResult::Status::inconsistent ? " is inconsistent"
                                                                    : " is not unique");
      return out;
    }
    if (!e.integral) {
      out.failure = "expansion of " + t.char_names()[m] + " is not integral";
      return out;
    }
    std::vector<Int> row;
    for (const Rational& v : e.coefficients) row.push_back(exact::rat_num(v));
    rel.nonbasic_indices.push_back(m);
    rel.rows.push_back(std::move(row));
  }
  out.ok = true;
  out.relations = std::move(rel);
  return out;
}

Relations relations_matrix(const chartab::Table& t, std::uint64_t p,
                           const std::vector<std::size_t>& block_members,
                           const std::vector<std::size_t>& candidate,
                           std::optional<std::size_t> ell) {
  BasicSetCheck check = verify_basic_set(t, p, block_members, candidate, ell);
  if (!check.ok) throw math_error("relations_matrix: " + check.failure);
  return std::move(check.relations);
}

DecMatrix expand_nonbasic(const DecMatrix& basic_part, const Relations& relations,
                          const std::vector<std::string>& nonbasic_names) {
  const std::size_t nb = relations.rows.size();
  const std::size_t cols = basic_part.matrix.cols();
  for (const auto& r : relations.rows)
    if (r.size() != basic_part.matrix.rows())
      throw math_error("expand_nonbasic: relation width differs from basic row count");
  if (!nonbasic_names.empty() && nonbasic_names.size() != nb)
    throw math_error("expand_nonbasic: name count mismatch");

  DecMatrix out;
  out.name = basic_part.name;
  out.system = basic_part.system;
  out.row_names = basic_part.row_names;
  exact::ParamMatrix lower(nb, cols);
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      exact::ParamInt acc;
      for (std::size_t k = 0; k < relations.rows[i].size(); ++k)
        acc += basic_part.matrix.at(k, j).scaled(relations.rows[i][k]);
      lower.at(i, j) = std::move(acc);
    }
    out.row_names.push_back(nonbasic_names.empty() ? ("nb" + std::to_string(i))
                                                   : nonbasic_names[i]);
  }
  out.matrix = basic_part.matrix.vstack(lower);
  return out;
}

}  // namespace mrt::brauer
