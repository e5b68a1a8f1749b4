#include "mrt/brauer/bruteforce.hpp"

#include <algorithm>
#include <numeric>

#include "mrt/mtx/brauerchar.hpp"
#include "mrt/mtx/simples.hpp"
#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::Cyclotomic;
using exact::Int;

BruteDecomposition brute_decomposition(const perm::Group& g, const chartab::GroupTable& gt,
                                       std::uint64_t p, std::uint64_t seed) {
  BruteDecomposition out;
  const chartab::Table& t = gt.table;
  out.regular_classes = p_regular_classes(t, p);

  std::uint64_t m_reg = 1;
  for (std::size_t c : out.regular_classes) m_reg = std::lcm(m_reg, t.classes()[c].order);
  unsigned k = mtx::multiplicative_order_mod(p, m_reg);
  out.field = k == 1 ? gf::Field::prime(unsigned(p)) : gf::Field::extension(unsigned(p), k);

  out.simples = mtx::simples_closure(g, out.field, out.regular_classes.size(), seed);
  // deterministic column order: by dimension, then Brauer values
  std::vector<chartab::CharVector> values(out.simples.size(),
                                          chartab::CharVector(t.num_classes()));
  for (std::size_t ci : out.regular_classes) {
    std::vector<std::size_t> word = g.word_of(gt.class_rep_element[ci]);
    for (std::size_t si = 0; si < out.simples.size(); ++si)
      values[si][ci] = mtx::brauer_character_value(out.simples[si].act_word(word),
                                                   t.classes()[ci].order);
  }
  std::vector<std::size_t> order(out.simples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (out.simples[a].dim != out.simples[b].dim) return out.simples[a].dim < out.simples[b].dim;
    return std::lexicographical_compare(values[a].begin(), values[a].end(), values[b].begin(),
                                        values[b].end());
  });
  std::vector<mtx::Module> simples_sorted;
  std::vector<chartab::CharVector> values_sorted;
  for (auto i : order) {
    simples_sorted.push_back(out.simples[i]);
    values_sorted.push_back(values[i]);
  }
  out.simples = std::move(simples_sorted);
  out.brauer_chars = std::move(values_sorted);

  for (std::size_t chi = 0; chi < t.irreducibles().size(); ++chi) {
    ExpandResult e = expand_on_classes(out.brauer_chars, t.irreducible(chi), out.regular_classes);
    if (e.status != ExpandResult::Status::unique || !e.integral)
      throw math_error("brute_decomposition: ordinary character " + t.char_names()[chi] +
                       " has no unique integral Brauer expansion");
    std::vector<Int> row;
    for (const auto& v : e.coefficients) {
      Int d = exact::rat_num(v);
      if (d < 0)
        throw math_error("brute_decomposition: negative decomposition number at " +
                         t.char_names()[chi]);
      row.push_back(d);
    }
    out.matrix.push_back(std::move(row));
  }
  return out;
}

std::vector<chartab::CharVector> brauer_values_from_matrix(
    const chartab::Table& t, const std::vector<std::vector<exact::Int>>& matrix,
    const std::vector<std::size_t>& classes) {
  const std::size_t nchars = t.irreducibles().size();
  if (matrix.size() != nchars)
    throw math_error("brauer_values_from_matrix: row count differs from the table");
  const std::size_t ncols = matrix.empty() ? 0 : matrix[0].size();
  exact::RatMat d(nchars, exact::RatVec(ncols));
  for (std::size_t i = 0; i < nchars; ++i)
    for (std::size_t j = 0; j < ncols; ++j) d[i][j] = exact::Rational(matrix[i][j]);
  std::vector<chartab::CharVector> out(ncols, chartab::CharVector(t.num_classes()));
  for (std::size_t c : classes) {
    std::uint64_t level = 1;
    for (std::size_t i = 0; i < nchars; ++i)
      level = std::lcm(level, t.irreducible(i)[c].conductor());
    if (level % 4 == 2) level *= 2;
    // one rational solve per basis exponent of the common level
    std::map<std::uint64_t, exact::RatVec> rhs;  // exponent -> per-char coefficient
    for (std::size_t i = 0; i < nchars; ++i)
      for (auto& [e, coeff] : t.irreducible(i)[c].coefficients_at(level)) {
        auto& v = rhs[e];
        v.resize(nchars, exact::Rational(0));
        v[i] = coeff;
      }
    std::vector<std::map<std::uint64_t, exact::Rational>> sol(ncols);
    for (auto& [e, b] : rhs) {
      b.resize(nchars, exact::Rational(0));
      exact::RatSolve s = exact::rat_solve(d, b);
      if (s.status != exact::RatSolve::Status::unique)
        throw math_error("brauer_values_from_matrix: values are not uniquely determined");
      for (std::size_t j = 0; j < ncols; ++j)
        if (s.solution[j] != 0) sol[j][e] = s.solution[j];
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      exact::Cyclotomic v;
      for (auto& [e, coeff] : sol[j])
        v += exact::Cyclotomic(coeff) * exact::Cyclotomic::root_of_unity(level, e);
      out[j][c] = v;
    }
  }
  return out;
}

BlockPims block_pims(const BruteDecomposition& d, const std::vector<std::size_t>& block_members) {
  BlockPims out;
  const std::size_t ncols = d.simples.size();
  for (std::size_t j = 0; j < ncols; ++j) {
    bool in_block = false;
    for (std::size_t m : block_members)
      if (d.matrix[m][j] != 0) { in_block = true; break; }
    if (!in_block) continue;
    // a simple belongs to exactly one block; sanity: no support outside
    std::vector<Int> col;
    for (std::size_t m : block_members) col.push_back(d.matrix[m][j]);
    out.simple_indices.push_back(j);
    out.columns.push_back(std::move(col));
  }
  // triangular-first order: ascending leading row
  std::vector<std::size_t> order(out.columns.size());
  std::iota(order.begin(), order.end(), 0);
  auto lead = [&](std::size_t c) {
    for (std::size_t r = 0; r < out.columns[c].size(); ++r)
      if (out.columns[c][r] != 0) return r;
    return out.columns[c].size();
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t la = lead(a), lb = lead(b);
    if (la != lb) return la < lb;
    return out.simple_indices[a] < out.simple_indices[b];
  });
  BlockPims sorted;
  for (auto i : order) {
    sorted.simple_indices.push_back(out.simple_indices[i]);
    sorted.columns.push_back(out.columns[i]);
  }
  return sorted;
}

}  // namespace mrt::brauer
