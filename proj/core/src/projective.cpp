#include "mrt/brauer/projective.hpp"

#include <algorithm>

#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::Cyclotomic;
using exact::Int;
using exact::ParamInt;
using exact::Rational;

std::vector<Int> cut_to_block(const chartab::Table& t, const chartab::Block& block,
                              const chartab::CharVector& value) {
  std::vector<Int> out;
  for (std::size_t m : block.members) {
    Rational s = chartab::scalar_product(t, value, t.irreducible(m));
    if (!exact::is_integer(s) || s < 0)
      throw math_error("cut_to_block: multiplicity of " + t.char_names()[m] +
                       " is not a nonnegative integer");
    out.push_back(exact::rat_num(s));
  }
  return out;
}

std::vector<Int> block_mults_to_basic(const Relations& relations,
                                      const std::vector<std::size_t>& block_members,
                                      const std::vector<Int>& mults) {
  if (mults.size() != block_members.size())
    throw math_error("block_mults_to_basic: multiplicity length mismatch");
  std::vector<Int> coords(relations.basic.char_indices.size(), Int(0));
  for (std::size_t i = 0; i < block_members.size(); ++i) {
    if (mults[i] == 0) continue;
    std::size_t ch = block_members[i];
    auto bit = std::find(relations.basic.char_indices.begin(), relations.basic.char_indices.end(), ch);
    if (bit != relations.basic.char_indices.end()) {
      coords[std::size_t(bit - relations.basic.char_indices.begin())] += mults[i];
      continue;
    }
    auto nit = std::find(relations.nonbasic_indices.begin(), relations.nonbasic_indices.end(), ch);
    if (nit == relations.nonbasic_indices.end())
      throw math_error("block_mults_to_basic: character missing from relations");
    const auto& row = relations.rows[std::size_t(nit - relations.nonbasic_indices.begin())];
    for (std::size_t j = 0; j < row.size(); ++j) coords[j] += mults[i] * row[j];
  }
  return coords;
}

namespace {

std::uint64_t nu_p(Int n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

ProjChar projective_from_tensor(const chartab::Table& t, std::uint64_t p,
                                const std::vector<chartab::Block>& blocks,
                                std::size_t defect0_char, std::size_t other_char,
                                const chartab::Block& target, const Relations* relations) {
  std::size_t b0 = chartab::block_of(blocks, defect0_char);
  if (blocks[b0].defect != 0)
    throw math_error("projective_from_tensor: first factor is not of defect 0 for p = " +
                     std::to_string(p));
  chartab::CharVector prod = chartab::tensor(t.irreducible(defect0_char), t.irreducible(other_char));
  ProjChar out;
  out.name = t.char_names()[defect0_char] + "(x)" + t.char_names()[other_char];
  out.provenance = "tensor";
  out.block_mults = cut_to_block(t, target, prod);
  if (relations) out.basic_coords = block_mults_to_basic(*relations, target.members, out.block_mults);
  return out;
}

ProjChar induce_projective(const chartab::Fusion& f, const chartab::Table& sub,
                           const chartab::Table& big, const chartab::CharVector& sub_char,
                           bool assume_projective, std::uint64_t p, const chartab::Block& target,
                           const Relations* relations) {
  if (!assume_projective) {
    // require defect 0 in the subgroup: nu_p(|H|) = nu_p(chi(1))
    const Cyclotomic& deg = sub_char.at(0);
    if (!deg.is_rational() || !exact::is_integer(deg.rational_value()))
      throw math_error("induce_projective: malformed character degree");
    if (nu_p(sub.group_order(), p) != nu_p(exact::rat_num(deg.rational_value()), p))
      throw math_error("induce_projective: subgroup character is not of defect 0 for p = " +
                       std::to_string(p));
  }
  chartab::CharVector ind = chartab::induce(f, sub, big, sub_char);
  ProjChar out;
  out.name = "Ind(" + f.source_name + ")";
  out.provenance = "induced";
  out.block_mults = cut_to_block(big, target, ind);
  if (relations) out.basic_coords = block_mults_to_basic(*relations, target.members, out.block_mults);
  return out;
}

chartab::CharVector character_from_block_mults(const chartab::Table& t,
                                               const chartab::Block& block,
                                               const std::vector<Int>& mults) {
  chartab::CharVector out(t.num_classes());
  for (std::size_t i = 0; i < block.members.size(); ++i) {
    if (mults[i] == 0) continue;
    const chartab::CharVector& chi = t.irreducible(block.members[i]);
    for (std::size_t c = 0; c < out.size(); ++c)
      out[c] += chi[c] * Cyclotomic(Rational(mults[i]));
  }
  return out;
}

bool vanishes_on_p_singular(const chartab::Table& t, std::uint64_t p,
                            const chartab::CharVector& values) {
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    if (t.classes()[c].order % p == 0 && !values[c].is_zero()) return false;
  return true;
}

namespace {

void require_nonneg(const std::vector<ParamInt>& vec, const exact::ParamSystem& system,
                    const char* when) {
  // admissible assignments only
  auto survivors = system.solve().survivors;
  for (std::size_t r = 0; r < vec.size(); ++r) {
    if (vec[r].is_constant()) {
      if (vec[r].constant() < 0)
        throw math_error(std::string("peel_pims: entry went negative ") + when + " at row " +
                         std::to_string(r));
      continue;
    }
    for (const auto& a : survivors)
      if (vec[r].eval(a) < 0)
        throw math_error(std::string("peel_pims: entry went negative ") + when + " at row " +
                         std::to_string(r));
  }
}

}  // namespace

PeelOutcome peel_pims(const std::vector<ParamInt>& candidate,
                      const std::vector<std::vector<ParamInt>>& knowns,
                      const exact::ParamSystem& system) {
  PeelOutcome out;
  out.residual = candidate;
  require_nonneg(out.residual, system, "before peeling");

  struct Lead {
    std::size_t row;
    Int value;
    std::size_t index;
  };
  std::vector<Lead> leads;
  for (std::size_t k = 0; k < knowns.size(); ++k) {
    if (knowns[k].size() != candidate.size())
      throw math_error("peel_pims: known column length mismatch");
    std::size_t lead = knowns[k].size();
    for (std::size_t r = 0; r < knowns[k].size(); ++r)
      if (!knowns[k][r].is_zero()) { lead = r; break; }
    if (lead == knowns[k].size()) throw math_error("peel_pims: zero known column");
    const ParamInt& lv = knowns[k][lead];
    if (!lv.is_constant() || lv.constant() <= 0)
      throw math_error("peel_pims: leading entry of a known column must be a positive constant");
    leads.push_back({lead, lv.constant(), k});
  }
  std::sort(leads.begin(), leads.end(), [](const Lead& a, const Lead& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.index < b.index;
  });
  for (std::size_t i = 1; i < leads.size(); ++i)
    if (leads[i].row == leads[i - 1].row)
      throw math_error("peel_pims: two known columns share leading row " +
                       std::to_string(leads[i].row));

  for (const Lead& l : leads) {
    const ParamInt& cur = out.residual[l.row];
    // forced multiplicity: current entry divided by the known leading value
    ParamInt mult;
    {
      Int c = cur.constant();
      if (c % l.value != 0)
        throw math_error("peel_pims: forced multiplicity is not integral at row " +
                         std::to_string(l.row));
      mult = ParamInt(c / l.value);
      for (const auto& [name, coeff] : cur.terms()) {
        if (coeff % l.value != 0)
          throw math_error("peel_pims: forced multiplicity is not integral at row " +
                           std::to_string(l.row));
        mult += ParamInt::param(name).scaled(coeff / l.value);
      }
    }
    if (mult.is_zero()) continue;
    for (std::size_t r = 0; r < out.residual.size(); ++r) {
      const ParamInt& kv = knowns[l.index][r];
      if (kv.is_zero()) continue;
      if (kv.is_constant()) {
        out.residual[r] = out.residual[r] - mult.scaled(kv.constant());
      } else if (mult.is_constant()) {
        out.residual[r] = out.residual[r] - kv.scaled(mult.constant());
      } else {
        throw math_error("peel_pims: product of parametrized multiplicity and entry is not affine");
      }
    }
    require_nonneg(out.residual, system, "after subtracting a known column");
    out.certificate.emplace_back(l.index, mult);
  }
  return out;
}

}  // namespace mrt::brauer
