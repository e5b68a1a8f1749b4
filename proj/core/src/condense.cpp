#include "mrt/mtx/condense.hpp"

#include <algorithm>
#include <map>

#include "mrt/util/error.hpp"

namespace mrt::mtx {

void CondensationSetup::validate() const {
  if (v_elements.empty()) throw math_error("CondensationSetup: V must contain the identity at least");
  if (v_elements.size() % field.characteristic() == 0)
    throw math_error("CondensationSetup: |V| divisible by the characteristic");
}

std::vector<std::vector<std::uint32_t>> v_orbits(const CondensationSetup& setup, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::size_t x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orbit;
    std::vector<std::uint32_t> queue{std::uint32_t(x)};
    seen[x] = true;
    while (!queue.empty()) {
      std::uint32_t cur = queue.back();
      queue.pop_back();
      orbit.push_back(cur);
      for (const perm::Perm& v : setup.v_elements) {
        std::uint32_t img = v.apply(cur);
        if (!seen[img]) {
          seen[img] = true;
          queue.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

gf::Matrix condense_permutation(const CondensationSetup& setup, const perm::Perm& g) {
  setup.validate();
  const gf::Field& F = setup.field;
  std::size_t degree = g.degree();
  auto orbits = v_orbits(setup, degree);
  std::vector<std::size_t> orbit_of(degree);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (auto x : orbits[i]) orbit_of[x] = i;
  gf::Matrix out(F, orbits.size(), orbits.size());
  std::vector<std::size_t> counts(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto x : orbits[i]) ++counts[orbit_of[g.apply(x)]];
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      if (!counts[j]) continue;
      gf::Fel num = F.from_int(static_cast<long long>(counts[j]));
      gf::Fel den = F.from_int(static_cast<long long>(orbits[j].size()));
      out.set(i, j, F.mul(num, F.inv(den)));
    }
  }
  return out;
}

MatrixCondenser::MatrixCondenser(const Module& m, const std::vector<gf::Matrix>& v_action) {
  const gf::Field& F = m.field;
  if (v_action.empty()) throw math_error("MatrixCondenser: empty V action");
  if (v_action.size() % F.characteristic() == 0)
    throw math_error("MatrixCondenser: |V| divisible by the characteristic");
  gf::Matrix sum(F, m.dim, m.dim);
  for (const auto& v : v_action) {
    if (v.rows() != m.dim || v.cols() != m.dim) throw math_error("MatrixCondenser: V action shape mismatch");
    sum = sum + v;
  }
  gf::Fel inv_order = F.inv(F.from_int(static_cast<long long>(v_action.size())));
  iota_ = sum.scaled(inv_order);
  // fixed space = left kernel of (iota - I); rows v with v * iota = v
  gf::Matrix diff = iota_ - gf::Matrix::identity(F, m.dim);
  basis_ = diff.transpose().nullspace();
}

gf::Matrix MatrixCondenser::condense(const gf::Matrix& g) const {
  // rows: b_i * g * iota, expressed in the fixed-space basis
  gf::Matrix image = basis_ * g * iota_;
  auto coords = image.express_in_rows(basis_);
  if (!coords) throw math_error("MatrixCondenser: projection left the fixed space (inconsistent V action)");
  return *coords;
}

exact::Cyclotomic trace_formula_average(
    const std::vector<std::pair<exact::Cyclotomic, std::size_t>>& class_counts,
    std::size_t v_order) {
  std::size_t total = 0;
  exact::Cyclotomic sum;
  for (const auto& [value, count] : class_counts) {
    total += count;
    sum += value * exact::Cyclotomic(static_cast<long long>(count));
  }
  if (total != v_order) throw math_error("trace_formula_average: multiset size differs from |V|");
  return sum * exact::Cyclotomic(exact::Rational(1, static_cast<long long>(v_order)));
}

}  // namespace mrt::mtx
