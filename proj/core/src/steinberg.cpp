#include "mrt/perm/steinberg.hpp"

#include <map>
#include <set>

#include "mrt/util/error.hpp"

namespace mrt::perm {

void BNData::validate() const {
  if (u_elements.empty() || w_elements.empty()) throw math_error("BNData: U and W must be nonempty");
  std::set<Perm> u_set(u_elements.begin(), u_elements.end());
  if (!u_set.count(Perm(group.degree()))) throw math_error("BNData: U must contain the identity");
  for (const Perm& a : u_elements)
    for (const Perm& b : u_elements)
      if (!u_set.count(a * b)) throw math_error("BNData: U is not closed under multiplication");
  std::map<Perm, unsigned> lengths;
  for (const auto& [w, l] : w_elements) lengths[w] = l;
  auto it = lengths.find(Perm(group.degree()));
  if (it == lengths.end() || it->second != 0) throw math_error("BNData: l(1) must be 0");
  for (const auto& [w, l] : w_elements)
    for (const Perm& s : coxeter_gens) {
      auto jt = lengths.find(w * s);
      if (jt == lengths.end()) throw math_error("BNData: W not closed under Coxeter generators");
      long diff = long(jt->second) - long(l);
      if (diff != 1 && diff != -1) throw math_error("BNData: length function violates |l(ws) - l(w)| = 1");
    }
  for (const auto& [v, lv] : w_elements)
    for (const auto& [w, lw] : w_elements) {
      unsigned lvw = lengths.at(v * w);
      if (((lv + lw) & 1u) != (lvw & 1u))
        throw math_error("BNData: (-1)^l is not multiplicative on W");
    }
}

mtx::Module steinberg_element_module(const BNData& bn, const gf::Field& field) {
  bn.validate();
  const Enumeration& en = bn.group.enumerate();
  const std::size_t n = en.elements.size();
  const gf::Field& F = field;

  // e as a vector over the group basis
  std::vector<gf::Fel> e(n, 0);
  for (const Perm& u : bn.u_elements)
    for (const auto& [w, l] : bn.w_elements) {
      std::size_t idx = en.index.at(u * w);
      gf::Fel sign = (l & 1u) ? F.neg(1) : 1;
      e[idx] = F.add(e[idx], sign);
    }

  // rows e * u (right translation permutes the group basis)
  gf::Matrix basis(F, bn.u_elements.size(), n);
  for (std::size_t ui = 0; ui < bn.u_elements.size(); ++ui) {
    const Perm& u = bn.u_elements[ui];
    for (std::size_t g = 0; g < n; ++g) {
      if (!e[g]) continue;
      basis.set(ui, en.index.at(en.elements[g] * u), e[g]);
    }
  }
  if (basis.rank() != bn.u_elements.size())
    throw math_error("steinberg_element_module: {e u} is linearly dependent; check the BN data");

  std::vector<gf::Matrix> action;
  for (const Perm& gen : bn.group.generators()) {
    gf::Matrix image(F, bn.u_elements.size(), n);
    for (std::size_t ui = 0; ui < bn.u_elements.size(); ++ui)
      for (std::size_t g = 0; g < n; ++g) {
        gf::Fel c = basis.at(ui, g);
        if (c) image.set(ui, en.index.at(en.elements[g] * gen), c);
      }
    auto coords = image.express_in_rows(basis);
    if (!coords)
      throw math_error("steinberg_element_module: span of {e u} is not G-invariant; check the BN data");
    action.push_back(std::move(*coords));
  }
  mtx::Module st(F, std::move(action));
  st.require_invertible();
  return st;
}

}  // namespace mrt::perm
