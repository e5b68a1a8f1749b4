#include "mrt/chartab/extension.hpp"

#include <algorithm>

#include "mrt/util/error.hpp"

namespace mrt::chartab {

using exact::Cyclotomic;
using exact::Rational;

std::size_t ExtensionLabeling::eps_twist(std::size_t big_char_index) const {
  return eps_twist_perm.at(big_char_index);
}

ExtensionLabeling label_extension(const Table& sub, const Table& big, const Fusion& fusion,
                                  std::size_t x_class) {
  fusion.validate(sub, big);
  if (sub.group_order() * 2 != big.group_order())
    throw math_error("label_extension: fusion is not of index 2");

  ExtensionLabeling out;
  out.fusion = fusion;
  out.x_class = x_class;

  std::vector<bool> in_image(big.num_classes(), false);
  for (auto j : fusion.map) in_image[j] = true;
  if (x_class >= big.num_classes() || in_image[x_class])
    throw math_error("label_extension: x-class must lie outside the subgroup");

  // eps: the unique linear character with value 1 exactly on fused classes
  std::size_t eps = big.num_classes();
  for (std::size_t i = 0; i < big.irreducibles().size(); ++i) {
    if (big.degree(i) != 1) continue;
    bool match = true;
    for (std::size_t c = 0; c < big.num_classes(); ++c) {
      Cyclotomic want(in_image[c] ? 1 : -1);
      if (!(big.irreducible(i)[c] == want)) { match = false; break; }
    }
    if (match) { eps = i; break; }
  }
  if (eps == big.num_classes())
    throw math_error("label_extension: no sign character with kernel the subgroup");
  out.eps_index = eps;

  // sigma on classes: partner inside the fusion fiber
  out.sigma_classes.assign(sub.num_classes(), 0);
  for (std::size_t i = 0; i < sub.num_classes(); ++i) {
    std::size_t partner = i;
    for (std::size_t j = 0; j < sub.num_classes(); ++j)
      if (j != i && fusion.map[j] == fusion.map[i]) { partner = j; break; }
    out.sigma_classes[i] = partner;
  }

  // sigma on characters
  out.sigma_chars.assign(sub.irreducibles().size(), 0);
  for (std::size_t i = 0; i < sub.irreducibles().size(); ++i) {
    CharVector twisted(sub.num_classes());
    for (std::size_t c = 0; c < sub.num_classes(); ++c)
      twisted[c] = sub.irreducible(i)[out.sigma_classes[c]];
    auto j = sub.find_irreducible(twisted);
    if (!j) throw math_error("label_extension: sigma image of a character is not in the table");
    out.sigma_chars[i] = *j;
  }

  const CharVector& eps_vec = big.irreducible(eps);
  out.eps_twist_perm.assign(big.irreducibles().size(), 0);
  for (std::size_t i = 0; i < big.irreducibles().size(); ++i) {
    auto j = big.find_irreducible(tensor(big.irreducible(i), eps_vec));
    if (!j) throw math_error("label_extension: eps twist leaves the table");
    out.eps_twist_perm[i] = *j;
  }

  out.labels.assign(sub.irreducibles().size(), {});
  for (std::size_t i = 0; i < sub.irreducibles().size(); ++i) {
    ExtensionLabeling::Label& lab = out.labels[i];
    if (out.sigma_chars[i] != i) {
      CharVector ind = induce(fusion, sub, big, sub.irreducible(i));
      auto j = big.find_irreducible(ind);
      if (!j) throw math_error("label_extension: induced character of a moved character is reducible");
      lab.split = false;
      lab.fused_index = *j;
      continue;
    }
    // sigma-fixed: find the two extensions (restriction equals chi)
    std::vector<std::size_t> exts;
    for (std::size_t j = 0; j < big.irreducibles().size(); ++j) {
      if (big.degree(j) != sub.degree(i)) continue;
      if (restrict_char(fusion, sub, big, big.irreducible(j)) == sub.irreducible(i))
        exts.push_back(j);
    }
    if (exts.size() != 2)
      throw math_error("label_extension: sigma-fixed character does not have exactly two extensions");
    if (out.eps_twist_perm[exts[0]] != exts[1])
      throw math_error("label_extension: extensions are not an eps-twist pair");
    lab.split = true;
    const Cyclotomic& v0 = big.irreducible(exts[0])[x_class];
    if (!v0.is_zero() && v0.is_real()) {
      int sign = v0.sign();
      lab.plus_index = sign > 0 ? exts[0] : exts[1];
      lab.minus_index = sign > 0 ? exts[1] : exts[0];
      lab.convention_dependent = false;
    } else {
      lab.plus_index = std::min(exts[0], exts[1]);
      lab.minus_index = std::max(exts[0], exts[1]);
      lab.convention_dependent = true;
    }
  }
  return out;
}

}  // namespace mrt::chartab
