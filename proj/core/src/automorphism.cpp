#include "mrt/chartab/automorphism.hpp"

#include <algorithm>
#include <set>

#include "mrt/util/error.hpp"

namespace mrt::chartab {

bool table_automorphism_check(const Table& t, const std::vector<std::size_t>& class_perm,
                              std::vector<std::size_t>* char_perm_out) {
  const std::size_t k = t.num_classes();
  if (class_perm.size() != k) return false;
  std::vector<bool> seen(k, false);
  for (auto v : class_perm) {
    if (v >= k || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const ClassInfo& a = t.classes()[i];
    const ClassInfo& b = t.classes()[class_perm[i]];
    if (a.order != b.order || a.size != b.size || a.centralizer != b.centralizer) return false;
  }
  for (const auto& [p, pm] : t.power_maps())
    for (std::size_t i = 0; i < k; ++i)
      if (pm[class_perm[i]] != class_perm[pm[i]]) return false;
  std::vector<std::size_t> char_perm(t.irreducibles().size());
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i) {
    CharVector permuted(k);
    for (std::size_t c = 0; c < k; ++c) permuted[c] = t.irreducible(i)[class_perm[c]];
    auto j = t.find_irreducible(permuted);
    if (!j) return false;
    char_perm[i] = *j;
  }
  if (char_perm_out) *char_perm_out = std::move(char_perm);
  return true;
}

namespace {

void search(const Table& t, const std::vector<std::vector<std::size_t>>& candidates,
            std::vector<std::size_t>& perm, std::vector<bool>& used, std::size_t pos,
            std::size_t& visited, std::size_t budget,
            std::vector<std::vector<std::size_t>>& out) {
  if (++visited > budget) throw budget_error("enumerate_table_automorphisms: search budget exhausted");
  const std::size_t k = t.num_classes();
  if (pos == k) {
    if (table_automorphism_check(t, perm)) out.push_back(perm);
    return;
  }
  for (std::size_t img : candidates[pos]) {
    if (used[img]) continue;
    // partial power-map consistency
    bool ok = true;
    for (const auto& [p, pm] : t.power_maps()) {
      if (pm[pos] < pos) {  // image of the power already fixed
        if (pm[img] != perm[pm[pos]]) { ok = false; break; }
      }
      if (pm[pos] == pos && pm[img] != img) { ok = false; break; }
    }
    if (!ok) continue;
    perm[pos] = img;
    used[img] = true;
    search(t, candidates, perm, used, pos + 1, visited, budget, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_table_automorphisms(const Table& t,
                                                                    std::size_t budget) {
  const std::size_t k = t.num_classes();
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const ClassInfo& a = t.classes()[i];
      const ClassInfo& b = t.classes()[j];
      if (a.order == b.order && a.size == b.size && a.centralizer == b.centralizer)
        candidates[i].push_back(j);
    }
  std::vector<std::size_t> perm(k);
  std::vector<bool> used(k, false);
  std::vector<std::vector<std::size_t>> out;
  std::size_t visited = 0;
  search(t, candidates, perm, used, 0, visited, budget, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> automorphism_orbit_of_fusions(
    const Fusion& f, const std::vector<std::vector<std::size_t>>& src_auts,
    const std::vector<std::vector<std::size_t>>& dst_auts) {
  std::set<std::vector<std::size_t>> orbit;
  for (const auto& sa : src_auts)
    for (const auto& da : dst_auts) {
      std::vector<std::size_t> g(f.map.size());
      for (std::size_t i = 0; i < f.map.size(); ++i) g[i] = da[f.map[sa[i]]];
      orbit.insert(std::move(g));
    }
  return std::vector<std::vector<std::size_t>>(orbit.begin(), orbit.end());
}

}  // namespace mrt::chartab
