#include "mrt/mtx/simples.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "mrt/util/error.hpp"

namespace mrt::mtx {

unsigned multiplicative_order_mod(std::uint64_t p, std::uint64_t n, unsigned max_degree) {
  if (n <= 1) return 1;
  if (std::gcd(p, n) != 1) throw math_error("multiplicative_order_mod: arguments not coprime");
  std::uint64_t pow = p % n;
  unsigned k = 1;
  while (pow != 1) {
    pow = pow * p % n;
    ++k;
    if (k > max_degree) throw math_error("multiplicative_order_mod: order exceeds the degree cap");
  }
  return k;
}

std::vector<Module> simples_closure(const perm::Group& g, const gf::Field& field,
                                    std::size_t target_count, std::uint64_t seed) {
  constexpr std::size_t kDimCap = 4096;
  std::vector<Module> found;
  std::deque<Module> queue;
  queue.push_back(permutation_module(field, g.generators()));
  std::set<std::pair<std::size_t, std::size_t>> tried;
  std::uint64_t chop_counter = 0;
  while (found.size() < target_count) {
    if (queue.empty()) {
      std::size_t bi = SIZE_MAX, bj = SIZE_MAX, best = SIZE_MAX;
      for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i; j < found.size(); ++j) {
          if (tried.count({i, j})) continue;
          std::size_t d = found[i].dim * found[j].dim;
          if (d < best && d <= kDimCap) {
            best = d;
            bi = i;
            bj = j;
          }
        }
      if (bi == SIZE_MAX)
        throw math_error("simples_closure: tensor closure exhausted before reaching the target count");
      tried.insert({bi, bj});
      if (found[bi].dim * found[bj].dim > 1) queue.push_back(found[bi].tensor(found[bj]));
      if (queue.empty()) continue;
    }
    Module m = std::move(queue.front());
    queue.pop_front();
    CompositionSeries cs = chop(m, seed ^ (0x517cc1b727220a95ULL * ++chop_counter));
    for (const auto& f : cs.factors) {
      bool known = false;
      for (const auto& s : found)
        if (iso(s, f.module, nullptr, seed)) { known = true; break; }
      if (!known) {
        found.push_back(f.module);
        if (found.size() == target_count) break;
      }
    }
  }
  return found;
}

}  // namespace mrt::mtx
