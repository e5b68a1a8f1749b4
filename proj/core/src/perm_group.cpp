#include "mrt/perm/group.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::perm {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Group::Group(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ == 0 || degree_ > kDegreeLimit) throw math_error("Group: degree out of range");
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw math_error("Group: generator degree mismatch");
  if (gens_.empty()) gens_.push_back(Perm(degree_));
}

const Enumeration& Group::enumerate(std::uint64_t limit) const {
  if (enum_) {
    if (enum_->elements.size() > limit) throw budget_error("Group: enumeration exceeds limit");
    return *enum_;
  }
  Enumeration e;
  Perm id(degree_);
  e.elements.push_back(id);
  e.parent.emplace_back(-1, -1);
  e.index[id] = 0;
  std::size_t head = 0;
  while (head < e.elements.size()) {
    Perm cur = e.elements[head];
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      Perm nxt = cur * gens_[gi];
      if (e.index.emplace(nxt, e.elements.size()).second) {
        e.elements.push_back(nxt);
        e.parent.emplace_back(std::int64_t(head), std::int64_t(gi));
        if (e.elements.size() > limit) throw budget_error("Group: enumeration exceeds limit");
      }
    }
    ++head;
  }
  enum_ = std::move(e);
  return *enum_;
}

std::uint64_t Group::order(std::uint64_t limit) const { return enumerate(limit).elements.size(); }

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return enumerate().index.count(p) > 0;
}

std::vector<std::size_t> Group::word_of(std::size_t element_index) const {
  const Enumeration& e = enumerate();
  if (element_index >= e.elements.size()) throw math_error("Group: element index out of range");
  std::vector<std::size_t> word;
  std::int64_t cur = std::int64_t(element_index);
  while (cur > 0) {
    word.push_back(std::size_t(e.parent[cur].second));
    cur = e.parent[cur].first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

const ClassData& Group::conjugacy_classes() const {
  if (classes_) return *classes_;
  const Enumeration& e = enumerate();
  std::size_t n = e.elements.size();
  ClassData cd;
  cd.class_of.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (cd.class_of[i] != SIZE_MAX) continue;
    std::size_t ci = cd.classes.size();
    std::deque<std::size_t> queue{i};
    cd.class_of[i] = ci;
    std::size_t size = 0;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (const Perm& g : gens_) {
        Perm img = e.elements[cur].conjugated_by(g);
        std::size_t idx = e.index.at(img);
        if (cd.class_of[idx] == SIZE_MAX) {
          cd.class_of[idx] = ci;
          queue.push_back(idx);
        }
      }
    }
    ConjClass cc;
    cc.rep = i;
    cc.size = size;
    cc.order = e.elements[i].order();
    cc.centralizer = n / size;
    cd.classes.push_back(cc);
  }
  for (const auto& c : cd.classes) cd.exponent = std::lcm(cd.exponent, c.order);
  for (std::uint64_t p = 2; p <= cd.exponent; ++p) {
    if (!is_prime_u64(p) || cd.exponent % p != 0) continue;
    std::vector<std::size_t> pm;
    for (const auto& c : cd.classes) {
      Perm power(degree_);
      const Perm& rep = e.elements[c.rep];
      for (std::uint64_t t = 0; t < p; ++t) power = power * rep;
      pm.push_back(cd.class_of[e.index.at(power)]);
    }
    cd.power_maps[p] = std::move(pm);
  }
  classes_ = std::move(cd);
  return *classes_;
}

std::vector<Perm> Group::centralizer_elements(const Perm& x) const {
  const Enumeration& e = enumerate();
  std::vector<Perm> out;
  for (const Perm& g : e.elements)
    if (g * x == x * g) out.push_back(g);
  return out;
}

std::vector<Perm> Group::subgroup_closure(std::vector<Perm> seed, std::uint64_t limit) const {
  std::set<Perm> seen;
  std::deque<Perm> queue;
  Perm id(degree_);
  seen.insert(id);
  queue.push_back(id);
  for (auto& s : seed)
    if (seen.insert(s).second) queue.push_back(s);
  std::vector<Perm> gens = seed;
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm nxt = cur * g;
      if (seen.insert(nxt).second) {
        queue.push_back(nxt);
        if (seen.size() > limit) throw budget_error("Group: subgroup closure exceeds limit");
      }
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<Perm> Group::sylow_subgroup(std::uint64_t p) const {
  const Enumeration& e = enumerate();
  std::uint64_t n = e.elements.size();
  std::uint64_t target = 1;
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  // grow a p-subgroup: extend by p-power-order elements of its normalizer
  std::vector<Perm> sub{Perm(degree_)};
  std::set<Perm> sub_set(sub.begin(), sub.end());
  while (sub.size() < target) {
    bool extended = false;
    for (const Perm& g : e.elements) {
      if (sub_set.count(g)) continue;
      std::uint64_t ord = g.order();
      bool ppower = true;
      for (std::uint64_t o = ord; o > 1;) {
        if (o % p != 0) { ppower = false; break; }
        o /= p;
      }
      if (!ppower || ord == 1) continue;
      // g must normalize the current subgroup
      bool normalizes = true;
      for (const Perm& s : sub)
        if (!sub_set.count(s.conjugated_by(g))) { normalizes = false; break; }
      if (!normalizes) continue;
      std::vector<Perm> bigger = subgroup_closure([&] {
        std::vector<Perm> seed = sub;
        seed.push_back(g);
        return seed;
      }(), target);
      if (bigger.size() > sub.size() && bigger.size() <= target) {
        std::uint64_t bs = bigger.size();
        bool bp = true;
        while (bs > 1) {
          if (bs % p) { bp = false; break; }
          bs /= p;
        }
        if (!bp) continue;
        sub = std::move(bigger);
        sub_set = std::set<Perm>(sub.begin(), sub.end());
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  if (sub.size() != target) throw math_error("Group: Sylow subgroup construction failed");
  return sub;
}

Group::InvariantSylow Group::invariant_sylow(std::uint64_t p, const Perm& x) const {
  const Enumeration& e = enumerate();
  std::vector<Perm> syl = sylow_subgroup(p);
  std::set<Perm> syl_set(syl.begin(), syl.end());
  for (const Perm& t : e.elements) {
    // check (P^t)^x = P^t, i.e. x t^{-1} P t x^{-1} = t^{-1} P t
    bool ok = true;
    for (const Perm& s : syl) {
      Perm img = s.conjugated_by(t).conjugated_by(x);
      if (!syl_set.count(img.conjugated_by(t.inverse()))) { ok = false; break; }
    }
    if (!ok) continue;
    InvariantSylow out;
    out.conjugator = t;
    for (const Perm& s : syl) out.subgroup.push_back(s.conjugated_by(t));
    std::sort(out.subgroup.begin(), out.subgroup.end());
    std::set<Perm> inv_set(out.subgroup.begin(), out.subgroup.end());
    std::uint64_t norm = 0;
    for (const Perm& g : e.elements) {
      bool n_ok = true;
      for (const Perm& s : out.subgroup)
        if (!inv_set.count(s.conjugated_by(g))) { n_ok = false; break; }
      if (n_ok) ++norm;
    }
    out.normalizer_order = norm;
    for (const Perm& s : out.subgroup)
      if (s.conjugated_by(x) == s) out.x_fixed_part.push_back(s);
    return out;
  }
  throw math_error("Group: no x-invariant Sylow subgroup found");
}

// ---------------------------------------------------------------------------

CosetDistribution coset_distribution(const Group& ambient, const Perm& y, const std::vector<Perm>& v,
                                     const InvariantOptions& opts) {
  CosetDistribution out;
  bool enumerable = true;
  const Enumeration* en = nullptr;
  const ClassData* cd = nullptr;
  try {
    en = &ambient.enumerate();
    cd = &ambient.conjugacy_classes();
  } catch (const budget_error&) {
    enumerable = false;
    out.notes.push_back("group not enumerable: order distribution only");
  }
  struct Key {
    std::uint64_t order;
    std::int64_t centralizer, square_centralizer, fixed;
    std::int64_t class_index;
    bool operator<(const Key& o) const {
      return std::tie(order, centralizer, square_centralizer, fixed, class_index) <
             std::tie(o.order, o.centralizer, o.square_centralizer, o.fixed, o.class_index);
    }
  };
  std::map<Key, std::size_t> counts;
  for (const Perm& vi : v) {
    Perm z = y * vi;
    Key key{z.order(), -1, -1, -1, -1};
    if (opts.fixed_point_counts) key.fixed = std::int64_t(z.fixed_points());
    if (enumerable) {
      auto it = en->index.find(z);
      if (it == en->index.end()) {
        out.notes.push_back("coset element outside the ambient group");
        throw math_error("coset_distribution: y*v is not in the ambient group");
      }
      std::size_t ci = cd->class_of[it->second];
      key.class_index = std::int64_t(ci);
      if (opts.centralizer_orders) key.centralizer = std::int64_t(cd->classes[ci].centralizer);
      if (opts.power_refinement) {
        Perm sq = z * z;
        std::size_t sq_ci = cd->class_of[en->index.at(sq)];
        key.square_centralizer = std::int64_t(cd->classes[sq_ci].centralizer);
      }
    }
    ++counts[key];
  }
  out.used_class_data = enumerable;
  for (auto& [k, c] : counts) {
    CosetDistribution::Line line;
    line.order = k.order;
    if (k.centralizer >= 0) line.centralizer = std::uint64_t(k.centralizer);
    if (k.square_centralizer >= 0) line.square_centralizer = std::uint64_t(k.square_centralizer);
    if (k.fixed >= 0) line.fixed_points = std::uint64_t(k.fixed);
    if (k.class_index >= 0) line.class_index = std::size_t(k.class_index);
    line.count = c;
    out.lines.push_back(line);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::size_t, std::size_t>> filtered_pair_search(
    const std::vector<Perm>& candidates, const std::vector<PairPredicate>& predicates) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      bool ok = true;
      for (const auto& pred : predicates)
        if (!pred.test(candidates[i], candidates[j])) { ok = false; break; }
      if (ok) out.emplace_back(i, j);
    }
  return out;
}

PairPredicate product_order_is(std::uint64_t m) {
  return {"product-order", [m](const Perm& s, const Perm& t) { return (s * t).order() == m; }};
}

PairPredicate twisted_product_order_is(const Perm& x, std::uint64_t m) {
  return {"twisted-product-order",
          [x, m](const Perm& s, const Perm& t) { return (s * t.conjugated_by(x)).order() == m; }};
}

PairPredicate intersection_size_is(const std::vector<Perm>& u, std::uint64_t m, bool on_first) {
  auto u_set = std::make_shared<std::set<Perm>>(u.begin(), u.end());
  return {"intersection-size", [u_set, u, m, on_first](const Perm& s, const Perm& t) {
            const Perm& g = on_first ? s : t;
            std::uint64_t count = 0;
            for (const Perm& e : u)
              if (u_set->count(e.conjugated_by(g))) ++count;
            return count == m;
          }};
}

PairPredicate centralizer_in_set_trivial(const std::vector<Perm>& w) {
  return {"centralizer-trivial", [w](const Perm& s, const Perm& t) {
            for (const Perm& e : w) {
              if (e.is_identity()) continue;
              if (e * s == s * e && e * t == t * e) return false;
            }
            return true;
          }};
}

// ---------------------------------------------------------------------------

void write_perms(std::ostream& os, std::size_t degree, const std::vector<Perm>& perms) {
  os << "PERM " << degree << '\n';
  for (const Perm& p : perms) {
    for (std::size_t i = 0; i < degree; ++i) {
      if (i) os << ' ';
      os << p.apply(std::uint32_t(i)) + 1;
    }
    os << '\n';
  }
}

std::vector<Perm> read_perms(std::istream& is, std::size_t& degree_out) {
  std::string line;
  std::vector<Perm> out;
  std::size_t degree = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "PERM") {
      std::size_t d = 0;
      if (!(ls >> d) || d == 0) throw input_error("PERM: malformed header '" + line + "'");
      if (have_header && d != degree) throw input_error("PERM: inconsistent degrees across blocks");
      degree = d;
      have_header = true;
      continue;
    }
    if (!have_header) throw input_error("PERM: missing header");
    std::vector<std::uint32_t> images;
    images.reserve(degree);
    std::istringstream ls2(line);
    std::uint64_t v;
    while (ls2 >> v) images.push_back(std::uint32_t(v));
    if (images.size() != degree) throw input_error("PERM: wrong image count in '" + line + "'");
    out.push_back(Perm::from_images1(images));
  }
  if (!have_header) throw input_error("PERM: empty file");
  degree_out = degree;
  return out;
}

Group read_group_file(std::istream& is) {
  std::size_t degree = 0;
  std::vector<Perm> gens = read_perms(is, degree);
  return Group(degree, std::move(gens));
}

}  // namespace mrt::perm
