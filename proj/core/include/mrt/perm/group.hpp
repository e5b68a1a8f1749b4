#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrt/perm/perm.hpp"

namespace mrt::perm {

constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;
constexpr std::size_t kDegreeLimit = 1u << 20;

// Full element list of a small group, breadth-first over generator words
// with lexicographic tie-break; elements[0] is the identity and each element
// records (parent index, generator index), so generator words can be read
// back for matrix representations.
struct Enumeration {
  std::vector<Perm> elements;
  std::vector<std::pair<std::int64_t, std::int64_t>> parent;  // (-1, -1) for identity
  std::map<Perm, std::size_t> index;
};

struct ConjClass {
  std::size_t rep;             // index into the enumeration
  std::size_t size;
  std::uint64_t order;         // element order of the class
  std::uint64_t centralizer;   // |G| / size
};

struct ClassData {
  std::vector<ConjClass> classes;              // in order of first appearance
  std::vector<std::size_t> class_of;           // element index -> class index
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;  // prime -> class map
  std::uint64_t exponent = 1;
};

class Group {
 public:
  Group(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const Enumeration& enumerate(std::uint64_t limit = kDefaultEnumerationLimit) const;
  std::uint64_t order(std::uint64_t limit = kDefaultEnumerationLimit) const;
  bool contains(const Perm& p) const;
  std::vector<std::size_t> word_of(std::size_t element_index) const;  // generator indices

  const ClassData& conjugacy_classes() const;

  std::vector<Perm> centralizer_elements(const Perm& x) const;
  std::vector<Perm> subgroup_closure(std::vector<Perm> seed, std::uint64_t limit) const;

  // A Sylow p-subgroup as an element list, grown by normalizer extension.
  std::vector<Perm> sylow_subgroup(std::uint64_t p) const;

  // An x-invariant Sylow p-subgroup, found by conjugating a Sylow subgroup
  // over the whole group; fails loudly when none exists.
  struct InvariantSylow {
    std::vector<Perm> subgroup;
    Perm conjugator;
    std::uint64_t normalizer_order = 0;
    std::vector<Perm> x_fixed_part;  // C_P(x), candidate torus-normalizer seed
  };
  InvariantSylow invariant_sylow(std::uint64_t p, const Perm& x) const;

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  mutable std::optional<Enumeration> enum_;
  mutable std::optional<ClassData> classes_;
};

// ---------------------------------------------------------------------------
// coset distribution (Lemma-style order/centralizer classification)

struct InvariantOptions {
  bool centralizer_orders = true;   // honored only when the group is enumerable
  bool power_refinement = true;     // refine by invariants of powers
  bool fixed_point_counts = false;
};

struct CosetDistribution {
  struct Line {
    std::uint64_t order = 0;
    std::optional<std::uint64_t> centralizer;
    std::optional<std::uint64_t> square_centralizer;
    std::optional<std::uint64_t> fixed_points;
    std::optional<std::size_t> class_index;  // when classified against class data
    std::size_t count = 0;
  };
  std::vector<Line> lines;    // deterministic order
  bool used_class_data = false;
  std::vector<std::string> notes;  // degradation / ambiguity reports
};

// Multiset of invariants of Z = { y v : v in V }. When `ambient` is
// enumerable the elements are classified by conjugacy class; otherwise the
// report degrades to order distribution plus requested cheap invariants and
// says so in `notes`.
CosetDistribution coset_distribution(const Group& ambient, const Perm& y, const std::vector<Perm>& v,
                                     const InvariantOptions& opts = {});

// ---------------------------------------------------------------------------
// filtered pair search

struct PairPredicate {
  std::string name;
  std::function<bool(const Perm&, const Perm&)> test;
};

// All ordered pairs (s, t) from `candidates` passing every predicate,
// (index) lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> filtered_pair_search(
    const std::vector<Perm>& candidates, const std::vector<PairPredicate>& predicates);

PairPredicate product_order_is(std::uint64_t m);
// |s * t^x| = m
PairPredicate twisted_product_order_is(const Perm& x, std::uint64_t m);
// |U ^ U^s| = m (membership against the supplied element list)
PairPredicate intersection_size_is(const std::vector<Perm>& u, std::uint64_t m, bool on_first);
// C_W(<s,t>) trivial for the supplied element list W
PairPredicate centralizer_in_set_trivial(const std::vector<Perm>& w);

// ---------------------------------------------------------------------------
// file format: `PERM n` header, one line per generator, 1-based images

void write_perms(std::ostream& os, std::size_t degree, const std::vector<Perm>& perms);
std::vector<Perm> read_perms(std::istream& is, std::size_t& degree_out);
Group read_group_file(std::istream& is);

}  // namespace mrt::perm
