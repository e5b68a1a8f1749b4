#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrt/exact/cyclotomic.hpp"
#include "mrt/exact/rational.hpp"

namespace mrt::chartab {

using CharVector = std::vector<exact::Cyclotomic>;

struct ClassInfo {
  std::string name;
  std::uint64_t order = 1;
  exact::Int size = 1;
  exact::Int centralizer = 1;
};

// Ordinary character table: class data, power maps, and the full list of
// irreducible characters with exact cyclotomic values.
class Table {
 public:
  Table() = default;
  Table(std::string name, exact::Int group_order, std::vector<ClassInfo> classes,
        std::map<std::uint64_t, std::vector<std::size_t>> power_maps,
        std::vector<CharVector> irreducibles, std::vector<std::string> char_names = {});

  const std::string& name() const { return name_; }
  const exact::Int& group_order() const { return order_; }
  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::map<std::uint64_t, std::vector<std::size_t>>& power_maps() const { return power_maps_; }
  const std::vector<CharVector>& irreducibles() const { return irreducibles_; }
  const CharVector& irreducible(std::size_t i) const { return irreducibles_.at(i); }
  const std::vector<std::string>& char_names() const { return char_names_; }
  exact::Int degree(std::size_t i) const;

  // Throws math_error with a description on the first violated invariant:
  // identity class first, counting identities, power-map consistency, and
  // both orthogonality relations.
  void validate() const;

  std::optional<std::size_t> find_class(const std::string& name) const;
  std::optional<std::size_t> find_char(const std::string& name) const;
  // index of an irreducible equal to the given vector
  std::optional<std::size_t> find_irreducible(const CharVector& values) const;

 private:
  std::string name_;
  exact::Int order_ = 1;
  std::vector<ClassInfo> classes_;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps_;
  std::vector<CharVector> irreducibles_;
  std::vector<std::string> char_names_;
};

// (1/|G|) sum_C |C| a(C) conj(b(C))
exact::Rational scalar_product(const Table& t, const CharVector& a, const CharVector& b);

CharVector tensor(const CharVector& a, const CharVector& b);

CharVector regular_character(const Table& t);

// class-level embedding of a subgroup table into a group table
struct Fusion {
  std::string source_name;
  std::string target_name;
  std::vector<std::size_t> map;  // source class -> target class

  // order preservation, identity, power-map compatibility
  void validate(const Table& src, const Table& dst) const;
};

CharVector induce(const Fusion& f, const Table& src, const Table& dst, const CharVector& ch);
CharVector restrict_char(const Fusion& f, const Table& src, const Table& dst, const CharVector& ch);

}  // namespace mrt::chartab
