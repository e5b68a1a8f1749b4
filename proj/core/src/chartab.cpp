#include "mrt/chartab/table.hpp"

#include <algorithm>
#include <numeric>

#include "mrt/util/error.hpp"

namespace mrt::chartab {

using exact::Cyclotomic;
using exact::Int;
using exact::Rational;

Table::Table(std::string name, exact::Int group_order, std::vector<ClassInfo> classes,
             std::map<std::uint64_t, std::vector<std::size_t>> power_maps,
             std::vector<CharVector> irreducibles, std::vector<std::string> char_names)
    : name_(std::move(name)),
      order_(std::move(group_order)),
      classes_(std::move(classes)),
      power_maps_(std::move(power_maps)),
      irreducibles_(std::move(irreducibles)),
      char_names_(std::move(char_names)) {
  if (char_names_.empty())
    for (std::size_t i = 0; i < irreducibles_.size(); ++i)
      char_names_.push_back("X" + std::to_string(i + 1));
  if (char_names_.size() != irreducibles_.size())
    throw math_error("Table: character name count mismatch");
}

exact::Int Table::degree(std::size_t i) const {
  const Cyclotomic& d = irreducibles_.at(i).at(0);
  if (!d.is_rational() || !exact::is_integer(d.rational_value()))
    throw math_error("Table: irrational character degree");
  return exact::rat_num(d.rational_value());
}

void Table::validate() const {
  if (classes_.empty()) throw math_error("Table: no classes");
  if (classes_[0].order != 1) throw math_error("Table: first class is not the identity");
  Int size_sum = 0;
  for (const auto& c : classes_) {
    if (c.order < 1) throw math_error("Table: class order < 1");
    if (c.size * c.centralizer != order_)
      throw math_error("Table: class size * centralizer != group order at class " + c.name);
    size_sum += c.size;
  }
  if (size_sum != order_) throw math_error("Table: class sizes do not sum to the group order");
  for (const auto& [p, pm] : power_maps_) {
    if (pm.size() != classes_.size()) throw math_error("Table: power map length mismatch");
    for (std::size_t i = 0; i < pm.size(); ++i) {
      if (pm[i] >= classes_.size()) throw math_error("Table: power map image out of range");
      std::uint64_t n = classes_[i].order;
      std::uint64_t expect = n / std::gcd(n, p);
      if (classes_[pm[i]].order != expect)
        throw math_error("Table: power map order inconsistency at class " + classes_[i].name);
    }
    if (pm[0] != 0) throw math_error("Table: power map moves the identity");
  }
  if (irreducibles_.size() != classes_.size())
    throw math_error("Table: number of irreducibles differs from number of classes");
  Int degree_sq = 0;
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (irreducibles_[i].size() != classes_.size())
      throw math_error("Table: character length mismatch for " + char_names_[i]);
    Int d = degree(i);
    if (d < 1) throw math_error("Table: character degree < 1");
    degree_sq += d * d;
  }
  if (degree_sq != order_) throw math_error("Table: sum of squared degrees differs from group order");
  // first orthogonality
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    for (std::size_t j = i; j < irreducibles_.size(); ++j) {
      Rational want = i == j ? Rational(1) : Rational(0);
      Rational got;
      {
        Cyclotomic acc;
        for (std::size_t c = 0; c < classes_.size(); ++c)
          acc += irreducibles_[i][c] * irreducibles_[j][c].conj() *
                 Cyclotomic(Rational(classes_[c].size, order_));
        if (!acc.is_rational())
          throw math_error("Table: non-rational inner product of irreducibles");
        got = acc.rational_value();
      }
      if (got != want) throw math_error("Table: first orthogonality fails at (" + char_names_[i] +
                                        ", " + char_names_[j] + ")");
    }
  // second orthogonality
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (std::size_t d = c; d < classes_.size(); ++d) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < irreducibles_.size(); ++i)
        acc += irreducibles_[i][c] * irreducibles_[i][d].conj();
      Cyclotomic want = c == d ? Cyclotomic(Rational(classes_[c].centralizer)) : Cyclotomic();
      if (!(acc == want))
        throw math_error("Table: second orthogonality fails at classes " + classes_[c].name + ", " +
                         classes_[d].name);
    }
}

std::optional<std::size_t> Table::find_class(const std::string& name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Table::find_char(const std::string& name) const {
  for (std::size_t i = 0; i < char_names_.size(); ++i)
    if (char_names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Table::find_irreducible(const CharVector& values) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (irreducibles_[i] == values) return i;
  return std::nullopt;
}

exact::Rational scalar_product(const Table& t, const CharVector& a, const CharVector& b) {
  if (a.size() != t.num_classes() || b.size() != t.num_classes())
    throw math_error("scalar_product: class-vector length mismatch");
  Cyclotomic acc;
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    acc += a[c] * b[c].conj() * Cyclotomic(Rational(t.classes()[c].size, t.group_order()));
  if (!acc.is_rational()) throw math_error("scalar_product: non-rational result");
  return acc.rational_value();
}

CharVector tensor(const CharVector& a, const CharVector& b) {
  if (a.size() != b.size()) throw math_error("tensor: length mismatch");
  CharVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

CharVector regular_character(const Table& t) {
  CharVector r(t.num_classes());
  r[0] = Cyclotomic(Rational(t.group_order()));
  return r;
}

void Fusion::validate(const Table& src, const Table& dst) const {
  if (map.size() != src.num_classes()) throw math_error("Fusion: wrong length");
  if (map.empty() || map[0] != 0) throw math_error("Fusion: identity must map to identity");
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= dst.num_classes()) throw math_error("Fusion: image out of range");
    if (src.classes()[i].order != dst.classes()[map[i]].order)
      throw math_error("Fusion: element order not preserved at class " + src.classes()[i].name);
  }
  for (const auto& [p, spm] : src.power_maps()) {
    auto it = dst.power_maps().find(p);
    if (it == dst.power_maps().end()) continue;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (it->second[map[i]] != map[spm[i]])
        throw math_error("Fusion: power map incompatibility at class " + src.classes()[i].name);
  }
}

CharVector induce(const Fusion& f, const Table& src, const Table& dst, const CharVector& ch) {
  if (ch.size() != src.num_classes()) throw math_error("induce: character length mismatch");
  CharVector out(dst.num_classes());
  for (std::size_t i = 0; i < src.num_classes(); ++i) {
    Cyclotomic term = ch[i] * Cyclotomic(Rational(1, src.classes()[i].centralizer));
    out[f.map[i]] += term;
  }
  for (std::size_t j = 0; j < dst.num_classes(); ++j)
    out[j] *= Cyclotomic(Rational(dst.classes()[j].centralizer));
  return out;
}

CharVector restrict_char(const Fusion& f, const Table& src, const Table& dst, const CharVector& ch) {
  if (ch.size() != dst.num_classes()) throw math_error("restrict: character length mismatch");
  CharVector out(src.num_classes());
  for (std::size_t i = 0; i < src.num_classes(); ++i) out[i] = ch[f.map[i]];
  return out;
}

}  // namespace mrt::chartab
