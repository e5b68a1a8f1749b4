#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mrt::perm {

// Permutation of {0, .., n-1} (1-based in file formats only).
// Composition is left-to-right: (p * q)(x) = q(p(x)), matching the action
// of permutation matrices on row vectors.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n);  // identity
  static Perm from_images0(std::vector<std::uint32_t> images);
  static Perm from_images1(const std::vector<std::uint32_t>& images);
  // cycles given 0-based, e.g. {{0,1},{2,3,4}} on degree n
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t apply(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& t) const;  // t^{-1} * this * t
  std::uint64_t order() const;              // lcm of cycle lengths
  bool is_identity() const;
  std::size_t fixed_points() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string to_cycle_string() const;  // 1-based, for reports

 private:
  std::vector<std::uint32_t> img_;
};

}  // namespace mrt::perm
