#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace mrt::gf {

// Canonical element index: base-p digit encoding of the coefficient vector
// (constant term = least significant digit). For prime fields this is just
// the representative in 0..p-1.
using Fel = std::uint32_t;

// A finite field F_{p^k}, p prime <= 251, k >= 1, p^k < 2^31.
//
// Extension fields carry a monic irreducible defining polynomial, given as
// the coefficient list with the constant term first (the leading coefficient
// 1 of X^k included). When no polynomial is supplied, the canonical one for
// (p, k) is used: the lexicographically smallest monic irreducible, so that
// field arithmetic (and the pinned embeddings built on top of it) is
// reproducible across runs.
class Field {
 public:
  // Null handle; only assignment and comparison are valid until a real
  // field is assigned.
  Field() = default;

  static Field prime(unsigned p);
  static Field extension(unsigned p, unsigned k);
  static Field extension(unsigned p, const std::vector<std::uint8_t>& poly);

  // Lexicographically smallest monic irreducible of degree k over F_p,
  // constant term first, length k + 1.
  static std::vector<std::uint8_t> canonical_polynomial(unsigned p, unsigned k);

  unsigned characteristic() const;
  unsigned degree() const;
  std::uint64_t size() const;
  const std::vector<std::uint8_t>& defining_poly() const;

  Fel zero() const { return 0; }
  Fel one() const { return 1; }
  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;
  Fel pow(Fel a, std::uint64_t e) const;

  // Image of an integer under Z -> F_p -> F_{p^k}.
  Fel from_int(long long v) const;

  // The pinned primitive element: smallest canonical index generating the
  // multiplicative group.
  Fel primitive_element() const;

  // digits <-> index helpers (digits length k, little-endian in X)
  void digits_of(Fel a, std::uint8_t* out) const;
  Fel from_digits(const std::uint8_t* d) const;

  bool operator==(const Field& o) const { return impl_ == o.impl_; }
  bool operator!=(const Field& o) const { return impl_ != o.impl_; }

  // True when both handles denote the same (p, k, defining poly), even if
  // constructed independently.
  bool same_spec(const Field& o) const;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

// Prime factorization by trial division (inputs here stay below 2^62).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace mrt::gf
