#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mrt/exact/rational.hpp"
#include "mrt/gf/field.hpp"

namespace mrt::exact {

// An element of Q(zeta_n), held in the Zumbroich-style canonical basis of
// the cyclotomic field: the exponents e mod n whose p-adic component has a
// nonzero leading digit for every odd prime power p^a || n, and a zero
// leading bit for 4 | n. The conductor is always minimal for the value, so
// equality is syntactic. Rationals are exactly the values with conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  Cyclotomic(const Rational& r);          // NOLINT: rationals embed implicitly
  Cyclotomic(long long v) : Cyclotomic(Rational(v)) {}

  // zeta_n^e
  static Cyclotomic root_of_unity(std::uint64_t n, std::uint64_t e = 1);

  std::uint64_t conductor() const { return n_; }
  const std::map<std::uint64_t, Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // complex conjugation zeta -> zeta^{-1}
  Cyclotomic conj() const;
  bool is_real() const { return conj() == *this; }

  // Galois action zeta_n -> zeta_n^j, gcd(j, n) = 1
  Cyclotomic galois(std::uint64_t j) const;

  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // deterministic total order (conductor, then coefficient list)
  bool operator<(const Cyclotomic& o) const;

  // Sign under the identity complex embedding zeta_n = exp(2 pi i / n);
  // requires a real value. Exact: rational interval arithmetic, refined
  // until the sign resolves (terminates for nonzero values).
  int sign() const;

  // Image under the pinned embedding zeta_n -> r^{(q-1)/n} into F_{p^k},
  // where r is the field's pinned primitive element and q = p^k. Requires
  // gcd(n, p) = 1, n | q - 1, and denominators coprime to p.
  gf::Fel reduce_mod_p(const gf::Field& field) const;

  // Coefficients in the canonical basis of Q(zeta_N) for a multiple N of
  // the conductor (no conductor minimization), for assembling linear
  // systems over a common field.
  std::map<std::uint64_t, Rational> coefficients_at(std::uint64_t big_n) const;

  // literal syntax: `3/2+E(8)^1-E(8)^3`
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

 private:
  std::uint64_t n_;
  std::map<std::uint64_t, Rational> coeffs_;  // basis exponent -> coefficient

  void reduce_to_basis();
  void reduce_conductor();
  void normalize();
};

}  // namespace mrt::exact
