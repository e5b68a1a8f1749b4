#include "mrt/mtx/brauerchar.hpp"

#include "mrt/util/error.hpp"

namespace mrt::mtx {

gf::Matrix matrix_power(const gf::Matrix& a, std::uint64_t e) {
  gf::Matrix r = gf::Matrix::identity(a.field(), a.rows());
  gf::Matrix base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

exact::Cyclotomic brauer_character_value(const gf::Matrix& a, std::uint64_t elem_order) {
  using exact::Cyclotomic;
  const gf::Field& F = a.field();
  if (a.rows() != a.cols()) throw math_error("brauer_character_value: non-square matrix");
  const std::uint64_t p = F.characteristic();
  std::uint64_t m = elem_order, pa = 1;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  gf::Matrix s = a;
  if (m == 1) {
    s = gf::Matrix::identity(F, a.rows());
  } else if (pa > 1) {
    // p'-part: a^e with e = 0 mod p^a, e = 1 mod m
    std::uint64_t e = pa % m;
    std::uint64_t k = 1;
    while (e != 1) {
      e = (e + pa) % m;
      ++k;
    }
    s = matrix_power(a, k * pa);
  }
  const std::uint64_t q = F.size();
  if (m == 0 || (m > 1 && (q - 1) % m != 0))
    throw math_error("brauer_character_value: p'-order does not divide q - 1; enlarge the field");
  gf::Fel omega = m > 1 ? F.pow(F.primitive_element(), (q - 1) / m) : 1;
  Cyclotomic value;
  std::size_t total = 0;
  gf::Fel lambda = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    gf::Matrix shifted = s - gf::Matrix::identity(F, s.rows()).scaled(lambda);
    std::size_t mult = s.rows() - shifted.rank();
    if (mult) {
      value += Cyclotomic(static_cast<long long>(mult)) * Cyclotomic::root_of_unity(m, j);
      total += mult;
    }
    lambda = F.mul(lambda, omega);
  }
  if (total != s.rows())
    throw math_error("brauer_character_value: matrix not diagonalizable over the field (wrong order?)");
  return value;
}

}  // namespace mrt::mtx
