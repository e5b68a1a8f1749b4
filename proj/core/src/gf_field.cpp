#include "mrt/gf/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::gf {

namespace {

using Poly = std::vector<std::uint8_t>;  // constant term first, may have leading zeros

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  std::vector<unsigned> acc(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + unsigned(a[i]) * b[j]) % p;
  }
  // reduce by the monic modulus
  size_t k = mod.size() - 1;
  for (size_t i = acc.size(); i-- > k;) {
    unsigned c = acc[i] % p;
    if (!c) continue;
    acc[i] = 0;
    for (size_t j = 0; j < k; ++j)
      acc[i - k + j] = (acc[i - k + j] + (p - 1u) * c % p * mod[j]) % p;
  }
  Poly r(k, 0);
  for (size_t i = 0; i < k && i < acc.size(); ++i) r[i] = std::uint8_t(acc[i] % p);
  return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, unsigned p) {
  Poly r{1};
  r.resize(mod.size() - 1, 0);
  base.resize(mod.size() - 1, 0);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](std::uint8_t c) { return c == 0; });
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      unsigned lead_inv = 1;
      {  // inverse of b's leading coefficient mod p
        unsigned x = b.back();
        for (unsigned t = 1; t < p; ++t)
          if (x * t % p == 1) { lead_inv = t; break; }
      }
      unsigned c = unsigned(a.back()) * lead_inv % p;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = std::uint8_t((a[shift + i] + (p - 1u) * c % p * b[i]) % p);
      poly_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: f monic of degree k is irreducible over F_p iff
// X^{p^k} == X (mod f) and gcd(X^{p^{k/q}} - X, f) = 1 for primes q | k.
bool poly_irreducible(const Poly& f, unsigned p) {
  unsigned k = unsigned(f.size()) - 1;
  if (k == 0) return false;
  Poly x{0, 1};
  auto ppow = [&](unsigned m) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < m; ++i) e *= p;
    return e;
  };
  for (std::uint64_t q : prime_factors(k)) {
    unsigned m = k / unsigned(q);
    Poly g = poly_powmod(x, ppow(m), f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = std::uint8_t((g[1] + p - 1) % p);
    if (poly_gcd(g, f, p).size() > 1) return false;
  }
  Poly g = poly_powmod(x, ppow(k), f, p);
  if (g.size() < 2) g.resize(2, 0);
  g[1] = std::uint8_t((g[1] + p - 1) % p);
  return poly_is_zero(g);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Field::Impl {
  unsigned p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;  // p^k
  std::vector<std::uint8_t> poly;  // degree k, constant first, length k+1 (empty for k=1)

  // multiplication tables for small extension fields
  bool tabled = false;
  std::vector<std::uint32_t> exp_table;  // exp_table[i] = g^i, i in [0, q-1)
  std::vector<std::int32_t> log_table;   // log_table[x] = i with g^i = x, x >= 1

  mutable std::int64_t primitive = -1;
  mutable std::mutex prim_mutex;

  Fel mul_generic(Fel a, Fel b) const {
    if (k == 1) return Fel(std::uint64_t(a) * b % p);
    Poly pa = to_poly(a), pb = to_poly(b);
    return from_poly(poly_mulmod(pa, pb, poly, p));
  }

  Poly to_poly(Fel a) const {
    Poly f(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      f[i] = std::uint8_t(a % p);
      a /= p;
    }
    return f;
  }

  Fel from_poly(const Poly& f) const {
    Fel v = 0;
    for (unsigned i = k; i-- > 0;) v = Fel(v * p + (i < f.size() ? f[i] : 0));
    return v;
  }
};

Field Field::prime(unsigned p) {
  if (p < 2 || p > 251 || !is_prime(p)) throw math_error("Field: characteristic must be a prime <= 251");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = 1;
  impl->q = p;
  return Field(std::move(impl));
}

Field Field::extension(unsigned p, unsigned k) {
  if (k == 1) return prime(p);
  return extension(p, canonical_polynomial(p, k));
}

Field Field::extension(unsigned p, const std::vector<std::uint8_t>& poly) {
  if (p < 2 || p > 251 || !is_prime(p)) throw math_error("Field: characteristic must be a prime <= 251");
  if (poly.size() < 2) throw math_error("Field: defining polynomial must have degree >= 1");
  unsigned k = unsigned(poly.size()) - 1;
  if (k > 16) throw math_error("Field: extension degree must be <= 16");
  if (poly.back() != 1) throw math_error("Field: defining polynomial must be monic");
  for (auto c : poly)
    if (c >= p) throw math_error("Field: defining polynomial coefficient out of range");
  if (k == 1) return prime(p);
  double bits = k * std::log2(double(p));
  if (bits >= 31) throw math_error("Field: p^k >= 2^31 is not supported");
  if (!poly_irreducible(poly, p)) throw math_error("Field: defining polynomial is reducible");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = 1;
  for (unsigned i = 0; i < k; ++i) impl->q *= p;
  impl->poly = poly;

  if (impl->q <= (1u << 16)) {
    // exp/log tables over the pinned primitive element
    std::uint64_t q = impl->q;
    std::vector<std::uint64_t> factors = prime_factors(q - 1);
    // find the smallest generator by brute force
    for (Fel g = 1; g < q; ++g) {
      bool ok = true;
      for (auto f : factors) {
        Fel t = 1, base = g;
        std::uint64_t e = (q - 1) / f;
        while (e) {
          if (e & 1) t = impl->mul_generic(t, base);
          base = impl->mul_generic(base, base);
          e >>= 1;
        }
        if (t == 1) { ok = false; break; }
      }
      if (ok) {
        impl->primitive = g;
        break;
      }
    }
    impl->exp_table.resize(q - 1);
    impl->log_table.assign(q, -1);
    Fel cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      impl->exp_table[i] = cur;
      impl->log_table[cur] = std::int32_t(i);
      cur = impl->mul_generic(cur, Fel(impl->primitive));
    }
    impl->tabled = true;
  }
  return Field(std::move(impl));
}

std::vector<std::uint8_t> Field::canonical_polynomial(unsigned p, unsigned k) {
  if (k == 1) return {0, 1};
  // Enumerate monic degree-k polynomials in index order of their non-leading
  // coefficients; the constant term must be nonzero for irreducibility.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    count *= p;
    if (count > (1ull << 40)) throw math_error("Field: canonical polynomial search space too large");
  }
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = std::uint8_t(v % p);
      v /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (poly_irreducible(f, p)) return f;
  }
  throw math_error("Field: no irreducible polynomial found");  // unreachable
}

unsigned Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->k; }
std::uint64_t Field::size() const { return impl_->q; }
const std::vector<std::uint8_t>& Field::defining_poly() const { return impl_->poly; }

Fel Field::add(Fel a, Fel b) const {
  const unsigned p = impl_->p;
  if (impl_->k == 1) {
    Fel s = a + b;
    return s >= p ? s - p : s;
  }
  Fel r = 0, mult = 1;
  for (unsigned i = 0; i < impl_->k; ++i) {
    unsigned s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

Fel Field::neg(Fel a) const {
  const unsigned p = impl_->p;
  if (impl_->k == 1) return a ? p - a : 0;
  Fel r = 0, mult = 1;
  for (unsigned i = 0; i < impl_->k; ++i) {
    unsigned d = a % p;
    r += (d ? p - d : 0) * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  if (a == 0 || b == 0) return 0;
  if (impl_->k == 1) return Fel(std::uint64_t(a) * b % impl_->p);
  if (impl_->tabled) {
    std::uint64_t e = std::uint64_t(impl_->log_table[a]) + impl_->log_table[b];
    if (e >= impl_->q - 1) e -= impl_->q - 1;
    return impl_->exp_table[e];
  }
  return impl_->mul_generic(a, b);
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw math_error("Field: inverse of zero");
  if (impl_->k == 1) {
    // extended Euclid on integers
    long long t = 0, newt = 1, r = impl_->p, newr = a;
    while (newr) {
      long long qt = r / newr;
      std::swap(t -= qt * newt, newt);
      std::swap(r -= qt * newr, newr);
    }
    if (t < 0) t += impl_->p;
    return Fel(t);
  }
  if (impl_->tabled) {
    std::uint64_t e = (impl_->q - 1) - impl_->log_table[a];
    if (e == impl_->q - 1) e = 0;
    return impl_->exp_table[e];
  }
  return pow(a, impl_->q - 2);
}

Fel Field::pow(Fel a, std::uint64_t e) const {
  Fel r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel Field::from_int(long long v) const {
  long long m = v % impl_->p;
  if (m < 0) m += impl_->p;
  return Fel(m);
}

Fel Field::primitive_element() const {
  {
    std::lock_guard<std::mutex> lock(impl_->prim_mutex);
    if (impl_->primitive >= 0) return Fel(impl_->primitive);
  }
  std::uint64_t q = impl_->q;
  std::vector<std::uint64_t> factors = prime_factors(q - 1);
  Fel found = 0;
  for (Fel g = 1; g < q; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (pow(g, (q - 1) / f) == 1) { ok = false; break; }
    if (ok) { found = g; break; }
  }
  if (!found && q > 2) throw math_error("Field: no primitive element found");
  if (q == 2) found = 1;
  std::lock_guard<std::mutex> lock(impl_->prim_mutex);
  impl_->primitive = found;
  return found;
}

void Field::digits_of(Fel a, std::uint8_t* out) const {
  const unsigned p = impl_->p;
  for (unsigned i = 0; i < impl_->k; ++i) {
    out[i] = std::uint8_t(a % p);
    a /= p;
  }
}

Fel Field::from_digits(const std::uint8_t* d) const {
  const unsigned p = impl_->p;
  Fel v = 0;
  for (unsigned i = impl_->k; i-- > 0;) {
    if (d[i] >= p) throw math_error("Field: digit out of range");
    v = Fel(v * p + d[i]);
  }
  return v;
}

bool Field::same_spec(const Field& o) const {
  return impl_->p == o.impl_->p && impl_->k == o.impl_->k && impl_->poly == o.impl_->poly;
}

}  // namespace mrt::gf
