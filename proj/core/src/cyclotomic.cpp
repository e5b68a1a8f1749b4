#include "mrt/exact/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::exact {

namespace {

struct PrimePower {
  std::uint64_t p, a, pa;  // p^a exactly divides n
};

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      PrimePower pp{d, 0, 1};
      while (n % d == 0) {
        n /= d;
        ++pp.a;
        pp.pa *= d;
      }
      out.push_back(pp);
    }
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) : n_(1) {
  if (r != 0) coeffs_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::uint64_t e) {
  if (n == 0) throw math_error("Cyclotomic: conductor must be positive");
  Cyclotomic v;
  v.n_ = n;
  v.coeffs_.clear();
  v.coeffs_[e % n] = Rational(1);
  v.normalize();
  return v;
}

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw math_error("Cyclotomic: value is irrational");
  auto it = coeffs_.find(0);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Cyclotomic::reduce_to_basis() {
  // n == 2 (mod 4) is rebased first so every stored conductor is 1, 4, 8,
  // ... or has odd 2-part.
  if (n_ % 4 == 2) {
    std::map<std::uint64_t, Rational> next;
    std::uint64_t m = n_ / 2;
    for (auto& [e, c] : coeffs_) {
      if (e % 2 == 0) {
        next[e / 2] += c;
      } else {
        next[((e + m) % n_) / 2 % m] -= c;  // zeta_n^e = -zeta_n^{e + n/2}
      }
    }
    coeffs_ = std::move(next);
    n_ = m;
  }

  for (const PrimePower& pp : factorize(n_)) {
    std::map<std::uint64_t, Rational> next;
    std::uint64_t lead_unit = pp.pa / pp.p;  // p^{a-1}
    for (auto& [e, c] : coeffs_) {
      if (c == 0) continue;
      std::uint64_t ep = e % pp.pa;
      if (pp.p == 2) {
        if (ep / lead_unit == 1) {
          // leading bit set: zeta^e = -zeta^{e + n/2}
          next[(e + n_ / 2) % n_] -= c;
        } else {
          next[e] += c;
        }
      } else {
        if (ep / lead_unit == 0) {
          // leading digit zero: zeta^e = -sum_d zeta^{e + d n/p}
          for (std::uint64_t d = 1; d < pp.p; ++d) next[(e + d * (n_ / pp.p)) % n_] -= c;
        } else {
          next[e] += c;
        }
      }
    }
    coeffs_ = std::move(next);
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

void Cyclotomic::reduce_conductor() {
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (const PrimePower& pp : factorize(n_)) {
      if (pp.p == 2) {
        if (pp.a >= 3) {
          // Q(zeta_{n/2}) sits on the even basis exponents.
          bool even = std::all_of(coeffs_.begin(), coeffs_.end(),
                                  [](auto& kv) { return kv.first % 2 == 0; });
          if (even) {
            std::map<std::uint64_t, Rational> next;
            for (auto& [e, c] : coeffs_) next[e / 2] = c;
            coeffs_ = std::move(next);
            n_ /= 2;
            changed = true;
            break;
          }
        } else {  // 4 || n: invariant values are supported on multiples of 4
          bool quartic = std::all_of(coeffs_.begin(), coeffs_.end(),
                                     [](auto& kv) { return kv.first % 4 == 0; });
          if (quartic) {
            std::map<std::uint64_t, Rational> next;
            for (auto& [e, c] : coeffs_) next[e / 4] = c;
            coeffs_ = std::move(next);
            n_ /= 4;
            changed = true;
            break;
          }
        }
      } else if (pp.a >= 2) {
        bool div = std::all_of(coeffs_.begin(), coeffs_.end(),
                               [&](auto& kv) { return kv.first % pp.p == 0; });
        if (div) {
          std::map<std::uint64_t, Rational> next;
          for (auto& [e, c] : coeffs_) next[e / pp.p] = c;
          coeffs_ = std::move(next);
          n_ /= pp.p;
          reduce_to_basis();
          changed = true;
          break;
        }
      } else {
        // p || n: reducible iff coefficients are constant on each p-fiber
        // (fixed residue mod n/p, the p-component running over 1..p-1).
        std::uint64_t m = n_ / pp.p;
        std::map<std::uint64_t, std::vector<const Rational*>> fibers;
        bool ok = true;
        for (auto& [e, c] : coeffs_) fibers[e % m].push_back(&c);
        for (auto& [r, list] : fibers) {
          if (list.size() != pp.p - 1) { ok = false; break; }
          for (auto* c : list)
            if (*c != *list.front()) { ok = false; break; }
          if (!ok) break;
        }
        if (ok && !coeffs_.empty()) {
          // Each full fiber sums to -zeta_n^{e0}, e0 the p-divisible member.
          std::map<std::uint64_t, Rational> next;
          for (auto& [r, list] : fibers) {
            // e0 = CRT(0 mod p^a, r mod m): the unique multiple of p in the fiber
            std::uint64_t e0 = r;
            while (e0 % pp.p != 0) e0 += m;
            next[(e0 / pp.p) % m] -= *list.front();
          }
          coeffs_ = std::move(next);
          n_ = m;
          reduce_to_basis();
          for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
          changed = true;
          break;
        }
      }
    }
  }
  if (coeffs_.empty()) n_ = 1;
}

void Cyclotomic::normalize() {
  reduce_to_basis();
  reduce_conductor();
  if (coeffs_.empty()) n_ = 1;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r;
  std::uint64_t n = std::lcm(n_, o.n_);
  r.n_ = n;
  for (auto& [e, c] : coeffs_) r.coeffs_[e * (n / n_)] += c;
  for (auto& [e, c] : o.coeffs_) r.coeffs_[e * (n / o.n_)] += c;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic r;
  std::uint64_t n = std::lcm(n_, o.n_);
  r.n_ = n;
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) r.coeffs_[(e1 * (n / n_) + e2 * (n / o.n_)) % n] += c1 * c2;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

Cyclotomic Cyclotomic::galois(std::uint64_t j) const {
  j %= n_;
  if (n_ > 1 && gcd_u64(j, n_) != 1) throw math_error("Cyclotomic: Galois exponent not coprime to conductor");
  Cyclotomic r;
  r.n_ = n_;
  r.coeffs_.clear();
  for (auto& [e, c] : coeffs_) r.coeffs_[e * j % n_] += c;
  r.normalize();
  return r;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  auto it = coeffs_.begin();
  auto jt = o.coeffs_.begin();
  for (; it != coeffs_.end() && jt != o.coeffs_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return coeffs_.size() < o.coeffs_.size();
}

gf::Fel Cyclotomic::reduce_mod_p(const gf::Field& field) const {
  const std::uint64_t p = field.characteristic();
  const std::uint64_t q = field.size();
  if (n_ % p == 0) throw math_error("Cyclotomic: conductor divisible by the characteristic");
  if ((q - 1) % n_ != 0)
    throw math_error("Cyclotomic: conductor does not divide p^k - 1; enlarge the field");
  gf::Fel omega = field.pow(field.primitive_element(), (q - 1) / n_);
  gf::Fel acc = 0;
  for (auto& [e, c] : coeffs_) {
    Int num = rat_num(c), den = rat_den(c);
    if (den % p == 0) throw math_error("Cyclotomic: denominator divisible by the characteristic");
    gf::Fel cf = field.mul(field.from_int(to_ll(num % p)), field.inv(field.from_int(to_ll(den % p))));
    acc = field.add(acc, field.mul(cf, field.pow(omega, e)));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// sign(): exact rational interval arithmetic

namespace {

struct RatInterval {
  Rational lo, hi;
};

Int floor_div(const Int& a, const Int& b) {  // b > 0
  Int q = a / b, r = a % b;
  if (r != 0 && a < 0) --q;
  return q;
}

// Round outward to a 2^-bits grid so numerators stay small through Taylor powers.
RatInterval coarsen(const RatInterval& x, unsigned bits) {
  Int scale = Int(1) << bits;
  Int lo_s = floor_div(rat_num(x.lo) * scale, rat_den(x.lo));
  Int hi_s = -floor_div(-(rat_num(x.hi) * scale), rat_den(x.hi));
  return {Rational(lo_s, scale), Rational(hi_s, scale)};
}

// arctan(1/x) for integer x >= 2, alternating series, `terms` pairs deep
RatInterval atan_inv(std::uint64_t x, unsigned terms) {
  Rational s = 0;
  Rational x2 = Rational(1, Int(x) * Int(x));
  Rational power = Rational(1, Int(x));  // x^{-(2i+1)}
  RatInterval out;
  for (unsigned i = 0; i < 2 * terms; ++i) {
    Rational term = power / (2 * i + 1);
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
    if (i == 2 * terms - 2) out.hi = s;  // after an odd count of terms: upper bound
    power *= x2;
  }
  out.lo = s;  // after an even count of terms: lower bound
  if (out.lo > out.hi) std::swap(out.lo, out.hi);
  return out;
}

RatInterval pi_interval(unsigned terms) {
  RatInterval a = atan_inv(5, terms), b = atan_inv(239, terms);
  return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

// cos on a small rational interval [x.lo, x.hi], 0 <= x < 7
RatInterval cos_interval(const RatInterval& x, unsigned taylor_terms) {
  Rational t = x.lo;
  Rational sum = 0, power = 1;  // x^{2j}
  Int fact = 1;
  Rational t2 = t * t;
  for (unsigned j = 0; j < taylor_terms; ++j) {
    Rational term = power / fact;
    sum += (j % 2 == 0) ? term : -term;
    power *= t2;
    fact *= Int(2 * j + 1) * Int(2 * j + 2);
  }
  Rational rem = 2 * power / fact;  // safe once terms are decreasing
  Rational width = x.hi - x.lo;     // |cos'| <= 1
  return {sum - rem - width, sum + rem + width};
}

}  // namespace

int Cyclotomic::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) {
    Rational r = rational_value();
    return r > 0 ? 1 : (r < 0 ? -1 : 0);
  }
  if (!is_real()) throw math_error("Cyclotomic: sign of a non-real value");
  for (unsigned level = 1; level <= 8; ++level) {
    unsigned bits = 64 * level;
    unsigned pi_terms = 12 * level;
    unsigned taylor = 10 + 10 * level;
    RatInterval pi = pi_interval(pi_terms);
    Rational lo = 0, hi = 0;
    for (auto& [e, c] : coeffs_) {
      // theta = 2 pi e / n
      Rational f = Rational(Int(2) * Int(e), Int(n_));
      RatInterval theta{f * pi.lo, f * pi.hi};
      theta = coarsen(theta, bits);
      RatInterval ci = cos_interval(theta, taylor);
      if (c >= 0) {
        lo += c * ci.lo;
        hi += c * ci.hi;
      } else {
        lo += c * ci.hi;
        hi += c * ci.lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw math_error("Cyclotomic: sign did not resolve at maximum precision");
}

std::map<std::uint64_t, Rational> Cyclotomic::coefficients_at(std::uint64_t big_n) const {
  if (big_n % n_ != 0) throw math_error("Cyclotomic: conductor does not divide the requested level");
  if (big_n % 4 == 2) throw math_error("Cyclotomic: level 2 mod 4 has no stored basis");
  Cyclotomic tmp;
  tmp.n_ = big_n;
  for (auto& [e, c] : coeffs_) tmp.coeffs_[e * (big_n / n_)] = c;
  tmp.reduce_to_basis();
  return tmp.coeffs_;
}

// ---------------------------------------------------------------------------
// literal syntax

namespace {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational parse_rational_token(const std::string& tok) {
  if (tok.empty()) throw input_error("cyclotomic literal: empty rational");
  std::size_t slash = tok.find('/');
  auto check_digits = [](const std::string& s) {
    if (s.empty()) throw input_error("cyclotomic literal: malformed rational");
    for (char c : s)
      if (!isdigit(static_cast<unsigned char>(c)))
        throw input_error("cyclotomic literal: malformed rational '" + s + "'");
  };
  if (slash == std::string::npos) {
    check_digits(tok);
    return Rational(Int(tok));
  }
  std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
  check_digits(num);
  check_digits(den);
  if (Int(den) == 0) throw input_error("cyclotomic literal: zero denominator");
  return Rational(Int(num), Int(den));
}

}  // namespace

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  if (is_rational()) return rational_to_string(rational_value());
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : coeffs_) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? '-' : '+');
    }
    if (e == 0) {
      os << rational_to_string(mag);
      continue;
    }
    if (mag != 1) os << rational_to_string(mag) << '*';
    os << "E(" << n_ << ")^" << e;
  }
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  if (text.empty()) throw input_error("cyclotomic literal: empty");
  Cyclotomic acc;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    int sgn = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sgn = -1;
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string term = text.substr(i, j - i);
    if (term.empty()) throw input_error("cyclotomic literal: dangling sign in '" + text + "'");
    Rational coeff(1);
    std::size_t epos = term.find("E(");
    if (epos == std::string::npos) {
      coeff = parse_rational_token(term);
      acc += Cyclotomic(Rational(sgn) * coeff);
    } else {
      if (epos > 0) {
        if (term[epos - 1] != '*')
          throw input_error("cyclotomic literal: expected '*' before E(...) in '" + term + "'");
        coeff = parse_rational_token(term.substr(0, epos - 1));
      }
      std::size_t close = term.find(')', epos);
      if (close == std::string::npos) throw input_error("cyclotomic literal: unterminated E( in '" + term + "'");
      std::string ns = term.substr(epos + 2, close - epos - 2);
      for (char ch : ns)
        if (!isdigit(static_cast<unsigned char>(ch)))
          throw input_error("cyclotomic literal: malformed order '" + ns + "'");
      std::uint64_t n = std::stoull(ns);
      if (n == 0) throw input_error("cyclotomic literal: E(0) is invalid");
      std::uint64_t e = 1;
      if (close + 1 < term.size()) {
        if (term[close + 1] != '^')
          throw input_error("cyclotomic literal: junk after E(n) in '" + term + "'");
        std::string es = term.substr(close + 2);
        for (char ch : es)
          if (!isdigit(static_cast<unsigned char>(ch)))
            throw input_error("cyclotomic literal: malformed exponent '" + es + "'");
        if (es.empty()) throw input_error("cyclotomic literal: empty exponent");
        e = std::stoull(es);
      }
      acc += Cyclotomic(Rational(sgn) * coeff) * root_of_unity(n, e);
    }
    any = true;
    i = j;
  }
  if (!any) throw input_error("cyclotomic literal: no terms");
  return acc;
}

}  // namespace mrt::exact
