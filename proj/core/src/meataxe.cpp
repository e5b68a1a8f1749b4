#include "mrt/mtx/meataxe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mrt/exact/rational.hpp"
#include "mrt/util/error.hpp"

namespace mrt::mtx {

namespace {

using gf::Fel;
using gf::Field;
using gf::Matrix;

// ---------------------------------------------------------------------------
// dense polynomials over F_q, constant term first, no trailing zeros

using Poly = std::vector<Fel>;

void ptrim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const Poly& f) { return int(f.size()) - 1; }

Poly padd(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  ptrim(r);
  return r;
}

Poly psub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  ptrim(r);
  return r;
}

Poly pmul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  ptrim(r);
  return r;
}

Poly pscale(const Field& F, const Poly& a, Fel c) {
  Poly r = a;
  for (auto& x : r) x = F.mul(x, c);
  ptrim(r);
  return r;
}

// division with remainder; b nonzero
void pdivmod(const Field& F, Poly a, const Poly& b, Poly& q, Poly& r) {
  q.clear();
  Fel lead_inv = F.inv(b.back());
  while (pdeg(a) >= pdeg(b)) {
    std::size_t shift = a.size() - b.size();
    Fel c = F.mul(a.back(), lead_inv);
    if (q.size() < shift + 1) q.resize(shift + 1, 0);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    ptrim(a);
    if (a.empty()) break;
  }
  ptrim(q);
  r = std::move(a);
}

Poly pmod(const Field& F, const Poly& a, const Poly& b) {
  Poly q, r;
  pdivmod(F, a, b, q, r);
  return r;
}

Poly pmonic(const Field& F, Poly f) {
  if (f.empty()) return f;
  Fel inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

Poly pgcd(const Field& F, Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

Poly pderiv(const Field& F, const Poly& f) {
  Poly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(F.mul(f[i], F.from_int(static_cast<long long>(i))));
  ptrim(r);
  return r;
}

Poly ppowmod(const Field& F, Poly base, exact::Int e, const Poly& mod) {
  Poly r{1};
  base = pmod(F, base, mod);
  while (e > 0) {
    if ((e & 1) != 0) r = pmod(F, pmul(F, r, base), mod);
    base = pmod(F, pmul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

std::string poly_str(const Poly& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ' ';
    os << f[i];
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// characteristic polynomial via Hessenberg reduction

Poly charpoly(const Matrix& m) {
  const Field& F = m.field();
  std::size_t n = m.rows();
  Matrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = 0;
    bool found = false;
    for (std::size_t i = j + 1; i < n; ++i)
      if (h.at(i, j) != 0) { piv = i; found = true; break; }
    if (!found) continue;
    if (piv != j + 1) {
      for (std::size_t t = 0; t < n; ++t) {  // swap rows piv, j+1
        Fel tmp = h.at(piv, t);
        h.set(piv, t, h.at(j + 1, t));
        h.set(j + 1, t, tmp);
      }
      for (std::size_t t = 0; t < n; ++t) {  // swap cols piv, j+1
        Fel tmp = h.at(t, piv);
        h.set(t, piv, h.at(t, j + 1));
        h.set(t, j + 1, tmp);
      }
    }
    Fel inv = F.inv(h.at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      Fel f = F.mul(h.at(i, j), inv);
      if (!f) continue;
      for (std::size_t t = 0; t < n; ++t) h.set(i, t, F.sub(h.at(i, t), F.mul(f, h.at(j + 1, t))));
      for (std::size_t t = 0; t < n; ++t) h.set(t, j + 1, F.add(h.at(t, j + 1), F.mul(f, h.at(t, i))));
    }
  }
  // p_m = (x - H[m-1][m-1]) p_{m-1} - sum_k H[m-1-k][m-1] (prod subdiag) p_{m-1-k}
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    Poly xm{F.neg(h.at(mm - 1, mm - 1)), 1};
    Poly acc = pmul(F, xm, p[mm - 1]);
    Fel subprod = 1;
    for (std::size_t k = 1; k < mm; ++k) {
      subprod = F.mul(subprod, h.at(mm - k, mm - k - 1));
      if (!subprod) break;
      Fel coeff = F.mul(h.at(mm - 1 - k, mm - 1), subprod);
      if (coeff) acc = psub(F, acc, pscale(F, p[mm - 1 - k], coeff));
    }
    p[mm] = std::move(acc);
  }
  return p[n];
}

Matrix eval_poly_at(const Field& F, const Poly& f, const Matrix& m) {
  std::size_t n = m.rows();
  Matrix acc(F, n, n);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * m;
    if (f[i]) acc = acc + Matrix::identity(F, n).scaled(f[i]);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// factorization over F_q

struct IrredFactor {
  Poly poly;
  std::size_t multiplicity;
};

void edf(const Field& F, const Poly& g, std::size_t d, std::vector<Poly>& out, Prng& rng);

// distinct-degree on squarefree monic f
void ddf(const Field& F, Poly f, std::vector<std::pair<Poly, std::size_t>>& out) {
  std::uint64_t q = F.size();
  Poly h{0, 1};  // x
  std::size_t d = 0;
  while (pdeg(f) > 0) {
    ++d;
    if (2 * d > std::size_t(pdeg(f))) {
      out.emplace_back(f, std::size_t(pdeg(f)));
      return;
    }
    h = ppowmod(F, h, exact::Int(q), f);
    Poly hx = psub(F, h, Poly{0, 1});
    Poly g = pgcd(F, hx, f);
    if (pdeg(g) > 0) {
      out.emplace_back(g, d);
      Poly qq, rr;
      pdivmod(F, f, g, qq, rr);
      f = std::move(qq);
      h = pmod(F, h, f);
    }
  }
}

// equal-degree splitting of g = product of distinct irreducibles of degree d
void edf(const Field& F, const Poly& g, std::size_t d, std::vector<Poly>& out, Prng& rng) {
  if (std::size_t(pdeg(g)) == d) {
    out.push_back(pmonic(F, g));
    return;
  }
  const std::uint64_t q = F.size();
  for (;;) {
    Poly a(pdeg(g), 0);
    for (auto& c : a) c = Fel(rng.below(q));
    ptrim(a);
    if (pdeg(a) < 1) continue;
    Poly b;
    if (q % 2 == 1) {
      exact::Int e = (boost::multiprecision::pow(exact::Int(q), unsigned(d)) - 1) / 2;
      b = ppowmod(F, a, e, g);
      b = psub(F, b, Poly{1});
    } else {
      // trace map sum a^{2^i}, i < d*log2(q)
      unsigned bits = 0;
      for (std::uint64_t t = q; t > 1; t >>= 1) ++bits;
      Poly t = a, acc = a;
      for (std::size_t i = 1; i < d * bits; ++i) {
        t = pmod(F, pmul(F, t, t), g);
        acc = padd(F, acc, t);
      }
      b = acc;
    }
    Poly h = pgcd(F, b, g);
    if (pdeg(h) > 0 && pdeg(h) < pdeg(g)) {
      Poly qq, rr;
      pdivmod(F, g, h, qq, rr);
      edf(F, h, d, out, rng);
      edf(F, qq, d, out, rng);
      return;
    }
  }
}

void factor_rec(const Field& F, Poly f, std::size_t mult, std::map<Poly, std::size_t>& acc, Prng& rng) {
  f = pmonic(F, f);
  if (pdeg(f) <= 0) return;
  Poly d = pderiv(F, f);
  if (d.empty()) {
    // f = g(x^p): take p-th roots of coefficients (c -> c^{q/p})
    const std::uint64_t p = F.characteristic();
    Poly g;
    for (std::size_t i = 0; i < f.size(); i += p) {
      Fel c = f[i];
      // p-th root in F_q: c^{q/p}
      g.push_back(F.pow(c, F.size() / p));
    }
    factor_rec(F, g, mult * p, acc, rng);
    return;
  }
  Poly c = pgcd(F, f, d);
  if (pdeg(c) > 0) {
    Poly qq, rr;
    pdivmod(F, f, c, qq, rr);
    factor_rec(F, qq, mult, acc, rng);
    factor_rec(F, c, mult, acc, rng);
    return;
  }
  // squarefree
  std::vector<std::pair<Poly, std::size_t>> parts;
  ddf(F, f, parts);
  for (auto& [prod, deg] : parts) {
    std::vector<Poly> irr;
    edf(F, prod, deg, irr, rng);
    for (auto& g : irr) acc[g] += mult;
  }
}

std::vector<IrredFactor> factor_poly(const Field& F, const Poly& f, Prng& rng) {
  std::map<Poly, std::size_t> acc;
  factor_rec(F, f, 1, acc, rng);
  std::vector<IrredFactor> out;
  for (auto& [p, m] : acc) out.push_back({p, m});
  // deterministic preference: low multiplicity, then low degree, then lex
  std::sort(out.begin(), out.end(), [](const IrredFactor& a, const IrredFactor& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    return a.poly < b.poly;
  });
  return out;
}

// ---------------------------------------------------------------------------
// random algebra words

struct Word {
  std::vector<std::pair<Fel, std::vector<std::size_t>>> terms;
  std::string text;
};

Word random_word(Prng& rng, std::size_t ngens, const Field& F) {
  Word w;
  std::size_t nterms = 1 + rng.below(3);
  std::ostringstream os;
  for (std::size_t t = 0; t < nterms; ++t) {
    Fel coeff = Fel(1 + rng.below(F.size() - 1));
    std::size_t len = 1 + rng.below(4);
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < len; ++i) factors.push_back(rng.below(ngens));
    if (t) os << '+';
    os << coeff;
    for (auto g : factors) os << "*g" << g;
    w.terms.emplace_back(coeff, std::move(factors));
  }
  w.text = os.str();
  return w;
}

Matrix eval_word(const Module& m, const Word& w) {
  Matrix acc(m.field, m.dim, m.dim);
  for (auto& [coeff, factors] : w.terms) {
    Matrix t = Matrix::identity(m.field, m.dim);
    for (auto g : factors) t = t * m.gens[g];
    acc = acc + t.scaled(coeff);
  }
  return acc;
}

// echelon-assisted membership: reduce row against accumulated rref rows
struct EchelonAccum {
  std::vector<std::vector<Fel>> rows;  // normalized, with pivot tracking
  std::vector<std::size_t> pivots;
  const Field* F = nullptr;
  std::size_t width = 0;

  explicit EchelonAccum(const Field& f, std::size_t w) : F(&f), width(w) {}

  // returns true if the row was independent (and absorbs it)
  bool add(std::vector<Fel> r) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Fel c = r[pivots[k]];
      if (c)
        for (std::size_t j = 0; j < width; ++j) r[j] = F->sub(r[j], F->mul(c, rows[k][j]));
    }
    std::size_t piv = width;
    for (std::size_t j = 0; j < width; ++j)
      if (r[j]) { piv = j; break; }
    if (piv == width) return false;
    Fel inv = F->inv(r[piv]);
    for (std::size_t j = 0; j < width; ++j) r[j] = F->mul(r[j], inv);
    rows.push_back(std::move(r));
    pivots.push_back(piv);
    return true;
  }
};

std::vector<Fel> matrix_row_vec(const Matrix& m, std::size_t i) {
  std::vector<Fel> r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
  return r;
}

Matrix rows_to_matrix(const Field& F, const std::vector<std::vector<Fel>>& rows, std::size_t width) {
  Matrix m(F, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m.set(i, j, rows[i][j]);
  return m;
}

// spin returning the raw (generation-ordered) basis rows
std::vector<std::vector<Fel>> spin_raw(const std::vector<Matrix>& gens, const Field& F,
                                       std::size_t dim, const std::vector<Fel>& seed) {
  EchelonAccum ech(F, dim);
  std::vector<std::vector<Fel>> basis;
  if (!ech.add(seed)) return basis;
  basis.push_back(seed);
  std::size_t head = 0;
  while (head < basis.size()) {
    for (const Matrix& g : gens) {
      // row * g
      std::vector<Fel> img(dim, 0);
      for (std::size_t k = 0; k < dim; ++k) {
        Fel c = basis[head][k];
        if (!c) continue;
        for (std::size_t j = 0; j < dim; ++j) img[j] = F.add(img[j], F.mul(c, g.at(k, j)));
      }
      if (ech.add(img)) basis.push_back(std::move(img));
      if (basis.size() == dim) return basis;
    }
    ++head;
  }
  return basis;
}

}  // namespace

gf::Matrix spin(const Module& m, const gf::Matrix& seed_row) {
  if (seed_row.rows() != 1 || seed_row.cols() != m.dim)
    throw math_error("spin: seed must be a single row of module dimension");
  if (seed_row.is_zero()) throw math_error("spin: zero seed");
  auto basis = spin_raw(m.gens, m.field, m.dim, matrix_row_vec(seed_row, 0));
  return rows_to_matrix(m.field, basis, m.dim).rref().reduced;
}

namespace {

// submodule basis (rref rows) -> (sub module, quotient module, complement rows)
struct Split {
  Module sub, quot;
  Matrix sub_basis;   // s x n, rref
  Matrix comp_basis;  // (n-s) x n, unit rows at non-pivot columns
};

Split make_split(const Module& m, const Matrix& sub_basis) {
  const Field& F = m.field;
  std::size_t n = m.dim, s = sub_basis.rows();
  gf::Echelon e = sub_basis.rref();
  Matrix B = e.reduced.rows_slice(0, e.rank);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix C(F, n - e.rank, n);
  std::size_t ci = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) C.set(ci++, j, 1);
  Matrix T = B.vstack(C);
  Matrix Tinv = T.inverse();
  std::vector<Matrix> sub_gens, quot_gens;
  for (const Matrix& g : m.gens) {
    Matrix conj = T * g * Tinv;
    // invariance: top-right block must vanish
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = s; j < n; ++j)
        if (conj.at(i, j) != 0) throw math_error("make_split: subspace is not invariant");
    Matrix a(F, s, s), d(F, n - s, n - s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) a.set(i, j, conj.at(i, j));
    for (std::size_t i = s; i < n; ++i)
      for (std::size_t j = s; j < n; ++j) d.set(i - s, j - s, conj.at(i, j));
    sub_gens.push_back(std::move(a));
    quot_gens.push_back(std::move(d));
  }
  Split out;
  out.sub = Module(F, std::move(sub_gens), m.labels);
  out.quot = Module(F, std::move(quot_gens), m.labels);
  out.sub_basis = B;
  out.comp_basis = C;
  return out;
}

constexpr std::size_t kChopBudget = 200;

struct ChopContext {
  std::vector<Module> leaves;        // bottom-up filtration order
  std::vector<Matrix> leaf_bases;    // rows in ambient coordinates
  std::ostringstream cert;
  std::uint64_t seed = 0;
};

void chop_rec(const Module& m, const Matrix& ambient_basis, Prng rng, const std::string& path,
              ChopContext& ctx) {
  const Field& F = m.field;
  std::size_t n = m.dim;
  if (n == 0) return;
  if (n == 1) {
    ctx.cert << "NODE " << path << " dim=1 IRREDUCIBLE trivial\n";
    ctx.leaves.push_back(m);
    ctx.leaf_bases.push_back(ambient_basis);
    return;
  }
  for (std::size_t attempt = 0; attempt < kChopBudget; ++attempt) {
    Word w = random_word(rng, m.gens.size(), F);
    Matrix mw = eval_word(m, w);
    Prng frng = rng.split(attempt + 1);
    std::vector<IrredFactor> factors = factor_poly(F, charpoly(mw), frng);
    std::size_t tried = 0;
    for (const IrredFactor& f : factors) {
      if (++tried > 3) break;
      Matrix theta = eval_poly_at(F, f.poly, mw);
      // left kernel: seeds v with v * theta = 0 (row-vector action)
      Matrix kern = theta.transpose().nullspace();
      if (kern.rows() == 0) continue;
      for (std::size_t vi = 0; vi < kern.rows(); ++vi) {
        auto basis = spin_raw(m.gens, F, n, matrix_row_vec(kern, vi));
        if (basis.size() < n) {
          Matrix sub = rows_to_matrix(F, basis, n);
          Split sp = make_split(m, sub);
          ctx.cert << "NODE " << path << " dim=" << n << " attempt=" << attempt << " word=" << w.text
                   << " factor=" << poly_str(f.poly) << ":m" << f.multiplicity
                   << " nullity=" << kern.rows() << " SPLIT sub=" << sp.sub.dim
                   << " quot=" << sp.quot.dim << "\n";
          chop_rec(sp.sub, sp.sub_basis * ambient_basis, rng.split(2), path + "s", ctx);
          chop_rec(sp.quot, sp.comp_basis * ambient_basis, rng.split(3), path + "q", ctx);
          return;
        }
      }
      // dual side
      std::vector<Matrix> tgens;
      for (const Matrix& g : m.gens) tgens.push_back(g.transpose());
      Matrix kern_t = theta.nullspace();  // left kernel of theta^T
      bool dual_all_full = true;
      for (std::size_t vi = 0; vi < kern_t.rows(); ++vi) {
        auto dbasis = spin_raw(tgens, F, n, matrix_row_vec(kern_t, vi));
        if (dbasis.size() < n) {
          dual_all_full = false;
          Matrix dual_span = rows_to_matrix(F, dbasis, n);
          Matrix sub = dual_span.nullspace();  // perp is g-invariant
          Split sp = make_split(m, sub);
          ctx.cert << "NODE " << path << " dim=" << n << " attempt=" << attempt << " word=" << w.text
                   << " factor=" << poly_str(f.poly) << ":m" << f.multiplicity
                   << " nullity=" << kern.rows() << " SPLIT-DUAL sub=" << sp.sub.dim
                   << " quot=" << sp.quot.dim << "\n";
          chop_rec(sp.sub, sp.sub_basis * ambient_basis, rng.split(2), path + "s", ctx);
          chop_rec(sp.quot, sp.comp_basis * ambient_basis, rng.split(3), path + "q", ctx);
          return;
        }
      }
      if (f.multiplicity == 1 && dual_all_full) {
        // Norton: every kernel vector spins to the whole space and the dual
        // kernel spins to the whole dual space
        ctx.cert << "NODE " << path << " dim=" << n << " attempt=" << attempt << " word=" << w.text
                 << " factor=" << poly_str(f.poly) << ":m1 nullity=" << kern.rows()
                 << " IRREDUCIBLE norton\n";
        ctx.leaves.push_back(m);
        ctx.leaf_bases.push_back(ambient_basis);
        return;
      }
    }
  }
  throw budget_error("chop: split budget exhausted at node " + path +
                     "; partial certificate:\n" + ctx.cert.str());
}

}  // namespace

CompositionSeries chop(const Module& m, std::uint64_t seed) {
  ChopContext ctx;
  ctx.seed = seed;
  ctx.cert << "CHOP seed=" << seed << " field=" << m.field.characteristic() << '^'
           << m.field.degree() << " dim=" << m.dim << " gens=" << m.gens.size() << "\n";
  Prng root(seed);
  chop_rec(m, Matrix::identity(m.field, m.dim), root, "r", ctx);

  CompositionSeries cs;
  cs.seed = seed;
  // group leaves into isomorphism classes
  for (std::size_t li = 0; li < ctx.leaves.size(); ++li) {
    std::size_t found = SIZE_MAX;
    for (std::size_t fi = 0; fi < cs.factors.size(); ++fi)
      if (iso(cs.factors[fi].module, ctx.leaves[li], nullptr, seed ^ 0x150150)) {
        found = fi;
        break;
      }
    if (found == SIZE_MAX) {
      cs.factors.push_back({ctx.leaves[li], 1});
      found = cs.factors.size() - 1;
    } else {
      ++cs.factors[found].multiplicity;
    }
    cs.slice_factor.push_back(found);
  }
  // flag
  Matrix flag(m.field, 0, m.dim);
  std::size_t offset = 0;
  for (std::size_t li = 0; li < ctx.leaves.size(); ++li) {
    cs.slice_offset.push_back(offset);
    cs.slice_dim.push_back(ctx.leaves[li].dim);
    offset += ctx.leaves[li].dim;
    flag = flag.vstack(ctx.leaf_bases[li]);
  }
  if (offset != m.dim) throw math_error("chop: flag dimension mismatch");
  cs.flag = std::move(flag);
  ctx.cert << "SLICES";
  for (auto d : cs.slice_dim) ctx.cert << ' ' << d;
  ctx.cert << "\nFACTORS";
  for (auto& f : cs.factors) ctx.cert << ' ' << f.module.dim << 'x' << f.multiplicity;
  ctx.cert << "\n";
  cs.certificate = ctx.cert.str();
  return cs;
}

bool iso(const Module& a, const Module& b, gf::Matrix* intertwiner, std::uint64_t seed) {
  if (!a.field.same_spec(b.field) || a.gens.size() != b.gens.size()) return false;
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  const Field& F = a.field;
  std::size_t n = a.dim;
  Prng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t attempt = 0; attempt < kChopBudget; ++attempt) {
    Word w = random_word(rng, a.gens.size(), F);
    Matrix ma = eval_word(a, w);
    Matrix mb = eval_word(b, w);
    Poly cpa = charpoly(ma);
    if (cpa != charpoly(mb)) return false;
    Prng frng = rng.split(attempt + 1);
    std::vector<IrredFactor> factors = factor_poly(F, cpa, frng);
    // smallest-degree multiplicity-one factor whose endomorphism sweep stays
    // tractable; otherwise draw another word
    const IrredFactor* chosen = nullptr;
    for (const auto& f : factors) {
      if (f.multiplicity != 1) continue;
      double bits = (f.poly.size() - 1) * std::log2(double(F.size()));
      if (bits > 18) continue;
      chosen = &f;
      break;
    }
    if (!chosen) continue;
    Matrix ka = eval_poly_at(F, chosen->poly, ma).transpose().nullspace();
    Matrix kb = eval_poly_at(F, chosen->poly, mb).transpose().nullspace();
    if (ka.rows() != kb.rows() || ka.rows() == 0) return false;
    auto basis_a = spin_raw(a.gens, F, n, matrix_row_vec(ka, 0));
    if (basis_a.size() < n) return false;  // not irreducible; caller misuse
    Matrix Ba = rows_to_matrix(F, basis_a, n);
    Matrix Ba_inv = Ba.inverse();
    std::vector<Matrix> canon_a;
    for (const Matrix& g : a.gens) canon_a.push_back(Ba * g * Ba_inv);

    // Seeds in ker_b up to scalar: first nonzero coordinate normalized to 1.
    // For absolutely irreducible factors the kernel is a line and one seed
    // suffices; larger endomorphism fields need the full projective sweep.
    std::size_t d = kb.rows();
    std::uint64_t q = F.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    if (count > (1u << 19)) throw budget_error("iso: endomorphism sweep too large");
    for (std::uint64_t code = 1; code < count; ++code) {
      // decode a coefficient vector; accept only those with first nonzero = 1
      std::vector<Fel> cf(d);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cf[i] = Fel(c % q);
        c /= q;
      }
      std::size_t first = d;
      for (std::size_t i = 0; i < d; ++i)
        if (cf[i]) { first = i; break; }
      if (first == d || cf[first] != 1) continue;
      std::vector<Fel> vb(n, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (!cf[i]) continue;
        for (std::size_t j = 0; j < n; ++j) vb[j] = F.add(vb[j], F.mul(cf[i], kb.at(i, j)));
      }
      auto basis_b = spin_raw(b.gens, F, n, vb);
      if (basis_b.size() < n) return false;
      Matrix Bb = rows_to_matrix(F, basis_b, n);
      Matrix Bb_inv = Bb.inverse();
      bool match = true;
      for (std::size_t gi = 0; gi < b.gens.size(); ++gi)
        if (!(Bb * b.gens[gi] * Bb_inv == canon_a[gi])) { match = false; break; }
      if (match) {
        if (intertwiner) *intertwiner = Ba_inv * Bb;
        return true;
      }
    }
    return false;
  }
  throw budget_error("iso: no multiplicity-one word found");
}

gf::Fel factor_trace(const CompositionSeries& series, const gf::Matrix& element,
                     std::size_t factor_index) {
  if (factor_index >= series.factors.size()) throw math_error("factor_trace: factor index out of range");
  const Field& F = element.field();
  Matrix conj = series.flag * element * series.flag.inverse();
  std::size_t n = series.ambient_dim();
  // flag invariance: blocks above each slice must vanish
  for (std::size_t s = 0; s < series.slice_dim.size(); ++s) {
    std::size_t off = series.slice_offset[s], d = series.slice_dim[s];
    for (std::size_t i = off; i < off + d; ++i)
      for (std::size_t j = off + d; j < n; ++j)
        if (conj.at(i, j) != 0)
          throw math_error("factor_trace: element does not preserve the composition flag");
  }
  bool any = false;
  Fel trace = 0;
  for (std::size_t s = 0; s < series.slice_dim.size(); ++s) {
    if (series.slice_factor[s] != factor_index) continue;
    Fel t = 0;
    std::size_t off = series.slice_offset[s], d = series.slice_dim[s];
    for (std::size_t i = off; i < off + d; ++i) t = F.add(t, conj.at(i, i));
    if (!any) {
      trace = t;
      any = true;
    } else if (t != trace) {
      throw math_error("factor_trace: slices of one factor disagree; add the element to the chop generators");
    }
  }
  if (!any) throw math_error("factor_trace: factor has no slice");
  return trace;
}

std::vector<std::string> verify_factors_irreducible(const CompositionSeries& series,
                                                    const Module& ambient,
                                                    const std::vector<gf::Matrix>& extra,
                                                    std::uint64_t seed) {
  const Field& F = ambient.field;
  Matrix flag_inv = series.flag.inverse();
  std::vector<Matrix> conj_gens;
  for (const Matrix& g : ambient.gens) conj_gens.push_back(series.flag * g * flag_inv);
  std::vector<Matrix> conj_extra;
  for (const Matrix& g : extra) conj_extra.push_back(series.flag * g * flag_inv);
  std::vector<std::string> report;
  for (std::size_t s = 0; s < series.slice_dim.size(); ++s) {
    std::size_t off = series.slice_offset[s], d = series.slice_dim[s];
    auto block = [&](const Matrix& m) {
      Matrix b(F, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b.set(i, j, m.at(off + i, off + j));
      return b;
    };
    std::vector<Matrix> gens;
    for (auto& g : conj_gens) gens.push_back(block(g));
    for (auto& g : conj_extra) gens.push_back(block(g));
    Module slice_mod(F, gens);
    CompositionSeries sub = chop(slice_mod, seed ^ (s + 1));
    bool irred = sub.factors.size() == 1 && sub.factors[0].multiplicity == 1;
    std::ostringstream os;
    os << "slice " << s << " dim=" << d << " factor=" << series.slice_factor[s]
       << (irred ? " irreducible with extras" : " REDUCIBLE with extras") << " (extras used: "
       << extra.size() << ")";
    report.push_back(os.str());
  }
  return report;
}

}  // namespace mrt::mtx
