#include "mrt/exact/param.hpp"

#include <algorithm>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::exact {

ParamInt ParamInt::param(const std::string& name) {
  ParamInt p;
  p.terms_[name] = 1;
  return p;
}

ParamInt ParamInt::operator+(const ParamInt& o) const {
  ParamInt r = *this;
  r.constant_ += o.constant_;
  for (auto& [n, c] : o.terms_) {
    Int& t = r.terms_[n];
    t += c;
    if (t == 0) r.terms_.erase(n);
  }
  return r;
}

ParamInt ParamInt::operator-() const {
  ParamInt r = *this;
  r.constant_ = -r.constant_;
  for (auto& [n, c] : r.terms_) c = -c;
  return r;
}

ParamInt ParamInt::operator-(const ParamInt& o) const { return *this + (-o); }

ParamInt ParamInt::scaled(const Int& c) const {
  if (c == 0) return ParamInt();
  ParamInt r = *this;
  r.constant_ *= c;
  for (auto& [n, t] : r.terms_) t *= c;
  return r;
}

Int ParamInt::eval(const Assignment& a) const {
  Int v = constant_;
  for (auto& [n, c] : terms_) {
    auto it = a.find(n);
    if (it == a.end()) throw math_error("ParamInt: unassigned parameter '" + n + "'");
    v += c * it->second;
  }
  return v;
}

ParamInt ParamInt::substitute(const Assignment& partial) const {
  ParamInt r;
  r.constant_ = constant_;
  for (auto& [n, c] : terms_) {
    auto it = partial.find(n);
    if (it == partial.end())
      r.terms_[n] = c;
    else
      r.constant_ += c * it->second;
  }
  return r;
}

void ParamInt::collect_params(std::vector<std::string>& out) const {
  for (auto& [n, c] : terms_) out.push_back(n);
}

std::string ParamInt::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (constant_ != 0 || terms_.empty()) {
    os << constant_;
    first = false;
  }
  for (auto& [n, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (mag != 1) os << mag;
    os << n;
  }
  return os.str();
}

ParamInt ParamInt::parse(const std::string& text) {
  if (text.empty()) throw input_error("affine literal: empty");
  ParamInt acc;
  std::size_t i = 0;
  while (i < text.size()) {
    Int sgn = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sgn = -1;
      ++i;
    }
    std::size_t j = i;
    std::string digits, name;
    while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) digits += text[j++];
    while (j < text.size() && (isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
      if (name.empty() && isdigit(static_cast<unsigned char>(text[j])))
        throw input_error("affine literal: malformed term in '" + text + "'");
      name += text[j++];
    }
    if (digits.empty() && name.empty())
      throw input_error("affine literal: malformed term in '" + text + "'");
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    if (name.empty())
      acc += ParamInt(sgn * coeff);
    else
      acc += ParamInt::param(name).scaled(sgn * coeff);
    i = j;
  }
  return acc;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(const ParamInt& a) {
  if (a.constant() != 0) terms_[{}] = a.constant();
  for (auto& [n, c] : a.terms()) terms_[{n}] = c;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (auto& [m, c] : o.terms_) {
    Int& t = r.terms_[m];
    t += c;
    if (t == 0) r.terms_.erase(m);
  }
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly neg = o;
  for (auto& [m, c] : neg.terms_) c = -c;
  return *this + neg;
}

Int ParamPoly::eval(const Assignment& a) const {
  Int v = 0;
  for (auto& [m, c] : terms_) {
    Int prod = c;
    for (auto& n : m) {
      auto it = a.find(n);
      if (it == a.end()) throw math_error("ParamPoly: unassigned parameter '" + n + "'");
      prod *= it->second;
    }
    v += prod;
  }
  return v;
}

void ParamPoly::collect_params(std::vector<std::string>& out) const {
  for (auto& [m, c] : terms_)
    for (auto& n : m) out.push_back(n);
}

// ---------------------------------------------------------------------------

void ParamSystem::declare(const std::string& name, long long lo, long long hi) {
  std::vector<long long> vals;
  for (long long v = lo; v <= hi; ++v) vals.push_back(v);
  declare(name, std::move(vals));
}

void ParamSystem::declare(const std::string& name, std::vector<long long> values) {
  if (name.empty() || !isalpha(static_cast<unsigned char>(name[0])))
    throw math_error("ParamSystem: invalid parameter name '" + name + "'");
  if (values.empty()) throw math_error("ParamSystem: empty domain for '" + name + "'");
  if (declared(name)) throw math_error("ParamSystem: duplicate parameter '" + name + "'");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  order_.push_back(name);
  domains_[name] = std::move(values);
}

bool ParamSystem::declared(const std::string& name) const { return domains_.count(name) > 0; }

const std::vector<long long>& ParamSystem::domain(const std::string& name) const {
  auto it = domains_.find(name);
  if (it == domains_.end()) throw math_error("ParamSystem: unknown parameter '" + name + "'");
  return it->second;
}

namespace {

void check_known(const ParamSystem& sys, const ParamPoly& p) {
  std::vector<std::string> names;
  p.collect_params(names);
  for (auto& n : names)
    if (!sys.declared(n)) throw math_error("ParamSystem: constraint mentions undeclared parameter '" + n + "'");
}

}  // namespace

void ParamSystem::require_eq0(const ParamPoly& p, const std::string& label) {
  check_known(*this, p);
  constraints_.push_back({p, ParamConstraint::Kind::eq0, label});
}

void ParamSystem::require_geq0(const ParamPoly& p, const std::string& label) {
  check_known(*this, p);
  constraints_.push_back({p, ParamConstraint::Kind::geq0, label});
}

ParamPoly ParamSystem::mul(const ParamPoly& a, const ParamPoly& b) const {
  ParamPoly r;
  for (auto& [m1, c1] : a.terms())
    for (auto& [m2, c2] : b.terms()) {
      std::vector<std::string> m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      // collapse squares: x^2 = x is only valid on {0,1} domains
      std::vector<std::string> collapsed;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!collapsed.empty() && collapsed.back() == m[i]) {
          const auto& dom = domain(m[i]);
          for (long long v : dom)
            if (v != 0 && v != 1)
              throw math_error("ParamSystem: product requires 0/1 domain for '" + m[i] + "'");
          continue;
        }
        collapsed.push_back(m[i]);
      }
      Int& t = r.terms_[collapsed];
      t += c1 * c2;
      if (t == 0) r.terms_.erase(collapsed);
    }
  return r;
}

void ParamSystem::check_assignment(const Assignment& a, const std::vector<std::string>& needed) const {
  for (auto& n : needed) {
    auto it = a.find(n);
    if (it == a.end()) throw math_error("ParamSystem: assignment misses parameter '" + n + "'");
    const auto& dom = domain(n);
    if (!std::binary_search(dom.begin(), dom.end(), it->second))
      throw math_error("ParamSystem: value out of domain for '" + n + "'");
  }
}

Int ParamSystem::eval(const ParamInt& m, const Assignment& a) const {
  std::vector<std::string> needed;
  m.collect_params(needed);
  check_assignment(a, needed);
  return m.eval(a);
}

ParamSystem ParamSystem::substitute(const Assignment& partial) const {
  std::vector<std::string> names;
  for (auto& [n, v] : partial) names.push_back(n);
  check_assignment(partial, names);
  ParamSystem out;
  for (auto& n : order_)
    if (!partial.count(n)) out.declare(n, domains_.at(n));
  for (auto& c : constraints_) {
    ParamPoly specialized;
    for (auto& [m, coeff] : c.poly.terms()) {
      Int factor = coeff;
      std::vector<std::string> rest;
      for (auto& n : m) {
        auto it = partial.find(n);
        if (it == partial.end())
          rest.push_back(n);
        else
          factor *= it->second;
      }
      if (factor != 0) {
        ParamPoly term;
        term.terms_[rest] = factor;
        specialized += term;
      }
    }
    out.constraints_.push_back({specialized, c.kind, c.label});
  }
  return out;
}

ParamSystem::SolveResult ParamSystem::solve() const {
  SolveResult out;
  std::vector<std::size_t> idx(order_.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < order_.size(); ++i) a[order_[i]] = domains_.at(order_[i])[idx[i]];
    bool ok = true;
    for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
      Int v = constraints_[ci].poly.eval(a);
      bool hold = constraints_[ci].kind == ParamConstraint::Kind::eq0 ? v == 0 : v >= 0;
      if (!hold) {
        out.eliminations.push_back({a, ci});
        ok = false;
        break;
      }
    }
    if (ok) out.survivors.push_back(a);
    // lexicographic increment, last parameter fastest
    std::size_t i = order_.size();
    while (i > 0) {
      --i;
      if (++idx[i] < domains_.at(order_[i]).size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (order_.empty()) return out;
  }
}

bool ParamSystem::operator==(const ParamSystem& o) const {
  if (order_ != o.order_ || domains_ != o.domains_) return false;
  if (constraints_.size() != o.constraints_.size()) return false;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (constraints_[i].kind != o.constraints_[i].kind) return false;
    if (!(constraints_[i].poly - o.constraints_[i].poly).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ParamMatrix::ParamMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

bool ParamMatrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ParamInt& e) { return e.is_constant(); });
}

std::vector<std::vector<Int>> ParamMatrix::eval(const Assignment& a) const {
  std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).eval(a);
  return out;
}

ParamMatrix ParamMatrix::substitute(const Assignment& partial) const {
  ParamMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].substitute(partial);
  return out;
}

ParamMatrix ParamMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                  const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_)
    throw math_error("ParamMatrix: permutation size mismatch");
  ParamMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(row_perm[i], col_perm[j]);
  return out;
}

ParamMatrix ParamMatrix::vstack(const ParamMatrix& below) const {
  if (below.cols_ != cols_) throw math_error("ParamMatrix: vstack shape mismatch");
  ParamMatrix out(rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(), out.entries_.begin() + entries_.size());
  return out;
}

bool ParamMatrix::operator==(const ParamMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

}  // namespace mrt::exact
