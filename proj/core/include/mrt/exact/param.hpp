#pragma once

#include <map>
#include <string>
#include <vector>

#include "mrt/exact/rational.hpp"

namespace mrt::exact {

using Assignment = std::map<std::string, long long>;

// Affine integer expression: constant + sum coeff_i * param_i.
class ParamInt {
 public:
  ParamInt() : constant_(0) {}
  ParamInt(long long c) : constant_(c) {}  // NOLINT
  ParamInt(const Int& c) : constant_(c) {} // NOLINT
  static ParamInt param(const std::string& name);

  const Int& constant() const { return constant_; }
  const std::map<std::string, Int>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  ParamInt operator+(const ParamInt& o) const;
  ParamInt operator-(const ParamInt& o) const;
  ParamInt operator-() const;
  ParamInt scaled(const Int& c) const;
  ParamInt& operator+=(const ParamInt& o) { return *this = *this + o; }

  Int eval(const Assignment& a) const;
  ParamInt substitute(const Assignment& partial) const;

  void collect_params(std::vector<std::string>& out) const;

  bool operator==(const ParamInt& o) const { return constant_ == o.constant_ && terms_ == o.terms_; }
  bool operator!=(const ParamInt& o) const { return !(*this == o); }

  // Canonical affine literal: `0`, `3`, `a`, `-a`, `1-a`, `3-2b`, `a+at`.
  std::string to_string() const;
  static ParamInt parse(const std::string& text);

 private:
  Int constant_;
  std::map<std::string, Int> terms_;
};

// Multilinear integer polynomial in 0/1-valued parameters. Monomials are
// sets of parameter names; squares collapse via x^2 = x, which is valid
// because products are only formed over parameters with 0/1 domains.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const ParamInt& a);  // NOLINT

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  bool is_zero() const { return terms_.empty(); }

  Int eval(const Assignment& a) const;
  void collect_params(std::vector<std::string>& out) const;

  const std::map<std::vector<std::string>, Int>& terms() const { return terms_; }

 private:
  friend class ParamSystem;
  std::map<std::vector<std::string>, Int> terms_;  // sorted distinct names -> coeff
};

struct ParamConstraint {
  enum class Kind { eq0, geq0 };
  ParamPoly poly;
  Kind kind = Kind::eq0;
  std::string label;
};

// Declared parameters with finite domains plus polynomial constraints.
class ParamSystem {
 public:
  void declare(const std::string& name, long long lo, long long hi);
  void declare(const std::string& name, std::vector<long long> values);
  bool declared(const std::string& name) const;
  const std::vector<long long>& domain(const std::string& name) const;
  const std::vector<std::string>& param_order() const { return order_; }

  void require_eq0(const ParamPoly& p, const std::string& label = "");
  void require_geq0(const ParamPoly& p, const std::string& label = "");
  const std::vector<ParamConstraint>& constraints() const { return constraints_; }

  // Product with the 0/1 square-collapse rule; rejects squares of parameters
  // whose domain is not contained in {0, 1}.
  ParamPoly mul(const ParamPoly& a, const ParamPoly& b) const;

  // Domain membership check; throws on out-of-domain or missing values.
  void check_assignment(const Assignment& a, const std::vector<std::string>& needed) const;

  Int eval(const ParamInt& m, const Assignment& a) const;

  // Specialize: fix a subset of parameters, removing them from the system.
  ParamSystem substitute(const Assignment& partial) const;

  struct Elimination {
    Assignment assignment;
    std::size_t constraint_index;
  };
  struct SolveResult {
    std::vector<Assignment> survivors;      // lexicographic order
    std::vector<Elimination> eliminations;  // first violated constraint each
  };
  // Exhaustive enumeration of the domain product.
  SolveResult solve() const;

  bool operator==(const ParamSystem& o) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::vector<long long>> domains_;
  std::vector<ParamConstraint> constraints_;
};

// Matrix of affine entries over a shared parameter system.
class ParamMatrix {
 public:
  ParamMatrix() = default;
  ParamMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ParamInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  ParamInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_constant() const;
  std::vector<std::vector<Int>> eval(const Assignment& a) const;
  ParamMatrix substitute(const Assignment& partial) const;
  ParamMatrix permuted(const std::vector<std::size_t>& row_perm,
                       const std::vector<std::size_t>& col_perm) const;
  ParamMatrix vstack(const ParamMatrix& below) const;

  bool operator==(const ParamMatrix& o) const;
  bool operator!=(const ParamMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ParamInt> entries_;
};

}  // namespace mrt::exact
