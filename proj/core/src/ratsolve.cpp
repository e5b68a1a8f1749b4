#include "mrt/exact/ratsolve.hpp"

#include <algorithm>

#include "mrt/util/error.hpp"

namespace mrt::exact {

RatEchelon rat_rref(RatMat m) {
  RatEchelon e;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  for (auto& r : m)
    if (r.size() != cols) throw math_error("rat_rref: ragged matrix");
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Rational inv = m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    e.pivots.push_back(col);
    ++rank;
  }
  e.rank = rank;
  e.reduced = std::move(m);
  return e;
}

RatSolve rat_solve(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw math_error("rat_solve: rhs length mismatch");
  RatMat aug(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw math_error("rat_solve: ragged matrix");
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][cols] = b[i];
  }
  RatEchelon e = rat_rref(std::move(aug));

  RatSolve out;
  if (!e.pivots.empty() && e.pivots.back() == cols) {
    out.status = RatSolve::Status::inconsistent;
    return out;
  }
  out.nullity = cols - e.rank;
  if (out.nullity > 0) {
    out.status = RatSolve::Status::underdetermined;
    return out;
  }
  out.status = RatSolve::Status::unique;
  out.solution.assign(cols, Rational(0));
  for (std::size_t r = 0; r < e.rank; ++r) out.solution[e.pivots[r]] = e.reduced[r][cols];
  out.integral =
      std::all_of(out.solution.begin(), out.solution.end(), [](const Rational& v) { return is_integer(v); });
  return out;
}

}  // namespace mrt::exact
