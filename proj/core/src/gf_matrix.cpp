#include "mrt/gf/matrix.hpp"

#include <algorithm>
#include <cstring>

#include "mrt/util/error.hpp"

namespace mrt::gf {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw math_error(msg);
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), k_(field_.degree()) {
  data_.assign(rows_ * cols_ * k_, 0);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Fel Matrix::at(std::size_t i, std::size_t j) const {
  const std::uint8_t* d = data_.data() + offset(i, j);
  if (k_ == 1) return *d;
  return field_.from_digits(d);
}

void Matrix::set(std::size_t i, std::size_t j, Fel v) {
  std::uint8_t* d = data_.data() + offset(i, j);
  if (k_ == 1) {
    require(v < field_.size(), "Matrix: entry not canonical");
    *d = std::uint8_t(v);
    return;
  }
  field_.digits_of(v, d);
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(field_.same_spec(o.field_) && rows_ == o.rows_ && cols_ == o.cols_,
          "Matrix: shape/field mismatch in addition");
  Matrix r(field_, rows_, cols_);
  const unsigned p = field_.characteristic();
  for (std::size_t i = 0; i < data_.size(); ++i) {
    unsigned s = unsigned(data_[i]) + o.data_[i];
    r.data_[i] = std::uint8_t(s >= p ? s - p : s);
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(field_.same_spec(o.field_) && rows_ == o.rows_ && cols_ == o.cols_,
          "Matrix: shape/field mismatch in subtraction");
  Matrix r(field_, rows_, cols_);
  const unsigned p = field_.characteristic();
  for (std::size_t i = 0; i < data_.size(); ++i) {
    unsigned s = unsigned(data_[i]) + p - o.data_[i];
    r.data_[i] = std::uint8_t(s >= p ? s - p : s);
  }
  return r;
}

Matrix Matrix::scaled(Fel c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, field_.mul(at(i, j), c));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Fel Matrix::trace() const {
  require(rows_ == cols_, "Matrix: trace of non-square matrix");
  Fel t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, at(i, i));
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_.same_spec(o.field_) && data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t b) { return b == 0; });
}

Matrix Matrix::mul_generic(const Matrix& o) const {
  require(field_.same_spec(o.field_), "Matrix: field mismatch in product");
  require(cols_ == o.rows_, "Matrix: inner dimension mismatch in product");
  Matrix r(field_, rows_, o.cols_);
  if (k_ == 1) {
    // Accumulate in 64-bit; (p-1)^2 * cols stays far below overflow at our
    // dimension limits.
    const unsigned p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t t = 0; t < cols_; ++t) {
        std::uint64_t a = data_[offset(i, t)];
        if (!a) continue;
        const std::uint8_t* brow = o.data_.data() + o.offset(t, 0);
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
      }
      for (std::size_t j = 0; j < o.cols_; ++j) r.data_[r.offset(i, j)] = std::uint8_t(acc[j] % p);
    }
    return r;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Fel s = 0;
      for (std::size_t t = 0; t < cols_; ++t) s = field_.add(s, field_.mul(at(i, t), o.at(t, j)));
      r.set(i, j, s);
    }
  return r;
}

namespace {

// Bit-packed kernels. F_2 rows are bitmasks; F_3 rows are two bitplanes
// (lo = digit 1, hi = digit 2), added with a branch-free digitwise formula.

struct PackedF2 {
  std::size_t rows, cols, words;
  std::vector<std::uint64_t> bits;
  std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }
  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
};

PackedF2 pack_f2(const Matrix& m) {
  PackedF2 p;
  p.rows = m.rows();
  p.cols = m.cols();
  p.words = (m.cols() + 63) / 64;
  p.bits.assign(p.rows * p.words, 0);
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.cols; ++j)
      if (m.at(i, j)) p.row(i)[j >> 6] |= 1ull << (j & 63);
  return p;
}

struct PackedF3 {
  std::size_t rows, cols, words;
  std::vector<std::uint64_t> lo, hi;
};

PackedF3 pack_f3(const Matrix& m) {
  PackedF3 p;
  p.rows = m.rows();
  p.cols = m.cols();
  p.words = (m.cols() + 63) / 64;
  p.lo.assign(p.rows * p.words, 0);
  p.hi.assign(p.rows * p.words, 0);
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.cols; ++j) {
      Fel v = m.at(i, j);
      if (v == 1) p.lo[i * p.words + (j >> 6)] |= 1ull << (j & 63);
      if (v == 2) p.hi[i * p.words + (j >> 6)] |= 1ull << (j & 63);
    }
  return p;
}

// (slo, shi) = digitwise sum of (alo, ahi) and (blo, bhi) mod 3
inline void f3_add(std::uint64_t alo, std::uint64_t ahi, std::uint64_t blo, std::uint64_t bhi,
                   std::uint64_t& slo, std::uint64_t& shi) {
  std::uint64_t azero = ~(alo | ahi), bzero = ~(blo | bhi);
  slo = (azero & blo) | (alo & bzero) | (ahi & bhi);
  shi = (azero & bhi) | (ahi & bzero) | (alo & blo);
}

Matrix mul_packed_f2(const Matrix& a, const Matrix& b) {
  PackedF2 pa = pack_f2(a), pb = pack_f2(b);
  Matrix r(a.field(), a.rows(), b.cols());
  std::vector<std::uint64_t> acc(pb.words);
  for (std::size_t i = 0; i < pa.rows; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (pa.row(i)[t >> 6] & (1ull << (t & 63))) {
        const std::uint64_t* brow = pb.row(t);
        for (std::size_t w = 0; w < pb.words; ++w) acc[w] ^= brow[w];
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (acc[j >> 6] & (1ull << (j & 63))) r.set(i, j, 1);
  }
  return r;
}

Matrix mul_packed_f3(const Matrix& a, const Matrix& b) {
  PackedF3 pb = pack_f3(b);
  Matrix r(a.field(), a.rows(), b.cols());
  std::vector<std::uint64_t> acclo(pb.words), acchi(pb.words);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acclo.begin(), acclo.end(), 0);
    std::fill(acchi.begin(), acchi.end(), 0);
    for (std::size_t t = 0; t < a.cols(); ++t) {
      Fel c = a.at(i, t);
      if (!c) continue;
      const std::uint64_t* blo = pb.lo.data() + t * pb.words;
      const std::uint64_t* bhi = pb.hi.data() + t * pb.words;
      if (c == 2) std::swap(blo, bhi);  // doubling swaps the planes
      for (std::size_t w = 0; w < pb.words; ++w) {
        std::uint64_t slo, shi;
        f3_add(acclo[w], acchi[w], blo[w], bhi[w], slo, shi);
        acclo[w] = slo;
        acchi[w] = shi;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (acclo[j >> 6] & (1ull << (j & 63))) r.set(i, j, 1);
      if (acchi[j >> 6] & (1ull << (j & 63))) r.set(i, j, 2);
    }
  }
  return r;
}

}  // namespace

Matrix Matrix::operator*(const Matrix& o) const {
  require(field_.same_spec(o.field_), "Matrix: field mismatch in product");
  require(cols_ == o.rows_, "Matrix: inner dimension mismatch in product");
  if (k_ == 1 && cols_ * o.cols_ >= 4096) {
    if (field_.characteristic() == 2) return mul_packed_f2(*this, o);
    if (field_.characteristic() == 3) return mul_packed_f3(*this, o);
  }
  return mul_generic(o);
}

Matrix Matrix::kron(const Matrix& o) const {
  require(field_.same_spec(o.field_), "Matrix: field mismatch in Kronecker product");
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Fel a = at(i, j);
      if (!a) continue;
      for (std::size_t s = 0; s < o.rows_; ++s)
        for (std::size_t t = 0; t < o.cols_; ++t) {
          Fel b = o.at(s, t);
          if (b) r.set(i * o.rows_ + s, j * o.cols_ + t, field_.mul(a, b));
        }
    }
  return r;
}

Echelon Matrix::rref() const {
  Echelon e;
  e.reduced = *this;
  Matrix& m = e.reduced;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rows_;
    for (std::size_t i = rank; i < rows_; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols_; ++j) {
        Fel tmp = m.at(rank, j);
        m.set(rank, j, m.at(piv, j));
        m.set(piv, j, tmp);
      }
    Fel inv = field_.inv(m.at(rank, col));
    for (std::size_t j = col; j < cols_; ++j) m.set(rank, j, field_.mul(m.at(rank, j), inv));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank) continue;
      Fel f = m.at(i, col);
      if (!f) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.set(i, j, field_.sub(m.at(i, j), field_.mul(f, m.at(rank, j))));
    }
    e.pivots.push_back(col);
    ++rank;
  }
  e.rank = rank;
  return e;
}

Matrix Matrix::nullspace() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::size_t nfree = cols_ - e.rank;
  Matrix basis(field_, nfree, cols_);
  std::size_t bi = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.set(bi, free, 1);
    for (std::size_t r = 0; r < e.rank; ++r) {
      Fel v = e.reduced.at(r, free);
      if (v) basis.set(bi, e.pivots[r], field_.neg(v));
    }
    ++bi;
  }
  return basis;
}

Matrix Matrix::inverse() const {
  require(rows_ == cols_, "Matrix: inverse of non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_ + i, 1);
  }
  Echelon e = aug.rref();
  require(e.rank == rows_ && e.pivots.size() == rows_ && e.pivots.back() == rows_ - 1,
          "Matrix: singular matrix has no inverse");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, e.reduced.at(i, cols_ + j));
  return r;
}

Matrix Matrix::row(std::size_t i) const { return rows_slice(i, 1); }

Matrix Matrix::rows_slice(std::size_t begin, std::size_t count) const {
  require(begin + count <= rows_, "Matrix: row slice out of range");
  Matrix r(field_, count, cols_);
  std::memcpy(r.data_.data(), data_.data() + offset(begin, 0), count * cols_ * k_);
  return r;
}

void Matrix::set_row(std::size_t i, const Matrix& r) {
  require(r.rows_ == 1 && r.cols_ == cols_ && r.field_.same_spec(field_), "Matrix: bad row assignment");
  std::memcpy(data_.data() + offset(i, 0), r.data_.data(), cols_ * k_);
}

Matrix Matrix::vstack(const Matrix& below) const {
  require(below.cols_ == cols_ && below.field_.same_spec(field_), "Matrix: vstack shape mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  std::memcpy(r.data_.data(), data_.data(), data_.size());
  std::memcpy(r.data_.data() + data_.size(), below.data_.data(), below.data_.size());
  return r;
}

std::optional<Matrix> Matrix::express_in_rows(const Matrix& B) const {
  require(B.cols_ == cols_ && B.field_.same_spec(field_), "Matrix: express_in_rows shape mismatch");
  // Solve X * B = *this, i.e. B^T X^T = (*this)^T, by eliminating on
  // [B^T | this^T].
  Matrix bt = B.transpose();
  Matrix tt = transpose();
  Matrix aug(field_, cols_, B.rows_ + rows_);
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = 0; j < B.rows_; ++j) aug.set(i, j, bt.at(i, j));
    for (std::size_t j = 0; j < rows_; ++j) aug.set(i, B.rows_ + j, tt.at(i, j));
  }
  Echelon e = aug.rref();
  for (auto piv : e.pivots)
    if (piv >= B.rows_) return std::nullopt;  // inconsistent system
  Matrix xt(field_, B.rows_, rows_);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < rows_; ++j) xt.set(e.pivots[r], j, e.reduced.at(r, B.rows_ + j));
  return xt.transpose();
}

}  // namespace mrt::gf
