#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mrt/gf/field.hpp"

namespace mrt::gf {

struct Echelon;

// Dense matrix over a finite field. Entries are stored row-major as
// canonical digit vectors (k bytes per entry, one byte in the prime case).
// All operations are pure; a Matrix value is safe to share across threads.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Fel at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Fel v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Fel c) const;
  Matrix transpose() const;
  Matrix kron(const Matrix& o) const;
  Fel trace() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  // Reduced row echelon form; pivot = first nonzero entry in column order.
  Echelon rref() const;
  std::size_t rank() const;

  // Rows form a basis of the right kernel {v : A v^T = 0}.
  Matrix nullspace() const;

  Matrix inverse() const;

  Matrix row(std::size_t i) const;
  Matrix rows_slice(std::size_t begin, std::size_t count) const;
  void set_row(std::size_t i, const Matrix& r);
  Matrix vstack(const Matrix& below) const;

  // Schoolbook multiplication; public so the packed fast paths can be
  // cross-checked against it.
  Matrix mul_generic(const Matrix& o) const;

  // Coefficients X with X * B = *this, when the rows of *this lie in the row
  // space of B; nullopt otherwise.
  std::optional<Matrix> express_in_rows(const Matrix& B) const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  unsigned k_ = 1;
  std::vector<std::uint8_t> data_;

  friend class MatrixRowView;
  std::size_t offset(std::size_t i, std::size_t j) const { return (i * cols_ + j) * k_; }
};

struct Echelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline std::size_t Matrix::rank() const { return rref().rank; }

}  // namespace mrt::gf
