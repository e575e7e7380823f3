#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tlk/polynomial.hpp"
#include "tlk/scalar.hpp"

namespace tlk {

using Row = std::vector<Scalar>;

// Dense row-major matrix over Scalar. Columns are images of basis vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Row row(std::size_t r) const;
  Row column(std::size_t c) const;
  void set_row(std::size_t r, const Row& v);
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& x, const Matrix& y);
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_zero() const;
  Matrix specialize(const Specialization& s) const;
  std::size_t hash() const;

  // det(X·Id - M), computed without divisions.
  UPoly charpoly() const;
  Scalar determinant() const;
  std::size_t rank() const;
  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref();

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Row vector times matrix.
Row operator*(const Row& v, const Matrix& m);
Row operator+(const Row& x, const Row& y);
Row operator-(const Row& x, const Row& y);
Row scaled(const Row& v, const Scalar& s);
bool is_zero(const Row& v);
// Column vector e_k times the row vector f: the matrix whose only nonzero row is k.
Matrix outer(std::size_t k, const Row& f);
// p(M) by Horner's rule.
Matrix evaluate(const UPoly& p, const Matrix& m);

}  // namespace tlk
