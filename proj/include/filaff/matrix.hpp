// Dense matrices and vectors over exact rationals.
#pragma once

#include "filaff/rational.hpp"

#include <vector>

namespace filaff {

using Vec = std::vector<Rational>;

Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
// a += c*b
void axpy(Vec& a, const Rational& c, const Vec& b);
std::string to_string(const Vec& v);  // "(a, b, ...)"

// Row-major dense matrix.  Indices are 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Vec row(int i) const;
  Vec column(int j) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace filaff
