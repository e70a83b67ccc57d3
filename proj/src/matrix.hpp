#ifndef SWCURV_MATRIX_HPP
#define SWCURV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "field_scalar.hpp"

namespace swcurv {

/// Small dense matrix over Q(sqrt(d)), all operations exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<FieldScalar>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldScalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldScalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const FieldScalar& s) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  // Fraction-free (Bareiss) elimination.
  FieldScalar determinant() const;
  std::size_t rank() const;

  Matrix inverse() const;  // throws DegenerateMetricError if singular
  FieldScalar trace() const;

  // Monic characteristic polynomial det(lambda*I - M); coefficients returned
  // ascending, size n+1 (Faddeev-LeVerrier, exact).
  std::vector<FieldScalar> char_poly() const;

  Matrix pow(unsigned k) const;

 private:
  std::size_t rows_, cols_;
  std::vector<FieldScalar> data_;
};

}  // namespace swcurv

#endif
