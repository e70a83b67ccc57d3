#include "matrix.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace swcurv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<FieldScalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const FieldScalar& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

// Bareiss elimination in place; returns (rank, det-if-square, sign).
struct BareissResult {
  std::size_t rank;
  FieldScalar det;
};

BareissResult bareiss(Matrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  FieldScalar prev(1);
  int sign = 1;
  std::size_t row = 0;
  std::size_t last_pivot_row = 0;
  FieldScalar last_pivot(1);
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && m.at(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(piv, j), m.at(row, j));
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        // Exact division step of fraction-free elimination.
        m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
      }
      m.at(i, col) = FieldScalar();
    }
    prev = m.at(row, col);
    last_pivot = prev;
    last_pivot_row = row;
    ++row;
  }
  BareissResult res;
  res.rank = row;
  if (nr == nc) {
    if (row < nr) {
      res.det = FieldScalar();
    } else {
      res.det = last_pivot * FieldScalar(sign);
      (void)last_pivot_row;
    }
  }
  return res;
}

}  // namespace

FieldScalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  if (rows_ == 0) return FieldScalar(1);
  return bareiss(*this).det;
}

std::size_t Matrix::rank() const { return bareiss(*this).rank; }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw DegenerateMetricError("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    FieldScalar pival = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= pival;
      inv.at(col, j) *= pival;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      FieldScalar f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

FieldScalar Matrix::trace() const {
  FieldScalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<FieldScalar> Matrix::char_poly() const {
  if (rows_ != cols_) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = rows_;
  std::vector<FieldScalar> c(n + 1);
  c[n] = FieldScalar(1);
  Matrix m = *this;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix t = m;
      for (std::size_t i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
      m = *this * t;
    }
    c[n - k] = -(m.trace() / FieldScalar(Rational(static_cast<long>(k))));
  }
  return c;
}

Matrix Matrix::pow(unsigned k) const {
  Matrix r = identity(rows_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

}  // namespace swcurv
