#include "lie_algebra.hpp"

#include <stdexcept>

namespace swcurv {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {
  if (dim < 3) throw std::invalid_argument("Lie algebra dimension must be >= 3");
}

FieldScalar LieAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index");
  if (i == j) return FieldScalar();
  if (i < j) return c_[idx(i, j, k)];
  return -c_[idx(j, i, k)];
}

void LieAlgebra::set_c(std::size_t i, std::size_t j, std::size_t k, FieldScalar v) {
  if (i >= j || j >= dim_ || k >= dim_) throw std::out_of_range("set_c requires i < j < dim");
  c_[idx(i, j, k)] = std::move(v);
}

std::vector<FieldScalar> LieAlgebra::bracket(const std::vector<FieldScalar>& x,
                                             const std::vector<FieldScalar>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket operand dimension mismatch");
  std::vector<FieldScalar> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      FieldScalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

LieAlgebra::JacobiResult LieAlgebra::jacobi_check() const {
  JacobiResult res{true, {}};
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        std::vector<FieldScalar> residual(dim_);
        bool nonzero = false;
        for (std::size_t l = 0; l < dim_; ++l) {
          FieldScalar s;
          for (std::size_t m = 0; m < dim_; ++m)
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          if (!s.is_zero()) nonzero = true;
          residual[l] = s;
        }
        if (nonzero) {
          res.ok = false;
          res.violations.push_back({i, j, k, std::move(residual)});
        }
      }
  return res;
}

std::vector<MultiPoly> jacobi_polynomials(
    const RingPtr& ring, const std::function<int(int, int, int)>& cvar, std::size_t dim) {
  // Symbolic C_{ij}^k with antisymmetry folded in; 1-based indices.
  auto C = [&](int i, int j, int k) {
    MultiPoly p = MultiPoly::zero(ring);
    if (i == j) return p;
    if (i < j) return MultiPoly::var(ring, cvar(i, j, k));
    return -MultiPoly::var(ring, cvar(j, i, k));
  };
  std::vector<MultiPoly> out;
  const int n = static_cast<int>(dim);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          MultiPoly p = MultiPoly::zero(ring);
          for (int m = 1; m <= n; ++m)
            p = p + C(i, j, m) * C(m, k, l) + C(j, k, m) * C(m, i, l) + C(k, i, m) * C(m, j, l);
          out.push_back(std::move(p));
        }
  return out;
}

}  // namespace swcurv
