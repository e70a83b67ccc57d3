#ifndef SWCURV_LIE_ALGEBRA_HPP
#define SWCURV_LIE_ALGEBRA_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "field_scalar.hpp"
#include "poly.hpp"

namespace swcurv {

/// n-dimensional Lie algebra given by structure constants C_{ij}^k for the
/// bracket [e_i, e_j] = sum_k C_{ij}^k e_k. Only i < j is stored (indices
/// 0-based internally); antisymmetry holds by construction.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 4);

  std::size_t dim() const { return dim_; }

  // i, j, k 0-based; i == j yields 0, i > j the negated stored value.
  FieldScalar c(std::size_t i, std::size_t j, std::size_t k) const;
  // Requires i < j.
  void set_c(std::size_t i, std::size_t j, std::size_t k, FieldScalar v);

  std::vector<FieldScalar> bracket(const std::vector<FieldScalar>& x,
                                   const std::vector<FieldScalar>& y) const;

  struct JacobiViolation {
    std::size_t i, j, k;
    std::vector<FieldScalar> residual;
  };
  struct JacobiResult {
    bool ok;
    std::vector<JacobiViolation> violations;
  };
  // Exhaustive check of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  JacobiResult jacobi_check() const;

 private:
  std::size_t dim_;
  std::vector<FieldScalar> c_;  // dense, only i<j slots used
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }
};

// The 16 (for n=4) quadratic Jacobi polynomials
// sum_m (C_ij^m C_mk^l + C_jk^m C_mi^l + C_ki^m C_mj^l), i<j<k, l = 1..n,
// over the given ring; cvar(i,j,k) must map 1-based i<j, k to the ring
// variable index of C_{ij}^k.
std::vector<MultiPoly> jacobi_polynomials(
    const RingPtr& ring, const std::function<int(int, int, int)>& cvar, std::size_t dim = 4);

}  // namespace swcurv

#endif
