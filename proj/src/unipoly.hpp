#ifndef SWCURV_UNIPOLY_HPP
#define SWCURV_UNIPOLY_HPP

#include <string>
#include <vector>

#include "field_scalar.hpp"
#include "matrix.hpp"

namespace swcurv {

/// Univariate polynomial over Q(sqrt(d)), coefficients ascending.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(FieldScalar v) { return UniPoly({std::move(v)}); }
  static UniPoly x() { return UniPoly({FieldScalar(0), FieldScalar(1)}); }

  const std::vector<FieldScalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const FieldScalar& leading() const { return c_.back(); }
  FieldScalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldScalar(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const FieldScalar& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  // Exact division with remainder over the field.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  FieldScalar eval(const FieldScalar& x) const;
  Matrix eval(const Matrix& m) const;

  std::string str(const std::string& var = "lambda") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<FieldScalar> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd

// Square-free decomposition: returns list of (factor, multiplicity) with the
// factors square-free, pairwise coprime, product with multiplicities = monic(f).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

}  // namespace swcurv

#endif
