#ifndef SWCURV_METRIC_HPP
#define SWCURV_METRIC_HPP

#include <utility>

#include "matrix.hpp"

namespace swcurv {

/// Nondegenerate symmetric bilinear form with cached exact inverse and
/// exact signature.
class Metric {
 public:
  explicit Metric(Matrix g);

  static Metric diagonal(const std::vector<FieldScalar>& d) { return Metric(Matrix::diagonal(d)); }

  const Matrix& g() const { return g_; }
  const Matrix& g_inv() const { return g_inv_; }
  std::size_t dim() const { return g_.rows(); }

  // (#positive, #negative) eigenvalue counts; exact (Descartes on the
  // characteristic polynomial, which has only real roots here).
  std::pair<int, int> signature() const { return signature_; }
  bool is_neutral() const { return signature_.first == signature_.second; }

 private:
  Matrix g_, g_inv_;
  std::pair<int, int> signature_;
};

}  // namespace swcurv

#endif
