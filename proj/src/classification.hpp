#ifndef SWCURV_CLASSIFICATION_HPP
#define SWCURV_CLASSIFICATION_HPP

#include <array>
#include <vector>

#include "curvature.hpp"
#include "matrix.hpp"
#include "metric.hpp"
#include "poly.hpp"
#include "segre.hpp"

namespace swcurv {

/// rho = g^{-1} r. Self-adjointness w.r.t. g (g rho symmetric) is checked on
/// construction.
struct RicciOperator {
  Matrix matrix;
};

RicciOperator ricci_operator(const Matrix& r, const Metric& g);

struct Predicates {
  bool einstein = false;
  bool conformally_flat = false;
  bool ricci_parallel = false;
  bool sw_zero = false;
};

Predicates predicates(const CurvatureReport& rep, const Metric& g);

/// Canonical (g, r) model of a Segre type: concrete sign-diagonal (or
/// antidiagonal-block) metric plus a target Ricci tensor whose entries are
/// polynomials in the parameters rho1, rho2, alpha, beta of the given ring.
/// The assumptions are polynomials taken nonvanishing (rho1 - rho2, beta).
struct CanonicalPair {
  SegreType type;
  std::array<int, 4> eps{1, 1, 1, 1};
  Matrix g;
  RingPtr ring;
  std::vector<MultiPoly> r;  // row-major 4x4
  std::vector<MultiPoly> assumptions;

  // r with the parameters bound to concrete values.
  Matrix instantiate(const std::map<int, FieldScalar>& params) const;
};

// Supported: {(11)(11)}, {1111~}, {1(12)}, {(11)2}, {(112)}, {(22)}.
// Throws UnsupportedTypeError otherwise. The ring must provide variables
// rho1, rho2, alpha, beta (beta/alpha only used by {1111~}).
CanonicalPair canonical_pair(const SegreType& t, const std::array<int, 4>& eps,
                             const RingPtr& ring);

}  // namespace swcurv

#endif
