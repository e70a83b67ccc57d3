#ifndef SWCURV_INPUT_HPP
#define SWCURV_INPUT_HPP

#include <map>
#include <string>
#include <vector>

#include "field_scalar.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "metric.hpp"

namespace swcurv {

/// Line-oriented description of a metric Lie algebra:
///
///   dim = 4
///   field_sqrt = 3
///   metric = diag(1, 1, 1, -1)        # or one metric_row i = ... per row
///   C 2 3 3 = -sqrt(3)                # C_{23}^3, indices 1-based, i < j
///
/// Values are rational, optionally with a sqrt(d) term matching field_sqrt
/// (e.g. "1/2-4*sqrt(3)"). '#' starts a comment. Unknown keys, duplicate
/// assignments and out-of-range indices are rejected.
struct InputDocument {
  std::size_t dim = 4;
  long field_sqrt = 1;
  bool metric_diag = true;  // rendered as diag(...) vs metric_row lines
  Matrix metric;            // full symmetric matrix
  struct CEntry {
    int i, j, k;  // 1-based, i < j
    FieldScalar v;
    bool operator==(const CEntry& o) const = default;
  };
  std::vector<CEntry> cs;  // sorted by (i, j, k)
  std::map<std::string, FieldScalar> params;  // optional a, delta, eps1..eps4

  static InputDocument parse(const std::string& text);
  std::string render() const;

  LieAlgebra algebra() const;
  Metric metric_obj() const;  // throws DegenerateMetricError if singular

  bool operator==(const InputDocument& o) const;
};

// "p/q", "sqrt(3)", "-1/2*sqrt(3)", "1+2*sqrt(3)" etc.; throws ParseError.
FieldScalar parse_value(const std::string& text);

}  // namespace swcurv

#endif
