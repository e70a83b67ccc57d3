#ifndef SWCURV_REPORT_HPP
#define SWCURV_REPORT_HPP

#include <string>

#include "classification.hpp"
#include "curvature.hpp"
#include "lie_algebra.hpp"
#include "metric.hpp"

namespace swcurv {

struct AnalysisReport {
  std::size_t dim = 4;
  std::pair<int, int> signature{0, 0};  // (plus, minus)
  CurvatureReport curvature;
  Predicates preds;
  std::string segre;        // empty when indeterminate
  std::string segre_error;  // set when indeterminate
  bool sw_divw_ok = false;  // SW = -(n-3) div W
  bool eq1_ok = false;      // SW = 0 iff nabla r symmetric
  double elapsed_ms = 0.0;  // text format only

  // Family verification extras (analyze_family only).
  bool has_family = false;
  FieldScalar f_rho1, f_rho2, f_alpha, f_beta;
  bool f_matches = false;
};

AnalysisReport analyze(const LieAlgebra& alg, const Metric& g, double tolerance = 1e-9);
// a != 0; delta, eps2, eps3 in {+1, -1}; paper_literal selects the metric
// variant diag(1, eps2, eps3, eps3) instead of diag(1, eps2, eps3, -eps3).
AnalysisReport analyze_family(const FieldScalar& a, int delta, int eps2, int eps3,
                              bool paper_literal, double tolerance = 1e-9);

std::string render_text(const AnalysisReport& rep);
// Machine format: exact strings with decimal approximations alongside,
// stable key order, no timing (byte-identical for identical input).
std::string render_json(const AnalysisReport& rep);

}  // namespace swcurv

#endif
