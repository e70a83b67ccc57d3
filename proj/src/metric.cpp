#include "metric.hpp"

#include "errors.hpp"

namespace swcurv {

namespace {

int sign_changes(const std::vector<FieldScalar>& coeffs, bool flip_odd) {
  int last = 0, changes = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int s = coeffs[i].sign();
    if (flip_odd && (i % 2 == 1)) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Metric::Metric(Matrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw DegenerateMetricError("metric matrix must be square");
  if (!g_.is_symmetric()) throw DegenerateMetricError("metric matrix must be symmetric");
  if (g_.determinant().is_zero()) throw DegenerateMetricError("metric is degenerate (det = 0)");
  g_inv_ = g_.inverse();
  // All roots of the characteristic polynomial are real (g symmetric), so
  // Descartes' rule counts them exactly; zero roots are excluded by det != 0.
  auto cp = g_.char_poly();
  signature_.first = sign_changes(cp, false);
  signature_.second = sign_changes(cp, true);
}

}  // namespace swcurv
