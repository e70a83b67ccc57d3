#include "curvature.hpp"

#include "errors.hpp"

namespace swcurv {

namespace {

bool all_zero(const Grid<FieldScalar>& g) {
  for (const auto& v : g)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

bool CurvatureReport::sw_zero() const { return all_zero(sw); }
bool CurvatureReport::weyl_zero() const { return all_zero(weyl); }
bool CurvatureReport::nabla_ricci_zero() const { return all_zero(nabla_ricci); }

bool CurvatureReport::eq1_symmetric() const {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (nabla_ricci[(k * n + i) * n + j] != nabla_ricci[(j * n + i) * n + k]) return false;
  return true;
}

bool CurvatureReport::sw_divw_identity() const {
  FieldScalar f(Rational(static_cast<long>(n) - 3));
  for (std::size_t i = 0; i < n * n * n; ++i)
    if (!(sw[i] + f * divw[i]).is_zero()) return false;
  return true;
}

CurvatureReport compute_curvature_unchecked(const LieAlgebra& alg, const Metric& metric) {
  const std::size_t n = alg.dim();
  if (metric.dim() != n) throw DegenerateMetricError("metric/algebra dimension mismatch");
  FieldCtx ctx;
  Grid<FieldScalar> g(n * n), ginv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g[i * n + j] = metric.g().at(i, j);
      ginv[i * n + j] = metric.g_inv().at(i, j);
    }
  StructFn<FieldScalar> C = [&alg](std::size_t i, std::size_t j, std::size_t k) {
    return alg.c(i, j, k);
  };

  CurvatureReport rep;
  rep.n = n;
  rep.gamma = compute_gamma(n, C, g, ginv, ctx);

  // Sanity of the connection: metric compatibility and torsion-freeness,
  // componentwise exact.
  auto G = [&](std::size_t l, std::size_t i, std::size_t j) -> const FieldScalar& {
    return rep.gamma[(l * n + i) * n + j];
  };
  Grid<FieldScalar> ng = nabla_02(n, g, rep.gamma, ctx);
  if (!all_zero(ng)) throw std::logic_error("Levi-Civita connection fails nabla g = 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (G(l, i, j) - G(l, j, i) != alg.c(i, j, l))
          throw std::logic_error("Levi-Civita connection fails torsion-freeness");

  rep.riemann = compute_riemann(n, C, rep.gamma, g, ctx);
  Grid<FieldScalar> ric = compute_ricci(n, rep.riemann, ginv, ctx);
  rep.scalar = scalar_curvature(n, ric, ginv, ctx);
  Grid<FieldScalar> A = one_dim_curvature(n, ric, rep.scalar, g, ctx);
  rep.sw = schouten_weyl(n, A, rep.gamma, ctx);
  rep.weyl = weyl_tensor(n, rep.riemann, A, g, ctx);
  if (n >= 4) rep.divw = div_weyl(n, rep.weyl, rep.gamma, ginv, ctx);
  rep.nabla_ricci = nabla_02(n, ric, rep.gamma, ctx);

  rep.ricci = Matrix(n, n);
  rep.A = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rep.ricci.at(i, j) = ric[i * n + j];
      rep.A.at(i, j) = A[i * n + j];
    }
  return rep;
}

CurvatureReport compute_curvature(const LieAlgebra& alg, const Metric& metric) {
  auto jac = alg.jacobi_check();
  if (!jac.ok)
    throw JacobiError("Jacobi identity violated in " + std::to_string(jac.violations.size()) +
                      " triple(s)");
  return compute_curvature_unchecked(alg, metric);
}

}  // namespace swcurv
