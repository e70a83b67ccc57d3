#include <doctest.h>

#include "curvature.hpp"
#include "errors.hpp"
#include "helpers.hpp"

using namespace swcurv;
using swcurv::testing::build_corpus;

namespace {

const FieldScalar& R(const CurvatureReport& rep, std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) {
  const std::size_t n = rep.n;
  return rep.riemann[((i * n + j) * n + k) * n + l];
}

const FieldScalar& W(const CurvatureReport& rep, std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) {
  const std::size_t n = rep.n;
  return rep.weyl[((i * n + j) * n + k) * n + l];
}

}  // namespace

TEST_CASE("abelian algebra is flat") {
  auto rep = compute_curvature(LieAlgebra(4), Metric(Matrix::identity(4)));
  for (const auto& v : rep.riemann) CHECK(v.is_zero());
  CHECK(rep.scalar.is_zero());
  CHECK(rep.ricci.is_zero());
  CHECK(rep.sw_zero());
  CHECK(rep.weyl_zero());
  CHECK(rep.nabla_ricci_zero());
}

TEST_CASE("round so(3) x R factor: curvature of the unit-speed sphere factor") {
  LieAlgebra alg(4);
  alg.set_c(0, 1, 2, FieldScalar(1L));
  alg.set_c(1, 2, 0, FieldScalar(1L));
  alg.set_c(0, 2, 1, FieldScalar(Rational(-1)));
  auto rep = compute_curvature(alg, Metric(Matrix::identity(4)));
  // sectional curvature K(e1, e2) = R_1212 = 1/4 for the bi-invariant metric
  CHECK(R(rep, 0, 1, 0, 1) == FieldScalar(Rational(1, 4)));
  Matrix expected = Matrix::diagonal({FieldScalar(Rational(1, 2)), FieldScalar(Rational(1, 2)),
                                      FieldScalar(Rational(1, 2)), FieldScalar()});
  CHECK(rep.ricci == expected);
  CHECK(rep.scalar == FieldScalar(Rational(3, 2)));
}

TEST_CASE("filiform connection coefficient") {
  LieAlgebra alg(4);
  alg.set_c(0, 1, 2, FieldScalar(1L));  // C_12^3 = 1
  auto rep = compute_curvature(alg, Metric(Matrix::identity(4)));
  // Gamma^3_{12} = 1/2
  CHECK(rep.gamma[(2 * 4 + 0) * 4 + 1] == FieldScalar(Rational(1, 2)));
}

TEST_CASE("Jacobi violation is rejected") {
  LieAlgebra bad(4);
  bad.set_c(0, 1, 2, FieldScalar(1L));
  bad.set_c(0, 2, 0, FieldScalar(1L));
  CHECK_THROWS_AS(compute_curvature(bad, Metric(Matrix::identity(4))), JacobiError);
}

TEST_CASE("degenerate metric is rejected") {
  CHECK_THROWS_AS(Metric(Matrix(4, 4)), DegenerateMetricError);
  Matrix asym(4, 4);
  for (int i = 0; i < 4; ++i) asym.at(i, i) = FieldScalar(1L);
  asym.at(0, 1) = FieldScalar(1L);
  CHECK_THROWS_AS(Metric{asym}, DegenerateMetricError);
}

TEST_CASE("identity and symmetry suite over the corpus") {
  for (const auto& entry : build_corpus()) {
    CAPTURE(entry.name);
    for (const auto& g : entry.metrics) {
      auto rep = compute_curvature(entry.alg, g);
      const std::size_t n = rep.n;

      // Riemann symmetries and first Bianchi
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              CHECK(R(rep, i, j, k, l) == -R(rep, j, i, k, l));
              CHECK(R(rep, i, j, k, l) == -R(rep, i, j, l, k));
              CHECK(R(rep, i, j, k, l) == R(rep, k, l, i, j));
              CHECK((R(rep, i, j, k, l) + R(rep, j, k, i, l) + R(rep, k, i, j, l)).is_zero());
            }

      // Weyl is totally trace-free: g^{ik} W_{ijkl} = 0
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          FieldScalar tr;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
              tr += g.g_inv().at(i, k) * W(rep, i, j, k, l);
          CHECK(tr.is_zero());
        }

      // R = W + A (x) g (Kulkarni-Nomizu reconstruction)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              FieldScalar kn = rep.A.at(i, k) * g.g().at(j, l) + rep.A.at(j, l) * g.g().at(i, k) -
                               rep.A.at(i, l) * g.g().at(j, k) - rep.A.at(j, k) * g.g().at(i, l);
              CHECK(R(rep, i, j, k, l) == W(rep, i, j, k, l) + kn);
            }

      // tr_g A = s / (2(n-1))
      FieldScalar tra;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tra += g.g_inv().at(i, j) * rep.A.at(i, j);
      CHECK(tra == rep.scalar / FieldScalar(Rational(2 * (static_cast<long>(n) - 1))));

      // SW = -(n-3) div W, and the Eq.-(1) equivalence
      CHECK(rep.sw_divw_identity());
      CHECK(rep.sw_zero() == rep.eq1_symmetric());
    }
  }
}
