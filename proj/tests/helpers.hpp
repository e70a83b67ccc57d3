#ifndef SWCURV_TESTS_HELPERS_HPP
#define SWCURV_TESTS_HELPERS_HPP

#include <array>
#include <random>
#include <string>
#include <vector>

#include "constraints.hpp"
#include "field_scalar.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "metric.hpp"
#include "poly.hpp"

namespace swcurv::testing {

inline Rational random_rational(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  Rational r(n, den(rng));
  r.canonicalize();
  return r;
}

struct CorpusEntry {
  std::string name;
  LieAlgebra alg;
  std::vector<Metric> metrics;
};

// >= 30 Jacobi-valid metric Lie algebras, each with metrics of at least two
// different signatures: abelian, the round product so(3) x R, the filiform
// 3-parameter family at 20 random rational points, and the solution family
// at 8 parameter points (with its canonical metric included).
inline std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> corpus;
  auto flat_metrics = [] {
    auto diag = [](long a, long b, long c, long d) {
      return Metric(Matrix::diagonal(
          {FieldScalar(a), FieldScalar(b), FieldScalar(c), FieldScalar(d)}));
    };
    return std::vector<Metric>{diag(1, 1, 1, 1), diag(1, 1, 1, -1), diag(-1, 1, 1, -1)};
  };

  corpus.push_back({"abelian", LieAlgebra(4), flat_metrics()});

  LieAlgebra round(4);
  round.set_c(0, 1, 2, FieldScalar(1L));
  round.set_c(1, 2, 0, FieldScalar(1L));
  round.set_c(0, 2, 1, FieldScalar(Rational(-1)));
  corpus.push_back({"round so(3)xR", round, flat_metrics()});

  std::mt19937 rng(20240817);
  for (int i = 0; i < 20; ++i) {
    LieAlgebra fil(4);
    fil.set_c(0, 1, 2, FieldScalar(random_rational(rng, true)));
    fil.set_c(0, 1, 3, FieldScalar(random_rational(rng)));
    fil.set_c(0, 2, 3, FieldScalar(random_rational(rng, true)));
    corpus.push_back({"filiform #" + std::to_string(i), fil, flat_metrics()});
  }

  int idx = 0;
  for (const char* a : {"1", "1/2"})
    for (int delta : {1, -1})
      for (int eps3 : {1, -1}) {
        FieldScalar av{Rational(a)};
        auto metrics = flat_metrics();
        metrics.push_back(family_metric(1, eps3, MetricVariant::sign_flipped));
        corpus.push_back({"family #" + std::to_string(idx++),
                          family_algebra(av, delta, 1, eps3), metrics});
      }
  return corpus;
}

// Exact g-isometry for a diagonal sign metric: product of random plane
// rotations (same-sign planes, rational point on the circle) and boosts
// (mixed-sign planes, rational point on the hyperbola).
inline Matrix random_isometry(const std::vector<int>& signs, std::mt19937& rng) {
  const std::size_t n = signs.size();
  Matrix q = Matrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < 3; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    Rational t = random_rational(rng, true);
    if (t == 1 || t == -1) t = Rational(1, 2);
    Matrix p = Matrix::identity(n);
    Rational t2 = t * t;
    if (signs[i] == signs[j]) {
      Rational c = (1 - t2) / (1 + t2), s = 2 * t / (1 + t2);
      p.at(i, i) = FieldScalar(c);
      p.at(j, j) = FieldScalar(c);
      p.at(i, j) = FieldScalar(-s);
      p.at(j, i) = FieldScalar(s);
    } else {
      Rational c = (1 + t2) / (1 - t2), s = 2 * t / (1 - t2);
      p.at(i, i) = FieldScalar(c);
      p.at(j, j) = FieldScalar(c);
      p.at(i, j) = FieldScalar(s);
      p.at(j, i) = FieldScalar(s);
    }
    q = q * p;
  }
  return q;
}

// The displayed linear system for the {(11)(11)} canonical pair, transcribed
// term by term: 20 equations, all carrying the factor rho1 - rho2.
inline std::vector<MultiPoly> paper_1111_system(const RingPtr& ring,
                                                const std::array<int, 4>& eps) {
  auto C = [&](int i, int j, int k) { return MultiPoly::var(ring, cvar_index(ring, i, j, k)); };
  auto E = [&](int i) {
    return MultiPoly::constant(ring, FieldScalar(Rational(eps[static_cast<std::size_t>(i - 1)])));
  };
  MultiPoly D = MultiPoly::var(ring, "rho1") - MultiPoly::var(ring, "rho2");
  std::vector<MultiPoly> eqs;
  auto add = [&](const MultiPoly& f) { eqs.push_back(f * D); };
  add(C(1, 2, 3) * E(3) - C(1, 3, 2) * E(2) - C(2, 3, 1) * E(1));
  add(C(1, 2, 3) * E(3));
  add(C(1, 2, 3) * E(3) + C(1, 3, 2) * E(2) + C(2, 3, 1) * E(1));
  add(C(1, 2, 4) * E(4));
  add(C(1, 2, 4) * E(4) - C(1, 4, 2) * E(2) - C(2, 4, 1) * E(1));
  add(C(1, 3, 1) * E(1));
  add(C(1, 2, 4) * E(4) + C(1, 4, 2) * E(2) + C(2, 4, 1) * E(1));
  add(C(1, 3, 3) * E(3));
  add(C(1, 3, 4) * E(4) + C(1, 4, 3) * E(3) - C(3, 4, 1) * E(1));
  add(C(1, 4, 1) * E(1));
  add(C(1, 3, 4) * E(4) + C(1, 4, 3) * E(3) + C(3, 4, 1) * E(1));
  add(C(1, 4, 4) * E(4));
  add(C(2, 3, 4) * E(4) + C(2, 4, 3) * E(3) - C(3, 4, 2) * E(2));
  add(C(2, 3, 2) * E(2));
  add(C(2, 3, 4) * E(4) + C(2, 4, 3) * E(3) + C(3, 4, 2) * E(2));
  add(C(2, 3, 3) * E(3));
  add(C(2, 4, 2) * E(2));
  add(C(2, 4, 4) * E(4));
  add(C(3, 4, 1) * E(1));
  add(C(3, 4, 2) * E(2));
  return eqs;
}

// Linear span comparison of two systems that are linear in the 24 structure
// constants, after fixing the parameters: equal iff stacking either set on
// top of the other does not raise the rank.
inline bool same_linear_span(const std::vector<MultiPoly>& lhs,
                             const std::vector<MultiPoly>& rhs, const RingPtr& ring,
                             const std::map<int, FieldScalar>& params) {
  std::vector<int> cvars;
  for (const auto& p : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})
    for (int k = 1; k <= 4; ++k) cvars.push_back(cvar_index(ring, p.first, p.second, k));

  auto rows_of = [&](const std::vector<MultiPoly>& sys) {
    std::vector<std::vector<FieldScalar>> rows;
    for (const auto& eq : sys) {
      std::vector<FieldScalar> row(cvars.size());
      for (std::size_t c = 0; c < cvars.size(); ++c) {
        // coefficient of cvars[c]: substitute unit vector, subtract constant
        std::map<int, FieldScalar> pt = params;
        for (int v : cvars) pt[v] = FieldScalar();
        pt[cvars[c]] = FieldScalar(1L);
        std::map<int, FieldScalar> zero = params;
        for (int v : cvars) zero[v] = FieldScalar();
        row[c] = eq.evaluate(pt) - eq.evaluate(zero);
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto to_matrix = [&](const std::vector<std::vector<FieldScalar>>& rows) {
    Matrix m(rows.size(), cvars.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cvars.size(); ++j) m.at(i, j) = rows[i][j];
    return m;
  };

  auto lr = rows_of(lhs), rr = rows_of(rhs);
  std::size_t rank_l = to_matrix(lr).rank();
  std::size_t rank_r = to_matrix(rr).rank();
  auto both = lr;
  both.insert(both.end(), rr.begin(), rr.end());
  std::size_t rank_b = to_matrix(both).rank();
  return rank_l == rank_r && rank_r == rank_b;
}

}  // namespace swcurv::testing

#endif
