#include "constraints.hpp"

#include <sstream>

#include "errors.hpp"

namespace swcurv {

namespace {

constexpr int kPairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

int require_sign(int v, const char* name) {
  if (v != 1 && v != -1) throw BadParamError(std::string(name) + " must be +1 or -1");
  return v;
}

StructFn<MultiPoly> generic_struct_fn(const RingPtr& ring) {
  return [ring](std::size_t i, std::size_t j, std::size_t k) -> MultiPoly {
    if (i == j) return MultiPoly::zero(ring);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    MultiPoly v = MultiPoly::var(
        ring, cvar_index(ring, static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                         static_cast<int>(k) + 1));
    return flip ? -v : v;
  };
}

struct SymbolicSetup {
  Grid<MultiPoly> g, ginv, gamma;
  PolyCtx ctx;
};

SymbolicSetup symbolic_connection(const CanonicalPair& pair) {
  const std::size_t n = 4;
  PolyCtx ctx{pair.ring};
  SymbolicSetup s{Grid<MultiPoly>(n * n, ctx.zero()), Grid<MultiPoly>(n * n, ctx.zero()),
                  {}, ctx};
  Matrix gi = pair.g.inverse();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.g[i * n + j] = MultiPoly::constant(pair.ring, pair.g.at(i, j));
      s.ginv[i * n + j] = MultiPoly::constant(pair.ring, gi.at(i, j));
    }
  s.gamma = compute_gamma(n, generic_struct_fn(pair.ring), s.g, s.ginv, ctx);
  return s;
}

}  // namespace

RingPtr constraint_ring() {
  std::vector<std::string> vars;
  for (const auto& p : kPairs)
    for (int k = 1; k <= 4; ++k)
      vars.push_back("C_" + std::to_string(p[0]) + "_" + std::to_string(p[1]) + "^" +
                     std::to_string(k));
  for (const char* v : {"rho1", "rho2", "alpha", "beta", "a", "t1", "t2"})
    vars.push_back(v);
  return make_ring(std::move(vars), MonomialOrder::grevlex);
}

int cvar_index(const RingPtr& ring, int i, int j, int k) {
  std::string name =
      "C_" + std::to_string(i) + "_" + std::to_string(j) + "^" + std::to_string(k);
  int idx = ring->var_index(name);
  if (idx < 0) throw BadParamError("no structure-constant variable " + name);
  return idx;
}

std::vector<MultiPoly> generate_sw_equations(const CanonicalPair& pair) {
  const std::size_t n = 4;
  SymbolicSetup s = symbolic_connection(pair);
  Grid<MultiPoly> sw = schouten_weyl(n, pair.r, s.gamma, s.ctx);
  std::vector<MultiPoly> eqs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const MultiPoly& e = sw[(x * n + y) * n + z];
        if (!e.is_zero()) eqs.push_back(e);
      }
  return eqs;
}

std::vector<MultiPoly> generate_ricci_equations(const CanonicalPair& pair) {
  const std::size_t n = 4;
  SymbolicSetup s = symbolic_connection(pair);
  Grid<MultiPoly> riem = compute_riemann(n, generic_struct_fn(pair.ring), s.gamma, s.g, s.ctx);
  Grid<MultiPoly> ric = compute_ricci(n, riem, s.ginv, s.ctx);
  std::vector<MultiPoly> eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      MultiPoly e = ric[i * n + j] - pair.r[i * n + j];
      if (!e.is_zero()) eqs.push_back(e);
    }
  return eqs;
}

ConstraintSystem assemble_system(const CanonicalPair& pair) {
  ConstraintSystem sys;
  sys.pair = pair;
  sys.sw_eqs = generate_sw_equations(pair);
  auto cvar = [&pair](int i, int j, int k) { return cvar_index(pair.ring, i, j, k); };
  sys.jacobi_eqs = jacobi_polynomials(pair.ring, cvar, 4);
  sys.ricci_eqs = generate_ricci_equations(pair);
  sys.assumptions = pair.assumptions;
  return sys;
}

std::vector<MultiPoly> ConstraintSystem::all_equations() const {
  std::vector<MultiPoly> all = sw_eqs;
  all.insert(all.end(), jacobi_eqs.begin(), jacobi_eqs.end());
  all.insert(all.end(), ricci_eqs.begin(), ricci_eqs.end());
  return all;
}

std::string ConstraintSystem::dump() const {
  std::ostringstream out;
  out << "# system for " << pair.type.render() << "\n";
  out << "# eps = (" << pair.eps[0] << ", " << pair.eps[1] << ", " << pair.eps[2] << ", "
      << pair.eps[3] << ")\n";
  for (std::size_t i = 0; i < 4; ++i) {
    out << "# g row " << (i + 1) << " =";
    for (std::size_t j = 0; j < 4; ++j) out << " " << pair.g.at(i, j).str();
    out << "\n";
  }
  out << "# assume nonzero:";
  if (assumptions.empty()) out << " (none)";
  for (const auto& f : assumptions) out << " " << f.str() << ";";
  out << "\n";
  auto section = [&out](const char* name, const std::vector<MultiPoly>& eqs) {
    out << name << ":\n";
    for (const auto& e : eqs) out << e.str() << "\n";
  };
  section("sw", sw_eqs);
  section("jacobi", jacobi_eqs);
  section("ricci", ricci_eqs);
  return out.str();
}

LieAlgebra family_algebra(const FieldScalar& a, int delta, int eps2, int eps3) {
  if (a.is_zero()) throw BadParamError("family parameter a must be nonzero");
  require_sign(delta, "delta");
  require_sign(eps2, "eps2");
  require_sign(eps3, "eps3");
  FieldScalar s3 = FieldScalar::sqrt_of(3);
  LieAlgebra alg(4);
  alg.set_c(1, 2, 2, -(a * FieldScalar(Rational(delta)) * s3));  // C_23^3
  alg.set_c(1, 3, 3, a * FieldScalar(Rational(delta)) * s3);     // C_24^4
  alg.set_c(1, 2, 3, a);                                         // C_23^4
  alg.set_c(1, 3, 2, a);                                         // C_24^3
  alg.set_c(2, 3, 1, a * FieldScalar(Rational(2L * eps2 * eps3)));  // C_34^2
  return alg;
}

Metric family_metric(int eps2, int eps3, MetricVariant variant) {
  require_sign(eps2, "eps2");
  require_sign(eps3, "eps3");
  long last = (variant == MetricVariant::sign_flipped) ? -eps3 : eps3;
  return Metric(Matrix::diagonal({FieldScalar(1L), FieldScalar(Rational(eps2)),
                                  FieldScalar(Rational(eps3)), FieldScalar(Rational(last))}));
}

FamilyReport verify_family(const FieldScalar& a, int delta, int eps2, int eps3,
                           MetricVariant variant, double tolerance) {
  LieAlgebra alg = family_algebra(a, delta, eps2, eps3);
  Metric g = family_metric(eps2, eps3, variant);
  FamilyReport rep;
  rep.jacobi_ok = alg.jacobi_check().ok;
  rep.curvature = compute_curvature(alg, g);
  rep.sw_zero = rep.curvature.sw_zero();
  rep.preds = predicates(rep.curvature, g);
  RicciOperator op = ricci_operator(rep.curvature.ricci, g);
  try {
    rep.segre = segre_type_of(op.matrix, tolerance).render();
  } catch (const IndeterminateError&) {
    rep.segre.clear();
  }
  rep.complex_pair = rep.segre.find('~') != std::string::npos;

  const Matrix& r = rep.curvature.ricci;
  FieldScalar e2{Rational(eps2)}, e3{Rational(eps3)};
  rep.rho1 = r.at(0, 0);
  rep.rho2 = r.at(1, 1) / e2;
  rep.alpha = r.at(2, 2) / e3;
  rep.beta = r.at(2, 3) / e3;

  FieldScalar a2 = a * a;
  FieldScalar exp_rho2 = FieldScalar(Rational(-8)) * a2 * e2;
  FieldScalar exp_alpha = FieldScalar(Rational(4)) * a2 * e2;
  FieldScalar exp_beta = FieldScalar(Rational(4L * delta)) * e2 * a2 * FieldScalar::sqrt_of(3);
  Matrix expected(4, 4);
  expected.at(1, 1) = e2 * exp_rho2;
  expected.at(2, 2) = e3 * exp_alpha;
  expected.at(3, 3) = -(e3 * exp_alpha);
  expected.at(2, 3) = e3 * exp_beta;
  expected.at(3, 2) = e3 * exp_beta;
  rep.matches_expected = rep.sw_zero && r == expected && rep.rho1.is_zero() &&
                         rep.rho2 == exp_rho2 && rep.alpha == exp_alpha && rep.beta == exp_beta;
  return rep;
}

std::map<int, MultiPoly> family_substitution(const RingPtr& ring) {
  std::map<int, MultiPoly> sub;
  for (const auto& p : kPairs)
    for (int k = 1; k <= 4; ++k)
      sub.insert_or_assign(cvar_index(ring, p[0], p[1], k), MultiPoly::zero(ring));
  MultiPoly a = MultiPoly::var(ring, "a");
  MultiPoly a2 = a * a;
  FieldScalar s3 = FieldScalar::sqrt_of(3);
  sub.insert_or_assign(cvar_index(ring, 2, 3, 3), a * -s3);
  sub.insert_or_assign(cvar_index(ring, 2, 4, 4), a * s3);
  sub.insert_or_assign(cvar_index(ring, 2, 3, 4), a);
  sub.insert_or_assign(cvar_index(ring, 2, 4, 3), a);
  sub.insert_or_assign(cvar_index(ring, 3, 4, 2), a * FieldScalar(2L));
  sub.insert_or_assign(ring->var_index("rho1"), MultiPoly::zero(ring));
  sub.insert_or_assign(ring->var_index("rho2"), a2 * FieldScalar(Rational(-8)));
  sub.insert_or_assign(ring->var_index("alpha"), a2 * FieldScalar(4L));
  sub.insert_or_assign(ring->var_index("beta"), a2 * (FieldScalar(4L) * s3));
  return sub;
}

std::map<int, FieldScalar> family_point(const RingPtr& ring, const FieldScalar& a,
                                        int delta, int eps2, int eps3) {
  if (a.is_zero()) throw BadParamError("family parameter a must be nonzero");
  require_sign(delta, "delta");
  require_sign(eps2, "eps2");
  require_sign(eps3, "eps3");
  std::map<int, FieldScalar> pt;
  for (const auto& p : kPairs)
    for (int k = 1; k <= 4; ++k) pt[cvar_index(ring, p[0], p[1], k)] = FieldScalar();
  FieldScalar s3 = FieldScalar::sqrt_of(3);
  FieldScalar d{Rational(delta)}, e2{Rational(eps2)}, e3{Rational(eps3)};
  FieldScalar a2 = a * a;
  pt[cvar_index(ring, 2, 3, 3)] = -(a * d * s3);
  pt[cvar_index(ring, 2, 4, 4)] = a * d * s3;
  pt[cvar_index(ring, 2, 3, 4)] = a;
  pt[cvar_index(ring, 2, 4, 3)] = a;
  pt[cvar_index(ring, 3, 4, 2)] = a * FieldScalar(2L) * e2 * e3;
  pt[ring->var_index("rho1")] = FieldScalar();
  pt[ring->var_index("rho2")] = FieldScalar(Rational(-8)) * a2 * e2;
  pt[ring->var_index("alpha")] = FieldScalar(4L) * a2 * e2;
  pt[ring->var_index("beta")] = FieldScalar(Rational(4L * delta)) * e2 * a2 * s3;
  pt[ring->var_index("a")] = a;
  return pt;
}

SolutionReport solve_small(const ConstraintSystem& system, SolveStrategy strategy, long budget,
                           const std::map<int, FieldScalar>* point) {
  const RingPtr& ring = system.pair.ring;
  SolutionReport rep;
  std::vector<MultiPoly> gens;

  if (strategy == SolveStrategy::linear_then_gb) {
    std::vector<int> designated;
    for (const auto& p : kPairs)
      for (int k = 1; k <= 4; ++k) designated.push_back(cvar_index(ring, p[0], p[1], k));
    rep.linear = reduce_linear(system.sw_eqs, designated, system.assumptions);
    rep.linear_ran = true;
    std::map<int, MultiPoly> zeros;
    for (int idx : rep.linear.forced_zero) zeros.insert_or_assign(idx, MultiPoly::zero(ring));
    for (const auto& rel : rep.linear.relations) {
      MultiPoly r = rel.substitute(zeros);
      if (!r.is_zero()) gens.push_back(r);
    }
    for (const auto& e : system.all_equations()) {
      MultiPoly r = e.substitute(zeros);
      if (!r.is_zero()) gens.push_back(r);
    }
  } else {
    for (const auto& e : system.all_equations())
      if (!e.is_zero()) gens.push_back(e);
  }

  const char* tnames[2] = {"t1", "t2"};
  for (std::size_t i = 0; i < system.assumptions.size() && i < 2; ++i) {
    MultiPoly t = MultiPoly::var(ring, tnames[i]);
    gens.push_back(t * system.assumptions[i] - MultiPoly::constant(ring, FieldScalar(1L)));
  }

  try {
    rep.groebner = buchberger(gens, budget);
  } catch (const BudgetExhaustedError&) {
    rep.budget_exhausted = true;
    rep.groebner.clear();
  }

  if (point) {
    rep.point_checked = true;
    rep.point_in_variety = true;
    for (const auto& e : system.all_equations())
      if (!e.evaluate(*point).is_zero()) {
        rep.point_in_variety = false;
        break;
      }
  }
  return rep;
}

}  // namespace swcurv
