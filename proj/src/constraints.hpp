#ifndef SWCURV_CONSTRAINTS_HPP
#define SWCURV_CONSTRAINTS_HPP

#include <map>
#include <string>
#include <vector>

#include "classification.hpp"
#include "curvature.hpp"
#include "lie_algebra.hpp"
#include "metric.hpp"
#include "poly.hpp"
#include "segre.hpp"

namespace swcurv {

// Ring of the constraint systems: the 24 generic structure constants
// C_1_2^1 .. C_3_4^4 (pairs in order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4),
// upper index 1..4), then the parameters rho1, rho2, alpha, beta, a and the
// saturation variables t1, t2. Graded reverse lex.
RingPtr constraint_ring();
// Ring variable index of C_{ij}^k, 1-based indices, i < j.
int cvar_index(const RingPtr& ring, int i, int j, int k);

struct ConstraintSystem {
  CanonicalPair pair;
  std::vector<MultiPoly> sw_eqs;
  std::vector<MultiPoly> jacobi_eqs;
  std::vector<MultiPoly> ricci_eqs;
  std::vector<MultiPoly> assumptions;  // polynomials taken nonvanishing

  std::vector<MultiPoly> all_equations() const;
  // Deterministic dump: '#' header (pair, signs, assumptions), then the
  // sections sw: / jacobi: / ricci:, one polynomial per line.
  std::string dump() const;
};

// Componentwise Eq.-(1) restrictions (nabla_Z r)(X,Y) - (nabla_Y r)(X,Z) = 0
// on the generic structure constants, with the Levi-Civita connection of
// pair.g expanded symbolically. Deduplicated to Y < Z; zero components are
// dropped; order is (X, Y, Z) lexicographic.
std::vector<MultiPoly> generate_sw_equations(const CanonicalPair& pair);
// The 10 upper-triangle equations Ricci(C, g) - r_target = 0.
std::vector<MultiPoly> generate_ricci_equations(const CanonicalPair& pair);
ConstraintSystem assemble_system(const CanonicalPair& pair);

enum class MetricVariant { paper_literal, sign_flipped };

struct FamilyReport {
  bool jacobi_ok = false;
  bool sw_zero = false;
  Predicates preds;
  std::string segre;  // empty if indeterminate
  bool complex_pair = false;
  // Eigendata read off the computed Ricci tensor in the canonical slots.
  FieldScalar rho1, rho2, alpha, beta;
  bool matches_expected = false;  // full eigendata + shape + SW = 0
  CurvatureReport curvature;
};

// The solution family: C_23^3 = -a*delta*sqrt(3), C_24^4 = a*delta*sqrt(3),
// C_23^4 = C_24^3 = a, C_34^2 = 2*a*eps2*eps3, metric
// diag(1, eps2, eps3, +-eps3) by variant. a must be nonzero.
LieAlgebra family_algebra(const FieldScalar& a, int delta, int eps2, int eps3);
Metric family_metric(int eps2, int eps3, MetricVariant variant);
FamilyReport verify_family(const FieldScalar& a, int delta, int eps2, int eps3,
                           MetricVariant variant = MetricVariant::sign_flipped,
                           double tolerance = 1e-9);

// Substitution of the family into the constraint ring, a left symbolic:
// C vars to their family values (delta = 1, eps = +1), rho1 -> 0,
// rho2 -> -8a^2, alpha -> 4a^2, beta -> 4*sqrt(3)*a^2.
std::map<int, MultiPoly> family_substitution(const RingPtr& ring);
// Fully numeric family point at given parameters (t1, t2 excluded).
std::map<int, FieldScalar> family_point(const RingPtr& ring, const FieldScalar& a,
                                        int delta, int eps2, int eps3);

enum class SolveStrategy { linear_then_gb, gb_only };

struct SolutionReport {
  bool linear_ran = false;
  LinearReduction linear;
  std::vector<MultiPoly> groebner;
  bool budget_exhausted = false;
  bool point_checked = false;
  bool point_in_variety = false;
};

// Inequality assumptions are adjoined by Rabinowitsch saturation (t_i * f - 1).
// If a point is given (values for every non-saturation variable), membership
// of that point in the solution variety is verified by direct substitution
// into the unsaturated equations.
SolutionReport solve_small(const ConstraintSystem& system, SolveStrategy strategy,
                           long budget = 100000,
                           const std::map<int, FieldScalar>* point = nullptr);

}  // namespace swcurv

#endif
