#include "classification.hpp"

#include "errors.hpp"

namespace swcurv {

RicciOperator ricci_operator(const Matrix& r, const Metric& g) {
  RicciOperator op{g.g_inv() * r};
  if (!(g.g() * op.matrix).is_symmetric())
    throw std::logic_error("Ricci operator is not self-adjoint w.r.t. g");
  return op;
}

Predicates predicates(const CurvatureReport& rep, const Metric& g) {
  Predicates p;
  const std::size_t n = rep.n;
  Matrix lam = g.g() * (rep.scalar / FieldScalar(Rational(static_cast<long>(n))));
  p.einstein = rep.ricci == lam;
  p.conformally_flat = rep.weyl_zero();
  p.ricci_parallel = rep.nabla_ricci_zero();
  p.sw_zero = rep.sw_zero();
  return p;
}

Matrix CanonicalPair::instantiate(const std::map<int, FieldScalar>& params) const {
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = r[i * 4 + j].evaluate(params);
  return m;
}

namespace {

int need_var(const RingPtr& ring, const std::string& name) {
  int idx = ring->var_index(name);
  if (idx < 0) throw BadParamError("constraint ring lacks variable " + name);
  return idx;
}

MultiPoly sp(const RingPtr& ring, int var, int sign) {
  return MultiPoly::var(ring, var) * FieldScalar(Rational(sign));
}

}  // namespace

CanonicalPair canonical_pair(const SegreType& t, const std::array<int, 4>& eps,
                             const RingPtr& ring) {
  for (int e : eps)
    if (e != 1 && e != -1) throw BadParamError("eps signs must be +1 or -1");

  CanonicalPair pair;
  pair.type = t;
  pair.type.normalize();
  pair.eps = eps;
  pair.ring = ring;
  pair.r.assign(16, MultiPoly::zero(ring));

  const int rho1 = need_var(ring, "rho1");
  const int rho2 = need_var(ring, "rho2");
  const std::string key = pair.type.render();

  auto diag_metric = [&](FieldScalar g3, FieldScalar g4) {
    Matrix g(4, 4);
    g.at(0, 0) = FieldScalar(Rational(eps[0]));
    g.at(1, 1) = FieldScalar(Rational(eps[1]));
    g.at(2, 2) = g3;
    g.at(3, 3) = g4;
    return g;
  };
  // Metric block [[0, e],[e, 0]] on (i, i+1) with the size-2 Jordan block of
  // eigenvalue ev gives the symmetric r block [[0, e*ev],[e*ev, e]].
  auto jordan2 = [&](std::size_t i, int sign, int ev_var) {
    pair.r[i * 4 + (i + 1)] = sp(ring, ev_var, sign);
    pair.r[(i + 1) * 4 + i] = sp(ring, ev_var, sign);
    pair.r[(i + 1) * 4 + (i + 1)] = MultiPoly::constant(ring, FieldScalar(Rational(sign)));
  };
  auto antidiag_block = [&](Matrix& g, std::size_t i, int sign) {
    g.at(i, i + 1) = FieldScalar(Rational(sign));
    g.at(i + 1, i) = FieldScalar(Rational(sign));
  };

  if (key == "{(11)(11)}") {
    pair.g = diag_metric(FieldScalar(Rational(eps[2])), FieldScalar(Rational(eps[3])));
    pair.r[0] = sp(ring, rho1, eps[0]);
    pair.r[5] = sp(ring, rho1, eps[1]);
    pair.r[10] = sp(ring, rho2, eps[2]);
    pair.r[15] = sp(ring, rho2, eps[3]);
    pair.assumptions = {MultiPoly::var(ring, rho1) - MultiPoly::var(ring, rho2)};
  } else if (key == "{1111~}") {
    const int alpha = need_var(ring, "alpha");
    const int beta = need_var(ring, "beta");
    pair.g = diag_metric(FieldScalar(Rational(eps[2])), FieldScalar(Rational(-eps[2])));
    pair.r[0] = sp(ring, rho1, eps[0]);
    pair.r[5] = sp(ring, rho2, eps[1]);
    pair.r[10] = sp(ring, alpha, eps[2]);
    pair.r[11] = sp(ring, beta, eps[2]);
    pair.r[14] = sp(ring, beta, eps[2]);
    pair.r[15] = sp(ring, alpha, -eps[2]);
    pair.assumptions = {MultiPoly::var(ring, rho1) - MultiPoly::var(ring, rho2),
                       MultiPoly::var(ring, beta)};
  } else if (key == "{1(12)}" || key == "{(11)2}" || key == "{(112)}") {
    Matrix g(4, 4);
    g.at(0, 0) = FieldScalar(Rational(eps[0]));
    g.at(1, 1) = FieldScalar(Rational(eps[1]));
    antidiag_block(g, 2, eps[2]);
    pair.g = g;
    // {1(12)}: e1 -> rho1; e2 and the 2-block share rho2.
    // {(11)2}: e1, e2 share rho1; the 2-block carries rho2.
    // {(112)}: everything carries rho1.
    int e2_ev = (key == "{(11)2}") ? rho1 : ((key == "{(112)}") ? rho1 : rho2);
    int block_ev = (key == "{(112)}") ? rho1 : rho2;
    pair.r[0] = sp(ring, rho1, eps[0]);
    pair.r[5] = sp(ring, e2_ev, eps[1]);
    jordan2(2, eps[2], block_ev);
    if (key != "{(112)}")
      pair.assumptions = {MultiPoly::var(ring, rho1) - MultiPoly::var(ring, rho2)};
  } else if (key == "{(22)}") {
    Matrix g(4, 4);
    antidiag_block(g, 0, eps[0]);
    antidiag_block(g, 2, eps[2]);
    pair.g = g;
    jordan2(0, eps[0], rho1);
    jordan2(2, eps[2], rho1);
  } else {
    throw UnsupportedTypeError(
        "no canonical pair for " + key +
        "; supported: {(11)(11)} {1111~} {1(12)} {(11)2} {(112)} {(22)}");
  }
  return pair;
}

}  // namespace swcurv
