#ifndef SWCURV_CURVATURE_HPP
#define SWCURV_CURVATURE_HPP

#include <functional>
#include <vector>

#include "field_scalar.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "metric.hpp"

namespace swcurv {

// The curvature formulas are shared between the exact numeric pipeline
// (S = FieldScalar) and the symbolic constraint generator (S = MultiPoly).
// A context supplies the ring constants; everything else is +, -, *.
//
// Conventions, pinned by the executable anchors in the test suite:
//   Gamma^l_{ij}: 2<nabla_{e_i} e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z
//   R_{ijkl} = g(R(e_i,e_j) e_l, e_k)        (so K(e1,e2) = R_{1212} for orthonormal e1,e2)
//   r_{jl}   = g^{ik} R_{ijkl},  s = g^{jl} r_{jl}
// Left-invariant tensors have constant components, so nabla acts purely
// algebraically: (nabla_k T)_{ij} = -Gamma^m_{ki} T_{mj} - Gamma^m_{kj} T_{im}.

template <class S>
using Grid = std::vector<S>;

// C(i,j,k): structure constants with antisymmetry folded in (0-based).
template <class S>
using StructFn = std::function<S(std::size_t, std::size_t, std::size_t)>;

// gamma[(l*n+i)*n+j] = Gamma^l_{ij}
template <class S, class Ctx>
Grid<S> compute_gamma(std::size_t n, const StructFn<S>& C, const Grid<S>& g, const Grid<S>& ginv,
                      const Ctx& ctx) {
  Grid<S> gamma(n * n * n, ctx.zero());
  const S half = ctx.from_rational(Rational(1, 2));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        S acc = ctx.zero();
        for (std::size_t k = 0; k < n; ++k) {
          S inner = ctx.zero();
          for (std::size_t m = 0; m < n; ++m)
            inner = inner + C(i, j, m) * g[m * n + k] - C(j, k, m) * g[m * n + i] +
                    C(k, i, m) * g[m * n + j];
          acc = acc + ginv[l * n + k] * inner;
        }
        gamma[(l * n + i) * n + j] = half * acc;
      }
  return gamma;
}

// riem[((i*n+j)*n+k)*n+l] = R_{ijkl} = g(R(e_i,e_j) e_l, e_k)
template <class S, class Ctx>
Grid<S> compute_riemann(std::size_t n, const StructFn<S>& C, const Grid<S>& gamma,
                        const Grid<S>& g, const Ctx& ctx) {
  auto G = [&](std::size_t l, std::size_t i, std::size_t j) -> const S& {
    return gamma[(l * n + i) * n + j];
  };
  // R^m_{ij l} (curvature operator applied to e_l)
  Grid<S> up(n * n * n * n, ctx.zero());
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          S acc = ctx.zero();
          for (std::size_t p = 0; p < n; ++p)
            acc = acc + G(m, i, p) * G(p, j, l) - G(m, j, p) * G(p, i, l) - C(i, j, p) * G(m, p, l);
          up[((m * n + i) * n + j) * n + l] = acc;
        }
  Grid<S> riem(n * n * n * n, ctx.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          S acc = ctx.zero();
          for (std::size_t m = 0; m < n; ++m)
            acc = acc + g[k * n + m] * up[((m * n + i) * n + j) * n + l];
          riem[((i * n + j) * n + k) * n + l] = acc;
        }
  return riem;
}

template <class S, class Ctx>
Grid<S> compute_ricci(std::size_t n, const Grid<S>& riem, const Grid<S>& ginv, const Ctx& ctx) {
  Grid<S> r(n * n, ctx.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      S acc = ctx.zero();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          acc = acc + ginv[i * n + k] * riem[((i * n + j) * n + k) * n + l];
      r[j * n + l] = acc;
    }
  return r;
}

template <class S, class Ctx>
S scalar_curvature(std::size_t n, const Grid<S>& ricci, const Grid<S>& ginv, const Ctx& ctx) {
  S acc = ctx.zero();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) acc = acc + ginv[j * n + l] * ricci[j * n + l];
  return acc;
}

// A = (r - s g / (2(n-1))) / (n-2); requires n >= 3.
template <class S, class Ctx>
Grid<S> one_dim_curvature(std::size_t n, const Grid<S>& ricci, const S& s, const Grid<S>& g,
                          const Ctx& ctx) {
  if (n < 3) throw std::invalid_argument("one-dimensional curvature needs n >= 3");
  Grid<S> A(n * n, ctx.zero());
  const S c1 = ctx.from_rational(Rational(1, static_cast<long>(n) - 2));
  const S c2 = ctx.from_rational(Rational(1, 2 * (static_cast<long>(n) - 1)));
  for (std::size_t i = 0; i < n * n; ++i) A[i] = c1 * (ricci[i] - c2 * (s * g[i]));
  return A;
}

// nt[(k*n+i)*n+j] = (nabla_k T)_{ij} for a left-invariant (0,2)-tensor.
template <class S, class Ctx>
Grid<S> nabla_02(std::size_t n, const Grid<S>& T, const Grid<S>& gamma, const Ctx& ctx) {
  Grid<S> nt(n * n * n, ctx.zero());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        S acc = ctx.zero();
        for (std::size_t m = 0; m < n; ++m)
          acc = acc + gamma[(m * n + k) * n + i] * T[m * n + j] +
                gamma[(m * n + k) * n + j] * T[i * n + m];
        nt[(k * n + i) * n + j] = -acc;
      }
  return nt;
}

// sw[(x*n+y)*n+z] = SW(X,Y,Z) = (nabla_Z A)(X,Y) - (nabla_Y A)(X,Z)
template <class S, class Ctx>
Grid<S> schouten_weyl(std::size_t n, const Grid<S>& A, const Grid<S>& gamma, const Ctx& ctx) {
  Grid<S> na = nabla_02(n, A, gamma, ctx);
  Grid<S> sw(n * n * n, ctx.zero());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        sw[(x * n + y) * n + z] = na[(z * n + x) * n + y] - na[(y * n + x) * n + z];
  return sw;
}

// Kulkarni-Nomizu: (A (x) g)_{ijkl} = A_ik g_jl + A_jl g_ik - A_il g_jk - A_jk g_il
template <class S, class Ctx>
Grid<S> weyl_tensor(std::size_t n, const Grid<S>& riem, const Grid<S>& A, const Grid<S>& g,
                    const Ctx& ctx) {
  Grid<S> w(n * n * n * n, ctx.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          S kn = A[i * n + k] * g[j * n + l] + A[j * n + l] * g[i * n + k] -
                 A[i * n + l] * g[j * n + k] - A[j * n + k] * g[i * n + l];
          w[((i * n + j) * n + k) * n + l] = riem[((i * n + j) * n + k) * n + l] - kn;
        }
  return w;
}

// divw[(x*n+y)*n+z] = (div W)(X,Y,Z) = g^{ab} (nabla_{e_a} W)(e_b, X, Y, Z)
template <class S, class Ctx>
Grid<S> div_weyl(std::size_t n, const Grid<S>& W, const Grid<S>& gamma, const Grid<S>& ginv,
                 const Ctx& ctx) {
  if (n < 4) throw std::invalid_argument("div W identity needs n >= 4");
  auto G = [&](std::size_t l, std::size_t i, std::size_t j) -> const S& {
    return gamma[(l * n + i) * n + j];
  };
  auto Wat = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const S& {
    return W[((i * n + j) * n + k) * n + l];
  };
  Grid<S> d(n * n * n, ctx.zero());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        S acc = ctx.zero();
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (ginv[a * n + b].is_zero()) continue;
            // (nabla_a W)(e_b, X, Y, Z)
            S nw = ctx.zero();
            for (std::size_t p = 0; p < n; ++p)
              nw = nw + G(p, a, b) * Wat(p, x, y, z) + G(p, a, x) * Wat(b, p, y, z) +
                   G(p, a, y) * Wat(b, x, p, z) + G(p, a, z) * Wat(b, x, y, p);
            acc = acc - ginv[a * n + b] * nw;
          }
        d[(x * n + y) * n + z] = acc;
      }
  return d;
}

struct FieldCtx {
  FieldScalar zero() const { return FieldScalar(); }
  FieldScalar from_rational(const Rational& r) const { return FieldScalar(r); }
};

struct PolyCtx {
  RingPtr ring;
  MultiPoly zero() const { return MultiPoly::zero(ring); }
  MultiPoly from_rational(const Rational& r) const {
    return MultiPoly::constant(ring, FieldScalar(r));
  }
};

/// Every curvature object of one metric Lie algebra, exact.
struct CurvatureReport {
  std::size_t n = 4;
  Grid<FieldScalar> gamma;    // Gamma^l_{ij}
  Grid<FieldScalar> riemann;  // R_{ijkl}
  Matrix ricci;               // r_{ij}
  FieldScalar scalar;
  Matrix A;
  Grid<FieldScalar> weyl;
  Grid<FieldScalar> sw;
  Grid<FieldScalar> divw;
  Grid<FieldScalar> nabla_ricci;  // (nabla_k r)_{ij}

  bool sw_zero() const;
  bool weyl_zero() const;
  bool nabla_ricci_zero() const;
  // Eq-(1)-style symmetry (nabla_Z r)(X,Y) = (nabla_Y r)(X,Z).
  bool eq1_symmetric() const;
  // SW + (n-3) div W = 0, componentwise.
  bool sw_divw_identity() const;
};

// Runs the full pipeline; verifies metric compatibility and torsion-freeness
// of the connection (throws std::logic_error if they fail, which would mean a
// Koszul bug, not bad input). The algebra must satisfy the Jacobi identity.
CurvatureReport compute_curvature(const LieAlgebra& alg, const Metric& metric);

// As above but without the Jacobi precondition (used by diagnostics).
CurvatureReport compute_curvature_unchecked(const LieAlgebra& alg, const Metric& metric);

}  // namespace swcurv

#endif
