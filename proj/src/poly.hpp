#ifndef SWCURV_POLY_HPP
#define SWCURV_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "field_scalar.hpp"

namespace swcurv {

enum class MonomialOrder { lex, grlex, grevlex };

struct PolyRing {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex;

  int var_index(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex);

struct Monomial {
  std::vector<std::uint32_t> e;

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // caller ensures divisibility
  bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
// Returns <0, 0, >0 comparing a vs b under the order.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Sparse multivariate polynomial over Q(sqrt(d)) in a fixed ring.
/// Canonical form: no zero coefficients, terms sorted descending.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr ring, FieldScalar v);
  static MultiPoly var(RingPtr ring, int idx, std::uint32_t power = 1);
  static MultiPoly var(RingPtr ring, const std::string& name, std::uint32_t power = 1);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  // Terms in descending monomial order.
  const std::vector<std::pair<Monomial, FieldScalar>>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const FieldScalar& leading_coeff() const;
  std::uint64_t total_degree() const;
  std::uint64_t degree_in(std::span<const int> vars) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const FieldScalar& s) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  void add_term(const Monomial& m, const FieldScalar& c);

  // Substitute the mapped variables by polynomials; unmapped stay.
  MultiPoly substitute(const std::map<int, MultiPoly>& map) const;
  // Full evaluation; every variable occurring in the poly must be mapped.
  FieldScalar evaluate(const std::map<int, FieldScalar>& point) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<std::pair<Monomial, FieldScalar>> terms_;  // descending

  void normalize(std::map<Monomial, FieldScalar,
                          bool (*)(const Monomial&, const Monomial&)>&&) = delete;
};

// Remainder of f on division by the basis; counts leading-term cancellations
// against *budget and throws BudgetExhaustedError when it hits zero.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis, long* budget = nullptr);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Buchberger with the coprime-leading-monomial criterion; returns the reduced
// Groebner basis. budget counts reduction steps across the whole run.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, long budget = 100000);

// Exact quotient f/g if g divides f, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

struct LinearReduction {
  std::vector<int> forced_zero;       // variable indices proven = 0
  std::vector<MultiPoly> relations;   // residual linear relations (normalized)
  int rank = 0;
};

// Echelonize a system linear in the designated variables, with coefficients in
// the remaining (parameter) variables. Assumption polynomials are taken
// nonvanishing; pivots are only chosen on coefficients certified nonzero
// modulo the assumptions. Nonlinear input is rejected.
LinearReduction reduce_linear(std::span<const MultiPoly> system,
                              std::span<const int> designated,
                              std::span<const MultiPoly> assumptions);

}  // namespace swcurv

#endif
