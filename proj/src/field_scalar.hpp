#ifndef SWCURV_FIELD_SCALAR_HPP
#define SWCURV_FIELD_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace swcurv {

using Rational = mpq_class;

bool is_square_free(long d);
// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Element of the real quadratic field Q(sqrt(d)): p + q*sqrt(d) with
/// p, q arbitrary-precision rationals and d a square-free integer >= 0.
///
/// A value with q == 0 is stored with d == 0 and is compatible with any
/// radical; combining two values whose radicals are both active and
/// distinct throws. d in {0, 1} degenerates to the rationals.
class FieldScalar {
 public:
  FieldScalar() : p_(0), q_(0), d_(0) {}
  FieldScalar(long n) : p_(n), q_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational p) : p_(std::move(p)), q_(0), d_(0) {}  // NOLINT
  FieldScalar(Rational p, Rational q, long d);

  static FieldScalar sqrt_of(long d);  // 0 + 1*sqrt(d)

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  long d() const { return d_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  bool operator==(const FieldScalar& o) const { return p_ == o.p_ && q_ == o.q_ && d_ == o.d_; }
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  FieldScalar inverse() const;

  // Sign of the real number p + q*sqrt(d); exact.
  int sign() const;
  bool operator<(const FieldScalar& o) const { return (*this - o).sign() < 0; }

  // Principal square root if it exists inside Q(sqrt(d)); nullopt otherwise
  // (in particular for negative values).
  std::optional<FieldScalar> sqrt_in_field() const;

  double to_double() const;
  // Exact rendering, e.g. "2/3", "sqrt(3)", "1/2-4*sqrt(3)".
  std::string str() const;

 private:
  void normalize();
  static long unify_radical(const FieldScalar& a, const FieldScalar& b);

  Rational p_, q_;
  long d_;
};

}  // namespace swcurv

#endif
