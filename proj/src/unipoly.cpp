#include "unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace swcurv {

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<FieldScalar> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<FieldScalar> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<FieldScalar> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const FieldScalar& s) const {
  std::vector<FieldScalar> r = c_;
  for (auto& v : r) v *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<FieldScalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * FieldScalar(Rational(static_cast<long>(i)));
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  UniPoly rem = *this;
  std::vector<FieldScalar> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0);
  FieldScalar linv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    FieldScalar f = rem.leading() * linv;
    q[k] = f;
    std::vector<FieldScalar> sub(k + d.c_.size());
    for (std::size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = d.c_[i] * f;
    rem = rem - UniPoly(std::move(sub));
  }
  return {UniPoly(std::move(q)), rem};
}

FieldScalar UniPoly::eval(const FieldScalar& x) const {
  FieldScalar v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Matrix UniPoly::eval(const Matrix& m) const {
  Matrix v(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    v = v * m;
    for (std::size_t i = 0; i < m.rows(); ++i) v.at(i, i) += *it;
  }
  return v;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldScalar& a = c_[i];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a != FieldScalar(1)) {
      os << "(" << a.str() << ")";
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() <= 0) return out;
  // Yun's algorithm (characteristic 0).
  UniPoly a = f.monic();
  UniPoly d = a.derivative();
  UniPoly g = gcd(a, d);
  UniPoly w = a.divmod(g).first;
  UniPoly y = d.divmod(g).first;
  int mult = 1;
  while (w.degree() > 0) {
    UniPoly z = y - w.derivative();
    UniPoly p = gcd(w, z);
    if (p.degree() > 0) out.emplace_back(p, mult);
    w = w.divmod(p).first;
    y = z.divmod(p).first;
    ++mult;
  }
  return out;
}

}  // namespace swcurv
