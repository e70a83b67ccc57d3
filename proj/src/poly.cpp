#include "poly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace swcurv {

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case MonomialOrder::grlex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::grevlex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

MultiPoly MultiPoly::constant(RingPtr ring, FieldScalar v) {
  MultiPoly p(std::move(ring));
  if (!v.is_zero()) {
    Monomial one{std::vector<std::uint32_t>(p.ring_->vars.size(), 0)};
    p.terms_.emplace_back(std::move(one), std::move(v));
  }
  return p;
}

MultiPoly MultiPoly::var(RingPtr ring, int idx, std::uint32_t power) {
  MultiPoly p(std::move(ring));
  if (idx < 0 || idx >= static_cast<int>(p.ring_->vars.size()))
    throw std::out_of_range("variable index out of range");
  Monomial m{std::vector<std::uint32_t>(p.ring_->vars.size(), 0)};
  m.e[idx] = power;
  if (power == 0) return constant(p.ring_, FieldScalar(1));
  p.terms_.emplace_back(std::move(m), FieldScalar(1));
  return p;
}

MultiPoly MultiPoly::var(RingPtr ring, const std::string& name, std::uint32_t power) {
  int idx = ring->var_index(name);
  if (idx < 0) throw std::out_of_range("unknown variable " + name);
  return var(std::move(ring), idx, power);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front().first;
}

const FieldScalar& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front().second;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint64_t MultiPoly::degree_in(std::span<const int> vars) const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t t = 0;
    for (int v : vars) t += m.e[v];
    d = std::max(d, t);
  }
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  const MonomialOrder ord = ring_->order;
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
    } else if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else {
      int c = compare(terms_[i].first, o.terms_[j].first, ord);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        FieldScalar s = terms_[i].second + o.terms_[j].second;
        if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : o.terms_) {
    MultiPoly part(ring_);
    part.terms_.reserve(terms_.size());
    for (const auto& [m2, c2] : terms_) part.terms_.emplace_back(m2 * m, c2 * c);
    r = r + part;
  }
  return r;
}

MultiPoly MultiPoly::operator*(const FieldScalar& s) const {
  MultiPoly r(ring_);
  if (s.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

void MultiPoly::add_term(const Monomial& m, const FieldScalar& c) {
  MultiPoly t(ring_);
  if (!c.is_zero()) t.terms_.emplace_back(m, c);
  *this = *this + t;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& map) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial kept{std::vector<std::uint32_t>(ring_->vars.size(), 0)};
    MultiPoly factor = MultiPoly::constant(ring_, c);
    for (std::size_t v = 0; v < m.e.size(); ++v) {
      if (!m.e[v]) continue;
      auto it = map.find(static_cast<int>(v));
      if (it == map.end()) {
        kept.e[v] = m.e[v];
      } else {
        for (std::uint32_t k = 0; k < m.e[v]; ++k) factor = factor * it->second;
      }
    }
    MultiPoly keptp(ring_);
    keptp.terms_.emplace_back(std::move(kept), FieldScalar(1));
    r = r + factor * keptp;
  }
  return r;
}

FieldScalar MultiPoly::evaluate(const std::map<int, FieldScalar>& point) const {
  FieldScalar out;
  for (const auto& [m, c] : terms_) {
    FieldScalar v = c;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (!m.e[i]) continue;
      auto it = point.find(static_cast<int>(i));
      if (it == point.end())
        throw std::invalid_argument("unbound variable " + ring_->vars[i] + " in evaluation");
      for (std::uint32_t k = 0; k < m.e[i]; ++k) v *= it->second;
    }
    out += v;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    FieldScalar coeff = c;
    if (!first) {
      if (coeff.sign() < 0 && coeff.is_rational()) {
        os << " - ";
        coeff = -coeff;
      } else {
        os << " + ";
      }
    }
    first = false;
    std::string cs = coeff.str();
    bool need_coeff = m.is_one() || coeff != FieldScalar(1);
    if (need_coeff) {
      if (cs.find_first_of("+-", 1) != std::string::npos || cs.find('(') != std::string::npos)
        os << "(" << cs << ")";
      else
        os << cs;
    }
    bool printed = need_coeff;
    for (std::size_t v = 0; v < m.e.size(); ++v) {
      if (!m.e[v]) continue;
      if (printed) os << "*";
      os << ring_->vars[v];
      if (m.e[v] > 1) os << "^" << m.e[v];
      printed = true;
    }
  }
  return os.str();
}

namespace {

void spend(long* budget) {
  if (budget && --(*budget) < 0)
    throw BudgetExhaustedError("polynomial reduction budget exhausted");
}

}  // namespace

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis, long* budget) {
  MultiPoly p = f;
  MultiPoly r(f.ring());
  while (!p.is_zero()) {
    bool cancelled = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(p.leading_monomial())) {
        spend(budget);
        Monomial q = p.leading_monomial() / g.leading_monomial();
        FieldScalar c = p.leading_coeff() / g.leading_coeff();
        MultiPoly t(f.ring());
        t.add_term(q, c);
        p = p - t * g;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) {
      r.add_term(p.leading_monomial(), p.leading_coeff());
      MultiPoly t(f.ring());
      t.add_term(p.leading_monomial(), p.leading_coeff());
      p = p - t;
    }
  }
  return r;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly tf(f.ring()), tg(f.ring());
  tf.add_term(l / f.leading_monomial(), f.leading_coeff().inverse());
  tg.add_term(l / g.leading_monomial(), g.leading_coeff().inverse());
  return tf * f - tg * g;
}

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, long budget) {
  std::vector<MultiPoly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g * g.leading_coeff().inverse());
  if (basis.empty()) return basis;

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    // Buchberger's first criterion.
    if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
    MultiPoly s = s_polynomial(basis[i], basis[j]);
    MultiPoly r = reduce(s, basis, &budget);
    if (r.is_zero()) continue;
    r = r * r.leading_coeff().inverse();
    basis.push_back(r);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_monomial();
      const auto& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Inter-reduce to the reduced Groebner basis.
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = reduce(minimal[i], others, &budget);
    if (!r.is_zero()) out.push_back(r * r.leading_coeff().inverse());
  }
  // Deterministic order: descending leading monomial.
  std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), a.ring()->order) > 0;
  });
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) return std::nullopt;
  MultiPoly p = f;
  MultiPoly q(f.ring());
  while (!p.is_zero()) {
    if (!g.leading_monomial().divides(p.leading_monomial())) return std::nullopt;
    Monomial m = p.leading_monomial() / g.leading_monomial();
    FieldScalar c = p.leading_coeff() / g.leading_coeff();
    MultiPoly t(f.ring());
    t.add_term(m, c);
    q = q + t;
    p = p - t * g;
  }
  return q;
}

namespace {

struct Row {
  std::map<int, MultiPoly> coeffs;  // designated var -> parameter polynomial
  MultiPoly cst;

  explicit Row(RingPtr ring) : cst(MultiPoly::zero(std::move(ring))) {}

  bool empty() const { return coeffs.empty() && cst.is_zero(); }
};

bool certify_nonzero(MultiPoly c, std::span<const MultiPoly> assumptions) {
  for (bool progress = true; progress && !c.is_constant();) {
    progress = false;
    for (const auto& a : assumptions) {
      if (a.is_constant()) continue;
      if (auto q = divide_exact(c, a)) {
        c = *q;
        progress = true;
        break;
      }
    }
  }
  return c.is_constant() && !c.is_zero();
}

void normalize_row(Row& row, std::span<const MultiPoly> assumptions) {
  auto nonzero_entries = [&](auto&& fn) {
    for (auto& [v, p] : row.coeffs) fn(p);
    if (!row.cst.is_zero()) fn(row.cst);
  };
  // Strip assumption factors common to the whole row.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& a : assumptions) {
      if (a.is_constant()) continue;
      std::vector<MultiPoly> divided;
      bool all = true;
      nonzero_entries([&](MultiPoly& p) {
        if (!all) return;
        auto q = divide_exact(p, a);
        if (q)
          divided.push_back(*q);
        else
          all = false;
      });
      if (all && !divided.empty()) {
        std::size_t k = 0;
        nonzero_entries([&](MultiPoly& p) { p = divided[k++]; });
        progress = true;
      }
    }
  }
  // Scale so the first coefficient is monic when it is constant.
  if (!row.coeffs.empty()) {
    const MultiPoly& lead = row.coeffs.begin()->second;
    if (lead.is_constant() && !lead.is_zero()) {
      FieldScalar inv = lead.leading_coeff().inverse();
      for (auto& [v, p] : row.coeffs) p = p * inv;
      row.cst = row.cst * inv;
    }
  }
}

}  // namespace

LinearReduction reduce_linear(std::span<const MultiPoly> system,
                              std::span<const int> designated,
                              std::span<const MultiPoly> assumptions) {
  LinearReduction out;
  if (system.empty()) return out;
  RingPtr ring = system.front().ring();
  std::vector<bool> is_designated(ring->vars.size(), false);
  for (int v : designated) is_designated[v] = true;

  std::vector<Row> rows;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    Row row(ring);
    for (const auto& [m, c] : p.terms()) {
      int dvar = -1;
      std::uint32_t ddeg = 0;
      for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (!m.e[v] || !is_designated[v]) continue;
        ddeg += m.e[v];
        dvar = static_cast<int>(v);
      }
      if (ddeg > 1) {
        MultiPoly t(ring);
        t.add_term(m, c);
        throw BadParamError("system is nonlinear in the designated variables at term " + t.str());
      }
      Monomial rest = m;
      if (dvar >= 0) rest.e[dvar] = 0;
      MultiPoly part(ring);
      part.add_term(rest, c);
      if (dvar >= 0) {
        auto it = row.coeffs.find(dvar);
        if (it == row.coeffs.end())
          row.coeffs.emplace(dvar, part);
        else
          it->second = it->second + part;
      } else {
        row.cst = row.cst + part;
      }
    }
    for (auto it = row.coeffs.begin(); it != row.coeffs.end();)
      it = it->second.is_zero() ? row.coeffs.erase(it) : std::next(it);
    if (!row.empty()) {
      normalize_row(row, assumptions);
      rows.push_back(std::move(row));
    }
  }

  // Gauss-Jordan over the parameter field, pivoting only on certified entries.
  std::vector<std::size_t> pivot_rows;
  std::vector<bool> used(rows.size(), false);
  for (int v : designated) {
    std::size_t pr = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].coeffs.find(v);
      if (it == rows[i].coeffs.end()) continue;
      if (certify_nonzero(it->second, assumptions)) {
        pr = i;
        break;
      }
    }
    if (pr == rows.size()) continue;
    used[pr] = true;
    pivot_rows.push_back(pr);
    const MultiPoly pc = rows[pr].coeffs.at(v);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pr) continue;
      auto it = rows[i].coeffs.find(v);
      if (it == rows[i].coeffs.end()) continue;
      const MultiPoly rc = it->second;
      // Fraction-free combination: row_i := pc*row_i - rc*row_pivot.
      Row nr(ring);
      for (const auto& [w, p] : rows[i].coeffs) nr.coeffs.emplace(w, pc * p);
      for (const auto& [w, p] : rows[pr].coeffs) {
        auto jt = nr.coeffs.find(w);
        if (jt == nr.coeffs.end())
          nr.coeffs.emplace(w, -(rc * p));
        else
          jt->second = jt->second - rc * p;
      }
      nr.cst = pc * rows[i].cst - rc * rows[pr].cst;
      for (auto jt = nr.coeffs.begin(); jt != nr.coeffs.end();)
        jt = jt->second.is_zero() ? nr.coeffs.erase(jt) : std::next(jt);
      normalize_row(nr, assumptions);
      rows[i] = std::move(nr);
    }
  }

  auto rebuild = [&](const Row& row) {
    MultiPoly p = row.cst;
    for (const auto& [v, c] : row.coeffs) p = p + c * MultiPoly::var(ring, v);
    return p;
  };

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    ++out.rank;
    if (rows[i].coeffs.size() == 1 && rows[i].cst.is_zero() &&
        certify_nonzero(rows[i].coeffs.begin()->second, assumptions)) {
      out.forced_zero.push_back(rows[i].coeffs.begin()->first);
    } else {
      out.relations.push_back(rebuild(rows[i]));
    }
  }
  std::sort(out.forced_zero.begin(), out.forced_zero.end());
  out.forced_zero.erase(std::unique(out.forced_zero.begin(), out.forced_zero.end()),
                        out.forced_zero.end());
  std::sort(out.relations.begin(), out.relations.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), a.ring()->order) > 0;
  });
  return out;
}

}  // namespace swcurv
