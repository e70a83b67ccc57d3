#include "segre.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "unipoly.hpp"

namespace swcurv {

// ---------------------------------------------------------------------------
// SegreType rendering / parsing
// ---------------------------------------------------------------------------

bool SegreType::degenerate() const {
  std::map<int, int> count;
  for (const auto& b : blocks) ++count[b.eigen_group];
  for (auto& [g, c] : count)
    if (c >= 2) return true;
  return false;
}

int SegreType::dimension() const {
  int d = 0;
  for (const auto& b : blocks) d += b.complex_pair ? 2 * b.size : b.size;
  return d;
}

namespace {

struct Unit {
  std::vector<SegreBlock> blocks;  // one eigen group

  bool complex_unit() const { return blocks.front().complex_pair; }
  int min_size() const {
    int m = blocks.front().size;
    for (const auto& b : blocks) m = std::min(m, b.size);
    return m;
  }
  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(b.size);
    std::sort(s.begin(), s.end());
    return s;
  }
};

// Table 1 ordering: real units before complex ones, smaller blocks first,
// single blocks before bracketed groups of the same least size.
bool unit_less(const Unit& a, const Unit& b) {
  if (a.complex_unit() != b.complex_unit()) return !a.complex_unit();
  if (a.min_size() != b.min_size()) return a.min_size() < b.min_size();
  if ((a.blocks.size() > 1) != (b.blocks.size() > 1)) return a.blocks.size() < b.blocks.size();
  return a.sizes() < b.sizes();
}

std::vector<Unit> group_units(const std::vector<SegreBlock>& blocks) {
  std::map<int, Unit> by_group;
  for (const auto& b : blocks) by_group[b.eigen_group].blocks.push_back(b);
  std::vector<Unit> units;
  for (auto& [g, u] : by_group) {
    std::sort(u.blocks.begin(), u.blocks.end(),
              [](const SegreBlock& x, const SegreBlock& y) { return x.size < y.size; });
    for (const auto& b : u.blocks)
      if (b.complex_pair != u.blocks.front().complex_pair)
        throw std::logic_error("eigen group mixes real and complex blocks");
    units.push_back(std::move(u));
  }
  std::sort(units.begin(), units.end(), unit_less);
  return units;
}

}  // namespace

void SegreType::normalize() {
  auto units = group_units(blocks);
  blocks.clear();
  int gid = 0;
  for (auto& u : units) {
    for (auto b : u.blocks) {
      b.eigen_group = gid;
      blocks.push_back(b);
    }
    ++gid;
  }
}

bool SegreType::operator==(const SegreType& o) const { return render() == o.render(); }

std::string SegreType::render() const {
  auto units = group_units(blocks);
  std::ostringstream os;
  os << "{";
  for (const auto& u : units) {
    bool bracket = u.blocks.size() > 1;
    if (bracket) os << "(";
    for (const auto& b : u.blocks) {
      if (b.complex_pair)
        os << b.size << b.size << "~";
      else
        os << b.size;
    }
    if (bracket) os << ")";
  }
  os << "}";
  return os.str();
}

SegreType SegreType::parse(const std::string& input) {
  std::string s;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("Segre type must be enclosed in { }: " + input);
  SegreType t;
  int gid = 0;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  auto parse_blocks = [&](std::size_t stop, int group) {
    while (i < stop) {
      char c = s[i];
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("unexpected character '") + c + "' in Segre type " + input);
      int size = c - '0';
      if (size < 1) throw ParseError("block size must be >= 1 in " + input);
      // A conjugate pair is written as the digit twice, '~' on the second.
      if (i + 2 < stop && s[i + 1] == c && s[i + 2] == '~') {
        t.blocks.push_back({size, true, group});
        i += 3;
      } else {
        if (i + 1 < stop && s[i + 1] == '~')
          throw ParseError("overline '~' must follow a doubled digit in " + input);
        t.blocks.push_back({size, false, group});
        i += 1;
      }
    }
  };
  while (i < end) {
    if (s[i] == '(') {
      std::size_t close = s.find(')', i);
      if (close == std::string::npos || close > end) throw ParseError("unbalanced '(' in " + input);
      std::size_t save = i;
      i = save + 1;
      parse_blocks(close, gid);
      if (t.blocks.empty() || t.blocks.back().eigen_group != gid)
        throw ParseError("empty group '()' in " + input);
      i = close + 1;
      ++gid;
    } else {
      std::size_t stop = i;
      // one block unit: digit, possibly doubled with '~'
      if (std::isdigit(static_cast<unsigned char>(s[i])) && i + 2 < s.size() && s[i + 1] == s[i] &&
          s[i + 2] == '~')
        stop = i + 3;
      else
        stop = i + 1;
      parse_blocks(stop, gid);
      ++gid;
    }
  }
  if (t.dimension() != 4)
    throw ParseError("Segre type " + input + " does not describe a 4-dimensional operator");
  t.normalize();
  return t;
}

std::vector<Table1Entry> table1_catalog() {
  static const std::vector<std::pair<const char*, bool>> entries = {
      // nondegenerate, real
      {"{1111}", false},
      {"{112}", false},
      {"{22}", true},
      {"{13}", false},
      {"{4}", true},
      // degenerate, real
      {"{11(11)}", false},
      {"{(11)(11)}", false},
      {"{1(111)}", false},
      {"{(1111)}", false},
      {"{1(12)}", false},
      {"{(11)2}", false},
      {"{(112)}", false},
      {"{(22)}", true},
      {"{(13)}", false},
      // with a complex-conjugate pair
      {"{1111~}", false},
      {"{211~}", true},
      {"{22~}", true},
      {"{11~11~}", true},
      {"{(11)11~}", false},
      {"{(11~11~)}", true},
  };
  std::vector<Table1Entry> out;
  for (const auto& [s, flag] : entries) out.push_back({SegreType::parse(s), flag});
  return out;
}

// ---------------------------------------------------------------------------
// Eigenstructure
// ---------------------------------------------------------------------------

namespace {

// Block sizes from a kernel-dimension sequence: kd[k] = dim ker M^k
// (kd[0] = 0), where kd[k] = sum over blocks of min(k, size).
std::vector<int> blocks_from_kernel_dims(const std::vector<int>& kd) {
  std::vector<int> at_least;  // at_least[k-1] = #blocks of size >= k
  for (std::size_t k = 1; k < kd.size(); ++k) at_least.push_back(kd[k] - kd[k - 1]);
  std::vector<int> sizes;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (int c = 0; c < exact; ++c) sizes.push_back(static_cast<int>(k) + 1);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<int> exact_block_sizes(const Matrix& op, const UniPoly& factor, int multiplicity,
                                   int pair_dim) {
  const int n = static_cast<int>(op.rows());
  Matrix m = factor.eval(op);
  std::vector<int> kd{0};
  Matrix p = Matrix::identity(op.rows());
  int algebraic = multiplicity * factor.degree();  // dimensions consumed
  for (int k = 1; k <= multiplicity; ++k) {
    p = p * m;
    kd.push_back(n - static_cast<int>(p.rank()));
    if (kd.back() == algebraic) {
      while (static_cast<int>(kd.size()) <= multiplicity) kd.push_back(algebraic);
      break;
    }
  }
  // For a conjugate pair factor every kernel dimension is doubled.
  if (pair_dim == 2)
    for (auto& v : kd) {
      if (v % 2 != 0) throw std::logic_error("odd kernel dimension for a conjugate-pair factor");
      v /= 2;
    }
  return blocks_from_kernel_dims(kd);
}

struct FieldFactorization {
  std::vector<FieldScalar> real_roots;  // in Q(sqrt(d))
  std::vector<UniPoly> complex_quads;   // irreducible over R, in-field coefficients
  std::vector<UniPoly> unresolved;      // handled numerically
};

bool all_rational(const UniPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

std::vector<mpz_class> divisors_of(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> divs{1};
  if (n <= 1) return divs;
  mpz_class rest = n;
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class f(2); f * f <= rest && f < 1000000; ++f) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
      rest /= f;
      ++e;
    }
    if (e) factors.emplace_back(f, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  for (const auto& [p, e] : factors) {
    std::vector<mpz_class> next;
    mpz_class pk(1);
    for (int k = 0; k <= e; ++k) {
      for (const auto& d : divs) next.push_back(d * pk);
      pk *= p;
    }
    divs = std::move(next);
  }
  return divs;
}

// Rational roots of a polynomial with rational coefficients.
std::optional<Rational> find_rational_root(const UniPoly& f) {
  if (f.coeff(0).is_zero()) return Rational(0);
  // Clear denominators to a primitive integer polynomial.
  mpz_class den(1);
  for (const auto& c : f.coeffs()) den = den / gcd(den, c.p().get_den()) * c.p().get_den();
  std::vector<mpz_class> ic;
  for (const auto& c : f.coeffs()) {
    Rational v = c.p() * den;
    v.canonicalize();
    ic.push_back(v.get_num());
  }
  auto ps = divisors_of(ic.front());
  auto qs = divisors_of(ic.back());
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        Rational cand(p * sign, q);
        cand.canonicalize();
        if (f.eval(FieldScalar(cand)).is_zero()) return cand;
      }
  return std::nullopt;
}

UniPoly deflate(const UniPoly& f, const FieldScalar& root) {
  UniPoly lin({-root, FieldScalar(1)});
  auto [q, r] = f.divmod(lin);
  if (!r.is_zero()) throw std::logic_error("deflation by a non-root");
  return q;
}

// Split a monic rational quartic into two monic rational quadratics, if
// possible, via a rational root of the resolvent cubic.
std::optional<std::pair<UniPoly, UniPoly>> split_quartic(const UniPoly& f) {
  Rational b = f.coeff(3).p(), c = f.coeff(2).p(), d = f.coeff(1).p(), e = f.coeff(0).p();
  UniPoly resolvent({FieldScalar(-(b * b * e - 4 * c * e + d * d)), FieldScalar(b * d - 4 * e),
                     FieldScalar(-c), FieldScalar(1)});
  // All rational roots of the resolvent, not just one.
  UniPoly rem = resolvent;
  std::vector<Rational> ys;
  while (auto y = find_rational_root(rem)) {
    ys.push_back(*y);
    rem = deflate(rem, FieldScalar(*y));
    if (rem.degree() == 0) break;
  }
  for (const Rational& y : ys) {
    auto d1 = rational_sqrt(b * b - 4 * (c - y));
    auto d2 = rational_sqrt(y * y - 4 * e);
    if (!d1 || !d2) continue;
    Rational p = (b + *d1) / 2, r = (b - *d1) / 2;
    for (int pm : {1, -1}) {
      Rational q = (y + *d2 * pm) / 2, s = (y - *d2 * pm) / 2;
      if (p * s + q * r == d) {
        UniPoly f1({FieldScalar(q), FieldScalar(p), FieldScalar(1)});
        UniPoly f2({FieldScalar(s), FieldScalar(r), FieldScalar(1)});
        return std::make_pair(f1, f2);
      }
    }
  }
  return std::nullopt;
}

void factor_over_field(UniPoly f, FieldFactorization& out) {
  f = f.monic();
  while (f.degree() >= 1) {
    if (f.degree() == 1) {
      out.real_roots.push_back(-f.coeff(0));
      return;
    }
    if (f.degree() == 2) {
      FieldScalar b = f.coeff(1), c = f.coeff(0);
      FieldScalar disc = b * b - FieldScalar(4) * c;
      if (disc.sign() < 0) {
        out.complex_quads.push_back(f);
        return;
      }
      if (auto s = disc.sqrt_in_field()) {
        FieldScalar half = FieldScalar(Rational(1, 2));
        out.real_roots.push_back((-b + *s) * half);
        out.real_roots.push_back((-b - *s) * half);
        return;
      }
      out.unresolved.push_back(f);  // real irrational roots outside the field
      return;
    }
    // degree 3 or 4
    if (all_rational(f)) {
      if (auto root = find_rational_root(f)) {
        out.real_roots.push_back(FieldScalar(*root));
        f = deflate(f, FieldScalar(*root));
        continue;
      }
      if (f.degree() == 4) {
        if (auto pair = split_quartic(f)) {
          factor_over_field(pair->first, out);
          factor_over_field(pair->second, out);
          return;
        }
      }
    }
    out.unresolved.push_back(f);
    return;
  }
}

// ---------------- numeric fallback ----------------

using Cplx = std::complex<double>;

std::vector<Cplx> durand_kerner(const std::vector<Cplx>& monic_coeffs /* ascending, monic */) {
  const int deg = static_cast<int>(monic_coeffs.size()) - 1;
  auto eval = [&](Cplx x) {
    Cplx v = 0;
    for (int i = deg; i >= 0; --i) v = v * x + monic_coeffs[i];
    return v;
  };
  std::vector<Cplx> roots(deg);
  Cplx seed(0.4, 0.9);
  Cplx acc(1, 0);
  for (int i = 0; i < deg; ++i) {
    roots[i] = acc;
    acc *= seed;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0;
    for (int i = 0; i < deg; ++i) {
      Cplx denom(1, 0);
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      Cplx delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-15) break;
  }
  return roots;
}

int numeric_rank(std::vector<std::vector<Cplx>> m, double thresh) {
  const std::size_t n = m.size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    for (std::size_t i = row + 1; i < n; ++i)
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    if (std::abs(m[piv][col]) <= thresh) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t i = row + 1; i < n; ++i) {
      Cplx f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

struct NumericRoot {
  Cplx value;
  int multiplicity;
};

}  // namespace

SegreType segre_type_of(const Matrix& op, double tolerance) {
  if (op.rows() != op.cols()) throw std::invalid_argument("operator must be square");
  const std::size_t n = op.rows();
  UniPoly cp{op.char_poly()};
  auto layers = squarefree_decomposition(cp);

  SegreType result;
  int gid = 0;
  std::vector<NumericRoot> numeric_roots;
  std::vector<double> exact_positions;  // for ambiguity guard against numerics

  for (const auto& [sqfree, mult] : layers) {
    FieldFactorization fac;
    factor_over_field(sqfree, fac);
    for (const auto& root : fac.real_roots) {
      UniPoly lin({-root, FieldScalar(1)});
      auto sizes = exact_block_sizes(op, lin, mult, 1);
      for (int s : sizes) result.blocks.push_back({s, false, gid});
      ++gid;
      exact_positions.push_back(root.to_double());
    }
    for (const auto& quad : fac.complex_quads) {
      auto sizes = exact_block_sizes(op, quad, mult, 2);
      for (int s : sizes) result.blocks.push_back({s, true, gid});
      ++gid;
    }
    for (const auto& poly : fac.unresolved) {
      std::vector<Cplx> cc;
      UniPoly mon = poly.monic();
      for (const auto& c : mon.coeffs()) cc.emplace_back(c.to_double(), 0.0);
      for (const auto& r : durand_kerner(cc)) numeric_roots.push_back({r, mult});
    }
  }

  if (!numeric_roots.empty()) {
    // Cluster numeric roots; refuse to decide inside the [tol, 10 tol) band.
    std::vector<int> cluster(numeric_roots.size());
    for (std::size_t i = 0; i < numeric_roots.size(); ++i) cluster[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      return cluster[x] == x ? x : cluster[x] = find(cluster[x]);
    };
    for (std::size_t i = 0; i < numeric_roots.size(); ++i)
      for (std::size_t j = i + 1; j < numeric_roots.size(); ++j) {
        double dist = std::abs(numeric_roots[i].value - numeric_roots[j].value);
        if (dist < tolerance)
          cluster[find(static_cast<int>(i))] = find(static_cast<int>(j));
        else if (dist < 10 * tolerance)
          throw IndeterminateError("eigenvalues indeterminate at this precision");
      }
    for (const auto& nr : numeric_roots)
      for (double ep : exact_positions)
        if (std::abs(nr.value - Cplx(ep, 0)) < 10 * tolerance)
          throw IndeterminateError("numeric eigenvalue too close to an exact one");

    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < numeric_roots.size(); ++i)
      groups[find(static_cast<int>(i))].push_back(i);

    // Numeric operator matrix.
    std::vector<std::vector<Cplx>> base(n, std::vector<Cplx>(n));
    double maxabs = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        base[i][j] = Cplx(op.at(i, j).to_double(), 0.0);
        maxabs = std::max(maxabs, std::abs(base[i][j]));
      }
    double thresh = tolerance * maxabs * static_cast<double>(n);

    std::vector<bool> consumed(numeric_roots.size(), false);
    for (const auto& [rep, members] : groups) {
      if (consumed[members.front()]) continue;
      Cplx lambda(0, 0);
      int algebraic = 0;
      for (auto m : members) {
        lambda += numeric_roots[m].value;
        algebraic += numeric_roots[m].multiplicity;
      }
      lambda /= static_cast<double>(members.size());
      bool is_complex = std::abs(lambda.imag()) > tolerance;
      if (is_complex && lambda.imag() < 0) continue;  // handled with the conjugate
      if (is_complex) {
        for (auto m : members) consumed[m] = true;
        // consume the conjugate cluster too
        for (std::size_t i = 0; i < numeric_roots.size(); ++i)
          if (std::abs(numeric_roots[i].value - std::conj(lambda)) < 10 * tolerance)
            consumed[i] = true;
      }
      // Kernel dimensions of (op - lambda I)^k.
      std::vector<int> kd{0};
      std::vector<std::vector<Cplx>> shifted = base;
      for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= lambda;
      std::vector<std::vector<Cplx>> power(n, std::vector<Cplx>(n, Cplx(0, 0)));
      for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
      for (int k = 1; k <= algebraic; ++k) {
        std::vector<std::vector<Cplx>> next(n, std::vector<Cplx>(n, Cplx(0, 0)));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * shifted[l][j];
        power = std::move(next);
        kd.push_back(static_cast<int>(n) - numeric_rank(power, thresh));
      }
      auto sizes = blocks_from_kernel_dims(kd);
      for (int s : sizes) result.blocks.push_back({s, is_complex, gid});
      ++gid;
    }
  }

  if (result.dimension() != static_cast<int>(n))
    throw std::logic_error("Segre block sizes do not sum to the dimension");
  result.normalize();
  return result;
}

}  // namespace swcurv
