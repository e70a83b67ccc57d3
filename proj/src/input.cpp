#include "input.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace swcurv {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_rational_at(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected a number in value '" + s + "'");
  std::string num = s.substr(start, pos - start);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected a denominator in value '" + s + "'");
    den = s.substr(dstart, pos - dstart);
    if (den == "0") throw ParseError("zero denominator in value '" + s + "'");
  }
  Rational r(num + "/" + den);
  r.canonicalize();
  return r;
}

std::vector<FieldScalar> parse_value_list(const std::string& s) {
  std::vector<FieldScalar> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string piece =
        (comma == std::string::npos) ? s.substr(start) : s.substr(start, comma - start);
    out.push_back(parse_value(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_radical(const FieldScalar& v, long field_sqrt, const std::string& where) {
  if (v.d() != 0 && v.d() != 1 && v.d() != field_sqrt)
    throw ParseError(where + " uses sqrt(" + std::to_string(v.d()) +
                     ") but field_sqrt = " + std::to_string(field_sqrt));
}

}  // namespace

FieldScalar parse_value(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty value");
  FieldScalar result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in value '" + text + "'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (s.compare(pos, 5, "sqrt(") != 0) {
      coef = parse_rational_at(s, pos);
      have_coef = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (s.compare(pos, 5, "sqrt(") != 0)
          throw ParseError("expected sqrt( after '*' in value '" + text + "'");
      } else {
        result += FieldScalar(sign == 1 ? coef : Rational(-coef));
        continue;
      }
    }
    (void)have_coef;
    pos += 5;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart || pos >= s.size() || s[pos] != ')')
      throw ParseError("malformed sqrt() in value '" + text + "'");
    long d = std::stol(s.substr(dstart, pos - dstart));
    ++pos;
    if (sign == -1) coef = -coef;
    result += FieldScalar(Rational(0), coef, d);
  }
  return result;
}

InputDocument InputDocument::parse(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> lines;  // key-part, value-part
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in line: " + line);
    lines.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  InputDocument doc;
  bool seen_dim = false, seen_sqrt = false;
  for (const auto& [key, val] : lines) {
    if (key == "dim") {
      if (seen_dim) throw ParseError("duplicate dim");
      seen_dim = true;
      Rational r = parse_value(val).p();
      if (parse_value(val).d() != 0 || r.get_den() != 1 || r < 3)
        throw ParseError("dim must be an integer >= 3");
      doc.dim = static_cast<std::size_t>(r.get_num().get_si());
    } else if (key == "field_sqrt") {
      if (seen_sqrt) throw ParseError("duplicate field_sqrt");
      seen_sqrt = true;
      FieldScalar v = parse_value(val);
      if (v.d() != 0 || v.p().get_den() != 1 || v.p() < 1)
        throw ParseError("field_sqrt must be a positive integer");
      doc.field_sqrt = v.p().get_num().get_si();
      if (!is_square_free(doc.field_sqrt))
        throw ParseError("field_sqrt must be square-free");
    }
  }

  const std::size_t n = doc.dim;
  doc.metric = Matrix::identity(n);
  bool seen_metric = false;
  std::vector<bool> seen_row(n, false);
  bool any_row = false;

  for (const auto& [key, val] : lines) {
    if (key == "dim" || key == "field_sqrt") continue;
    if (key == "metric") {
      if (seen_metric || any_row) throw ParseError("duplicate metric specification");
      seen_metric = true;
      std::string v = val;
      if (v.compare(0, 5, "diag(") != 0 || v.back() != ')')
        throw ParseError("metric must be diag(...) or given via metric_row");
      auto entries = parse_value_list(v.substr(5, v.size() - 6));
      if (entries.size() != n) throw ParseError("metric diag needs " + std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i) {
        check_radical(entries[i], doc.field_sqrt, "metric");
        doc.metric.at(i, i) = entries[i];
      }
      doc.metric_diag = true;
    } else if (key.compare(0, 10, "metric_row") == 0) {
      if (seen_metric) throw ParseError("metric given both as diag and rows");
      std::string idx = trim(key.substr(10));
      std::size_t p = 0;
      Rational r = parse_rational_at(idx, p);
      if (p != idx.size() || r.get_den() != 1) throw ParseError("bad metric_row index: " + key);
      long i = r.get_num().get_si();
      if (i < 1 || static_cast<std::size_t>(i) > n) throw ParseError("metric_row index out of range");
      if (seen_row[i - 1]) throw ParseError("duplicate metric_row " + std::to_string(i));
      seen_row[i - 1] = true;
      if (!any_row) {
        any_row = true;
        doc.metric = Matrix(n, n);
        doc.metric_diag = false;
      }
      auto entries = parse_value_list(val);
      if (entries.size() != n)
        throw ParseError("metric_row needs " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        check_radical(entries[j], doc.field_sqrt, "metric_row");
        doc.metric.at(static_cast<std::size_t>(i - 1), j) = entries[j];
      }
    } else if (key.size() >= 2 && key[0] == 'C' &&
               (key[1] == ' ' || key[1] == '\t')) {
      std::istringstream ks(key.substr(1));
      long i, j, k;
      if (!(ks >> i >> j >> k) || !(ks >> std::ws).eof())
        throw ParseError("bad structure-constant key: " + key);
      if (i < 1 || j < 1 || k < 1 || static_cast<std::size_t>(i) > n ||
          static_cast<std::size_t>(j) > n || static_cast<std::size_t>(k) > n)
        throw ParseError("structure-constant index out of range: " + key);
      if (i >= j) throw ParseError("structure constants require i < j: " + key);
      for (const auto& e : doc.cs)
        if (e.i == i && e.j == j && e.k == k)
          throw ParseError("duplicate assignment C " + std::to_string(i) + " " +
                           std::to_string(j) + " " + std::to_string(k));
      FieldScalar v = parse_value(val);
      check_radical(v, doc.field_sqrt, key);
      doc.cs.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), v});
    } else if (key == "a" || key == "delta" || key == "eps1" || key == "eps2" ||
               key == "eps3" || key == "eps4") {
      if (doc.params.count(key)) throw ParseError("duplicate parameter " + key);
      FieldScalar v = parse_value(val);
      check_radical(v, doc.field_sqrt, key);
      doc.params.emplace(key, v);
    } else {
      throw ParseError("unknown key: " + key);
    }
  }
  if (any_row)
    for (std::size_t i = 0; i < n; ++i)
      if (!seen_row[i]) throw ParseError("missing metric_row " + std::to_string(i + 1));

  std::sort(doc.cs.begin(), doc.cs.end(), [](const CEntry& a, const CEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  return doc;
}

std::string InputDocument::render() const {
  std::ostringstream out;
  out << "dim = " << dim << "\n";
  out << "field_sqrt = " << field_sqrt << "\n";
  if (metric_diag) {
    out << "metric = diag(";
    for (std::size_t i = 0; i < dim; ++i)
      out << (i ? ", " : "") << metric.at(i, i).str();
    out << ")\n";
  } else {
    for (std::size_t i = 0; i < dim; ++i) {
      out << "metric_row " << (i + 1) << " =";
      for (std::size_t j = 0; j < dim; ++j)
        out << (j ? ", " : " ") << metric.at(i, j).str();
      out << "\n";
    }
  }
  for (const auto& [key, v] : params) out << key << " = " << v.str() << "\n";
  for (const auto& e : cs)
    out << "C " << e.i << " " << e.j << " " << e.k << " = " << e.v.str() << "\n";
  return out.str();
}

LieAlgebra InputDocument::algebra() const {
  LieAlgebra alg(dim);
  for (const auto& e : cs)
    alg.set_c(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1),
              static_cast<std::size_t>(e.k - 1), e.v);
  return alg;
}

Metric InputDocument::metric_obj() const { return Metric(metric); }

bool InputDocument::operator==(const InputDocument& o) const {
  return dim == o.dim && field_sqrt == o.field_sqrt && metric_diag == o.metric_diag &&
         metric == o.metric && cs == o.cs && params == o.params;
}

}  // namespace swcurv
