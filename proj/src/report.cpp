#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "constraints.hpp"
#include "errors.hpp"
#include "segre.hpp"

namespace swcurv {

namespace {

using json = nlohmann::ordered_json;

std::string approx(const FieldScalar& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v.to_double());
  return buf;
}

json value_json(const FieldScalar& v) {
  return json::array({v.str(), v.to_double()});
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(value_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json grid3_json(const Grid<FieldScalar>& t, std::size_t n) {
  json out = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FieldScalar& v = t[(a * n + b) * n + c];
        if (v.is_zero()) continue;
        out.push_back(json{{"idx", {a + 1, b + 1, c + 1}}, {"value", value_json(v)}});
      }
  return out;
}

json grid4_json(const Grid<FieldScalar>& t, std::size_t n) {
  json out = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const FieldScalar& v = t[((a * n + b) * n + c) * n + d];
          if (v.is_zero()) continue;
          out.push_back(json{{"idx", {a + 1, b + 1, c + 1, d + 1}}, {"value", value_json(v)}});
        }
  return out;
}

void print_matrix(std::ostringstream& out, const char* name, const Matrix& m) {
  out << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m.at(i, j).str();
    out << "\n";
  }
}

void print_grid3(std::ostringstream& out, const char* name, const Grid<FieldScalar>& t,
                 std::size_t n) {
  out << name << " (nonzero components):\n";
  bool any = false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FieldScalar& v = t[(a * n + b) * n + c];
        if (v.is_zero()) continue;
        any = true;
        out << "  [" << (a + 1) << "," << (b + 1) << "," << (c + 1) << "] = " << v.str()
            << " (~" << approx(v) << ")\n";
      }
  if (!any) out << "  (all zero)\n";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisReport analyze(const LieAlgebra& alg, const Metric& g, double tolerance) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.dim = alg.dim();
  rep.signature = g.signature();
  rep.curvature = compute_curvature(alg, g);
  rep.preds = predicates(rep.curvature, g);
  rep.sw_divw_ok = rep.curvature.sw_divw_identity();
  rep.eq1_ok = rep.curvature.sw_zero() == rep.curvature.eq1_symmetric();
  try {
    RicciOperator op = ricci_operator(rep.curvature.ricci, g);
    rep.segre = segre_type_of(op.matrix, tolerance).render();
  } catch (const IndeterminateError& e) {
    rep.segre_error = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

AnalysisReport analyze_family(const FieldScalar& a, int delta, int eps2, int eps3,
                              bool paper_literal, double tolerance) {
  auto t0 = std::chrono::steady_clock::now();
  MetricVariant variant =
      paper_literal ? MetricVariant::paper_literal : MetricVariant::sign_flipped;
  FamilyReport fam = verify_family(a, delta, eps2, eps3, variant, tolerance);
  Metric g = family_metric(eps2, eps3, variant);
  AnalysisReport rep;
  rep.dim = 4;
  rep.signature = g.signature();
  rep.curvature = fam.curvature;
  rep.preds = fam.preds;
  rep.segre = fam.segre;
  if (fam.segre.empty()) rep.segre_error = "indeterminate at this precision";
  rep.sw_divw_ok = rep.curvature.sw_divw_identity();
  rep.eq1_ok = rep.curvature.sw_zero() == rep.curvature.eq1_symmetric();
  rep.has_family = true;
  rep.f_rho1 = fam.rho1;
  rep.f_rho2 = fam.rho2;
  rep.f_alpha = fam.alpha;
  rep.f_beta = fam.beta;
  rep.f_matches = fam.matches_expected;
  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream out;
  const std::size_t n = rep.dim;
  out << "dim: " << n << "\n";
  out << "signature: (" << rep.signature.first << "," << rep.signature.second << ")\n";
  out << "scalar curvature: " << rep.curvature.scalar.str() << " (~"
      << approx(rep.curvature.scalar) << ")\n";
  print_matrix(out, "ricci", rep.curvature.ricci);
  print_matrix(out, "one-dim curvature A", rep.curvature.A);
  print_grid3(out, "gamma", rep.curvature.gamma, n);
  print_grid3(out, "schouten-weyl", rep.curvature.sw, n);
  print_grid3(out, "div weyl", rep.curvature.divw, n);
  print_grid3(out, "nabla ricci", rep.curvature.nabla_ricci, n);
  std::size_t wnz = 0;
  for (const auto& v : rep.curvature.weyl)
    if (!v.is_zero()) ++wnz;
  out << "weyl: " << wnz << " nonzero components\n";
  out << "predicates: einstein=" << yn(rep.preds.einstein)
      << " conformally_flat=" << yn(rep.preds.conformally_flat)
      << " ricci_parallel=" << yn(rep.preds.ricci_parallel)
      << " sw_zero=" << yn(rep.preds.sw_zero) << "\n";
  if (rep.segre_error.empty())
    out << "segre: " << rep.segre << "\n";
  else
    out << "segre: indeterminate (" << rep.segre_error << ")\n";
  out << "identity SW = -(n-3) div W: " << (rep.sw_divw_ok ? "ok" : "VIOLATED") << "\n";
  out << "identity SW = 0 iff nabla r symmetric: " << (rep.eq1_ok ? "ok" : "VIOLATED") << "\n";
  if (rep.has_family) {
    out << "family eigendata: rho1 = " << rep.f_rho1.str() << ", rho2 = " << rep.f_rho2.str()
        << ", alpha = " << rep.f_alpha.str() << ", beta = " << rep.f_beta.str() << "\n";
    out << "family matches expected form: " << yn(rep.f_matches) << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", rep.elapsed_ms);
  out << "elapsed: " << buf << " ms\n";
  return out.str();
}

std::string render_json(const AnalysisReport& rep) {
  const std::size_t n = rep.dim;
  json j;
  j["schema"] = "swcurv-report-v1";
  j["dim"] = n;
  j["signature"] = {rep.signature.first, rep.signature.second};
  j["scalar"] = value_json(rep.curvature.scalar);
  j["ricci"] = matrix_json(rep.curvature.ricci);
  j["one_dim_curvature"] = matrix_json(rep.curvature.A);
  j["gamma"] = grid3_json(rep.curvature.gamma, n);
  j["riemann"] = grid4_json(rep.curvature.riemann, n);
  j["weyl"] = grid4_json(rep.curvature.weyl, n);
  j["schouten_weyl"] = grid3_json(rep.curvature.sw, n);
  j["div_weyl"] = grid3_json(rep.curvature.divw, n);
  j["nabla_ricci"] = grid3_json(rep.curvature.nabla_ricci, n);
  j["predicates"] = {{"einstein", rep.preds.einstein},
                     {"conformally_flat", rep.preds.conformally_flat},
                     {"ricci_parallel", rep.preds.ricci_parallel},
                     {"sw_zero", rep.preds.sw_zero}};
  if (rep.segre_error.empty())
    j["segre"] = rep.segre;
  else
    j["segre_indeterminate"] = rep.segre_error;
  j["identities"] = {{"sw_divw", rep.sw_divw_ok}, {"eq1", rep.eq1_ok}};
  if (rep.has_family) {
    j["family"] = {{"rho1", value_json(rep.f_rho1)},
                   {"rho2", value_json(rep.f_rho2)},
                   {"alpha", value_json(rep.f_alpha)},
                   {"beta", value_json(rep.f_beta)},
                   {"matches_expected", rep.f_matches}};
  }
  return j.dump(2) + "\n";
}

}  // namespace swcurv
