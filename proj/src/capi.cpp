#include "swcurv.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "classification.hpp"
#include "constraints.hpp"
#include "errors.hpp"
#include "input.hpp"
#include "report.hpp"
#include "segre.hpp"

using namespace swcurv;

struct swcurv_doc {
  InputDocument doc;
};

struct swcurv_analysis {
  AnalysisReport rep;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
swcurv_status guarded(F&& f) {
  try {
    f();
    g_error.clear();
    return SWCURV_OK;
  } catch (const ParseError& e) {
    g_error = e.what();
    return SWCURV_PARSE_ERROR;
  } catch (const JacobiError& e) {
    g_error = e.what();
    return SWCURV_JACOBI_ERROR;
  } catch (const DegenerateMetricError& e) {
    g_error = e.what();
    return SWCURV_DEGENERATE_METRIC;
  } catch (const BadParamError& e) {
    g_error = e.what();
    return SWCURV_BAD_PARAM;
  } catch (const UnsupportedTypeError& e) {
    g_error = e.what();
    return SWCURV_UNSUPPORTED_TYPE;
  } catch (const BudgetExhaustedError& e) {
    g_error = e.what();
    return SWCURV_BUDGET_EXHAUSTED;
  } catch (const IndeterminateError& e) {
    g_error = e.what();
    return SWCURV_INDETERMINATE;
  } catch (const std::exception& e) {
    g_error = e.what();
    return SWCURV_ERROR;
  }
}

}  // namespace

extern "C" {

const char* swcurv_last_error(void) { return g_error.c_str(); }

void swcurv_string_free(char* s) { std::free(s); }

swcurv_status swcurv_doc_parse(const char* text, swcurv_doc** out) {
  if (!text || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] { *out = new swcurv_doc{InputDocument::parse(text)}; });
}

swcurv_status swcurv_doc_render(const swcurv_doc* doc, char** out) {
  if (!doc || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] { *out = dup_string(doc->doc.render()); });
}

void swcurv_doc_free(swcurv_doc* doc) { delete doc; }

swcurv_status swcurv_analyze(const swcurv_doc* doc, double tolerance, swcurv_analysis** out) {
  if (!doc || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] {
    *out = new swcurv_analysis{
        analyze(doc->doc.algebra(), doc->doc.metric_obj(), tolerance)};
  });
}

swcurv_status swcurv_family_analyze(const char* a, int delta, int eps2, int eps3,
                                    int paper_literal_metric, double tolerance,
                                    swcurv_analysis** out) {
  if (!a || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] {
    FieldScalar av = parse_value(a);
    if (av.is_zero()) throw BadParamError("family parameter a must be nonzero");
    *out = new swcurv_analysis{
        analyze_family(av, delta, eps2, eps3, paper_literal_metric != 0, tolerance)};
  });
}

swcurv_status swcurv_analysis_render(const swcurv_analysis* an, int as_json, char** out) {
  if (!an || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded(
      [&] { *out = dup_string(as_json ? render_json(an->rep) : render_text(an->rep)); });
}

swcurv_status swcurv_analysis_segre(const swcurv_analysis* an, char** out) {
  if (!an || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  if (!an->rep.segre_error.empty()) {
    g_error = an->rep.segre_error;
    return SWCURV_INDETERMINATE;
  }
  *out = dup_string(an->rep.segre);
  return SWCURV_OK;
}

int swcurv_analysis_predicate(const swcurv_analysis* an, const char* name) {
  if (!an || !name) return -1;
  std::string n = name;
  if (n == "einstein") return an->rep.preds.einstein ? 1 : 0;
  if (n == "conformally_flat") return an->rep.preds.conformally_flat ? 1 : 0;
  if (n == "ricci_parallel") return an->rep.preds.ricci_parallel ? 1 : 0;
  if (n == "sw_zero") return an->rep.preds.sw_zero ? 1 : 0;
  return -1;
}

int swcurv_analysis_identities_ok(const swcurv_analysis* an) {
  if (!an) return 0;
  return (an->rep.sw_divw_ok && an->rep.eq1_ok) ? 1 : 0;
}

void swcurv_analysis_free(swcurv_analysis* an) { delete an; }

swcurv_status swcurv_gen_system(const char* segre, const int* eps, char** out) {
  if (!segre || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] {
    SegreType t = SegreType::parse(segre);
    std::array<int, 4> signs{1, 1, 1, 1};
    if (eps)
      for (int i = 0; i < 4; ++i) signs[static_cast<std::size_t>(i)] = eps[i];
    CanonicalPair pair = canonical_pair(t, signs, constraint_ring());
    *out = dup_string(assemble_system(pair).dump());
  });
}

swcurv_status swcurv_solve_system(const char* segre, const int* eps, int strategy,
                                  long budget, char** out) {
  if (!segre || !out) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  if (strategy != 0 && strategy != 1) {
    g_error = "strategy must be 0 (linear-then-gb) or 1 (gb-only)";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] {
    SegreType t = SegreType::parse(segre);
    std::array<int, 4> signs{1, 1, 1, 1};
    if (eps)
      for (int i = 0; i < 4; ++i) signs[static_cast<std::size_t>(i)] = eps[i];
    RingPtr ring = constraint_ring();
    CanonicalPair pair = canonical_pair(t, signs, ring);
    ConstraintSystem sys = assemble_system(pair);
    SolutionReport rep = solve_small(
        sys, strategy == 0 ? SolveStrategy::linear_then_gb : SolveStrategy::gb_only, budget);
    std::string s = "# solution report for " + pair.type.render() + "\n";
    if (rep.linear_ran) {
      s += "forced zero:";
      if (rep.linear.forced_zero.empty()) s += " (none)";
      for (int idx : rep.linear.forced_zero)
        s += " " + ring->vars[static_cast<std::size_t>(idx)];
      s += "\nrank: " + std::to_string(rep.linear.rank) + "\nrelations:\n";
      for (const auto& r : rep.linear.relations) s += "  " + r.str() + "\n";
    }
    if (rep.budget_exhausted) {
      s += "groebner: budget exhausted after " + std::to_string(budget) + " steps\n";
    } else {
      s += "groebner basis (" + std::to_string(rep.groebner.size()) + " elements):\n";
      for (const auto& g : rep.groebner) s += "  " + g.str() + "\n";
    }
    *out = dup_string(s);
  });
}

swcurv_status swcurv_check_identities(const swcurv_doc* doc, double tolerance, int* pass,
                                      char** summary) {
  if (!doc || !pass) {
    g_error = "null argument";
    return SWCURV_BAD_PARAM;
  }
  return guarded([&] {
    AnalysisReport rep = analyze(doc->doc.algebra(), doc->doc.metric_obj(), tolerance);
    *pass = (rep.sw_divw_ok && rep.eq1_ok) ? 1 : 0;
    if (summary) {
      std::string s;
      s += "SW = -(n-3) div W: ";
      s += rep.sw_divw_ok ? "ok" : "VIOLATED";
      s += "\nSW = 0 iff nabla r symmetric: ";
      s += rep.eq1_ok ? "ok" : "VIOLATED";
      s += "\n";
      *summary = dup_string(s);
    }
  });
}

}  // extern "C"
