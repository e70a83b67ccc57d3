#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swcurv.h"

namespace {

int exit_for(swcurv_status st) {
  int code = static_cast<int>(st);
  return code <= 6 ? code : 1;
}

int fail(swcurv_status st) {
  std::cerr << "error: " << swcurv_last_error() << "\n";
  return exit_for(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  swcurv_string_free(s);
  return out;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

struct DocGuard {
  swcurv_doc* doc = nullptr;
  ~DocGuard() { swcurv_doc_free(doc); }
};
struct AnalysisGuard {
  swcurv_analysis* an = nullptr;
  ~AnalysisGuard() { swcurv_analysis_free(an); }
};

int parse_doc(const std::string& path, DocGuard& g) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  swcurv_status st = swcurv_doc_parse(text.c_str(), &g.doc);
  if (st != SWCURV_OK) return fail(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature and Segre classification of left-invariant "
               "pseudo-Riemannian metrics on 4-dimensional Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  double tolerance = 1e-9;
  long gb_budget = 100000;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", tolerance, "Numeric eigenvalue tolerance");
  app.add_option("--gb-budget", gb_budget, "Groebner reduction step budget");

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "Analyze a metric Lie algebra file");
  analyze->add_option("file", analyze_file, "Input file")->required();

  std::string fam_a = "1", fam_variant = "sign-flipped";
  int fam_delta = 1, fam_eps2 = 1, fam_eps3 = 1;
  auto* family = app.add_subcommand("family", "Analyze the solution family");
  family->add_option("--a", fam_a, "Parameter a (nonzero rational)");
  family->add_option("--delta", fam_delta, "delta = +1 or -1");
  family->add_option("--eps2", fam_eps2, "eps2 = +1 or -1");
  family->add_option("--eps3", fam_eps3, "eps3 = +1 or -1");
  family->add_option("--metric-variant", fam_variant, "Metric 4th-slot sign")
      ->check(CLI::IsMember({"paper-literal", "sign-flipped"}));

  std::string gen_segre, gen_out;
  std::vector<int> gen_eps{1, 1, 1, 1};
  bool gen_solve = false;
  std::string gen_strategy = "linear-then-gb";
  auto* gen = app.add_subcommand("gen-system", "Dump a constraint system");
  gen->add_option("--segre", gen_segre, "Segre type, e.g. \"{(11)(11)}\"")->required();
  gen->add_option("--eps", gen_eps, "Four signs eps1..eps4")->expected(4);
  gen->add_option("-o,--output", gen_out, "Write to file instead of stdout");
  gen->add_flag("--solve", gen_solve, "Also reduce/solve the system");
  gen->add_option("--strategy", gen_strategy, "Solve strategy")
      ->check(CLI::IsMember({"linear-then-gb", "gb-only"}));

  std::string check_file;
  auto* check = app.add_subcommand("check-identities", "Verify tensor identities");
  check->add_option("file", check_file, "Input file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*analyze) {
    DocGuard doc;
    if (int rc = parse_doc(analyze_file, doc)) return rc;
    AnalysisGuard an;
    swcurv_status st = swcurv_analyze(doc.doc, tolerance, &an.an);
    if (st != SWCURV_OK) return fail(st);
    char* text = nullptr;
    st = swcurv_analysis_render(an.an, format == "json", &text);
    if (st != SWCURV_OK) return fail(st);
    std::cout << take(text);
    return 0;
  }

  if (*family) {
    AnalysisGuard an;
    swcurv_status st =
        swcurv_family_analyze(fam_a.c_str(), fam_delta, fam_eps2, fam_eps3,
                              fam_variant == "paper-literal", tolerance, &an.an);
    if (st != SWCURV_OK) return fail(st);
    char* text = nullptr;
    st = swcurv_analysis_render(an.an, format == "json", &text);
    if (st != SWCURV_OK) return fail(st);
    std::cout << take(text);
    return 0;
  }

  if (*gen) {
    char* text = nullptr;
    swcurv_status st = swcurv_gen_system(gen_segre.c_str(), gen_eps.data(), &text);
    if (st != SWCURV_OK) return fail(st);
    std::string out = take(text);
    if (gen_solve) {
      char* sol = nullptr;
      st = swcurv_solve_system(gen_segre.c_str(), gen_eps.data(),
                               gen_strategy == "gb-only" ? 1 : 0, gb_budget, &sol);
      if (st != SWCURV_OK) return fail(st);
      out += take(sol);
    }
    if (gen_out.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(gen_out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << gen_out << "\n";
        return 1;
      }
      f << out;
    }
    return 0;
  }

  if (*check) {
    DocGuard doc;
    if (int rc = parse_doc(check_file, doc)) return rc;
    int pass = 0;
    char* summary = nullptr;
    swcurv_status st = swcurv_check_identities(doc.doc, tolerance, &pass, &summary);
    if (st != SWCURV_OK) return fail(st);
    std::cout << take(summary);
    return pass ? 0 : 1;
  }

  return 1;
}
