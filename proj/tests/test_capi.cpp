#include <doctest.h>

#include <cstring>
#include <string>

#include "swcurv.h"

namespace {

const char* kFamily =
    "dim = 4\n"
    "field_sqrt = 3\n"
    "metric = diag(1, 1, 1, -1)\n"
    "C 2 3 3 = -sqrt(3)\n"
    "C 2 3 4 = 1\n"
    "C 2 4 3 = 1\n"
    "C 2 4 4 = sqrt(3)\n"
    "C 3 4 2 = 2\n";

struct StringOut {
  char* s = nullptr;
  ~StringOut() { swcurv_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("document parse, render, free") {
  swcurv_doc* doc = nullptr;
  REQUIRE(swcurv_doc_parse(kFamily, &doc) == SWCURV_OK);
  StringOut rendered;
  REQUIRE(swcurv_doc_render(doc, &rendered.s) == SWCURV_OK);
  CHECK(rendered.str().find("C 2 3 3 = -sqrt(3)") != std::string::npos);

  // round-trip through the rendered form
  swcurv_doc* doc2 = nullptr;
  REQUIRE(swcurv_doc_parse(rendered.s, &doc2) == SWCURV_OK);
  StringOut rendered2;
  REQUIRE(swcurv_doc_render(doc2, &rendered2.s) == SWCURV_OK);
  CHECK(rendered.str() == rendered2.str());
  swcurv_doc_free(doc2);
  swcurv_doc_free(doc);
}

TEST_CASE("analysis of the family document") {
  swcurv_doc* doc = nullptr;
  REQUIRE(swcurv_doc_parse(kFamily, &doc) == SWCURV_OK);
  swcurv_analysis* an = nullptr;
  REQUIRE(swcurv_analyze(doc, 1e-9, &an) == SWCURV_OK);

  StringOut segre;
  REQUIRE(swcurv_analysis_segre(an, &segre.s) == SWCURV_OK);
  CHECK(segre.str() == "{1111~}");

  CHECK(swcurv_analysis_predicate(an, "einstein") == 0);
  CHECK(swcurv_analysis_predicate(an, "conformally_flat") == 0);
  CHECK(swcurv_analysis_predicate(an, "ricci_parallel") == 0);
  CHECK(swcurv_analysis_predicate(an, "sw_zero") == 1);
  CHECK(swcurv_analysis_predicate(an, "flavor") == -1);
  CHECK(swcurv_analysis_identities_ok(an) == 1);

  StringOut text, json;
  REQUIRE(swcurv_analysis_render(an, 0, &text.s) == SWCURV_OK);
  REQUIRE(swcurv_analysis_render(an, 1, &json.s) == SWCURV_OK);
  CHECK(text.str().find("{1111~}") != std::string::npos);
  CHECK(json.str().find("swcurv-report-v1") != std::string::npos);

  swcurv_analysis_free(an);
  swcurv_doc_free(doc);
}

TEST_CASE("family analyze and its failure statuses") {
  swcurv_analysis* an = nullptr;
  REQUIRE(swcurv_family_analyze("1/2", 1, 1, 1, 0, 1e-9, &an) == SWCURV_OK);
  StringOut segre;
  REQUIRE(swcurv_analysis_segre(an, &segre.s) == SWCURV_OK);
  CHECK(segre.str() == "{1111~}");
  swcurv_analysis_free(an);

  swcurv_analysis* bad = nullptr;
  CHECK(swcurv_family_analyze("0", 1, 1, 1, 0, 1e-9, &bad) == SWCURV_BAD_PARAM);
  CHECK(bad == nullptr);
  CHECK(std::strlen(swcurv_last_error()) > 0);
  CHECK(swcurv_family_analyze("1", 2, 1, 1, 0, 1e-9, &bad) == SWCURV_BAD_PARAM);
  CHECK(swcurv_family_analyze("oops", 1, 1, 1, 0, 1e-9, &bad) == SWCURV_PARSE_ERROR);
}

TEST_CASE("error statuses map the underlying failures") {
  swcurv_doc* doc = nullptr;
  CHECK(swcurv_doc_parse("dim = 4\nmetric = diag(1,1)\n", &doc) == SWCURV_PARSE_ERROR);
  CHECK(doc == nullptr);
  CHECK(std::strlen(swcurv_last_error()) > 0);

  // Jacobi violation
  REQUIRE(swcurv_doc_parse("dim = 4\nmetric = diag(1,1,1,1)\nC 1 2 3 = 1\nC 1 3 1 = 1\n",
                           &doc) == SWCURV_OK);
  swcurv_analysis* an = nullptr;
  CHECK(swcurv_analyze(doc, 1e-9, &an) == SWCURV_JACOBI_ERROR);
  CHECK(an == nullptr);
  swcurv_doc_free(doc);
  doc = nullptr;

  // degenerate metric caught at analysis time
  REQUIRE(swcurv_doc_parse("dim = 4\nmetric = diag(1,1,1,0)\n", &doc) == SWCURV_OK);
  CHECK(swcurv_analyze(doc, 1e-9, &an) == SWCURV_DEGENERATE_METRIC);
  swcurv_doc_free(doc);
}

TEST_CASE("constraint system generation and solving") {
  StringOut dump;
  REQUIRE(swcurv_gen_system("{(11)(11)}", nullptr, &dump.s) == SWCURV_OK);
  CHECK(dump.str().find("# system for {(11)(11)}") != std::string::npos);
  CHECK(dump.str().find("sw:") != std::string::npos);

  StringOut unsupported;
  CHECK(swcurv_gen_system("{4}", nullptr, &unsupported.s) == SWCURV_UNSUPPORTED_TYPE);
  StringOut garbage;
  CHECK(swcurv_gen_system("{five}", nullptr, &garbage.s) == SWCURV_PARSE_ERROR);

  StringOut solved;
  int eps[4] = {1, 1, 1, 1};
  REQUIRE(swcurv_solve_system("{(11)(11)}", eps, 0, 100000, &solved.s) == SWCURV_OK);
  CHECK(solved.str().find("rank: 16") != std::string::npos);
  CHECK(solved.str().find("C_1_2^3") != std::string::npos);
}

TEST_CASE("identity check entry point") {
  swcurv_doc* doc = nullptr;
  REQUIRE(swcurv_doc_parse(kFamily, &doc) == SWCURV_OK);
  int pass = 0;
  StringOut summary;
  REQUIRE(swcurv_check_identities(doc, 1e-9, &pass, &summary.s) == SWCURV_OK);
  CHECK(pass == 1);
  CHECK(!summary.str().empty());
  swcurv_doc_free(doc);
}
