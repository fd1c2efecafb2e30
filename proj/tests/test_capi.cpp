#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leala/leala.h"

#include <string>

namespace {

struct Handle {
  leala_algebra* a = nullptr;
  ~Handle() { leala_algebra_free(a); }
};

struct Text {
  char* s = nullptr;
  ~Text() { leala_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

} // namespace

TEST_CASE("build, summarize and check a split simple algebra") {
  Handle h;
  REQUIRE(leala_build(R"({"builder":"split","type":"A2"})", &h.a) == LEALA_OK);
  Text summary;
  REQUIRE(leala_summary(h.a, &summary.s) == LEALA_OK);
  CHECK(summary.str().find("\"dimension\": 8") != std::string::npos);
  CHECK(summary.str().find("\"anisotropic\": 6") != std::string::npos);

  Text report;
  int fails = -1, inconclusive = -1;
  REQUIRE(leala_run_checks(h.a, "axioms", &report.s, &fails, &inconclusive) ==
          LEALA_OK);
  CHECK(fails == 0);
  CHECK(inconclusive == 0);
  CHECK(report.str().find("\"check\": \"jacobi\"") != std::string::npos);
}

TEST_CASE("full suite on the loop algebra") {
  Handle h;
  REQUIRE(leala_build(
              R"({"builder":"loop","type":"A1","phi":["1"],"window":2})",
              &h.a) == LEALA_OK);
  Text report;
  int fails = -1, inconclusive = -1;
  REQUIRE(leala_run_checks(h.a, "all", &report.s, &fails, &inconclusive) ==
          LEALA_OK);
  CHECK(fails == 0);
  auto text = report.str();
  CHECK(text.find("\"nullity\": 1") != std::string::npos);
  CHECK(text.find("\"tame\": true") != std::string::npos);
  CHECK(text.find("\"status\": \"indecomposable\"") != std::string::npos);
  CHECK(text.find("\"labels\": [\n      \"A1\"\n    ]") != std::string::npos);

  // identical inputs give byte-identical reports
  Text again;
  int f2, i2;
  REQUIRE(leala_run_checks(h.a, "all", &again.s, &f2, &i2) == LEALA_OK);
  CHECK(again.str() == text);
}

TEST_CASE("interchange round-trip through the C surface") {
  Handle h;
  REQUIRE(leala_build(
              R"({"builder":"heisenberg","phi":["1"],"window":1,"S":[[0],[1],[-1]]})",
              &h.a) == LEALA_OK);
  Text saved;
  REQUIRE(leala_save_json(h.a, &saved.s) == LEALA_OK);
  Handle h2;
  REQUIRE(leala_load_json(saved.s, &h2.a) == LEALA_OK);
  Text saved2;
  REQUIRE(leala_save_json(h2.a, &saved2.s) == LEALA_OK);
  CHECK(saved.str() == saved2.str());
}

TEST_CASE("builder refusals and bad input map to status codes") {
  leala_algebra* a = nullptr;
  // dependent phi values are a builder refusal
  CHECK(leala_build(
            R"({"builder":"loop","type":"A1","phi":["1","1"],"window":1})",
            &a) == LEALA_ERR_REFUSED);
  CHECK(std::string(leala_last_error()).size() > 0);

  CHECK(leala_build("{nope", &a) == LEALA_ERR_PARSE);
  CHECK(leala_build(R"({"builder":"fancy"})", &a) == LEALA_ERR_INVALID);
  CHECK(leala_load_json("garbage", &a) == LEALA_ERR_PARSE);
  CHECK(leala_build(nullptr, &a) == LEALA_ERR_INVALID);

  Handle h;
  REQUIRE(leala_build(R"({"builder":"split","type":"A1"})", &h.a) == LEALA_OK);
  char* out = nullptr;
  int f, i;
  CHECK(leala_run_checks(h.a, "bogus-suite", &out, &f, &i) ==
        LEALA_ERR_INVALID);
}

TEST_CASE("corrupted structure constants fail with a witness") {
  Handle h;
  REQUIRE(leala_build(R"({"builder":"split","type":"A2"})", &h.a) == LEALA_OK);
  Text saved;
  REQUIRE(leala_save_json(h.a, &saved.s) == LEALA_OK);
  std::string text = saved.str();
  auto pos = text.find("\"coeff\": \"2\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "\"coeff\": \"3\"");
  Handle bad;
  REQUIRE(leala_load_json(text.c_str(), &bad.a) == LEALA_OK);
  Text report;
  int fails = 0, inconclusive = 0;
  REQUIRE(leala_run_checks(bad.a, "axioms", &report.s, &fails,
                           &inconclusive) == LEALA_OK);
  CHECK(fails > 0);
  CHECK(report.str().find("\"witnesses\"") != std::string::npos);
}
