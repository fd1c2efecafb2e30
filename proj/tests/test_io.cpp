#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leala/io.hpp"
#include "leala/constructions.hpp"

using namespace leala;

namespace {

Scalar q(long long n, long long d = 1) {
  return Scalar(Rational(Int(n)) / Rational(Int(d)));
}

} // namespace

TEST_CASE("algebra json round-trip is bit-exact") {
  auto a = build_loop_eala({Series::A, 1}, {1, {q(1)}, 2});
  auto text = algebra_to_json(a);
  auto b = algebra_from_json(text);
  CHECK(algebra_to_json(b) == text);
  CHECK(b.basis().size() == a.basis().size());
  CHECK(b.cartan() == a.cartan());
  CHECK(b.structure() == a.structure());
  CHECK(b.gram() == a.gram());
  CHECK(b.window() == a.window());
  CHECK(b.field() == a.field());

  // verdicts agree with the in-memory construction
  CHECK(check_grading(b).passed());
  CHECK(check_jacobi(b).passed());
  CHECK(check_admissible(b).report.passed());
}

TEST_CASE("rational function scalars survive the round-trip") {
  auto a = build_loop_eala({Series::A, 1}, {2, {q(1), Scalar::t()}, 1});
  auto text = algebra_to_json(a);
  CHECK(text.find("\"field\": \"Q(t)\"") != std::string::npos);
  auto b = algebra_from_json(text);
  CHECK(algebra_to_json(b) == text);
  CHECK(b.field() == FieldKind::Qt);
  CHECK(b.structure() == a.structure());
}

TEST_CASE("grade tags and window parameters are preserved") {
  GroupDatum lam{1, {q(1, 2)}, 1};
  auto a = build_heisenberg_null(lam, {{0}, {1}, {-1}}, {});
  auto b = algebra_from_json(algebra_to_json(a));
  for (const auto& sym : a.basis()) {
    const auto& other = b.symbol(sym.id);
    CHECK(other.grade.coords == sym.grade.coords);
    CHECK(other.grade.tag.has_value() == sym.grade.tag.has_value());
    if (sym.grade.tag) CHECK(*other.grade.tag == *sym.grade.tag);
    CHECK(other.weight == sym.weight);
  }
  CHECK(b.window().params == a.window().params);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(algebra_from_json("not json at all"), AlgebraError);
  CHECK_THROWS_AS(algebra_from_json("{\"format\": \"something else\"}"),
                  AlgebraError);
  auto a = build_split_simple({Series::A, 1});
  auto text = algebra_to_json(a);
  auto broken = text;
  auto pos = broken.find("\"2\"");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 3, "\"2//\"");
  CHECK_THROWS_AS(algebra_from_json(broken), AlgebraError);
}

TEST_CASE("report serialization") {
  CheckReport r;
  r.check_name = "demo";
  r.verdict = Verdict::fail;
  r.window = "none";
  r.witnesses = {"w1"};
  r.notes = {"n1"};
  auto text = report_to_json(r);
  CHECK(text.find("\"check\": \"demo\"") != std::string::npos);
  CHECK(text.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(text.find("\"w1\"") != std::string::npos);
  CHECK(report_to_json(r) == text); // deterministic
}

TEST_CASE("certificate and radical report serialization") {
  RationalMatrix g{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
  auto cert = certify_psd(g);
  auto text = psd_certificate_to_json(cert);
  CHECK(text.find("\"psd\": true") != std::string::npos);

  auto a = build_loop_eala({Series::A, 1}, {1, {q(1)}, 2});
  auto adm = check_admissible(a);
  REQUIRE(adm.report.passed());
  auto d = build_root_datum(a, adm);
  auto rad = radical_and_nullity(build_lattice(d));
  auto rtext = radical_report_to_json(rad);
  CHECK(rtext.find("\"nullity\": 1") != std::string::npos);
  CHECK(rtext.find("\"roots_bar\"") != std::string::npos);
  CHECK(radical_report_to_json(rad) == rtext);
}

TEST_CASE("gram csv export") {
  ScalarMatrix m{{q(2), q(-1, 2)}, {q(-1, 2), Scalar::t()}};
  CHECK(gram_csv(m) == "2,-1/2\n-1/2,(t)/(1)\n");
  RationalMatrix r{{Rational(1), Rational(0)}};
  CHECK(gram_csv(r) == "1,0\n");
}
