#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leala/algebra.hpp"

using namespace leala;

namespace {

Scalar q(long long n, long long d = 1) {
  return Scalar(Rational(Int(n)) / Rational(Int(d)));
}

// sl2 with basis e, h, f, Cartan {h}, trace form of the defining
// representation: B(e,f)=1, B(h,h)=2.
GradedAlgebra make_sl2() {
  AlgebraBuilder b;
  b.add_symbol("e", GradeLabel{}, {q(2)});
  b.add_symbol("f", GradeLabel{}, {q(-2)});
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.set_cartan({"h"});
  b.set_bracket("e", "f", {{"h", q(1)}});
  b.set_bracket("h", "e", {{"e", q(2)}});
  b.set_bracket("h", "f", {{"f", q(-2)}});
  b.set_form("e", "f", q(1));
  b.set_form("h", "h", q(2));
  return b.build();
}

} // namespace

TEST_CASE("bracket is antisymmetric and bilinear") {
  auto a = make_sl2();
  auto ef = a.bracket("e", "f");
  auto fe = a.bracket("f", "e");
  REQUIRE(ef);
  REQUIRE(fe);
  CHECK(*ef == Vector{{"h", q(1)}});
  CHECK(*fe == Vector{{"h", q(-1)}});
  CHECK(a.bracket("e", "e")->empty());

  Vector x{{"e", q(2)}, {"h", q(1)}};
  Vector y{{"f", q(3)}};
  auto xy = a.bracket(x, y);
  REQUIRE(xy);
  // [2e + h, 3f] = 6h - 6f
  CHECK(*xy == Vector{{"h", q(6)}, {"f", q(-6)}});
}

TEST_CASE("form is symmetric, bilinear, total") {
  auto a = make_sl2();
  CHECK(a.form("e", "f") == q(1));
  CHECK(a.form("f", "e") == q(1));
  CHECK(a.form("e", "e").is_zero());
  CHECK(a.form(Vector{{"e", q(2)}}, Vector{{"f", q(5)}}) == q(10));
}

TEST_CASE("jacobi and invariance pass on sl2") {
  auto a = make_sl2();
  CHECK(check_jacobi(a).passed());
  CHECK(check_invariance(a).passed());
  CHECK(check_grading(a).passed());
}

TEST_CASE("flipped sign is caught by jacobi") {
  AlgebraBuilder b;
  b.add_symbol("e", GradeLabel{}, {q(2)});
  b.add_symbol("f", GradeLabel{}, {q(-2)});
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.set_cartan({"h"});
  b.set_bracket("e", "f", {{"h", q(1)}});
  b.set_bracket("h", "e", {{"e", q(2)}});
  b.set_bracket("h", "f", {{"f", q(2)}}); // corrupted: should be -2f
  b.set_form("e", "f", q(1));
  b.set_form("h", "h", q(2));
  auto a = b.build();
  auto rep = check_jacobi(a);
  CHECK(rep.failed());
  CHECK(!rep.witnesses.empty());
}

TEST_CASE("corrupted Gram entry is caught by invariance") {
  AlgebraBuilder b;
  b.add_symbol("e", GradeLabel{}, {q(2)});
  b.add_symbol("f", GradeLabel{}, {q(-2)});
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.set_cartan({"h"});
  b.set_bracket("e", "f", {{"h", q(1)}});
  b.set_bracket("h", "e", {{"e", q(2)}});
  b.set_bracket("h", "f", {{"f", q(-2)}});
  b.set_form("e", "f", q(1));
  b.set_form("h", "h", q(3)); // corrupted: trace form needs 2
  auto a = b.build();
  auto rep = check_invariance(a);
  CHECK(rep.failed());
}

TEST_CASE("admissibility on sl2") {
  auto a = make_sl2();
  auto adm = check_admissible(a);
  CHECK(adm.report.passed());
  // t_alpha solves B(t, h) = alpha(h) = 2, so t = h since B(h,h) = 2.
  Weight alpha{q(2)};
  REQUIRE(adm.representatives.count(alpha));
  CHECK(adm.representatives.at(alpha) == Vector{{"h", q(1)}});
  CHECK(check_pairing_identity(a, adm).passed());
}

TEST_CASE("A1 failure: a zero-weight symbol outside H") {
  AlgebraBuilder b;
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.add_symbol("z", GradeLabel{}, {q(0)}); // central, not declared in H
  b.set_cartan({"h"});
  b.set_form("h", "h", q(1));
  b.set_form("z", "z", q(1));
  auto a = b.build();
  auto adm = check_admissible(a);
  CHECK(adm.report.failed());
  bool found = false;
  for (const auto& w : adm.report.witnesses)
    if (w.find("(A1)") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("A2 failure: degenerate H Gram") {
  AlgebraBuilder b;
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.set_cartan({"h"});
  auto a = b.build();
  auto adm = check_admissible(a);
  CHECK(adm.report.failed());
}

TEST_CASE("abelian H with nondegenerate form passes, R = {0}") {
  AlgebraBuilder b;
  b.add_symbol("h1", GradeLabel{}, {q(0), q(0)});
  b.add_symbol("h2", GradeLabel{}, {q(0), q(0)});
  b.set_cartan({"h1", "h2"});
  b.set_form("h1", "h2", q(1));
  auto a = b.build();
  auto adm = check_admissible(a);
  CHECK(adm.report.passed());
  auto decomp = root_decomposition(a);
  CHECK(decomp.size() == 1);
}

TEST_CASE("window semantics: absent entries out of window are unknown") {
  AlgebraBuilder b;
  Window w;
  w.bounds = {1};
  b.set_window(w);
  b.add_symbol("h", GradeLabel{{0}}, {q(0)});
  b.add_symbol("x1", GradeLabel{{1}}, {q(1)});
  b.add_symbol("w1", GradeLabel{{1}}, {q(1)});
  b.add_symbol("xm1", GradeLabel{{-1}}, {q(-1)});
  b.set_cartan({"h"});
  b.set_bracket("h", "x1", {{"x1", q(1)}});
  b.set_bracket("h", "w1", {{"w1", q(1)}});
  b.set_bracket("h", "xm1", {{"xm1", q(-1)}});
  b.set_bracket("x1", "xm1", {{"h", q(1)}});
  b.set_form("h", "h", q(1));
  b.set_form("x1", "xm1", q(1));
  auto a = b.build();
  // x1 with w1 has grade 2, outside the bound: silent, not zero.
  CHECK(!a.bracket("x1", "w1").has_value());
  CHECK(a.bracket("x1", "x1").has_value()); // [x,x] = 0 structurally
  CHECK(a.bracket("h", "x1").has_value());
  auto rep = check_jacobi(a);
  CHECK(rep.passed());
  CHECK(!rep.notes.empty()); // some triples escaped
}

TEST_CASE("root decomposition groups by weight and rejects non-eigenbases") {
  auto a = make_sl2();
  auto decomp = root_decomposition(a);
  CHECK(decomp.size() == 3);
  CHECK(decomp.at(Weight{q(0)}) == std::vector<std::string>{"h"});
  CHECK(decomp.at(Weight{q(2)}) == std::vector<std::string>{"e"});

  AlgebraBuilder b;
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.add_symbol("x", GradeLabel{}, {q(1)});
  b.set_cartan({"h"});
  b.set_bracket("h", "x", {{"x", q(2)}}); // declared weight says 1
  b.set_form("h", "h", q(1));
  auto bad = b.build();
  CHECK_THROWS_AS(root_decomposition(bad), AlgebraError);
}

TEST_CASE("builder validation") {
  AlgebraBuilder b;
  b.add_symbol("x", GradeLabel{}, {});
  CHECK_THROWS_AS(b.add_symbol("x", GradeLabel{}, {}), AlgebraError);
  CHECK_THROWS_AS(b.set_bracket("x", "x", {{"x", q(1)}}), AlgebraError);
  AlgebraBuilder c;
  c.add_symbol("y", GradeLabel{}, {});
  c.set_cartan({"y", "missing"});
  CHECK_THROWS_AS(c.build(), AlgebraError);
  AlgebraBuilder d;
  d.add_symbol("z", GradeLabel{}, {});
  d.set_cartan({"z"});
  CHECK_THROWS_AS(d.build(), AlgebraError); // weight dim 0 vs Cartan size 1
}

TEST_CASE("graded orthogonality violation is caught") {
  AlgebraBuilder b;
  b.add_symbol("e", GradeLabel{}, {q(2)});
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.set_cartan({"h"});
  b.set_bracket("h", "e", {{"e", q(2)}});
  b.set_form("h", "h", q(2));
  b.set_form("e", "h", q(1)); // weights 2 + 0 != 0
  auto a = b.build();
  CHECK(check_grading(a).failed());
}
