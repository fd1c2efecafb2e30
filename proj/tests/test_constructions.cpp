#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leala/constructions.hpp"
#include "leala/semidefinite.hpp"

#include <set>

using namespace leala;

namespace {

Scalar q(long long n, long long d = 1) {
  return Scalar(Rational(Int(n)) / Rational(Int(d)));
}

void expect_clean(const GradedAlgebra& a) {
  CAPTURE(a.window().to_string());
  CHECK(check_grading(a).passed());
  CHECK(check_jacobi(a).passed());
  CHECK(check_invariance(a).passed());
}

RadicalReport radical_of(const GradedAlgebra& a) {
  auto adm = check_admissible(a);
  REQUIRE(adm.report.passed());
  auto d = build_root_datum(a, adm);
  return radical_and_nullity(build_lattice(d));
}

} // namespace

TEST_CASE("split simple algebras") {
  auto a2 = build_split_simple({Series::A, 2});
  CHECK(a2.basis().size() == 8);
  expect_clean(a2);
  auto adm = check_admissible(a2);
  REQUIRE(adm.report.passed());
  auto d = build_root_datum(a2, adm);
  CHECK(d.anisotropic.size() == 6);
  CHECK(d.isotropic.size() == 1); // just 0
  CHECK(radical_of(a2).nullity == 0);

  auto c2 = build_split_simple({Series::C, 2});
  CHECK(c2.basis().size() == 10);
  expect_clean(c2);
  auto cadm = check_admissible(c2);
  REQUIRE(cadm.report.passed());
  auto cd = build_root_datum(c2, cadm);
  CHECK(cd.anisotropic.size() == 8);
  std::set<std::string> lengths;
  for (const auto& r : cd.anisotropic)
    lengths.insert(cd.induced(r, r).to_string());
  CHECK(lengths.size() == 2);

  auto b1 = build_split_simple({Series::B, 1});
  CHECK(b1.basis().size() == 3);
  expect_clean(b1);
  auto badm = check_admissible(b1);
  REQUIRE(badm.report.passed());
  CHECK(build_root_datum(b1, badm).anisotropic.size() == 2);

  auto b2 = build_split_simple({Series::B, 2});
  CHECK(b2.basis().size() == 10);
  expect_clean(b2);
  CHECK(check_admissible(b2).report.passed());

  auto d2 = build_split_simple({Series::D, 2});
  CHECK(d2.basis().size() == 6);
  expect_clean(d2);

  CHECK_THROWS_AS(build_split_simple({Series::D, 1}), AlgebraError);
  CHECK_THROWS_AS(build_split_simple({Series::A, 0}), AlgebraError);
}

TEST_CASE("loop extension of sl2 over Z") {
  GroupDatum lam{1, {q(1)}, 2};
  auto l = build_loop_eala({Series::A, 1}, lam);
  CHECK(l.basis().size() == 3 * 5 + 2);
  expect_clean(l);
  auto adm = check_admissible(l);
  REQUIRE(adm.report.passed());
  auto d = build_root_datum(l, adm);
  CHECK(check_pairing_identity(l, adm).passed());
  // R^0 = {delta_lambda}, R^x = {alpha + delta_lambda}
  CHECK(d.isotropic.size() == 5);
  CHECK(d.anisotropic.size() == 10);
  auto rad = radical_and_nullity(build_lattice(d));
  CHECK(rad.nullity == 1);
  CHECK(rad.psd.psd);
  CHECK(null_rank(d, build_lattice(d)).rank == 1);
}

TEST_CASE("loop extension with two independent degrees") {
  GroupDatum lam{2, {q(1), Scalar::t()}, 1};
  auto l = build_loop_eala({Series::A, 1}, lam);
  CHECK(l.field() == FieldKind::Qt);
  CHECK(l.basis().size() == 3 * 9 + 2);
  expect_clean(l);
  auto adm = check_admissible(l);
  REQUIRE(adm.report.passed());
  auto d = build_root_datum(l, adm);
  auto lat = build_lattice(d);
  CHECK(radical_and_nullity(lat).nullity == 2);
  CHECK(null_rank(d, lat).rank == 2);
}

TEST_CASE("dependent degree map breaks self-centralization") {
  GroupDatum lam{2, {q(1), q(1)}, 1};
  CHECK_THROWS_AS(build_loop_eala({Series::A, 1}, lam), AlgebraError);
  auto l = build_loop_eala({Series::A, 1}, lam, true);
  expect_clean(l); // still a Lie algebra with an invariant form
  auto adm = check_admissible(l);
  CHECK(adm.report.failed());
  CHECK(!adm.report.witnesses.empty());
}

TEST_CASE("window 0 slice is gated") {
  GroupDatum lam{1, {q(1)}, 0};
  CHECK_THROWS_AS(build_loop_eala({Series::A, 1}, lam), AlgebraError);
  auto l = build_loop_eala({Series::A, 1}, lam, false, true);
  CHECK(l.basis().size() == 5);
  expect_clean(l);
}

TEST_CASE("heisenberg null systems") {
  GroupDatum lam{1, {q(1)}, 1};
  auto n = build_heisenberg_null(lam, {{0}, {1}, {-1}}, {});
  CHECK(n.basis().size() == 4);
  expect_clean(n);
  auto adm = check_admissible(n);
  REQUIRE(adm.report.passed());
  auto d = build_root_datum(n, adm);
  CHECK(d.anisotropic.empty());
  CHECK(d.isotropic.size() == 3);
  // the derived algebra is the 3-dim Heisenberg algebra
  auto br = n.bracket("x@1#1", "x@-1#1");
  REQUIRE(br.has_value());
  CHECK(*br == Vector{{"c", q(1)}});
  // zero Gram on the root span
  auto lat = build_lattice(d);
  for (const auto& row : lat.gram)
    for (const auto& v : row) CHECK(v == Rational(0));
  CHECK(certify_psd(lat.gram).psd);

  auto trivial = build_heisenberg_null(lam, {{0}}, {});
  CHECK(trivial.basis().size() == 2);
  expect_clean(trivial);

  std::map<std::vector<long long>, std::size_t> two;
  two[{1}] = two[{-1}] = two[{2}] = two[{-2}] = 2;
  auto big = build_heisenberg_null(lam, {{0}, {1}, {-1}, {2}, {-2}}, two);
  CHECK(big.basis().size() == 10);
  expect_clean(big);
  CHECK(radical_of(big).nullity == 1);

  CHECK_THROWS_AS(build_heisenberg_null(lam, {{0}, {1}}, {}), AlgebraError);
  std::map<std::vector<long long>, std::size_t> skew;
  skew[{1}] = 2;
  skew[{-1}] = 1;
  CHECK_THROWS_AS(build_heisenberg_null(lam, {{0}, {1}, {-1}}, skew),
                  AlgebraError);
}

TEST_CASE("witt-dual null system") {
  for (auto coc : {WittCocycle::trivial, WittCocycle::moody_rao}) {
    auto w = build_witt_null(2, 2, coc);
    // 25 degrees: degree 0 has 2+2 symbols, others 1+1
    CHECK(w.basis().size() == 4 + 24 * 2);
    expect_clean(w);
    auto adm = check_admissible(w);
    REQUIRE(adm.report.passed());
    auto d = build_root_datum(w, adm);
    CHECK(d.anisotropic.empty());
    CHECK(check_pairing_identity(w, adm).passed());
    auto lat = build_lattice(d);
    for (const auto& row : lat.gram)
      for (const auto& v : row) CHECK(v == Rational(0));
    CHECK(certify_psd(lat.gram).psd);

    // [N_a, N_{-a}] = F c_a with c_a = sum a_i y@0#i
    auto br = w.bracket("w@1,0#2", "y@-1,0#2");
    REQUIRE(br.has_value());
    CHECK(*br == Vector{{"y@0,0#1", q(1)}});
    auto ww = w.bracket("w@1,0#2", "w@-1,0#2");
    REQUIRE(ww.has_value());
    CHECK(ww->empty());
    // dim W_a / W'_a = 1: one w-symbol per nonzero degree when n = 2
    std::size_t at_degree = 0;
    for (const auto& s : w.basis())
      if (s.grade == GradeLabel({1, 1}) && s.id[0] == 'w') ++at_degree;
    CHECK(at_degree == 1);
  }
  CHECK_THROWS_AS(build_witt_null(1, 2, WittCocycle::trivial), AlgebraError);
}

TEST_CASE("nullity zero ladders") {
  DiagonalPattern counting;
  counting.slope = q(1); // diag(1, 2, 3, ...)
  auto tw = build_nullity_zero(Series::A, {2, 3}, {counting}, 0, q(1),
                               ScalarMatrix{{q(0)}});
  REQUIRE(tw.levels.size() == 2);
  for (const auto& lv : tw.levels) {
    expect_clean(lv);
    auto adm = check_admissible(lv);
    REQUIRE(adm.report.passed());
    CHECK(radical_of(lv).nullity == 0);
    // B(d, d) = psi entry, not the trace pairing
    CHECK(lv.form("der_1", "der_1") == q(0));
  }
  CHECK(tw.levels[0].basis().size() == 8 + 1);
  CHECK(tw.levels[1].basis().size() == 15 + 1);

  DiagonalPattern mirrored;
  mirrored.intercept = q(1); // diag(1,...,1,-1,...,-1,0)
  auto bt = build_nullity_zero(Series::B, {2, 3}, {mirrored}, 0, q(1),
                               ScalarMatrix{{q(0)}});
  for (const auto& lv : bt.levels) {
    expect_clean(lv);
    CHECK(check_admissible(lv).report.passed());
    CHECK(radical_of(lv).nullity == 0);
  }

  // central directions are fine while they avoid the radical of psi
  ScalarMatrix hyp{{q(0), q(1)}, {q(1), q(0)}};
  auto zt = build_nullity_zero(Series::A, {2}, {counting}, 1, q(1), hyp);
  expect_clean(zt.levels[0]);
  CHECK(check_admissible(zt.levels[0]).report.passed());

  DiagonalPattern flat; // slope 0: almost scalar
  flat.intercept = q(5);
  CHECK_THROWS_AS(build_nullity_zero(Series::A, {2}, {flat}, 0, q(1),
                                     ScalarMatrix{{q(0)}}),
                  AlgebraError);
  ScalarMatrix sing{{q(0), q(0)}, {q(0), q(0)}};
  CHECK_THROWS_AS(build_nullity_zero(Series::A, {2}, {counting}, 1, q(1), sing),
                  AlgebraError);
  CHECK_THROWS_AS(build_nullity_zero(Series::A, {2}, {counting}, 0, q(0),
                                     ScalarMatrix{{q(0)}}),
                  AlgebraError);
}

TEST_CASE("glued loop plus null directions") {
  auto l = build_indecomposable_not_tame(2, 1);
  expect_clean(l);
  auto adm = check_admissible(l);
  REQUIRE(adm.report.passed());
  CHECK(l.has_symbol("n@1#1"));
  auto br = l.bracket("n@1#1", "n@-1#1");
  REQUIRE(br.has_value());
  CHECK(*br == Vector{{"c", q(1)}});
  // the null directions centralize the matrix part
  auto mixed = l.bracket("e_1_2@0", "n@1#1");
  REQUIRE(mixed.has_value());
  CHECK(mixed->empty());

  auto plain = build_indecomposable_not_tame(2, 0);
  CHECK(plain.basis().size() == 3 * 5 + 2);
  CHECK_THROWS_AS(build_indecomposable_not_tame(1, 2), AlgebraError);
}
