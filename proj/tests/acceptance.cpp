// End-to-end acceptance gate. Each criterion prints one pass/fail line;
// the exit status is the number of failing criteria. Everything is exact
// arithmetic on the factory examples, with independent oracles where the
// expected value is not pinned by construction.

#include "leala/structure.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace leala;

namespace {

Scalar q(long long n, long long d = 1) {
  return Scalar(Rational(Int(n)) / Rational(Int(d)));
}

struct Gate {
  bool ok = true;
  std::vector<std::string> why;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why.push_back(what);
    }
  }
};

RootDatum datum_of(const GradedAlgebra& a) {
  auto adm = check_admissible(a);
  if (adm.report.failed()) throw AlgebraError("admissibility failed");
  return build_root_datum(a, adm);
}

RootLattice lattice_of(const RootDatum& d) {
  return build_lattice(scale_form(d).datum);
}

// Brute-force PSD decision for symmetric rational matrices of size <= 4:
// positive semidefinite iff every principal minor is nonnegative.
bool psd_by_minors(const RationalMatrix& g) {
  std::size_t n = g.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    ScalarMatrix sub(idx.size(), std::vector<Scalar>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        sub[r][c] = Scalar(g[idx[r]][idx[c]]);
    if (Scalar::compare(determinant(sub), q(0)) < 0) return false;
  }
  return true;
}

Rational quad_form(const RationalMatrix& g, const std::vector<Rational>& w) {
  Rational out(0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out += w[i] * g[i][j] * w[j];
  return out;
}

// sl2 with one sign flipped in the bracket table.
GradedAlgebra flipped_sl2() {
  AlgebraBuilder b;
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.add_symbol("e", GradeLabel{}, {q(2)});
  b.add_symbol("f", GradeLabel{}, {q(-2)});
  b.set_cartan({"h"});
  b.set_bracket("e", "f", {{"h", q(1)}});
  b.set_bracket("h", "e", {{"e", q(2)}});
  b.set_bracket("h", "f", {{"f", q(2)}}); // flipped: should be -2f
  b.set_form("e", "f", q(1));
  b.set_form("h", "h", q(2));
  return b.build();
}

// sl2 with a wrong Gram entry.
GradedAlgebra misformed_sl2() {
  AlgebraBuilder b;
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.add_symbol("e", GradeLabel{}, {q(2)});
  b.add_symbol("f", GradeLabel{}, {q(-2)});
  b.set_cartan({"h"});
  b.set_bracket("e", "f", {{"h", q(1)}});
  b.set_bracket("h", "e", {{"e", q(2)}});
  b.set_bracket("h", "f", {{"f", q(-2)}});
  b.set_form("e", "f", q(1));
  b.set_form("h", "h", q(3)); // invariance needs 2
  return b.build();
}

// sl2 with a second vector injected into the root space at 2.
GradedAlgebra doubled_sl2() {
  AlgebraBuilder b;
  b.add_symbol("h", GradeLabel{}, {q(0)});
  b.add_symbol("e1", GradeLabel{}, {q(2)});
  b.add_symbol("e2", GradeLabel{}, {q(2)});
  b.add_symbol("f1", GradeLabel{}, {q(-2)});
  b.add_symbol("f2", GradeLabel{}, {q(-2)});
  b.set_cartan({"h"});
  for (int i = 1; i <= 2; ++i) {
    std::string s = std::to_string(i);
    b.set_bracket("e" + s, "f" + s, {{"h", q(1)}});
    b.set_bracket("h", "e" + s, {{"e" + s, q(2)}});
    b.set_bracket("h", "f" + s, {{"f" + s, q(-2)}});
    b.set_form("e" + s, "f" + s, q(1));
  }
  b.set_form("h", "h", q(2));
  return b.build();
}

RootDatum delete_last_root(RootDatum d) {
  std::size_t k = d.roots.size() - 1;
  Weight gone = d.roots[k];
  d.roots.erase(d.roots.begin() + static_cast<long>(k));
  d.anisotropic.erase(gone);
  d.isotropic.erase(gone);
  d.representatives.erase(gone);
  d.gram.erase(d.gram.begin() + static_cast<long>(k));
  for (auto& row : d.gram) row.erase(row.begin() + static_cast<long>(k));
  return d;
}

ScalarMatrix dense_gram(const GradedAlgebra& a) {
  std::size_t n = a.basis().size();
  ScalarMatrix g(n, std::vector<Scalar>(n, q(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g[i][j] = a.form(a.basis()[i].id, a.basis()[j].id);
  return g;
}

} // namespace

int main() {
  // Shared factory examples. Every acceptance criterion draws from these.
  std::vector<std::pair<std::string, GradedAlgebra>> factory;
  factory.emplace_back("split A1", build_split_simple({Series::A, 1}));
  factory.emplace_back("split A2", build_split_simple({Series::A, 2}));
  factory.emplace_back("split B2", build_split_simple({Series::B, 2}));
  factory.emplace_back("split C2", build_split_simple({Series::C, 2}));
  factory.emplace_back("loop A1/Z",
                       build_loop_eala({Series::A, 1}, {1, {q(1)}, 3}));
  factory.emplace_back(
      "loop A1/Z2",
      build_loop_eala({Series::A, 1}, {2, {q(1), Scalar::t()}, 2}));
  factory.emplace_back("heisenberg",
                       build_heisenberg_null({1, {q(1)}, 2},
                                             {{0}, {1}, {-1}}, {}));
  factory.emplace_back("witt trivial",
                       build_witt_null(2, 2, WittCocycle::trivial));
  factory.emplace_back("witt twisted",
                       build_witt_null(2, 2, WittCocycle::moody_rao));
  factory.emplace_back("glued", build_indecomposable_not_tame(2, 1));
  DiagonalPattern counting;
  counting.slope = q(1);
  Tower tower = build_nullity_zero(Series::A, {2, 3, 4}, {counting}, 0, q(1),
                                   ScalarMatrix{{q(0)}});
  for (std::size_t i = 0; i < tower.levels.size(); ++i)
    factory.emplace_back("tower level " + std::to_string(i), tower.levels[i]);

  std::vector<std::pair<std::string, std::function<void(Gate&)>>> criteria;

  criteria.emplace_back("axiom gate", [&](Gate& g) {
    for (const char* name :
         {"split A2", "loop A1/Z", "heisenberg", "witt trivial",
          "witt twisted"}) {
      const GradedAlgebra* a = nullptr;
      for (const auto& [n, alg] : factory)
        if (n == name) a = &alg;
      g.require(check_grading(*a).passed(), std::string(name) + ": grading");
      g.require(check_jacobi(*a).passed(), std::string(name) + ": jacobi");
      g.require(check_invariance(*a).passed(),
                std::string(name) + ": invariance");
      g.require(check_admissible(*a).report.passed(),
                std::string(name) + ": admissible");
    }
    // degree map with dependent images: the root decomposition collapses
    auto bad = build_loop_eala({Series::A, 1}, {2, {q(1), q(1)}, 2}, true);
    auto adm = check_admissible(bad);
    g.require(adm.report.failed(), "dependent images not rejected");
    g.require(!adm.report.witnesses.empty(), "rejection carries no witness");
  });

  criteria.emplace_back("root-string suite", [&](Gate& g) {
    for (const char* name : {"split A2", "split B2", "split C2"}) {
      const GradedAlgebra* a = nullptr;
      for (const auto& [n, alg] : factory)
        if (n == name) a = &alg;
      auto d = scale_form(datum_of(*a)).datum;
      g.require(check_cartan_integrality(d).passed(),
                std::string(name) + ": integrality");
      g.require(check_reflection_closure(d, a->window()).passed(),
                std::string(name) + ": reflections");
      g.require(check_dim_one(d, *a).passed(), std::string(name) + ": dim 1");
      g.require(check_root_strings(d, a->window()).passed(),
                std::string(name) + ": strings");
    }
    // the loop window: nothing may fail; boundary strings stay inconclusive
    const GradedAlgebra* a = nullptr;
    for (const auto& [n, alg] : factory)
      if (n == std::string("loop A1/Z")) a = &alg;
    auto d = scale_form(datum_of(*a)).datum;
    g.require(check_cartan_integrality(d).passed(), "loop: integrality");
    g.require(check_dim_one(d, *a).passed(), "loop: dim 1");
    g.require(!check_reflection_closure(d, a->window()).failed(),
              "loop: reflection violation");
    g.require(!check_root_strings(d, a->window()).failed(),
              "loop: broken string");
  });

  criteria.emplace_back("coroot bound", [&](Gate& g) {
    for (const auto& [name, a] : factory) {
      auto d = scale_form(datum_of(a)).datum;
      g.require(check_bound(d).passed(), name + ": |xi(h_alpha)| > 4");
    }
  });

  criteria.emplace_back("isotropic orthogonality", [&](Gate& g) {
    for (const auto& [name, a] : factory) {
      auto d = scale_form(datum_of(a)).datum;
      g.require(check_isotropic_orthogonal(d).passed(),
                name + ": (R, R0) != 0");
    }
  });

  criteria.emplace_back("semidefinite certificates", [&](Gate& g) {
    for (const auto& [name, a] : factory) {
      auto lat = lattice_of(datum_of(a));
      auto cert = certify_psd(lat.gram);
      g.require(cert.psd, name + ": gram not PSD");
      g.require(verify_psd_certificate(lat.gram, cert),
                name + ": certificate recomposition");
      if (lat.gram.size() <= 4)
        g.require(psd_by_minors(lat.gram) == cert.psd,
                  name + ": principal-minor oracle disagrees");
    }
    RationalMatrix bad{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
    g.require(psd_by_minors(bad) == certify_psd(bad).psd,
              "oracle disagrees on an indefinite matrix");
  });

  criteria.emplace_back("nullity and null rank", [&](Gate& g) {
    auto at = [&](const std::string& name) -> const GradedAlgebra& {
      for (const auto& [n, alg] : factory)
        if (n == name) return alg;
      throw AlgebraError("missing example " + name);
    };
    {
      auto d = datum_of(at("loop A1/Z"));
      auto lat = lattice_of(d);
      g.require(radical_and_nullity(lat).nullity == 1, "loop/Z nullity != 1");
      g.require(null_rank(d, lat).rank == 1, "loop/Z null rank != 1");
    }
    {
      auto d = datum_of(at("loop A1/Z2"));
      auto lat = lattice_of(d);
      g.require(radical_and_nullity(lat).nullity == 2, "loop/Z2 nullity != 2");
      g.require(null_rank(d, lat).rank == 2, "loop/Z2 null rank != 2");
    }
    for (const char* name : {"split A1", "split A2", "split B2", "split C2"}) {
      auto lat = lattice_of(datum_of(at(name)));
      g.require(radical_and_nullity(lat).nullity == 0,
                std::string(name) + ": nullity != 0");
    }
    {
      auto lat = lattice_of(datum_of(at("heisenberg")));
      g.require(radical_and_nullity(lat).nullity == 1,
                "heisenberg nullity != 1");
      for (const auto& row : lat.gram)
        for (const auto& v : row)
          g.require(v == Rational(0), "heisenberg gram not zero");
    }
  });

  criteria.emplace_back("quotient type recognition", [&](Gate& g) {
    auto labels_of = [&](const std::string& name) {
      for (const auto& [n, alg] : factory)
        if (n == name) {
          auto lat = lattice_of(datum_of(alg));
          return recognize_finite_type(radical_and_nullity(lat).quotient)
              .labels;
        }
      return std::set<std::string>{};
    };
    g.require(labels_of("loop A1/Z") == std::set<std::string>{"A1"},
              "loop quotient not A1");
    g.require(labels_of("split C2") == (std::set<std::string>{"B2", "C2"}),
              "sp4 quotient not {B2, C2}");
    g.require(labels_of("split A2") == std::set<std::string>{"A2"},
              "A2 quotient not A2");
  });

  criteria.emplace_back("null-system identities", [&](Gate& g) {
    for (auto coc : {WittCocycle::trivial, WittCocycle::moody_rao}) {
      std::string tag =
          coc == WittCocycle::trivial ? "trivial: " : "twisted: ";
      auto w = build_witt_null(2, 2, coc);
      // [N_a, N_{-a}] lies on the line through c_a = sum a_i y@0,0#i
      for (const auto& su : w.basis()) {
        if (su.grade.is_zero()) continue;
        for (const auto& sv : w.basis()) {
          if ((su.grade + sv.grade).is_zero() == false) continue;
          auto br = w.bracket(su.id, sv.id);
          g.require(br.has_value(),
                    tag + "degree-0 bracket unknown at " + su.id);
          if (!br) continue;
          std::vector<std::string> ids{"y@0,0#1", "y@0,0#2"};
          std::vector<Scalar> coeff(2, q(0));
          bool clean = true;
          for (const auto& [id, c] : *br) {
            if (id == ids[0])
              coeff[0] = c;
            else if (id == ids[1])
              coeff[1] = c;
            else
              clean = false;
          }
          g.require(clean, tag + "[" + su.id + ", " + sv.id +
                               "] leaves the central line");
          Scalar a1(su.grade.coords[0]), a2(su.grade.coords[1]);
          g.require(coeff[0] * a2 == coeff[1] * a1,
                    tag + "[" + su.id + ", " + sv.id +
                        "] not proportional to c_a");
        }
      }
      // the centre is exactly Y0
      auto ctr = center(w);
      g.require(ctr.size() == 2, tag + "centre dimension != 2");
      for (const auto& v : ctr)
        for (const auto& [id, c] : v)
          g.require(id == "y@0,0#1" || id == "y@0,0#2",
                    tag + "centre leaves Y0: " + id);
      // nondegenerate pairing on the window
      auto gm = dense_gram(w);
      g.require(rank(gm) == w.basis().size(), tag + "degenerate form");
    }
  });

  criteria.emplace_back("tameness and decomposability", [&](Gate& g) {
    auto at = [&](const std::string& name) -> const GradedAlgebra& {
      for (const auto& [n, alg] : factory)
        if (n == name) return alg;
      throw AlgebraError("missing example " + name);
    };
    {
      const auto& a = at("glued");
      auto d = datum_of(a);
      g.require(check_tame(a, d).report.failed(), "glued example is tame");
      g.require(check_decomposable(a, d).status ==
                    DecompositionStatus::indecomposable,
                "glued example not certified indecomposable");
    }
    {
      const auto& a = at("loop A1/Z");
      g.require(check_tame(a, datum_of(a)).report.passed(), "loop not tame");
    }
    {
      const auto& a = at("heisenberg");
      g.require(check_decomposable(a, datum_of(a)).status ==
                    DecompositionStatus::indecomposable,
                "heisenberg not certified indecomposable");
    }
    // tame <=> centreless <=> indecomposable on every nullity-0 example,
    // each predicate computed independently
    for (const auto& [name, a] : factory) {
      auto d = datum_of(a);
      if (radical_and_nullity(lattice_of(d)).nullity != 0) continue;
      bool tame = check_tame(a, d).report.passed();
      bool centreless = center(a).empty();
      auto dec = check_decomposable(a, d);
      g.require(dec.status != DecompositionStatus::inconclusive,
                name + ": decomposability undecided");
      bool indec = dec.status == DecompositionStatus::indecomposable;
      g.require(tame == centreless && centreless == indec,
                name + ": tame/centreless/indecomposable differ");
    }
  });

  criteria.emplace_back("derivation tower", [&](Gate& g) {
    for (std::size_t i = 0; i < tower.levels.size(); ++i) {
      auto d = datum_of(tower.levels[i]);
      g.require(radical_and_nullity(lattice_of(d)).nullity == 0,
                "level " + std::to_string(i) + ": nullity != 0");
      g.require(split_nullity_zero(tower.levels[i], d).report.passed(),
                "level " + std::to_string(i) + ": split not centreless");
    }
    auto trace = outer_tower_test(tower);
    g.require(!trace.stabilized, "counting diagonal stabilized");
    g.require(trace.levels.size() == 3, "trace level count");
    for (std::size_t i = 0; i < trace.levels.size(); ++i)
      g.require(trace.levels[i].support_size == i + 3,
                "level " + std::to_string(i) + ": support size");
    // eventually constant diagonal: stabilizes, and the factory refuses it
    DiagonalPattern almost;
    almost.head = {q(2), q(3)};
    almost.intercept = q(1);
    bool refused = false;
    try {
      build_nullity_zero(Series::A, {2}, {almost}, 0, q(1),
                         ScalarMatrix{{q(0)}});
    } catch (const AlgebraError&) {
      refused = true;
    }
    g.require(refused, "almost-scalar diagonal accepted");
    Tower synthetic;
    synthetic.series = Series::A;
    synthetic.ranks = {2, 3, 4, 5};
    synthetic.patterns = {almost};
    g.require(outer_tower_test(synthetic).stabilized,
              "almost-scalar diagonal did not stabilize");
  });

  criteria.emplace_back("negative controls", [&](Gate& g) {
    auto jac = check_jacobi(flipped_sl2());
    g.require(jac.failed() && !jac.witnesses.empty(),
              "flipped sign not caught by the Jacobi check");
    auto inv = check_invariance(misformed_sl2());
    g.require(inv.failed() && !inv.witnesses.empty(),
              "bad Gram entry not caught by invariance");
    auto a2 = build_split_simple({Series::A, 2});
    auto broken = delete_last_root(datum_of(a2));
    auto refl = check_reflection_closure(broken, a2.window());
    g.require(refl.failed() && !refl.witnesses.empty(),
              "deleted root not caught by reflection closure");
    auto dbl = doubled_sl2();
    auto dd = datum_of(dbl);
    auto torus = check_lie_torus_grading(dbl, core(dbl, dd), dd);
    g.require(torus.failed() && !torus.witnesses.empty(),
              "injected vector not caught by the torus grading");
    RationalMatrix bad{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
    auto cert = certify_psd(bad);
    g.require(!cert.psd, "indefinite matrix certified PSD");
    g.require(!cert.witness.empty() && quad_form(bad, cert.witness) < 0,
              "negativity witness missing or wrong");
  });

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Gate g;
    try {
      criteria[i].second(g);
    } catch (const std::exception& e) {
      g.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << (g.ok ? "pass" : "FAIL") << "\n";
    for (const auto& w : g.why) std::cout << "    " << w << "\n";
    if (!g.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
