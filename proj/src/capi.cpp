#include "leala/leala.h"

#include "leala/io.hpp"
#include "leala/structure.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>

using nlohmann::json;
using namespace leala;

struct leala_algebra {
  GradedAlgebra alg;
};

namespace {

thread_local std::string g_last_error;

leala_status set_error(leala_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

Scalar scalar_field(const json& j, const char* key, const Scalar& fallback) {
  if (!j.contains(key)) return fallback;
  auto s = Scalar::from_string(j.at(key).get<std::string>());
  if (!s) throw AlgebraError(std::string("unparsable scalar in ") + key);
  return *s;
}

SimpleType parse_type(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("type too short");
  Series s;
  switch (text[0]) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    default: throw std::invalid_argument("unknown series letter");
  }
  return {s, static_cast<std::size_t>(std::stoul(text.substr(1)))};
}

std::vector<Scalar> parse_scalars(const json& j) {
  std::vector<Scalar> out;
  for (const auto& e : j) {
    auto s = Scalar::from_string(e.get<std::string>());
    if (!s) throw AlgebraError("unparsable scalar: " + e.get<std::string>());
    out.push_back(*s);
  }
  return out;
}

DiagonalPattern parse_pattern(const json& j) {
  DiagonalPattern p;
  if (j.contains("head")) p.head = parse_scalars(j.at("head"));
  p.intercept = scalar_field(j, "intercept", Scalar(0));
  p.slope = scalar_field(j, "slope", Scalar(0));
  return p;
}

GradedAlgebra build_from_spec(const json& spec) {
  std::string builder = spec.at("builder").get<std::string>();
  if (builder == "split") {
    return build_split_simple(parse_type(spec.at("type").get<std::string>()));
  }
  if (builder == "loop") {
    GroupDatum lam;
    lam.phi_values = parse_scalars(spec.at("phi"));
    lam.generators = lam.phi_values.size();
    lam.window = spec.at("window").get<long long>();
    return build_loop_eala(parse_type(spec.at("type").get<std::string>()), lam,
                           spec.value("allow_dependent_phi", false),
                           spec.value("allow_degenerate_window", false));
  }
  if (builder == "heisenberg") {
    GroupDatum lam;
    lam.phi_values = parse_scalars(spec.at("phi"));
    lam.generators = lam.phi_values.size();
    lam.window = spec.at("window").get<long long>();
    auto s = spec.at("S").get<std::vector<std::vector<long long>>>();
    std::map<std::vector<long long>, std::size_t> dims;
    if (spec.contains("dims"))
      for (const auto& e : spec.at("dims"))
        dims[e.at("degree").get<std::vector<long long>>()] =
            e.at("dim").get<std::size_t>();
    return build_heisenberg_null(lam, s, dims);
  }
  if (builder == "witt") {
    auto coc = spec.value("cocycle", std::string("trivial"));
    if (coc != "trivial" && coc != "moody_rao")
      throw std::invalid_argument("unknown cocycle: " + coc);
    return build_witt_null(spec.at("n").get<std::size_t>(),
                           spec.at("window").get<long long>(),
                           coc == "trivial" ? WittCocycle::trivial
                                            : WittCocycle::moody_rao);
  }
  if (builder == "tower") {
    auto series = parse_type(spec.at("series").get<std::string>() + "1").series;
    std::vector<DiagonalPattern> patterns;
    for (const auto& e : spec.at("patterns")) patterns.push_back(parse_pattern(e));
    ScalarMatrix psi;
    for (const auto& row : spec.at("psi")) psi.push_back(parse_scalars(row));
    auto tower = build_nullity_zero(
        series, spec.at("ranks").get<std::vector<std::size_t>>(), patterns,
        spec.value("z_dim", std::size_t{0}),
        scalar_field(spec, "u", Scalar(1)), psi);
    std::size_t level = spec.value("level", std::size_t{0});
    if (level >= tower.levels.size())
      throw std::invalid_argument("level out of range");
    return tower.levels[level];
  }
  if (builder == "glued") {
    return build_indecomposable_not_tame(spec.value("loop_window", 2LL),
                                         spec.value("null_bound", 1LL));
  }
  throw std::invalid_argument("unknown builder: " + builder);
}

json report_json(const CheckReport& r) { return json::parse(report_to_json(r)); }

struct SuiteCounters {
  int fail = 0;
  int inconclusive = 0;
  int pass = 0;
};

void run_suite(const GradedAlgebra& a, const std::string& suite, json& out,
               SuiteCounters& n) {
  bool ax = suite == "axioms" || suite == "all";
  bool lem = suite == "lemmas" || suite == "all";
  bool kac = suite == "kac" || suite == "all";
  bool str = suite == "structure" || suite == "all";
  if (!(ax || lem || kac || str))
    throw std::invalid_argument("unknown suite: " + suite);

  json checks = json::array();
  auto add = [&](const CheckReport& r) {
    checks.push_back(report_json(r));
    switch (r.verdict) {
      case Verdict::pass: ++n.pass; break;
      case Verdict::fail: ++n.fail; break;
      default: ++n.inconclusive; break;
    }
  };

  if (ax) {
    add(check_grading(a));
    add(check_jacobi(a));
    add(check_invariance(a));
  }
  AdmissibleResult adm;
  try {
    adm = check_admissible(a);
  } catch (const AlgebraError& e) {
    adm.report.check_name = "admissible";
    adm.report.window = a.window().to_string();
    adm.report.fail_with(e.what());
  }
  if (ax) add(adm.report);
  if (adm.report.passed()) {
    if (ax) add(check_pairing_identity(a, adm));
    auto datum = build_root_datum(a, adm);
    auto scaled = scale_form(datum);
    const auto& d = scaled.datum;
    if (lem || kac) add(scaled.report);
    if (lem) {
      add(check_cartan_integrality(d));
      add(check_bound(d));
      add(check_reflection_closure(d, a.window()));
      add(check_dim_one(d, a));
      add(check_root_strings(d, a.window()));
      add(check_root_multiples(d, a.window()));
      add(check_equal_length(d));
      add(check_irreducible(d));
      add(check_local_nilpotence(d, a, 6));
      add(check_isotropic_orthogonal(d));
      add(check_positive_norms(d));
    }
    if (kac || str) {
      auto lattice = build_lattice(d);
      auto rad = radical_and_nullity(lattice);
      if (kac) {
        out["kac"] = json::parse(radical_report_to_json(rad));
        add(check_quotient_root_system(rad, lattice, d));
        auto nr = null_rank(d, lattice);
        out["null_rank"] = nr.rank;
        if (!nr.caveat.empty()) out["null_rank_caveat"] = nr.caveat;
        auto type = recognize_finite_type(rad.quotient);
        json labels = json::array();
        for (const auto& l : type.labels) labels.push_back(l);
        out["type"] = json{{"labels", labels},
                           {"nonreduced", type.nonreduced},
                           {"note", type.note}};
      }
      if (str) {
        auto c = core(a, d);
        json core_ids = json::array();
        for (const auto& id : c.members) core_ids.push_back(id);
        out["core"] = json{{"basis_aligned", c.basis_aligned},
                           {"members", core_ids},
                           {"notes", c.notes}};
        add(check_lie_torus_grading(a, c, d));
        auto tame = check_tame(a, d);
        add(tame.report);
        out["tame"] = tame.report.passed();
        auto dec = check_decomposable(a, d);
        const char* status =
            dec.status == DecompositionStatus::indecomposable
                ? "indecomposable"
                : dec.status == DecompositionStatus::decomposable
                      ? "decomposable"
                      : "inconclusive";
        out["decomposable"] = json{{"status", status}, {"notes", dec.notes}};
        if (rad.nullity == 0) {
          auto split = split_nullity_zero(a, d);
          add(split.report);
          out["nullity_zero_split"] =
              json{{"core_dim", split.core_ids.size()},
                   {"d_dim", split.d_part.size()},
                   {"z_dim", split.z_part.size()}};
        }
      }
    }
  } else {
    if (!ax) add(adm.report); // the gate failure must surface somewhere
    out["note"] = "admissibility failed; dependent suites skipped";
  }
  out["checks"] = std::move(checks);
  out["summary"] = json{
      {"fail", n.fail}, {"inconclusive", n.inconclusive}, {"pass", n.pass}};
}

} // namespace

extern "C" {

leala_status leala_build(const char* spec_json, leala_algebra** out) {
  if (!spec_json || !out)
    return set_error(LEALA_ERR_INVALID, "null argument");
  json spec;
  try {
    spec = json::parse(spec_json);
  } catch (const json::exception& e) {
    return set_error(LEALA_ERR_PARSE, std::string("bad spec JSON: ") + e.what());
  }
  try {
    auto alg = build_from_spec(spec);
    *out = new leala_algebra{std::move(alg)};
    return LEALA_OK;
  } catch (const AlgebraError& e) {
    return set_error(LEALA_ERR_REFUSED, e.what());
  } catch (const json::exception& e) {
    return set_error(LEALA_ERR_INVALID, std::string("bad spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(LEALA_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return set_error(LEALA_ERR_INTERNAL, e.what());
  }
}

leala_status leala_load_json(const char* text, leala_algebra** out) {
  if (!text || !out) return set_error(LEALA_ERR_INVALID, "null argument");
  try {
    auto alg = algebra_from_json(text);
    *out = new leala_algebra{std::move(alg)};
    return LEALA_OK;
  } catch (const AlgebraError& e) {
    return set_error(LEALA_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return set_error(LEALA_ERR_INTERNAL, e.what());
  }
}

leala_status leala_save_json(const leala_algebra* a, char** out_text) {
  if (!a || !out_text) return set_error(LEALA_ERR_INVALID, "null argument");
  try {
    *out_text = dup_string(algebra_to_json(a->alg));
    return *out_text ? LEALA_OK
                     : set_error(LEALA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LEALA_ERR_INTERNAL, e.what());
  }
}

leala_status leala_summary(const leala_algebra* a, char** out_json) {
  if (!a || !out_json) return set_error(LEALA_ERR_INVALID, "null argument");
  try {
    json out;
    out["dimension"] = a->alg.basis().size();
    out["field"] = a->alg.field() == FieldKind::Q ? "Q" : "Q(t)";
    out["window"] = a->alg.window().to_string();
    auto adm = check_admissible(a->alg);
    if (adm.report.passed()) {
      auto d = build_root_datum(a->alg, adm);
      out["roots"] = d.roots.size();
      out["anisotropic"] = d.anisotropic.size();
      out["isotropic"] = d.isotropic.size();
    } else {
      out["note"] = "admissibility failed; root counts unavailable";
    }
    *out_json = dup_string(out.dump(2) + "\n");
    return *out_json ? LEALA_OK
                     : set_error(LEALA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LEALA_ERR_INTERNAL, e.what());
  }
}

leala_status leala_run_checks(const leala_algebra* a, const char* suite,
                              char** out_report_json, int* out_fail_count,
                              int* out_inconclusive_count) {
  if (!a || !suite || !out_report_json || !out_fail_count ||
      !out_inconclusive_count)
    return set_error(LEALA_ERR_INVALID, "null argument");
  try {
    json out;
    out["suite"] = suite;
    out["window"] = a->alg.window().to_string();
    SuiteCounters n;
    run_suite(a->alg, suite, out, n);
    *out_report_json = dup_string(out.dump(2) + "\n");
    if (!*out_report_json)
      return set_error(LEALA_ERR_INTERNAL, "out of memory");
    *out_fail_count = n.fail;
    *out_inconclusive_count = n.inconclusive;
    return LEALA_OK;
  } catch (const std::invalid_argument& e) {
    return set_error(LEALA_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return set_error(LEALA_ERR_INTERNAL, e.what());
  }
}

const char* leala_last_error(void) { return g_last_error.c_str(); }

void leala_string_free(char* s) { std::free(s); }

void leala_algebra_free(leala_algebra* a) { delete a; }

} // extern "C"
