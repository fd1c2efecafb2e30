// Command-line front door. Everything goes through the shared-library C
// interface; this file only translates flags to spec JSON and renders
// reports. Exit codes: 0 clean (inconclusive results are counted but do
// not fail), 1 at least one fail verdict, 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include "leala/leala.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context << ": " << leala_last_error() << "\n";
  std::exit(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(2);
  }
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Sequential execution; the variable is validated so manifests stating a
// thread cap stay reproducible.
void check_thread_env() {
  const char* v = std::getenv("LEALA_THREADS");
  if (!v) return;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) {
    std::cerr << "error: LEALA_THREADS must be a positive integer\n";
    std::exit(2);
  }
}

leala_algebra* load(const std::string& path) {
  leala_algebra* a = nullptr;
  auto text = read_file(path);
  if (leala_load_json(text.c_str(), &a) != LEALA_OK) die("loading " + path);
  return a;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  leala_string_free(s);
  return out;
}

// Goes to stderr so `--out -` style stdout piping stays clean.
void print_summary(leala_algebra* a) {
  char* s = nullptr;
  if (leala_summary(a, &s) != LEALA_OK) die("summary");
  auto j = json::parse(take(s));
  std::cerr << "dimension " << j.at("dimension").get<std::size_t>()
            << ", field " << j.at("field").get<std::string>();
  if (j.contains("roots")) {
    std::cerr << ", |R| = " << j.at("roots").get<std::size_t>()
              << ", |R x| = " << j.at("anisotropic").get<std::size_t>()
              << ", |R 0| = " << j.at("isotropic").get<std::size_t>();
  } else {
    std::cerr << ", root counts unavailable";
  }
  std::cerr << "\n";
}

std::string render_text(const json& rep, const json& summary) {
  std::ostringstream out;
  out << "algebra: dimension " << summary.at("dimension").get<std::size_t>()
      << ", field " << summary.at("field").get<std::string>() << ", window "
      << summary.at("window").get<std::string>() << "\n";
  if (summary.contains("roots")) {
    std::size_t roots = summary.at("roots").get<std::size_t>();
    std::size_t aniso = summary.at("anisotropic").get<std::size_t>();
    out << "roots: |R| = " << roots << ", |R x| = " << aniso << ", |R 0| = "
        << summary.at("isotropic").get<std::size_t>() << "\n";
    if (roots == 1 && aniso == 0) out << "trivial: R = {0}\n";
  }
  if (rep.contains("type")) {
    out << "type: {";
    bool first = true;
    for (const auto& l : rep.at("type").at("labels")) {
      if (!first) out << ", ";
      out << l.get<std::string>();
      first = false;
    }
    out << "}";
    if (rep.at("type").at("nonreduced").get<bool>()) out << " (nonreduced)";
    out << "\n";
  }
  if (rep.contains("kac"))
    out << "nullity: " << rep.at("kac").at("nullity").get<std::size_t>()
        << "\n";
  if (rep.contains("null_rank"))
    out << "null rank: " << rep.at("null_rank").get<std::size_t>()
        << " (at this window)\n";
  if (rep.contains("tame"))
    out << "tame: " << (rep.at("tame").get<bool>() ? "yes" : "no") << "\n";
  if (rep.contains("decomposable"))
    out << "decomposable: "
        << rep.at("decomposable").at("status").get<std::string>() << "\n";
  out << "checks:\n";
  for (const auto& c : rep.at("checks")) {
    out << "  " << c.at("check").get<std::string>() << ": "
        << c.at("verdict").get<std::string>() << "\n";
    for (const auto& w : c.at("witnesses"))
      out << "    witness: " << w.get<std::string>() << "\n";
    for (const auto& n : c.at("notes"))
      out << "    note: " << n.get<std::string>() << "\n";
  }
  const auto& s = rep.at("summary");
  out << "summary: " << s.at("fail").get<int>() << " fail, "
      << s.at("inconclusive").get<int>() << " inconclusive, "
      << s.at("pass").get<int>() << " pass\n";
  return out.str();
}

int run_checks_and_render(leala_algebra* a, const std::string& suite,
                          const std::string& format,
                          const std::string& out_path) {
  char* rep = nullptr;
  int fails = 0, inconclusive = 0;
  if (leala_run_checks(a, suite.c_str(), &rep, &fails, &inconclusive) !=
      LEALA_OK)
    die("running suite " + suite);
  auto report_text = take(rep);
  if (format == "json") {
    write_output(out_path, report_text);
  } else {
    char* s = nullptr;
    if (leala_summary(a, &s) != LEALA_OK) die("summary");
    write_output(out_path,
                 render_text(json::parse(report_text), json::parse(take(s))));
  }
  if (inconclusive > 0)
    std::cerr << "inconclusive-at-window: " << inconclusive << "\n";
  return fails > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  check_thread_env();
  CLI::App app{"exact computational toolkit for graded Lie algebras with "
               "invariant forms"};
  app.require_subcommand(1);

  // ---- build ----
  auto* build = app.add_subcommand("build", "construct a factory example");
  std::string builder, type = "A1", phi = "1", s_set, cocycle = "trivial";
  std::string series = "A", ranks = "2,3,4", head, slope = "0", intercept = "0";
  std::string psi = "0", u = "1", field, out_path;
  long long window = 1, nvars = 2, loop_window = 2, null_bound = 1;
  std::size_t dims = 1, z_dim = 0, level = 0;
  build->add_option("builder", builder,
                    "split | loop | heisenberg | witt | glued | tower")
      ->required();
  build->add_option("--type", type, "series letter + rank, e.g. A2");
  build->add_option("--phi", phi, "comma-separated scalar images of the "
                                  "grading group generators");
  build->add_option("--window", window, "grade coordinate bound");
  build->add_option("--S", s_set, "support degrees, ';'-separated vectors of "
                                  "','-separated integers");
  build->add_option("--dims", dims, "uniform dimension per nonzero degree");
  build->add_option("--n", nvars, "number of variables");
  build->add_option("--cocycle", cocycle, "trivial | moody_rao");
  build->add_option("--series", series, "tower series letter");
  build->add_option("--ranks", ranks, "comma-separated tower ranks");
  build->add_option("--head", head, "leading diagonal entries");
  build->add_option("--slope", slope, "diagonal tail slope");
  build->add_option("--intercept", intercept, "diagonal tail intercept");
  build->add_option("--z-dim", z_dim, "central directions");
  build->add_option("--u", u, "trace form coefficient");
  build->add_option("--psi", psi, "form on D+Z, ';'-separated rows");
  build->add_option("--level", level, "tower level to emit");
  build->add_option("--loop-window", loop_window, "glued loop window");
  build->add_option("--null-bound", null_bound, "glued null degree bound");
  build->add_option("--field", field, "expected base field: Q | Qt");
  build->add_option("--out", out_path, "output file (default stdout)");

  // ---- check ----
  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string check_file, suite = "all", check_format = "json",
              check_out;
  check->add_option("file", check_file, "leala-algebra v1 file")->required();
  check->add_option("--suite", suite, "axioms | lemmas | kac | structure | all");
  check->add_option("--format", check_format, "json | text");
  check->add_option("--out", check_out, "output file (default stdout)");

  // ---- report ----
  auto* report = app.add_subcommand("report", "full report for a file");
  std::string report_file, report_format = "text", report_out;
  report->add_option("file", report_file, "leala-algebra v1 file")->required();
  report->add_option("--format", report_format, "json | text");
  report->add_option("--out", report_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) {
    json spec;
    spec["builder"] = builder;
    if (builder == "split") {
      spec["type"] = type;
    } else if (builder == "loop") {
      spec["type"] = type;
      spec["phi"] = split(phi, ',');
      spec["window"] = window;
    } else if (builder == "heisenberg") {
      spec["phi"] = split(phi, ',');
      spec["window"] = window;
      json degrees = json::array();
      json dim_list = json::array();
      // Rank 1 with no ';' reads "0,1,-1" as three degrees, not one vector.
      std::vector<std::string> vecs;
      if (spec["phi"].size() == 1 && s_set.find(';') == std::string::npos)
        vecs = split(s_set, ',');
      else
        vecs = split(s_set, ';');
      for (const auto& vec : vecs) {
        std::vector<long long> degree;
        for (const auto& c : split(vec, ',')) degree.push_back(std::stoll(c));
        bool zero = true;
        for (auto c : degree) zero = zero && c == 0;
        if (!zero && dims != 1)
          dim_list.push_back(json{{"degree", degree}, {"dim", dims}});
        degrees.push_back(degree);
      }
      spec["S"] = degrees;
      if (!dim_list.empty()) spec["dims"] = dim_list;
    } else if (builder == "witt") {
      spec["n"] = nvars;
      spec["window"] = window;
      spec["cocycle"] = cocycle;
    } else if (builder == "glued") {
      spec["loop_window"] = loop_window;
      spec["null_bound"] = null_bound;
    } else if (builder == "tower") {
      spec["series"] = series;
      json rank_list = json::array();
      for (const auto& r : split(ranks, ','))
        rank_list.push_back(std::stoull(r));
      spec["ranks"] = rank_list;
      json pattern;
      if (!head.empty()) pattern["head"] = split(head, ',');
      pattern["slope"] = slope;
      pattern["intercept"] = intercept;
      spec["patterns"] = json::array({pattern});
      spec["z_dim"] = z_dim;
      spec["u"] = u;
      json psi_rows = json::array();
      for (const auto& row : split(psi, ';')) psi_rows.push_back(split(row, ','));
      spec["psi"] = psi_rows;
      spec["level"] = level;
    } else {
      std::cerr << "error: unknown builder " << builder << "\n";
      return 2;
    }
    leala_algebra* a = nullptr;
    if (leala_build(spec.dump().c_str(), &a) != LEALA_OK)
      die("building " + builder);
    char* saved = nullptr;
    if (leala_save_json(a, &saved) != LEALA_OK) die("saving");
    auto text = take(saved);
    if (!field.empty()) {
      std::string want = field == "Qt" ? "Q(t)" : field;
      auto actual = json::parse(text).at("field").get<std::string>();
      if (actual != want) {
        std::cerr << "error: built field " << actual << ", expected " << want
                  << "\n";
        leala_algebra_free(a);
        return 2;
      }
    }
    write_output(out_path, text);
    print_summary(a);
    leala_algebra_free(a);
    return 0;
  }

  if (check->parsed()) {
    auto* a = load(check_file);
    int rc = run_checks_and_render(a, suite, check_format, check_out);
    leala_algebra_free(a);
    return rc;
  }

  // report
  auto* a = load(report_file);
  int rc = run_checks_and_render(a, "all", report_format, report_out);
  leala_algebra_free(a);
  return rc == 1 ? 1 : 0;
}
