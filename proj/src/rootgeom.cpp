#include "leala/rootgeom.hpp"

#include <algorithm>

namespace leala {

namespace {

std::string pair_witness(const Weight& a, const Weight& b,
                         const std::string& detail) {
  return "(" + weight_to_string(a) + ", " + weight_to_string(b) + "): " + detail;
}

GradeLabel grade_shift(const GradeLabel& base, const GradeLabel& step,
                       long long n) {
  GradeLabel out = base;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] += n * step.coords[i];
  return out;
}

} // namespace

bool RootDatum::has_root(const Weight& w) const {
  return std::binary_search(roots.begin(), roots.end(), w, WeightLess{});
}

std::size_t RootDatum::index(const Weight& w) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), w, WeightLess{});
  if (it == roots.end() || *it != w)
    throw AlgebraError("weight is not an observed root: " + weight_to_string(w));
  return static_cast<std::size_t>(it - roots.begin());
}

Scalar RootDatum::induced(const Weight& a, const Weight& b) const {
  return gram[index(a)][index(b)];
}

Scalar RootDatum::eval_coroot(const Weight& mu, const Weight& alpha) const {
  Scalar norm = induced(alpha, alpha);
  if (norm.is_zero())
    throw AlgebraError("coroot of an isotropic root is undefined");
  auto it = representatives.find(alpha);
  if (it == representatives.end())
    throw AlgebraError("no representative for " + weight_to_string(alpha));
  Scalar acc(0);
  for (const auto& [id, c] : it->second) {
    auto pos = std::find(cartan_ids.begin(), cartan_ids.end(), id);
    acc += c * mu[static_cast<std::size_t>(pos - cartan_ids.begin())];
  }
  return Scalar(2) / norm * acc;
}

RootDatum build_root_datum(const GradedAlgebra& a, const AdmissibleResult& adm) {
  if (adm.report.failed())
    throw AlgebraError("build_root_datum requires a passed admissibility check");
  RootDatum d;
  d.cartan_ids = a.cartan();
  auto decomp = root_decomposition(a);
  for (const auto& [w, symbols] : decomp) {
    d.roots.push_back(w);
    GradeLabel g = a.symbol(symbols.front()).grade;
    for (const auto& id : symbols)
      if (a.symbol(id).grade != g) d.grades_reliable = false;
    d.grades.emplace(w, g);
  }
  d.representatives = adm.representatives;
  std::size_t n = d.roots.size();
  d.gram.assign(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar v = a.form(d.representatives.at(d.roots[i]),
                        d.representatives.at(d.roots[j]));
      d.gram[i][j] = v;
      d.gram[j][i] = v;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.gram[i][i].is_zero())
      d.isotropic.insert(d.roots[i]);
    else
      d.anisotropic.insert(d.roots[i]);
  }
  return d;
}

ScaleResult scale_form(const RootDatum& d) {
  ScaleResult out;
  out.report.check_name = "scale-form";
  out.datum = d;
  if (d.anisotropic.empty()) {
    out.report.notes.push_back("null datum: scaling vacuous, u = 1");
    return out;
  }
  bool all_rational = true;
  bool some_positive = false;
  for (const auto& alpha : d.anisotropic) {
    Scalar norm = d.induced(alpha, alpha);
    if (!norm.is_rational())
      all_rational = false;
    else if (norm.sign() > 0)
      some_positive = true;
  }
  if (all_rational && some_positive) {
    out.report.notes.push_back("convention already holds, u = 1");
    return out;
  }
  // Take u = (alpha, alpha) of the first anisotropic root; the scaled
  // datum then has (alpha, alpha)' = 1.
  const Weight& alpha = *d.anisotropic.begin();
  out.u = d.induced(alpha, alpha);
  for (auto& row : out.datum.gram)
    for (auto& v : row) v = v / out.u;
  for (auto& [w, t] : out.datum.representatives)
    t = vector_scale(t, Scalar(1) / out.u);
  out.datum.scale = d.scale * out.u;
  for (const auto& beta : d.anisotropic) {
    Scalar norm = out.datum.induced(beta, beta);
    if (!norm.is_rational())
      out.report.fail_with(pair_witness(
          beta, beta, "norm " + norm.to_string() + " not rational after scaling"));
  }
  return out;
}

std::optional<long long> cartan_integer(const RootDatum& d, const Weight& xi,
                                        const Weight& alpha) {
  Scalar v = Scalar(2) * d.induced(xi, alpha) / d.induced(alpha, alpha);
  if (!v.is_integer_value()) return std::nullopt;
  return v.integer_value();
}

CheckReport check_cartan_integrality(const RootDatum& d) {
  CheckReport rep;
  rep.check_name = "cartan-integrality";
  for (const auto& alpha : d.anisotropic)
    for (const auto& xi : d.roots)
      if (!cartan_integer(d, xi, alpha))
        rep.fail_with(pair_witness(xi, alpha, "2(xi,alpha)/(alpha,alpha) not an integer"));
  return rep;
}

CheckReport check_bound(const RootDatum& d) {
  CheckReport rep;
  rep.check_name = "coroot-bound";
  for (const auto& alpha : d.anisotropic)
    for (const auto& xi : d.roots) {
      auto n = cartan_integer(d, xi, alpha);
      if (!n) {
        rep.fail_with(pair_witness(xi, alpha, "not an integer"));
        continue;
      }
      if (*n > 4 || *n < -4)
        rep.fail_with(pair_witness(xi, alpha,
                                   "xi(h_alpha) = " + std::to_string(*n)));
    }
  return rep;
}

Weight reflect(const RootDatum& d, const Weight& alpha, const Weight& mu) {
  Scalar c = d.eval_coroot(mu, alpha);
  return weight_add(mu, weight_scale(alpha, -c));
}

CheckReport check_reflection_closure(const RootDatum& d, const Window& w) {
  CheckReport rep;
  rep.check_name = "reflection-closure";
  rep.window = w.to_string();
  std::size_t escaped = 0;
  for (const auto& alpha : d.anisotropic)
    for (const auto& xi : d.roots) {
      Weight sigma = reflect(d, alpha, xi);
      if (d.has_root(sigma)) continue;
      auto n = cartan_integer(d, xi, alpha);
      bool out_of_window = true;
      if (n && d.grades_reliable) {
        GradeLabel g =
            grade_shift(d.grades.at(xi), d.grades.at(alpha), -*n);
        out_of_window = !w.contains(g);
      }
      if (out_of_window) {
        ++escaped;
      } else {
        rep.fail_with(pair_witness(alpha, xi,
                                   "sigma_alpha(xi) = " + weight_to_string(sigma) +
                                       " missing inside the window"));
      }
    }
  if (escaped) {
    rep.notes.push_back(std::to_string(escaped) + " reflections left the window");
    if (!rep.failed()) rep.verdict = Verdict::inconclusive_at_window;
  }
  return rep;
}

namespace {

enum class Presence { present, absent, unknown };

Presence probe(const RootDatum& d, const Window& w, const Weight& xi,
               const Weight& alpha, long long n) {
  Weight cand = weight_add(xi, weight_scale(alpha, Scalar(Rational(Int(n)))));
  if (d.has_root(cand)) return Presence::present;
  if (!d.grades_reliable) return Presence::unknown;
  GradeLabel g = grade_shift(d.grades.at(xi), d.grades.at(alpha), n);
  return w.contains(g) ? Presence::absent : Presence::unknown;
}

} // namespace

RootString root_string(const RootDatum& d, const Window& w, const Weight& xi,
                       const Weight& alpha) {
  RootString rs;
  // Scan |n| <= 8: any LEALA string fits well inside (|d|, |u| <= 4).
  constexpr long long kScan = 8;
  bool inconclusive = false;
  for (long long n = -1; n >= -kScan; --n) {
    Presence p = probe(d, w, xi, alpha, n);
    if (p == Presence::present) {
      rs.down = -n;
    } else {
      if (p == Presence::unknown) inconclusive = true;
      break;
    }
  }
  for (long long n = 1; n <= kScan; ++n) {
    Presence p = probe(d, w, xi, alpha, n);
    if (p == Presence::present) {
      rs.up = n;
    } else {
      if (p == Presence::unknown) inconclusive = true;
      break;
    }
  }
  // Brokenness: a present point strictly beyond an in-window gap. If some
  // intermediate point is merely outside the window, the string may well
  // continue through it, so that is inconclusive rather than broken.
  for (int dir : {1, -1}) {
    long long start = dir > 0 ? rs.up + 1 : -(rs.down + 1);
    bool unknown_between = false;
    for (long long n = start; n <= kScan && n >= -kScan; n += dir) {
      Presence p = probe(d, w, xi, alpha, n);
      if (p == Presence::unknown) unknown_between = true;
      if (p == Presence::present) {
        if (unknown_between) {
          inconclusive = true;
          break;
        }
        rs.verdict = Verdict::fail;
        rs.note = "broken string at n = " + std::to_string(n);
        return rs;
      }
    }
  }
  if (inconclusive) {
    rs.verdict = Verdict::inconclusive_at_window;
    rs.note = "string reaches the window boundary";
  }
  return rs;
}

CheckReport check_root_strings(const RootDatum& d, const Window& w) {
  CheckReport rep;
  rep.check_name = "root-strings";
  rep.window = w.to_string();
  std::size_t escaped = 0;
  for (const auto& alpha : d.anisotropic)
    for (const auto& xi : d.roots) {
      RootString rs = root_string(d, w, xi, alpha);
      if (rs.verdict == Verdict::fail) {
        rep.fail_with(pair_witness(xi, alpha, rs.note));
        continue;
      }
      if (rs.verdict == Verdict::inconclusive_at_window) {
        ++escaped;
        continue;
      }
      auto n = cartan_integer(d, xi, alpha);
      if (!n || rs.down - rs.up != *n)
        rep.fail_with(pair_witness(
            xi, alpha,
            "d - u = " + std::to_string(rs.down - rs.up) + " != xi(h_alpha)"));
    }
  if (escaped) {
    rep.notes.push_back(std::to_string(escaped) + " strings hit the window boundary");
    if (!rep.failed() && rep.verdict == Verdict::pass)
      rep.verdict = Verdict::inconclusive_at_window;
  }
  return rep;
}

namespace {

/// The lexicographically first pair of basis symbols in L_w x L_{-w}
/// with nonzero pairing.
std::pair<std::string, std::string> first_paired(const GradedAlgebra& a,
                                                 const Weight& w) {
  auto decomp = root_decomposition(a);
  auto it = decomp.find(w);
  auto itneg = decomp.find(weight_negate(w));
  if (it == decomp.end() || itneg == decomp.end())
    throw AlgebraError("root space missing for " + weight_to_string(w));
  std::vector<std::string> left = it->second;
  std::vector<std::string> right = itneg->second;
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  for (const auto& x : left)
    for (const auto& y : right)
      if (!a.form(x, y).is_zero()) return {x, y};
  throw AlgebraError("degenerate pairing at " + weight_to_string(w) +
                     " (contradicts (A2))");
}

void require_bracket(const GradedAlgebra& a, const Vector& x, const Vector& y,
                     const Vector& expected, const std::string& what) {
  auto br = a.bracket(x, y);
  if (!br || *br != expected)
    throw AlgebraError("triplet verification failed at " + what);
}

} // namespace

Sl2Triplet sl2_triplet(const RootDatum& d, const GradedAlgebra& a,
                       const Weight& alpha) {
  if (!d.anisotropic.count(alpha))
    throw AlgebraError("sl2_triplet needs an anisotropic root");
  auto [xid, yid] = first_paired(a, alpha);
  Scalar norm = d.induced(alpha, alpha);
  Scalar pairing = a.form(xid, yid);
  Sl2Triplet t;
  t.x = {{xid, Scalar(1)}};
  // x_{-alpha} scaled so [x, x_{-alpha}] = t_alpha, then y = (2/(a,a)) x_{-a}.
  t.y = {{yid, Scalar(2) / (norm * pairing)}};
  t.h = vector_scale(d.representatives.at(alpha), Scalar(2) / norm);
  require_bracket(a, t.x, t.y, t.h, "[x,y] = h");
  require_bracket(a, t.h, t.x, vector_scale(t.x, Scalar(2)), "[h,x] = 2x");
  require_bracket(a, t.h, t.y, vector_scale(t.y, Scalar(-2)), "[h,y] = -2y");
  return t;
}

HeisenbergTriplet heisenberg_triplet(const RootDatum& d, const GradedAlgebra& a,
                                     const Weight& delta) {
  if (weight_is_zero(delta) || !d.isotropic.count(delta))
    throw AlgebraError("heisenberg_triplet needs a nonzero isotropic root");
  auto [xid, yid] = first_paired(a, delta);
  Scalar pairing = a.form(xid, yid);
  HeisenbergTriplet t;
  t.x = {{xid, Scalar(1)}};
  t.y = {{yid, Scalar(1) / pairing}};
  t.t = d.representatives.at(delta);
  require_bracket(a, t.x, t.y, t.t, "[x,y] = t_delta");
  require_bracket(a, t.t, t.x, Vector{}, "[t,x] = 0");
  require_bracket(a, t.t, t.y, Vector{}, "[t,y] = 0");
  return t;
}

CheckReport check_dim_one(const RootDatum& d, const GradedAlgebra& a) {
  CheckReport rep;
  rep.check_name = "dim-one";
  auto decomp = root_decomposition(a);
  for (const auto& alpha : d.anisotropic) {
    std::size_t dim = decomp.at(alpha).size();
    if (dim != 1)
      rep.fail_with(weight_to_string(alpha) + ": dim L_alpha = " +
                    std::to_string(dim));
  }
  return rep;
}

CheckReport check_equal_length(const RootDatum& d) {
  CheckReport rep;
  rep.check_name = "equal-length";
  std::size_t tested = 0;
  for (const auto& alpha : d.anisotropic)
    for (const auto& beta : d.anisotropic) {
      if (!d.has_root(weight_add(alpha, beta))) continue;
      if (!d.has_root(weight_add(alpha, weight_negate(beta)))) continue;
      ++tested;
      if (d.induced(alpha, alpha) != d.induced(beta, beta))
        rep.fail_with(pair_witness(alpha, beta, "unequal norms"));
    }
  if (tested == 0) rep.notes.push_back("hypothesis never held: vacuous pass");
  return rep;
}

CheckReport check_root_multiples(const RootDatum& d, const Window& w) {
  CheckReport rep;
  rep.check_name = "root-multiples";
  rep.window = w.to_string();
  for (const auto& alpha : d.anisotropic) {
    for (long long k : {2LL, 3LL, -2LL, -3LL}) {
      Weight cand = weight_scale(alpha, Scalar(Rational(Int(k))));
      if (d.has_root(cand))
        rep.fail_with(weight_to_string(alpha) + ": " + std::to_string(k) +
                      "*alpha is a root");
    }
    for (int s : {1, -1}) {
      Weight half = weight_scale(alpha, Scalar(Rational(Int(s)) / Rational(Int(2))));
      if (d.has_root(half))
        rep.fail_with(weight_to_string(alpha) + ": half multiple is a root");
    }
  }
  return rep;
}

CheckReport check_irreducible(const RootDatum& d) {
  CheckReport rep;
  rep.check_name = "irreducible";
  if (d.anisotropic.empty()) {
    rep.notes.push_back("R^x empty: vacuous pass (null system)");
    return rep;
  }
  std::vector<Weight> anis(d.anisotropic.begin(), d.anisotropic.end());
  std::vector<int> comp(anis.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < anis.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < anis.size(); ++j) {
        if (comp[j] >= 0) continue;
        if (!d.induced(anis[i], anis[j]).is_zero()) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp > 1) {
    for (int c = 0; c < ncomp; ++c) {
      std::string members;
      for (std::size_t i = 0; i < anis.size(); ++i)
        if (comp[i] == c) members += weight_to_string(anis[i]) + " ";
      rep.fail_with("component " + std::to_string(c) + ": " + members);
    }
  }
  return rep;
}

CheckReport check_local_nilpotence(const RootDatum& d, const GradedAlgebra& a,
                                   std::size_t depth_bound) {
  CheckReport rep;
  rep.check_name = "local-nilpotence";
  rep.window = a.window().to_string();
  std::size_t escaped = 0;
  // Scan the basis directly (no eigenbasis validation) so deliberately
  // malformed inputs still reach the nilpotence probe.
  for (const auto& alpha : d.anisotropic) {
    std::vector<std::string> space;
    for (const auto& s : a.basis())
      if (s.weight == alpha) space.push_back(s.id);
    for (const auto& xid : space) {
      Vector x{{xid, Scalar(1)}};
      for (const auto& z : a.basis()) {
        Vector v{{z.id, Scalar(1)}};
        bool done = false;
        for (std::size_t step = 0; step < depth_bound; ++step) {
          auto next = a.bracket(x, v);
          if (!next) {
            ++escaped;
            done = true;
            break;
          }
          v = std::move(*next);
          if (vector_is_zero(v)) {
            done = true;
            break;
          }
        }
        if (!done)
          rep.fail_with("ad " + xid + " on " + z.id + " nonzero after " +
                        std::to_string(depth_bound) + " steps inside the window");
      }
    }
  }
  if (escaped)
    rep.notes.push_back(std::to_string(escaped) +
                        " iterations left the window (inconclusive there)");
  return rep;
}

CheckReport check_isotropic_orthogonal(const RootDatum& d) {
  CheckReport rep;
  rep.check_name = "isotropic-orthogonal";
  for (const auto& delta : d.isotropic)
    for (const auto& xi : d.roots)
      if (!d.induced(xi, delta).is_zero())
        rep.fail_with(pair_witness(xi, delta,
                                   "(xi, delta) = " + d.induced(xi, delta).to_string()));
  return rep;
}

CheckReport check_positive_norms(const RootDatum& d) {
  CheckReport rep;
  rep.check_name = "positive-norms";
  for (const auto& gamma : d.anisotropic) {
    Scalar norm = d.induced(gamma, gamma);
    if (!norm.is_rational() || norm.sign() <= 0)
      rep.fail_with(weight_to_string(gamma) + ": (gamma,gamma) = " +
                    norm.to_string());
  }
  return rep;
}

} // namespace leala
