#include "leala/algebra.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

namespace leala {

GradeLabel GradeLabel::operator+(const GradeLabel& o) const {
  if (coords.size() != o.coords.size())
    throw AlgebraError("grade dimension mismatch");
  GradeLabel out;
  out.coords.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    out.coords[i] = coords[i] + o.coords[i];
  return out;
}

GradeLabel GradeLabel::operator-() const {
  GradeLabel out;
  out.coords.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] = -coords[i];
  return out;
}

std::string GradeLabel::to_string() const {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s << ",";
    s << coords[i];
  }
  s << ")";
  return s.str();
}

bool WeightLess::operator()(const Weight& a, const Weight& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = Scalar::compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool weight_is_zero(const Weight& w) {
  for (const auto& c : w)
    if (!c.is_zero()) return false;
  return true;
}

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw AlgebraError("weight dimension mismatch");
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight weight_negate(const Weight& a) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Weight weight_scale(const Weight& a, const Scalar& c) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s << ",";
    s << w[i].to_string();
  }
  s << "]";
  return s.str();
}

Vector vector_add(const Vector& a, const Vector& b) {
  Vector out = a;
  for (const auto& [id, c] : b) {
    auto it = out.find(id);
    if (it == out.end()) {
      out.emplace(id, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

Vector vector_scale(const Vector& a, const Scalar& c) {
  Vector out;
  if (c.is_zero()) return out;
  for (const auto& [id, x] : a) out.emplace(id, x * c);
  return out;
}

bool vector_is_zero(const Vector& v) { return v.empty(); }

std::string vector_to_string(const Vector& v) {
  if (v.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [id, c] : v) {
    if (!first) s << " + ";
    first = false;
    s << c.to_string() << "*" << id;
  }
  return s.str();
}

bool Window::contains(const GradeLabel& g) const {
  if (bounds.empty()) return true;
  if (g.coords.size() != bounds.size())
    throw AlgebraError("grade dimension does not match window");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    long long c = g.coords[i];
    if (c > bounds[i] || c < -bounds[i]) return false;
  }
  return true;
}

std::string Window::to_string() const {
  std::ostringstream s;
  s << "bounds=(";
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (i) s << ",";
    s << bounds[i];
  }
  s << ")";
  for (const auto& [k, v] : params) s << " " << k << "=" << v;
  return s.str();
}

const BasisSymbol& GradedAlgebra::symbol(const std::string& id) const {
  return basis_[index_of(id)];
}

bool GradedAlgebra::has_symbol(const std::string& id) const {
  return index_.count(id) != 0;
}

std::size_t GradedAlgebra::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw AlgebraError("unknown basis symbol: " + id);
  return it->second;
}

bool GradedAlgebra::is_cartan(const std::string& id) const {
  return std::find(cartan_.begin(), cartan_.end(), id) != cartan_.end();
}

std::optional<Vector> GradedAlgebra::bracket(const std::string& a,
                                             const std::string& b) const {
  const BasisSymbol& sa = symbol(a);
  const BasisSymbol& sb = symbol(b);
  if (a == b) return Vector{};
  bool flip = a > b;
  auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
  auto it = structure_.find(key);
  if (it != structure_.end())
    return flip ? vector_scale(it->second, Scalar(-1)) : it->second;
  // Absent entry: zero when the product grade is inside the window,
  // unknown when it escapes.
  if (window_.contains(sa.grade + sb.grade)) return Vector{};
  return std::nullopt;
}

std::optional<Vector> GradedAlgebra::bracket(const Vector& x,
                                             const Vector& y) const {
  Vector acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      auto term = bracket(a, b);
      if (!term) return std::nullopt;
      acc = vector_add(acc, vector_scale(*term, ca * cb));
    }
  return acc;
}

Scalar GradedAlgebra::form(const std::string& a, const std::string& b) const {
  index_of(a);
  index_of(b);
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = gram_.find(key);
  return it == gram_.end() ? Scalar(0) : it->second;
}

Scalar GradedAlgebra::form(const Vector& x, const Vector& y) const {
  Scalar acc(0);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) acc += ca * cb * form(a, b);
  return acc;
}

Scalar GradedAlgebra::evaluate_weight(const Weight& mu, const Vector& h) const {
  if (mu.size() != cartan_.size()) throw AlgebraError("weight dimension mismatch");
  Scalar acc(0);
  for (const auto& [id, c] : h) {
    auto it = std::find(cartan_.begin(), cartan_.end(), id);
    if (it == cartan_.end())
      throw AlgebraError("evaluate_weight: element not in the Cartan span");
    acc += c * mu[static_cast<std::size_t>(it - cartan_.begin())];
  }
  return acc;
}

AlgebraBuilder& AlgebraBuilder::add_symbol(std::string id, GradeLabel grade,
                                           Weight weight) {
  if (a_.index_.count(id)) throw AlgebraError("duplicate basis symbol: " + id);
  a_.index_.emplace(id, a_.basis_.size());
  a_.basis_.push_back({std::move(id), std::move(grade), std::move(weight)});
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_cartan(std::vector<std::string> ids) {
  a_.cartan_ = std::move(ids);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_bracket(const std::string& a,
                                            const std::string& b, Vector value) {
  if (a == b) throw AlgebraError("bracket of a symbol with itself is fixed at 0");
  for (auto it = value.begin(); it != value.end();)
    it = it->second.is_zero() ? value.erase(it) : std::next(it);
  bool flip = a > b;
  auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
  if (value.empty()) {
    a_.structure_.erase(key);
    return *this;
  }
  a_.structure_[key] = flip ? vector_scale(value, Scalar(-1)) : std::move(value);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_form(const std::string& a,
                                         const std::string& b, Scalar value) {
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (value.is_zero())
    a_.gram_.erase(key);
  else
    a_.gram_[key] = std::move(value);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_window(Window w) {
  a_.window_ = std::move(w);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_field(FieldKind f) {
  a_.field_ = f;
  return *this;
}

GradedAlgebra AlgebraBuilder::build() {
  std::size_t h = a_.cartan_.size();
  for (const auto& id : a_.cartan_) {
    a_.index_of(id);
  }
  std::size_t grade_dim = a_.basis_.empty() ? 0 : a_.basis_[0].grade.coords.size();
  for (const auto& s : a_.basis_) {
    if (s.weight.size() != h)
      throw AlgebraError("weight dimension of " + s.id +
                         " does not match the Cartan size");
    if (s.grade.coords.size() != grade_dim)
      throw AlgebraError("grade dimension of " + s.id + " is inconsistent");
  }
  for (const auto& [key, value] : a_.structure_) {
    a_.index_of(key.first);
    a_.index_of(key.second);
    for (const auto& [id, c] : value) a_.index_of(id);
  }
  for (const auto& [key, value] : a_.gram_) {
    a_.index_of(key.first);
    a_.index_of(key.second);
  }
  if (!a_.window_.bounds.empty() && a_.window_.bounds.size() != grade_dim)
    throw AlgebraError("window bound dimension is inconsistent");
  return std::move(a_);
}

namespace {

std::string triple_witness(const std::string& a, const std::string& b,
                           const std::string& c, const std::string& detail) {
  return "(" + a + "," + b + "," + c + "): " + detail;
}

std::vector<std::array<std::size_t, 3>> pick_triples(std::size_t n,
                                                     CheckMode mode,
                                                     std::size_t samples,
                                                     unsigned seed) {
  std::vector<std::array<std::size_t, 3>> out;
  if (mode == CheckMode::exhaustive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n ? n - 1 : 0);
    for (std::size_t s = 0; s < samples; ++s) {
      std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (i == j || j == k || i == k) continue;
      out.push_back({i, j, k});
    }
  }
  return out;
}

} // namespace

CheckReport check_jacobi(const GradedAlgebra& a, CheckMode mode,
                         std::size_t samples, unsigned seed) {
  CheckReport rep;
  rep.check_name = "jacobi";
  rep.window = a.window().to_string();
  std::size_t skipped = 0;
  const auto& basis = a.basis();
  for (auto [i, j, k] : pick_triples(basis.size(), mode, samples, seed)) {
    const auto& x = basis[i].id;
    const auto& y = basis[j].id;
    const auto& z = basis[k].id;
    auto xy = a.bracket(x, y);
    auto yz = a.bracket(y, z);
    auto zx = a.bracket(z, x);
    if (!xy || !yz || !zx) {
      ++skipped;
      continue;
    }
    auto t1 = a.bracket(*xy, Vector{{z, Scalar(1)}});
    auto t2 = a.bracket(*yz, Vector{{x, Scalar(1)}});
    auto t3 = a.bracket(*zx, Vector{{y, Scalar(1)}});
    if (!t1 || !t2 || !t3) {
      ++skipped;
      continue;
    }
    Vector sum = vector_add(vector_add(*t1, *t2), *t3);
    if (!vector_is_zero(sum)) {
      rep.fail_with(triple_witness(x, y, z, "jacobiator = " + vector_to_string(sum)));
      return rep;
    }
  }
  if (skipped)
    rep.notes.push_back(std::to_string(skipped) + " triples escaped the window");
  return rep;
}

CheckReport check_invariance(const GradedAlgebra& a, CheckMode mode,
                             std::size_t samples, unsigned seed) {
  CheckReport rep;
  rep.check_name = "invariance";
  rep.window = a.window().to_string();
  std::size_t skipped = 0;
  const auto& basis = a.basis();
  std::size_t n = basis.size();
  // Invariance B([x,y],z) = B(x,[y,z]) is checked on ordered triples; it
  // is not symmetric in its arguments, so all 3 rotations of each
  // unordered triple are covered (the rest follow from symmetry of B and
  // antisymmetry of the bracket).
  for (auto [i, j, k] : pick_triples(n, mode, samples, seed)) {
    std::array<std::array<std::size_t, 3>, 3> rots = {
        {{i, j, k}, {j, k, i}, {k, i, j}}};
    for (auto [p, q, r] : rots) {
      const auto& x = basis[p].id;
      const auto& y = basis[q].id;
      const auto& z = basis[r].id;
      auto xy = a.bracket(x, y);
      auto yz = a.bracket(y, z);
      if (!xy || !yz) {
        ++skipped;
        continue;
      }
      Scalar lhs = a.form(*xy, Vector{{z, Scalar(1)}});
      Scalar rhs = a.form(Vector{{x, Scalar(1)}}, *yz);
      if (lhs != rhs) {
        rep.fail_with(triple_witness(
            x, y, z,
            "B([x,y],z) = " + lhs.to_string() + " but B(x,[y,z]) = " +
                rhs.to_string()));
        return rep;
      }
    }
  }
  if (skipped)
    rep.notes.push_back(std::to_string(skipped) + " triples escaped the window");
  return rep;
}

CheckReport check_grading(const GradedAlgebra& a) {
  CheckReport rep;
  rep.check_name = "grading";
  rep.window = a.window().to_string();
  const auto& basis = a.basis();
  for (const auto& [key, value] : a.structure()) {
    const BasisSymbol& x = a.symbol(key.first);
    const BasisSymbol& y = a.symbol(key.second);
    GradeLabel g = x.grade + y.grade;
    Weight w = weight_add(x.weight, y.weight);
    for (const auto& [id, c] : value) {
      const BasisSymbol& r = a.symbol(id);
      if (r.grade != g)
        rep.fail_with("[" + key.first + "," + key.second + "] hits " + id +
                      " with grade " + r.grade.to_string() + " != " +
                      g.to_string());
      if (r.weight != w)
        rep.fail_with("[" + key.first + "," + key.second + "] hits " + id +
                      " with weight " + weight_to_string(r.weight) + " != " +
                      weight_to_string(w));
    }
  }
  for (const auto& [key, value] : a.gram()) {
    const BasisSymbol& x = a.symbol(key.first);
    const BasisSymbol& y = a.symbol(key.second);
    if (!weight_is_zero(weight_add(x.weight, y.weight)))
      rep.fail_with("B(" + key.first + "," + key.second +
                    ") != 0 across non-opposite weights");
  }
  // Eigenvector property: [h, x] = mu(h) x for every Cartan symbol h.
  for (const auto& hid : a.cartan()) {
    for (const auto& s : basis) {
      auto br = a.bracket(hid, s.id);
      if (!br) continue;
      Vector expected = vector_scale(
          Vector{{s.id, Scalar(1)}},
          a.evaluate_weight(s.weight, Vector{{hid, Scalar(1)}}));
      if (*br != expected)
        rep.fail_with("[" + hid + "," + s.id + "] = " + vector_to_string(*br) +
                      " is not the declared eigenvalue action");
    }
  }
  return rep;
}

std::map<Weight, std::vector<std::string>, WeightLess>
root_decomposition(const GradedAlgebra& a) {
  CheckReport grading = check_grading(a);
  if (grading.failed())
    throw AlgebraError("root_decomposition: not an ad-H eigenbasis: " +
                       grading.witnesses.front());
  std::map<Weight, std::vector<std::string>, WeightLess> out;
  for (const auto& s : a.basis()) out[s.weight].push_back(s.id);
  return out;
}

AdmissibleResult check_admissible(const GradedAlgebra& a) {
  AdmissibleResult result;
  CheckReport& rep = result.report;
  rep.check_name = "admissible";
  rep.window = a.window().to_string();

  auto decomp = root_decomposition(a);
  std::size_t h = a.cartan().size();

  // (A1) H self-centralizing: the zero weight class must be exactly H.
  Weight zero(h, Scalar(0));
  auto it0 = decomp.find(zero);
  std::vector<std::string> zero_class =
      it0 == decomp.end() ? std::vector<std::string>{} : it0->second;
  for (const auto& id : zero_class) {
    if (!a.is_cartan(id))
      rep.fail_with("(A1): " + id + " centralizes H but is not in H");
  }
  for (const auto& hid : a.cartan()) {
    if (!weight_is_zero(a.symbol(hid).weight))
      rep.fail_with("(A1): Cartan symbol " + hid + " has nonzero weight");
  }

  // (A2) nondegeneracy: the H x H block, and each L_xi x L_{-xi} pairing.
  ScalarMatrix hgram(h, std::vector<Scalar>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      hgram[i][j] = a.form(a.cartan()[i], a.cartan()[j]);
  if (!is_invertible(hgram))
    rep.fail_with("(A2): B restricted to H x H is degenerate");
  for (const auto& [xi, symbols] : decomp) {
    if (weight_is_zero(xi)) continue;
    auto itneg = decomp.find(weight_negate(xi));
    if (itneg == decomp.end()) {
      rep.fail_with("(A2): root " + weight_to_string(xi) +
                    " has no opposite root space in the window");
      continue;
    }
    const auto& opp = itneg->second;
    ScalarMatrix block(symbols.size(), std::vector<Scalar>(opp.size()));
    for (std::size_t i = 0; i < symbols.size(); ++i)
      for (std::size_t j = 0; j < opp.size(); ++j)
        block[i][j] = a.form(symbols[i], opp[j]);
    if (symbols.size() != opp.size() || !is_invertible(block))
      rep.fail_with("(A2): pairing L_xi x L_-xi degenerate at xi = " +
                    weight_to_string(xi));
  }

  // (A3) representatives: solve B(t, h_j) = xi(h_j) for t in H.
  if (!rep.failed()) {
    for (const auto& [xi, symbols] : decomp) {
      std::vector<Scalar> rhs(xi.begin(), xi.end());
      auto coeffs = solve(hgram, rhs);
      if (!coeffs) {
        rep.fail_with("(A3): no representative t_xi for xi = " +
                      weight_to_string(xi));
        continue;
      }
      Vector t;
      for (std::size_t k = 0; k < h; ++k)
        if (!(*coeffs)[k].is_zero()) t.emplace(a.cartan()[k], (*coeffs)[k]);
      result.representatives.emplace(xi, std::move(t));
    }
  }
  return result;
}

CheckReport check_pairing_identity(const GradedAlgebra& a,
                                   const AdmissibleResult& adm) {
  CheckReport rep;
  rep.check_name = "pairing-identity";
  rep.window = a.window().to_string();
  std::size_t skipped = 0;
  auto decomp = root_decomposition(a);
  for (const auto& [xi, symbols] : decomp) {
    if (weight_is_zero(xi)) continue;
    auto itneg = decomp.find(weight_negate(xi));
    if (itneg == decomp.end()) continue;
    auto itrep = adm.representatives.find(xi);
    if (itrep == adm.representatives.end()) continue;
    for (const auto& x : symbols)
      for (const auto& y : itneg->second) {
        auto br = a.bracket(x, y);
        if (!br) {
          ++skipped;
          continue;
        }
        Vector expected = vector_scale(itrep->second, a.form(x, y));
        if (*br != expected)
          rep.fail_with("[" + x + "," + y + "] = " + vector_to_string(*br) +
                        " != B(x,y) t_xi = " + vector_to_string(expected));
      }
  }
  if (skipped)
    rep.notes.push_back(std::to_string(skipped) + " pairs escaped the window");
  return rep;
}

} // namespace leala
