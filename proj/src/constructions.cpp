#include "leala/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace leala {

std::string series_name(Series s) {
  switch (s) {
  case Series::A: return "A";
  case Series::B: return "B";
  case Series::C: return "C";
  case Series::D: return "D";
  }
  return "?";
}

Scalar DiagonalPattern::entry(std::size_t i) const {
  if (i >= 1 && i <= head.size()) return head[i - 1];
  return intercept + slope * Scalar(Rational(Int(static_cast<long long>(i))));
}

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat zero_mat(std::size_t n) { return Mat(n, std::vector<Scalar>(n, Scalar(0))); }

// 1-based elementary matrix placement
void put(Mat& m, std::size_t i, std::size_t j, const Scalar& v) {
  m[i - 1][j - 1] = m[i - 1][j - 1] + v;
}

Mat commutator(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat r = zero_mat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero() && b[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        r[i][j] = r[i][j] + a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  return r;
}

Scalar trace_product(const Mat& a, const Mat& b) {
  Scalar s(0);
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) s = s + a[i][k] * b[k][i];
  return s;
}

bool mat_is_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

struct MatrixModel {
  std::size_t n = 0;
  std::vector<std::string> ids;
  std::vector<Mat> mats;
  std::vector<std::string> cartan_ids; // prefix of ids
  std::vector<Weight> weights;         // over cartan_ids order
  // expansion of [ids[i], ids[j]] for i < j
  std::map<std::pair<std::size_t, std::size_t>, Vector> structure;
};

// Decompose arbitrary matrices in the model basis via one exact solve per
// bracket; any non-membership is a construction bug and throws.
void finish_model(MatrixModel& m) {
  std::size_t dim = m.ids.size();
  ScalarMatrix flat(m.n * m.n, std::vector<Scalar>(dim, Scalar(0)));
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j)
        flat[i * m.n + j][b] = m.mats[b][i][j];

  auto decompose = [&](const Mat& x) -> Vector {
    if (mat_is_zero(x)) return {};
    std::vector<Scalar> rhs(m.n * m.n, Scalar(0));
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j) rhs[i * m.n + j] = x[i][j];
    auto sol = solve(flat, rhs);
    if (!sol) throw AlgebraError("matrix model not closed under bracket");
    Vector out;
    for (std::size_t b = 0; b < dim; ++b)
      if (!(*sol)[b].is_zero()) out[m.ids[b]] = (*sol)[b];
    return out;
  };

  std::size_t r = m.cartan_ids.size();
  m.weights.assign(dim, Weight(r, Scalar(0)));
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t k = 0; k < r; ++k) {
      Mat c = commutator(m.mats[k], m.mats[b]);
      if (mat_is_zero(c)) continue;
      Scalar ratio(0);
      for (std::size_t i = 0; i < m.n && ratio.is_zero(); ++i)
        for (std::size_t j = 0; j < m.n; ++j)
          if (!m.mats[b][i][j].is_zero()) {
            ratio = c[i][j] / m.mats[b][i][j];
            break;
          }
      for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
          if (c[i][j] != ratio * m.mats[b][i][j])
            throw AlgebraError("basis element " + m.ids[b] +
                               " is not an ad-diagonal eigenvector");
      m.weights[b][k] = ratio;
    }
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector v = decompose(commutator(m.mats[i], m.mats[j]));
      if (!v.empty()) m.structure[{i, j}] = std::move(v);
    }
}

std::string sep(std::size_t i) { return "_" + std::to_string(i); }
std::string sep(std::size_t i, std::size_t j) {
  return "_" + std::to_string(i) + "_" + std::to_string(j);
}

MatrixModel matrix_model(const SimpleType& t) {
  if (t.rank == 0 || t.rank > 8)
    throw AlgebraError("rank out of the supported range [1, 8]");
  if (t.series == Series::D && t.rank < 2)
    throw AlgebraError("series D needs rank >= 2");
  std::size_t r = t.rank;
  MatrixModel m;
  auto add = [&](const std::string& id, const Mat& mt) {
    m.ids.push_back(id);
    m.mats.push_back(mt);
  };
  if (t.series == Series::A) {
    m.n = r + 1;
    for (std::size_t i = 1; i <= r; ++i) {
      Mat h = zero_mat(m.n);
      put(h, i, i, Scalar(1));
      put(h, i + 1, i + 1, Scalar(-1));
      add("h" + sep(i), h);
      m.cartan_ids.push_back(m.ids.back());
    }
    for (std::size_t i = 1; i <= m.n; ++i)
      for (std::size_t j = 1; j <= m.n; ++j) {
        if (i == j) continue;
        Mat e = zero_mat(m.n);
        put(e, i, j, Scalar(1));
        add("e" + sep(i, j), e);
      }
    finish_model(m);
    return m;
  }
  // B: o(2r+1), C: sp(2r), D: o(2r); indices i and r+i are the split pair.
  m.n = (t.series == Series::B) ? 2 * r + 1 : 2 * r;
  for (std::size_t i = 1; i <= r; ++i) {
    Mat h = zero_mat(m.n);
    put(h, i, i, Scalar(1));
    put(h, r + i, r + i, Scalar(-1));
    add("h" + sep(i), h);
    m.cartan_ids.push_back(m.ids.back());
  }
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j) {
      if (i == j) continue;
      Mat a = zero_mat(m.n);
      put(a, i, j, Scalar(1));
      put(a, r + j, r + i, Scalar(-1));
      add("a" + sep(i, j), a);
    }
  if (t.series == Series::C) {
    for (std::size_t i = 1; i <= r; ++i)
      for (std::size_t j = i; j <= r; ++j) {
        Mat b = zero_mat(m.n);
        put(b, i, r + j, Scalar(1));
        if (j != i) put(b, j, r + i, Scalar(1));
        add("b" + sep(i, j), b);
        Mat c = zero_mat(m.n);
        put(c, r + i, j, Scalar(1));
        if (j != i) put(c, r + j, i, Scalar(1));
        add("c" + sep(i, j), c);
      }
  } else {
    for (std::size_t i = 1; i <= r; ++i)
      for (std::size_t j = i + 1; j <= r; ++j) {
        Mat b = zero_mat(m.n);
        put(b, i, r + j, Scalar(1));
        put(b, j, r + i, Scalar(-1));
        add("b" + sep(i, j), b);
        Mat c = zero_mat(m.n);
        put(c, r + i, j, Scalar(1));
        put(c, r + j, i, Scalar(-1));
        add("c" + sep(i, j), c);
      }
  }
  if (t.series == Series::B) {
    for (std::size_t i = 1; i <= r; ++i) {
      Mat u = zero_mat(m.n);
      put(u, i, 2 * r + 1, Scalar(1));
      put(u, 2 * r + 1, r + i, Scalar(-1));
      add("u" + sep(i), u);
      Mat v = zero_mat(m.n);
      put(v, r + i, 2 * r + 1, Scalar(1));
      put(v, 2 * r + 1, i, Scalar(-1));
      add("v" + sep(i), v);
    }
  }
  finish_model(m);
  return m;
}

std::string coords_suffix(const std::vector<long long>& v) {
  std::string s = "@";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::vector<long long>> grade_box(std::size_t k, long long w) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(k, -w);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < k && cur[i] == w) cur[i++] = -w;
    if (i == k) break;
    ++cur[i];
  }
  return out;
}

Scalar phi_of(const GroupDatum& lambda, const std::vector<long long>& v) {
  Scalar s(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    s = s + Scalar(Rational(Int(v[i]))) * lambda.phi_values[i];
  return s;
}

void validate_group(const GroupDatum& lambda, bool allow_dependent) {
  if (lambda.generators == 0 ||
      lambda.phi_values.size() != lambda.generators)
    throw AlgebraError("group datum needs one scalar per generator");
  if (lambda.window < 0) throw AlgebraError("negative window");
  if (!allow_dependent && !q_linear_independent(lambda.phi_values))
    throw AlgebraError(
        "dependent homomorphism values: the degree map is not injective");
}

bool any_non_rational(const std::vector<Scalar>& vals) {
  for (const auto& v : vals)
    if (!v.is_rational()) return true;
  return false;
}

// Shared assembly for the loop algebra, optionally glued to extra null
// directions n@delta#i that centralize the matrix part.
GradedAlgebra loop_assemble(const SimpleType& g, const GroupDatum& lambda,
                            long long null_bound, std::size_t null_dims,
                            const std::string& label) {
  MatrixModel m = matrix_model(g);
  std::size_t k = lambda.generators;
  long long w = lambda.window;
  std::size_t r = m.cartan_ids.size();
  std::size_t wlen = r + 2;

  AlgebraBuilder b;
  auto grades = grade_box(k, w);
  std::vector<long long> zero(k, 0);

  auto loop_id = [&](std::size_t base, const std::vector<long long>& lam) {
    return m.ids[base] + coords_suffix(lam);
  };
  for (const auto& lam : grades) {
    GradeLabel gl(lam);
    gl.tag = phi_of(lambda, lam);
    for (std::size_t base = 0; base < m.ids.size(); ++base) {
      Weight wt(wlen, Scalar(0));
      for (std::size_t c = 0; c < r; ++c) wt[c] = m.weights[base][c];
      wt[r + 1] = phi_of(lambda, lam);
      b.add_symbol(loop_id(base, lam), gl, std::move(wt));
    }
  }
  b.add_symbol("c", GradeLabel(zero), Weight(wlen, Scalar(0)));
  b.add_symbol("d", GradeLabel(zero), Weight(wlen, Scalar(0)));

  std::vector<std::string> cartan;
  for (std::size_t c = 0; c < r; ++c) cartan.push_back(loop_id(c, zero));
  cartan.push_back("c");
  cartan.push_back("d");
  b.set_cartan(cartan);

  auto in_window = [&](const std::vector<long long>& v) {
    for (auto x : v)
      if (x < -w || x > w) return false;
    return true;
  };

  // [x@lam, y@mu] = [x,y]@(lam+mu) + delta_{lam+mu,0} phi(lam) tr(xy) c
  std::size_t dim = m.ids.size();
  for (std::size_t gi = 0; gi < grades.size(); ++gi)
    for (std::size_t gj = gi; gj < grades.size(); ++gj) {
      const auto& lam = grades[gi];
      const auto& mu = grades[gj];
      std::vector<long long> sum(k);
      bool zero_sum = true;
      for (std::size_t i = 0; i < k; ++i) {
        sum[i] = lam[i] + mu[i];
        if (sum[i] != 0) zero_sum = false;
      }
      if (!in_window(sum)) continue;
      for (std::size_t bi = 0; bi < dim; ++bi) {
        std::size_t bj0 = (gi == gj) ? bi : 0;
        for (std::size_t bj = bj0; bj < dim; ++bj) {
          if (gi == gj && bi == bj) continue;
          Vector val;
          Scalar sign(1);
          const Vector* st = nullptr;
          if (bi < bj) {
            auto it = m.structure.find({bi, bj});
            if (it != m.structure.end()) st = &it->second;
          } else if (bi > bj) {
            auto it = m.structure.find({bj, bi});
            if (it != m.structure.end()) st = &it->second;
            sign = Scalar(-1);
          }
          if (st)
            for (const auto& [id, cf] : *st) val[id + coords_suffix(sum)] = sign * cf;
          if (zero_sum) {
            Scalar tr = trace_product(m.mats[bi], m.mats[bj]);
            if (!tr.is_zero()) {
              Scalar coc = phi_of(lambda, lam) * tr;
              if (!coc.is_zero()) val["c"] = val.count("c") ? val["c"] + coc : coc;
            }
          }
          if (!val.empty()) b.set_bracket(loop_id(bi, lam), loop_id(bj, mu), val);
        }
      }
    }
  for (const auto& lam : grades) {
    Scalar ph = phi_of(lambda, lam);
    if (ph.is_zero()) continue;
    for (std::size_t base = 0; base < dim; ++base) {
      std::string id = loop_id(base, lam);
      b.set_bracket("d", id, Vector{{id, ph}});
    }
  }

  // form: B(x@lam, y@mu) = delta_{lam+mu,0} tr(xy), B(c,d) = 1
  for (const auto& lam : grades) {
    std::vector<long long> neg(k);
    for (std::size_t i = 0; i < k; ++i) neg[i] = -lam[i];
    if (neg < lam) continue;
    for (std::size_t bi = 0; bi < dim; ++bi)
      for (std::size_t bj = (lam == neg ? bi : std::size_t{0}); bj < dim; ++bj) {
        Scalar tr = trace_product(m.mats[bi], m.mats[bj]);
        if (!tr.is_zero()) b.set_form(loop_id(bi, lam), loop_id(bj, neg), tr);
      }
  }
  b.set_form("c", "d", Scalar(1));

  // glued null directions, graded along the first generator only
  for (long long dgr = 1; dgr <= null_bound; ++dgr) {
    std::vector<long long> dl(zero), dln(zero);
    dl[0] = dgr;
    dln[0] = -dgr;
    Scalar ph = phi_of(lambda, dl);
    for (std::size_t i = 1; i <= null_dims; ++i) {
      std::string pid = "n" + coords_suffix(dl) + "#" + std::to_string(i);
      std::string nid = "n" + coords_suffix(dln) + "#" + std::to_string(i);
      Weight wp(wlen, Scalar(0)), wn(wlen, Scalar(0));
      wp[r + 1] = ph;
      wn[r + 1] = -ph;
      GradeLabel gp(dl), gn(dln);
      gp.tag = ph;
      gn.tag = -ph;
      b.add_symbol(pid, gp, wp);
      b.add_symbol(nid, gn, wn);
      b.set_bracket(pid, nid, Vector{{"c", ph}});
      b.set_bracket("d", pid, Vector{{pid, ph}});
      b.set_bracket("d", nid, Vector{{nid, -ph}});
      b.set_form(pid, nid, Scalar(1));
    }
  }

  Window win;
  win.bounds = std::vector<long long>(k, w);
  win.params["construction"] = label;
  win.params["type"] = series_name(g.series) + std::to_string(g.rank);
  b.set_window(win);
  b.set_field(any_non_rational(lambda.phi_values) ? FieldKind::Qt
                                                  : FieldKind::Q);
  return b.build();
}

} // namespace

GradedAlgebra build_split_simple(const SimpleType& t) {
  MatrixModel m = matrix_model(t);
  AlgebraBuilder b;
  std::size_t dim = m.ids.size();
  for (std::size_t i = 0; i < dim; ++i)
    b.add_symbol(m.ids[i], GradeLabel{}, m.weights[i]);
  b.set_cartan(m.cartan_ids);
  for (const auto& [pr, v] : m.structure)
    b.set_bracket(m.ids[pr.first], m.ids[pr.second], v);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Scalar tr = trace_product(m.mats[i], m.mats[j]);
      if (!tr.is_zero()) b.set_form(m.ids[i], m.ids[j], tr);
    }
  Window win;
  win.params["construction"] = "split-simple";
  win.params["type"] = series_name(t.series) + std::to_string(t.rank);
  b.set_window(win);
  b.set_field(FieldKind::Q);
  return b.build();
}

GradedAlgebra build_loop_eala(const SimpleType& g, const GroupDatum& lambda,
                              bool allow_dependent_phi,
                              bool allow_degenerate_window) {
  validate_group(lambda, allow_dependent_phi);
  if (lambda.window == 0 && !allow_degenerate_window)
    throw AlgebraError("window 0 collapses the loop directions, so the "
                       "degree derivation acts trivially; pass the "
                       "degenerate-window flag to build it anyway");
  return loop_assemble(g, lambda, 0, 0, "loop");
}

GradedAlgebra
build_heisenberg_null(const GroupDatum& lambda,
                      const std::vector<std::vector<long long>>& s,
                      const std::map<std::vector<long long>, std::size_t>& dims) {
  validate_group(lambda, false);
  std::size_t k = lambda.generators;
  std::vector<long long> zero(k, 0);
  std::set<std::vector<long long>> S(s.begin(), s.end());
  if (!S.count(zero)) throw AlgebraError("support set must contain 0");
  auto dim_of = [&](const std::vector<long long>& d) -> std::size_t {
    auto it = dims.find(d);
    return it == dims.end() ? 1 : it->second;
  };
  for (const auto& d : S) {
    if (d.size() != k) throw AlgebraError("support degree of wrong rank");
    std::vector<long long> nd(k);
    for (std::size_t i = 0; i < k; ++i) nd[i] = -d[i];
    if (!S.count(nd) || dim_of(d) != dim_of(nd))
      throw AlgebraError("support set and multiplicities must be symmetric");
    if (dim_of(d) == 0) throw AlgebraError("zero multiplicity in support");
  }

  AlgebraBuilder b;
  b.add_symbol("c", GradeLabel(zero), Weight{Scalar(0), Scalar(0)});
  b.add_symbol("d", GradeLabel(zero), Weight{Scalar(0), Scalar(0)});
  b.set_cartan({"c", "d"});
  b.set_form("c", "d", Scalar(1));
  for (const auto& d : S) {
    if (d == zero) continue;
    Scalar ph = phi_of(lambda, d);
    GradeLabel gl(d);
    gl.tag = ph;
    for (std::size_t i = 1; i <= dim_of(d); ++i) {
      std::string id = "x" + coords_suffix(d) + "#" + std::to_string(i);
      b.add_symbol(id, gl, Weight{Scalar(0), ph});
      b.set_bracket("d", id, Vector{{id, ph}});
    }
    std::vector<long long> nd(k);
    for (std::size_t i = 0; i < k; ++i) nd[i] = -d[i];
    if (nd < d) continue;
    for (std::size_t i = 1; i <= dim_of(d); ++i) {
      std::string pid = "x" + coords_suffix(d) + "#" + std::to_string(i);
      std::string nid = "x" + coords_suffix(nd) + "#" + std::to_string(i);
      b.set_bracket(pid, nid, Vector{{"c", ph}});
      b.set_form(pid, nid, Scalar(1));
    }
  }
  Window win;
  win.params["construction"] = "heisenberg-null";
  b.set_window(win);
  b.set_field(any_non_rational(lambda.phi_values) ? FieldKind::Qt
                                                  : FieldKind::Q);
  return b.build();
}

GradedAlgebra build_witt_null(std::size_t n, long long window,
                              WittCocycle cocycle) {
  if (n < 2)
    throw AlgebraError("one variable leaves no divergence-zero fields "
                       "outside degree 0; need n >= 2");
  if (n > 4 || window < 1 || window > 4)
    throw AlgebraError("witt parameters out of the supported range");

  auto grades = grade_box(n, window);
  std::vector<long long> zero(n, 0);
  auto pivot = [&](const std::vector<long long>& a) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0) return i;
    return n; // degree 0 has no pivot
  };
  auto wid = [&](const std::vector<long long>& a, std::size_t i) {
    return "w" + coords_suffix(a) + "#" + std::to_string(i + 1);
  };
  auto yid = [&](const std::vector<long long>& a, std::size_t i) {
    return "y" + coords_suffix(a) + "#" + std::to_string(i + 1);
  };
  auto sc = [](long long v) { return Scalar(Rational(Int(v))); };

  // elements are kept as coefficient vectors: a W element at degree a is
  // sum v_i t^a d_i with v.a = 0 (except at degree 0); a Y element is a
  // functional sum c_i t^a delta_i taken mod c_a = sum a_i delta_i.
  auto w_vec = [&](const std::vector<long long>& a, std::size_t i) {
    std::vector<Scalar> v(n, Scalar(0));
    std::size_t p = pivot(a);
    if (p == n) {
      v[i] = Scalar(1);
    } else {
      v[i] = sc(a[p]);
      v[p] = v[p] - sc(a[i]);
    }
    return v;
  };
  auto pair_of = [&](const std::vector<Scalar>& c, const std::vector<Scalar>& v) {
    Scalar s(0);
    for (std::size_t i = 0; i < n; ++i) s = s + c[i] * v[i];
    return s;
  };
  auto decompose_w = [&](const std::vector<long long>& a,
                         const std::vector<Scalar>& v) {
    Vector out;
    std::size_t p = pivot(a);
    if (p == n) {
      for (std::size_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) out[wid(a, i)] = v[i];
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      Scalar cf = v[i] / sc(a[p]);
      if (!cf.is_zero()) out[wid(a, i)] = cf;
    }
    return out;
  };
  auto decompose_y = [&](const std::vector<long long>& a,
                         std::vector<Scalar> c) {
    Vector out;
    std::size_t p = pivot(a);
    if (p != n && !c[p].is_zero()) {
      Scalar f = c[p] / sc(a[p]);
      for (std::size_t i = 0; i < n; ++i) c[i] = c[i] - f * sc(a[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      if (!c[i].is_zero()) out[yid(a, i)] = c[i];
    }
    return out;
  };

  AlgebraBuilder b;
  std::vector<std::string> cartan;
  for (const auto& a : grades) {
    GradeLabel gl(a);
    std::size_t p = pivot(a);
    Weight wt(2 * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) wt[i] = sc(a[i]);
    for (std::size_t i = 0; i < n; ++i) {
      if (p != n && i == p) continue;
      b.add_symbol(wid(a, i), gl, wt);
      b.add_symbol(yid(a, i), gl, wt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) cartan.push_back(wid(zero, i));
  for (std::size_t i = 0; i < n; ++i) cartan.push_back(yid(zero, i));
  b.set_cartan(cartan);

  auto in_window = [&](const std::vector<long long>& v) {
    for (auto x : v)
      if (x < -window || x > window) return false;
    return true;
  };
  auto eval_deg = [&](const std::vector<Scalar>& v,
                      const std::vector<long long>& a) {
    Scalar s(0);
    for (std::size_t i = 0; i < n; ++i) s = s + v[i] * sc(a[i]);
    return s;
  };

  // every unordered pair of basis symbols; kind 0 = W, 1 = Y
  struct Sym {
    std::size_t grade_index;
    int kind;
    std::size_t i;
    std::string id;
  };
  std::vector<Sym> syms;
  for (std::size_t g = 0; g < grades.size(); ++g) {
    std::size_t p = pivot(grades[g]);
    for (std::size_t i = 0; i < n; ++i) {
      if (p != n && i == p) continue;
      syms.push_back({g, 0, i, wid(grades[g], i)});
      syms.push_back({g, 1, i, yid(grades[g], i)});
    }
  }
  for (std::size_t s1 = 0; s1 < syms.size(); ++s1)
    for (std::size_t s2 = s1 + 1; s2 < syms.size(); ++s2) {
      const Sym& x = syms[s1];
      const Sym& y = syms[s2];
      const auto& a = grades[x.grade_index];
      const auto& bb = grades[y.grade_index];
      std::vector<long long> g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = a[i] + bb[i];
      if (!in_window(g)) continue;
      if (x.kind == 1 && y.kind == 1) continue; // [Y, Y] = 0
      Vector val;
      if (x.kind == 0 && y.kind == 0) {
        auto d1 = w_vec(a, x.i);
        auto d2 = w_vec(bb, y.i);
        Scalar f1 = eval_deg(d1, bb); // d(b)
        Scalar f2 = eval_deg(d2, a);  // d'(a)
        std::vector<Scalar> res(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
          res[i] = f1 * d2[i] - f2 * d1[i];
        val = decompose_w(g, res);
        if (cocycle == WittCocycle::moody_rao) {
          Scalar f = f2 * f1; // d'(a) d(b)
          if (!f.is_zero()) {
            std::vector<Scalar> cv(n, Scalar(0));
            for (std::size_t i = 0; i < n; ++i) cv[i] = f * sc(a[i] - bb[i]);
            for (const auto& [id, cf] : decompose_y(g, cv)) {
              auto it = val.find(id);
              if (it == val.end())
                val[id] = cf;
              else if ((it->second = it->second + cf).is_zero())
                val.erase(it);
            }
          }
        }
      } else {
        // one W, one Y; orient as [t^a d, t^b c]
        bool flipped = (x.kind == 1);
        const auto& wa = flipped ? bb : a;
        const auto& yb = flipped ? a : bb;
        auto d = w_vec(wa, flipped ? y.i : x.i);
        std::vector<Scalar> c(n, Scalar(0));
        c[flipped ? x.i : y.i] = Scalar(1);
        Scalar cd = pair_of(c, d);
        Scalar db = eval_deg(d, yb);
        std::vector<Scalar> res(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
          res[i] = cd * sc(wa[i]) + db * c[i];
        val = decompose_y(g, res);
        if (flipped) {
          for (auto& [id, cf] : val) cf = -cf;
        }
      }
      if (!val.empty()) b.set_bracket(x.id, y.id, val);
    }

  // B(t^a d, t^{-a} c) = c(d); everything else pairs to zero
  for (const auto& a : grades) {
    std::vector<long long> na(n);
    for (std::size_t i = 0; i < n; ++i) na[i] = -a[i];
    std::size_t p = pivot(a);
    for (std::size_t i = 0; i < n; ++i) {
      if (p != n && i == p) continue;
      auto d = w_vec(a, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (p != n && j == p) continue;
        std::vector<Scalar> c(n, Scalar(0));
        c[j] = Scalar(1);
        Scalar v = pair_of(c, d);
        if (!v.is_zero()) b.set_form(wid(a, i), yid(na, j), v);
      }
    }
  }

  Window win;
  win.bounds = std::vector<long long>(n, window);
  win.params["construction"] = "witt-null";
  win.params["cocycle"] =
      (cocycle == WittCocycle::moody_rao) ? "moody-rao" : "trivial";
  b.set_window(win);
  b.set_field(FieldKind::Q);
  return b.build();
}

Tower build_nullity_zero(Series series, const std::vector<std::size_t>& ranks,
                         const std::vector<DiagonalPattern>& patterns,
                         std::size_t z_dim, const Scalar& u,
                         const ScalarMatrix& psi) {
  if (u.is_zero()) throw AlgebraError("form scale u must be nonzero");
  if (ranks.empty()) throw AlgebraError("empty rank ladder");
  for (std::size_t i = 1; i < ranks.size(); ++i)
    if (ranks[i] <= ranks[i - 1])
      throw AlgebraError("rank ladder must be strictly increasing");
  if (series == Series::A)
    for (const auto& p : patterns)
      if (p.slope.is_zero())
        throw AlgebraError("eventually constant diagonal is almost scalar "
                           "and gives no outer derivation");
  std::size_t dz = patterns.size() + z_dim;
  if (psi.size() != dz)
    throw AlgebraError("psi must be square on the derivation+center block");
  for (std::size_t i = 0; i < dz; ++i) {
    if (psi[i].size() != dz)
      throw AlgebraError("psi must be square on the derivation+center block");
    for (std::size_t j = 0; j < dz; ++j)
      if (psi[i][j] != psi[j][i]) throw AlgebraError("psi must be symmetric");
  }
  if (z_dim > 0 && dz > 0) {
    // refuse central directions that meet the radical of psi
    auto ker = kernel(psi);
    if (!ker.empty()) {
      ScalarMatrix dblock;
      for (const auto& v : ker)
        dblock.emplace_back(v.begin(), v.begin() + patterns.size());
      if (rank(dblock) < ker.size())
        throw AlgebraError("center meets the radical of psi, so the form "
                           "degenerates; shrink Z or fix psi");
    }
  }

  bool rational = u.is_rational();
  for (const auto& row : psi)
    for (const auto& v : row)
      if (!v.is_rational()) rational = false;

  Tower tw;
  tw.series = series;
  tw.ranks = ranks;
  tw.patterns = patterns;
  tw.z_dim = z_dim;
  tw.u = u;
  tw.psi = psi;

  for (std::size_t rk : ranks) {
    SimpleType t{series, rk};
    MatrixModel m = matrix_model(t);
    // the diagonal matrix of each pattern at this truncation
    std::vector<std::vector<Scalar>> diags;
    for (const auto& p : patterns) {
      std::vector<Scalar> dg(m.n, Scalar(0));
      if (series == Series::A) {
        for (std::size_t i = 1; i <= m.n; ++i) dg[i - 1] = p.entry(i);
      } else {
        for (std::size_t i = 1; i <= rk; ++i) {
          dg[i - 1] = p.entry(i);
          dg[rk + i - 1] = -p.entry(i);
        }
      }
      for (const auto& v : dg)
        if (!v.is_rational()) rational = false;
      diags.push_back(std::move(dg));
    }

    std::size_t r = m.cartan_ids.size();
    std::size_t wlen = r + patterns.size() + z_dim;
    AlgebraBuilder b;
    std::vector<std::string> cartan = m.cartan_ids;
    for (std::size_t j = 0; j < patterns.size(); ++j)
      cartan.push_back("der" + sep(j + 1));
    for (std::size_t j = 0; j < z_dim; ++j)
      cartan.push_back("z" + sep(j + 1));

    // eigenvalue of ad(diag) on a basis matrix: (dg_i - dg_j) on entry (i,j)
    auto eig = [&](const std::vector<Scalar>& dg, const Mat& x) {
      Scalar val(0);
      bool found = false;
      for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
          if (x[i][j].is_zero()) continue;
          Scalar e = dg[i] - dg[j];
          if (!found) {
            val = e;
            found = true;
          } else if (e != val) {
            throw AlgebraError("diagonal pattern does not act diagonally");
          }
        }
      return val;
    };

    std::vector<std::vector<Scalar>> dweights(m.ids.size());
    for (std::size_t i = 0; i < m.ids.size(); ++i)
      for (const auto& dg : diags) dweights[i].push_back(eig(dg, m.mats[i]));

    for (std::size_t i = 0; i < m.ids.size(); ++i) {
      Weight wt(wlen, Scalar(0));
      for (std::size_t c = 0; c < r; ++c) wt[c] = m.weights[i][c];
      for (std::size_t j = 0; j < patterns.size(); ++j)
        wt[r + j] = dweights[i][j];
      b.add_symbol(m.ids[i], GradeLabel{}, wt);
    }
    for (std::size_t j = 0; j < patterns.size(); ++j)
      b.add_symbol("der" + sep(j + 1), GradeLabel{}, Weight(wlen, Scalar(0)));
    for (std::size_t j = 0; j < z_dim; ++j)
      b.add_symbol("z" + sep(j + 1), GradeLabel{}, Weight(wlen, Scalar(0)));
    b.set_cartan(cartan);

    for (const auto& [pr, v] : m.structure)
      b.set_bracket(m.ids[pr.first], m.ids[pr.second], v);
    for (std::size_t j = 0; j < patterns.size(); ++j)
      for (std::size_t i = 0; i < m.ids.size(); ++i)
        if (!dweights[i][j].is_zero())
          b.set_bracket("der" + sep(j + 1), m.ids[i],
                        Vector{{m.ids[i], dweights[i][j]}});

    for (std::size_t i = 0; i < m.ids.size(); ++i)
      for (std::size_t j = i; j < m.ids.size(); ++j) {
        Scalar tr = u * trace_product(m.mats[i], m.mats[j]);
        if (!tr.is_zero()) b.set_form(m.ids[i], m.ids[j], tr);
      }
    // invariance forces B(der, x) = u tr(diag * x) on the matrix part
    for (std::size_t j = 0; j < patterns.size(); ++j)
      for (std::size_t i = 0; i < m.ids.size(); ++i) {
        Scalar v(0);
        for (std::size_t a = 0; a < m.n; ++a)
          v = v + diags[j][a] * m.mats[i][a][a];
        if (!v.is_zero()) b.set_form("der" + sep(j + 1), m.ids[i], u * v);
      }
    for (std::size_t i = 0; i < dz; ++i)
      for (std::size_t j = i; j < dz; ++j)
        if (!psi[i][j].is_zero()) b.set_form(cartan[r + i], cartan[r + j], psi[i][j]);

    Window win;
    win.params["construction"] = "nullity-zero-level";
    win.params["type"] = series_name(series) + std::to_string(rk);
    b.set_window(win);
    b.set_field(rational ? FieldKind::Q : FieldKind::Qt);
    tw.levels.push_back(b.build());
  }
  return tw;
}

GradedAlgebra build_indecomposable_not_tame(long long loop_window,
                                            long long null_bound) {
  if (loop_window < 1) throw AlgebraError("loop window must be at least 1");
  if (null_bound < 0 || null_bound > loop_window)
    throw AlgebraError("null support must sit inside the loop window");
  GroupDatum lambda{1, {Scalar(1)}, loop_window};
  return loop_assemble(SimpleType{Series::A, 1}, lambda, null_bound, 1,
                       "loop-plus-null");
}

} // namespace leala
