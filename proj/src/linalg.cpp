#include "leala/linalg.hpp"

namespace leala {

std::vector<std::size_t> rref(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Scalar inv = m[r][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Scalar f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rank(const ScalarMatrix& m) {
  ScalarMatrix copy = m;
  return rref(copy).size();
}

std::size_t rank(const RationalMatrix& m) {
  ScalarMatrix s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    s[i].assign(m[i].begin(), m[i].end());
  return rank(s);
}

Scalar determinant(ScalarMatrix m) {
  std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      std::swap(m[col], m[p]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      Scalar f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a,
                                         const std::vector<Scalar>& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  ScalarMatrix aug(rows, std::vector<Scalar>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Scalar> x(cols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  ScalarMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free_col] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_invertible(const ScalarMatrix& m) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  return !determinant(m).is_zero();
}

ScalarMatrix transpose(const ScalarMatrix& m) {
  if (m.empty()) return {};
  ScalarMatrix out(m[0].size(), std::vector<Scalar>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  std::size_t n = a.size();
  std::size_t k = b.size();
  std::size_t p = b.empty() ? 0 : b[0].size();
  ScalarMatrix out(n, std::vector<Scalar>(p, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  return out;
}

std::vector<Scalar> apply(const ScalarMatrix& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> out(a.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) out[i] += a[i][j] * x[j];
  return out;
}

std::size_t integer_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // Euclidean elimination keeps everything in Z.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        if (best == rows || abs(m[i][col]) < abs(m[best][col])) best = i;
      }
      if (best == rows) break;
      std::swap(m[r], m[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        Int q = m[i][col] / m[r][col];
        for (std::size_t j = col; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) {
        ++r;
        break;
      }
    }
  }
  return r;
}

} // namespace leala
