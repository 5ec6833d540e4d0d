#pragma once

#include <cstddef>
#include <vector>

#include "hypoly/scalar.hpp"

namespace hypoly {

using Vec = std::vector<ExactScalar>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n, ExactScalar(0)); }

inline Mat identity_mat(std::size_t n) {
  Mat m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ExactScalar(1);
  return m;
}

inline Vec vec_add(const Vec& u, const Vec& v) {
  Vec r(u);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
  return r;
}

inline Vec vec_sub(const Vec& u, const Vec& v) {
  Vec r(u);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= v[i];
  return r;
}

inline Vec vec_scale(const ExactScalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

inline bool vec_eq(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return false;
  return true;
}

inline bool vec_eq_neg(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != -v[i]) return false;
  return true;
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r = zero_vec(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat r(n, zero_vec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

inline Mat mat_transpose(const Mat& a) {
  std::size_t n = a.size(), m = a[0].size();
  Mat r(m, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

inline bool mat_eq(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!vec_eq(a[i], b[i])) return false;
  return true;
}

/// Row-reduces a copy and returns the rank.
inline int mat_rank(Mat m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    ExactScalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      ExactScalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Basis of the solution space of rows * x = 0.
inline std::vector<Vec> mat_nullspace(Mat m) {
  if (m.empty()) return {};
  std::size_t rows = m.size(), cols = m[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    ExactScalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      ExactScalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v = zero_vec(cols);
    v[free_c] = ExactScalar(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -m[i][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix; throws on singular input.
inline Mat mat_inverse(Mat m) {
  std::size_t n = m.size();
  Mat inv = identity_mat(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    ExactScalar f = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      ExactScalar g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

/// Lexicographic structural comparison; used for canonical ordering only.
inline int vec_compare(const Vec& u, const Vec& v) {
  for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
    int c = u[i].compare_structural(v[i]);
    if (c != 0) return c;
  }
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  return 0;
}

}  // namespace hypoly
