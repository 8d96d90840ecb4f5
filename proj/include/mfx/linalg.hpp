#pragma once

// Dense exact linear algebra over a coefficient field.

#include "mfx/field.hpp"

#include <optional>
#include <vector>

namespace mfx {

template <Field K>
using Matrix = std::vector<std::vector<K>>;

template <Field K>
Matrix<K> zeros(std::size_t r, std::size_t c) {
  return Matrix<K>(r, std::vector<K>(c, K::zero()));
}

template <Field K>
Matrix<K> identity(std::size_t n) {
  auto m = zeros<K>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = K::one();
  return m;
}

template <Field K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  auto out = zeros<K>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
template <Field K>
std::vector<std::size_t> rref(Matrix<K>& a) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    K inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      K f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field K>
std::size_t rank(Matrix<K> a) {
  return rref(a).size();
}

/// Basis of {x : a x = 0}, as column vectors.
template <Field K>
std::vector<std::vector<K>> nullspace(Matrix<K> a, std::size_t cols) {
  auto piv = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols, K::zero());
    v[free] = K::one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with a x = b, if any.
template <Field K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Matrix<K> aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  std::vector<K> x(cols, K::zero());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) return std::nullopt;
    x[piv[r]] = aug[r][cols];
  }
  return x;
}

template <Field K>
K determinant(Matrix<K> a) {
  std::size_t n = a.size();
  K det = K::one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return K::zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    K inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      K f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

template <Field K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  std::size_t n = a.size();
  Matrix<K> aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, K::zero());
    aug[i][n + i] = K::one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
  Matrix<K> out = zeros<K>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

/// det(T*I - a), coefficients low to high, by evaluation at n+1 points and interpolation.
template <Field K>
std::vector<K> characteristic_polynomial(const Matrix<K>& a) {
  std::size_t n = a.size();
  std::vector<K> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    K t = K::from_int(static_cast<long>(k));
    Matrix<K> m = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? t : K::zero()) - a[i][j];
    xs.push_back(t);
    ys.push_back(determinant(m));
  }
  // Newton divided differences, then expand.
  std::vector<K> coef = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<K> poly{coef[n]};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<K> next(poly.size() + 1, K::zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += coef[k];
    poly = std::move(next);
  }
  detail::trim(poly);
  return poly;
}

}  // namespace mfx
