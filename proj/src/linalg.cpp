#include "palg/linalg.hpp"

namespace palg {

Mat Mat::identity(size_t n, Field f) {
  Mat m(n, n, f);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
  Mat r(x.rows, y.cols, x.field);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < y.cols; ++j)
        if (!y.at(k, j).is_zero()) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

Mat mat_pow(Mat x, unsigned long e) {
  Mat r = Mat::identity(x.rows, x.field);
  while (e > 0) {
    if (e & 1) r = mat_mul(r, x);
    x = mat_mul(x, x);
    e >>= 1;
  }
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r(m.rows, Scalar::zero(m.field));
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

std::vector<size_t> rref(Mat& m) {
  if (!m.field.is_field()) throw std::invalid_argument("rref needs a field");
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows, m.cols + 1, m.field);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = rref(aug);
  for (size_t p : pivots)
    if (p == m.cols) return std::nullopt;  // inconsistent
  Vec x(m.cols, Scalar::zero(m.field));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

std::vector<Vec> nullspace(const Mat& m) {
  Mat e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols, Scalar::zero(m.field));
    v[c] = Scalar::one(m.field);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> row_basis(const std::vector<Vec>& rows, size_t cols, Field f) {
  Mat m(rows.size(), cols, f);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  auto pivots = rref(m);
  std::vector<Vec> basis;
  for (size_t i = 0; i < pivots.size(); ++i) {
    Vec v(cols, Scalar::zero(f));
    for (size_t j = 0; j < cols; ++j) v[j] = m.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& u, const std::vector<Vec>& w,
                                 size_t cols, Field f) {
  // Zassenhaus: row-reduce [U U; W 0]; rows with zero left half carry the
  // intersection in the right half.
  size_t n = u.size() + w.size();
  Mat m(n, 2 * cols, f);
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < cols; ++j) {
      m.at(i, j) = u[i][j];
      m.at(i, cols + j) = u[i][j];
    }
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(u.size() + i, j) = w[i][j];
  rref(m);
  std::vector<Vec> basis;
  for (size_t i = 0; i < n; ++i) {
    bool left_zero = true, right_zero = true;
    for (size_t j = 0; j < cols; ++j) {
      if (!m.at(i, j).is_zero()) left_zero = false;
      if (!m.at(i, cols + j).is_zero()) right_zero = false;
    }
    if (left_zero && !right_zero) {
      Vec v(cols, Scalar::zero(f));
      for (size_t j = 0; j < cols; ++j) v[j] = m.at(i, cols + j);
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, size_t cols, Field f) {
  Mat m(basis.size(), cols, f);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = basis[i][j];
  size_t r0 = rank(m);
  Mat m2(basis.size() + 1, cols, f);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m2.at(i, j) = basis[i][j];
  for (size_t j = 0; j < cols; ++j) m2.at(basis.size(), j) = v[j];
  return rank(m2) == r0;
}

}  // namespace palg
