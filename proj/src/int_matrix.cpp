#include "palg/int_matrix.hpp"

#include <algorithm>

namespace palg {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix int_mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("int_mat_mul shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

BigInt determinant(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return n == 0 ? BigInt(1) : BigInt(sign) * m.at(n - 1, n - 1);
}

namespace {

struct Snf {
  IntMatrix m, u, v;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(size_t dst, size_t src, const BigInt& f) {  // row dst += f * row src
    for (size_t c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(size_t dst, size_t src, const BigInt& f) {
    for (size_t r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
    for (size_t r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  Snf s{input, IntMatrix::identity(input.rows), IntMatrix::identity(input.cols)};
  size_t n = std::min(input.rows, input.cols);

  for (size_t t = 0; t < n; ++t) {
  redo:
    // Find a smallest-magnitude nonzero pivot in the trailing block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < input.rows; ++i)
      for (size_t j = t; j < input.cols; ++j) {
        const BigInt& e = s.m.at(i, j);
        if (e == 0) continue;
        if (!found || abs(e) < abs(s.m.at(pi, pj))) {
          pi = i; pj = j; found = true;
        }
      }
    if (!found) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (size_t i = t + 1; i < input.rows; ++i) {
        if (s.m.at(i, t) == 0) continue;
        BigInt q = s.m.at(i, t) / s.m.at(t, t);
        s.add_row(i, t, -q);
        if (s.m.at(i, t) != 0) {  // remainder became the smaller pivot
          s.swap_rows(t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < input.cols; ++j) {
        if (s.m.at(t, j) == 0) continue;
        BigInt q = s.m.at(t, j) / s.m.at(t, t);
        s.add_col(j, t, -q);
        if (s.m.at(t, j) != 0) {
          s.swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) break;
    }

    // Divisibility: fold any entry the pivot misses back into column t.
    for (size_t i = t + 1; i < input.rows; ++i)
      for (size_t j = t + 1; j < input.cols; ++j)
        if (s.m.at(i, j) % s.m.at(t, t) != 0) {
          s.add_col(t, j, 1);
          goto redo;
        }
    if (s.m.at(t, t) < 0) s.negate_row(t);
  }

  SmithResult r{std::move(s.m), std::move(s.u), std::move(s.v)};
  return r;
}

std::vector<BigInt> SmithResult::invariant_factors() const {
  std::vector<BigInt> f;
  for (size_t i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d.at(i, i) != 0) f.push_back(d.at(i, i));
  return f;
}

}  // namespace palg
