// Dense exact linear algebra over a coefficient field.
#pragma once

#include <optional>
#include <vector>

#include "palg/scalar.hpp"

namespace palg {

using Vec = std::vector<Scalar>;

struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<Scalar> a;
  Field field = Field::Q();

  Mat() = default;
  Mat(size_t r, size_t c, Field f)
      : rows(r), cols(c), a(r * c, Scalar::zero(f)), field(f) {}

  Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n, Field f);
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_pow(Mat x, unsigned long e);
Vec mat_apply(const Mat& m, const Vec& v);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

/// One solution of m x = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Basis of the right kernel, as rows.
std::vector<Vec> nullspace(const Mat& m);

/// Row-space basis in echelon form (deterministic).
std::vector<Vec> row_basis(const std::vector<Vec>& rows, size_t cols, Field f);

/// Intersection of two subspaces given by spanning rows.
std::vector<Vec> intersect_spans(const std::vector<Vec>& u, const std::vector<Vec>& w,
                                 size_t cols, Field f);

bool in_span(const std::vector<Vec>& basis, const Vec& v, size_t cols, Field f);

}  // namespace palg
