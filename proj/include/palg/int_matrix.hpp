// Arbitrary-precision integer matrices and Smith normal form.
#pragma once

#include <vector>

#include "palg/scalar.hpp"

namespace palg {

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(size_t n);

  BigInt& at(size_t i, size_t j) { return a[i * cols + j]; }
  const BigInt& at(size_t i, size_t j) const { return a[i * cols + j]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix int_mat_mul(const IntMatrix& x, const IntMatrix& y);

/// Exact determinant (Bareiss fraction-free elimination).
BigInt determinant(IntMatrix m);

struct SmithResult {
  IntMatrix d;  // diagonal, invariant factors d1 | d2 | ..., non-negative
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform, u*m*v = d
  std::vector<BigInt> invariant_factors() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace palg
