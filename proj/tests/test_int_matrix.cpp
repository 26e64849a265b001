#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palg/int_matrix.hpp"

using namespace palg;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_snf_contract(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  CHECK(int_mat_mul(int_mat_mul(s.u, m), s.v) == s.d);
  BigInt du = determinant(s.u), dv = determinant(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  auto f = s.invariant_factors();
  for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
  for (const auto& d : f) CHECK(d > 0);
  // off-diagonal of D vanishes
  for (size_t i = 0; i < s.d.rows; ++i)
    for (size_t j = 0; j < s.d.cols; ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("identity 2x2") {
  IntMatrix m = IntMatrix::identity(2);
  SmithResult s = smith_normal_form(m);
  CHECK(s.d == IntMatrix::identity(2));
  CHECK(s.u == IntMatrix::identity(2));
  CHECK(s.v == IntMatrix::identity(2));
}

TEST_CASE("prism m=1 n=2 relation matrix has invariant factors (2, 2)") {
  IntMatrix m = from_rows({{0, 2}, {2, -2}});
  SmithResult s = smith_normal_form(m);
  CHECK(s.invariant_factors() == std::vector<BigInt>{2, 2});
  CHECK(oracle::invariant_factors_via_minors(m) == std::vector<BigInt>{2, 2});
  check_snf_contract(m);
}

TEST_CASE("prism m=1 n=3 relation matrix has invariant factors (1, 4)") {
  IntMatrix m = from_rows({{0, 2}, {2, -3}});
  SmithResult s = smith_normal_form(m);
  CHECK(s.invariant_factors() == std::vector<BigInt>{1, 4});
  CHECK(oracle::invariant_factors_via_minors(m) == std::vector<BigInt>{1, 4});
  check_snf_contract(m);
}

TEST_CASE("random matrices: unimodular transforms, divisibility, minor oracle") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> dim(1, 6), entry(-20, 20);
  for (int trial = 0; trial < 220; ++trial) {
    IntMatrix m(size_t(dim(rng)), size_t(dim(rng)));
    for (auto& e : m.a) e = entry(rng);
    check_snf_contract(m);
    SmithResult s = smith_normal_form(m);
    CHECK(s.invariant_factors() == oracle::invariant_factors_via_minors(m));
  }
}

TEST_CASE("zero and rectangular matrices") {
  IntMatrix z(3, 2);
  SmithResult s = smith_normal_form(z);
  CHECK(s.invariant_factors().empty());
  check_snf_contract(from_rows({{2, 4, 4}, {-6, 6, 12}}));
}
