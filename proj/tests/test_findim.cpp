#include <doctest.h>

#include "oracles.hpp"
#include "palg/families.hpp"
#include "palg/findim.hpp"
#include "palg/ginzburg.hpp"

using namespace palg;

namespace {

// independent semisimplification route for the corner ring: minimal
// polynomial of x1 on the corner at vertex 0, squarefree part via gcd with
// the derivative, then the order of t in K[t]/(squarefree part)
long corner_order_oracle(const FiniteDimAlgebra& a, long max_power) {
  Field f = a.field;
  // corner basis: words from vertex 0 to vertex 0
  std::vector<size_t> corner;
  for (size_t i = 0; i < a.dim(); ++i)
    if (a.basis[i].src == 0 && a.basis[i].dst == 0) corner.push_back(i);
  // powers of x1 restricted to the corner, in corner coordinates
  Vec x1 = a.coords(AlgebraElement::central(a.quiver, a.field, 0));
  Vec e0 = a.coords(AlgebraElement::idempotent(a.quiver, a.field, 0));
  Vec cur = e0;
  std::vector<Vec> powers;  // corner coordinates of x1^n e0
  for (size_t n = 0; n <= corner.size(); ++n) {
    Vec cc(corner.size(), Scalar::zero(f));
    for (size_t t = 0; t < corner.size(); ++t) cc[t] = cur[corner[t]];
    powers.push_back(cc);
    cur = a.table.mul(cur, x1);
  }
  // first linear dependence gives the minimal polynomial
  std::vector<Scalar> minpoly;  // coefficients c_0..c_d with sum c_i t^i = 0
  for (size_t d = 1; d < powers.size(); ++d) {
    Mat m(corner.size(), d, f);
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < corner.size(); ++i) m.at(i, j) = powers[j][i];
    Vec rhs(corner.size(), Scalar::zero(f));
    for (size_t i = 0; i < corner.size(); ++i) rhs[i] = powers[d][i];
    if (auto sol = solve(m, rhs)) {
      minpoly.assign(d + 1, Scalar::zero(f));
      for (size_t j = 0; j < d; ++j) minpoly[j] = -(*sol)[j];
      minpoly[d] = Scalar::one(f);
      break;
    }
  }
  REQUIRE(!minpoly.empty());
  // squarefree part = minpoly / gcd(minpoly, minpoly')
  auto degree = [](const std::vector<Scalar>& p) {
    int d = -1;
    for (size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) d = int(i);
    return d;
  };
  auto poly_mod = [&](std::vector<Scalar> a_, std::vector<Scalar> b_) {
    int db = degree(b_);
    for (int da = degree(a_); da >= db && da >= 0; da = degree(a_)) {
      Scalar c = a_[size_t(da)] * b_[size_t(db)].inverse();
      for (int i = 0; i <= db; ++i) a_[size_t(da - db + i)] -= c * b_[size_t(i)];
    }
    return a_;
  };
  std::vector<Scalar> p1 = minpoly, p2(minpoly.size(), Scalar::zero(f));
  for (size_t i = 1; i < minpoly.size(); ++i) p2[i - 1] = minpoly[i] * Scalar(f, long(i));
  while (degree(p2) >= 0) {
    auto r = poly_mod(p1, p2);
    p1 = p2;
    p2 = r;
  }
  // divide minpoly by the gcd p1
  std::vector<Scalar> sqfree;
  {
    std::vector<Scalar> num = minpoly;
    int dg = degree(p1);
    int dq = degree(num) - dg;
    sqfree.assign(size_t(dq + 1), Scalar::zero(f));
    for (int i = dq; i >= 0; --i) {
      Scalar c = num[size_t(i + dg)] * p1[size_t(dg)].inverse();
      sqfree[size_t(i)] = c;
      for (int j = 0; j <= dg; ++j) num[size_t(i + j)] -= c * p1[size_t(j)];
    }
  }
  // order of t modulo the squarefree part
  std::vector<Scalar> t(2, Scalar::zero(f));
  t[1] = Scalar::one(f);
  auto mul_mod = [&](std::vector<Scalar> a_, const std::vector<Scalar>& b_) {
    std::vector<Scalar> prod(a_.size() + b_.size(), Scalar::zero(f));
    for (size_t i = 0; i < a_.size(); ++i)
      for (size_t j = 0; j < b_.size(); ++j) prod[i + j] += a_[i] * b_[j];
    return poly_mod(prod, sqfree);
  };
  std::vector<Scalar> pw = t;
  for (long n = 1; n <= max_power; ++n) {
    if (degree(pw) == 0 && pw[0].is_one()) return n;
    pw = mul_mod(pw, t);
  }
  return -1;
}

}  // namespace

TEST_CASE("H0 of the 2-cycle family agrees with the exhaustive word oracle") {
  for (Field f : {Field::Q(), Field::Fp(2), Field::Fp(3)}) {
    for (int k = 1; k <= 3; ++k) {
      DgPresentation gk = build_Gk(k, f, GinzMode::Explicit);
      H0Result r = h0(gk, 4 * k + 8);
      REQUIRE(r.outcome == Outcome::Pass);
      long d1 = oracle::h0_gk_dimension(k, f, 4 * k + 6);
      long d2 = oracle::h0_gk_dimension(k, f, 4 * k + 4);
      CHECK(d1 == d2);
      CHECK(long(r.algebra->dim()) == d1);
      CHECK(r.algebra->dim() == size_t(4 * k + 2));
      CHECK(r.algebra->table.associative_on_basis());
      // the degree -1 differential reduces to zero in H0
      std::string rel = "(f*e+e1)";
      std::string power;
      for (int j = 0; j < k; ++j) power += rel + "*";
      CHECK(verify_identity(*r.algebra, "(" + power + "e1 - e1)*f"));
    }
  }
}

TEST_CASE("a presentation with no degree -1 generators is its own H0") {
  auto q = make_quiver({"0"}, {{"t", 0, 0, 0}}, {});
  Field f = Field::Q();
  DgPresentation p;
  p.name = "dual-numbers";
  p.quiver = q;
  p.field = f;
  AlgebraElement t = AlgebraElement::arrow(q, f, 0);
  p.relations = {t * t};
  H0Result r = h0(p, 8);
  REQUIRE(r.outcome == Outcome::Pass);
  CHECK(r.algebra->dim() == 2);
}

TEST_CASE("dimensions agree across the three families") {
  for (Field f : {Field::Q(), Field::Fp(2), Field::Fp(3)}) {
    for (int k = 1; k <= 2; ++k) {
      int bound = 4 * k + 8;
      auto hw = h0(build_Wk(k, f), bound);
      auto ha = h0(build_Ak(k, f), bound);
      auto hg = h0(build_Gk(k, f, GinzMode::Explicit), bound);
      REQUIRE(hw.outcome == Outcome::Pass);
      REQUIRE(ha.outcome == Outcome::Pass);
      REQUIRE(hg.outcome == Outcome::Pass);
      CHECK(hw.algebra->dim() == ha.algebra->dim());
      CHECK(ha.algebra->dim() == hg.algebra->dim());
    }
  }
}

TEST_CASE("derived identities in H0") {
  for (Field f : {Field::Q(), Field::Fp(2)}) {
    for (int k = 1; k <= 3; ++k) {
      auto hw = h0(build_Wk(k, f), 4 * k + 8);
      REQUIRE(hw.outcome == Outcome::Pass);
      CHECK(verify_identity(*hw.algebra, "(x1-1)*(x1^" + std::to_string(k) + "-1)"));
      CHECK(verify_identity(*hw.algebra, "e0 + e1 - 1"));
      CHECK_THROWS_AS(verify_identity(*hw.algebra, "zz"), ParseError);
    }
  }
  // (ab+1)^k = 1 holds in the identified re-presentation, not in H0 itself
  Field f = Field::Q();
  auto hw = h0(build_Wk(2, f), 16);
  CHECK(!verify_identity(*hw.algebra, "(a*b+1)^2 - 1"));
  auto hid = h0_identified(build_Wk(2, f), 16);
  REQUIRE(hid.outcome == Outcome::Pass);
  CHECK(verify_identity(*hid.algebra, "(a*b+1)^2 - 1"));
  CHECK(verify_identity(*hid.algebra, "a^2"));
  CHECK(verify_identity(*hid.algebra, "a*b - b*a"));
  // over Q the identified algebra collapses to span{1, a, b}
  CHECK(hid.algebra->dim() == 3);
  // over F2 the central direction survives
  auto hid2 = h0_identified(build_Wk(2, Field::Fp(2)), 16);
  CHECK(hid2.algebra->dim() == 4);
}

TEST_CASE("centers") {
  Field f = Field::Q();
  // commutative algebra: center is everything
  auto q = make_quiver({"0"}, {{"t", 0, 0, 0}}, {});
  DgPresentation dual{"dual", q, f, {AlgebraElement::arrow(q, f, 0) * AlgebraElement::arrow(q, f, 0)}, {}};
  auto r = h0(dual, 8);
  CHECK(center_basis(*r.algebra).size() == r.algebra->dim());

  auto hw = h0(build_Wk(2, f), 16);
  const FiniteDimAlgebra& a = *hw.algebra;
  auto z = center_basis(a);
  // e0 and e1 are not individually central (they do not commute with a, b),
  // but the identity and the image of x1 are central
  auto in_center = [&](const AlgebraElement& e) {
    Vec v = a.coords(e);
    return in_span(z, v, a.dim(), f);
  };
  CHECK(!in_center(AlgebraElement::idempotent(a.quiver, f, 0)));
  CHECK(!in_center(AlgebraElement::idempotent(a.quiver, f, 1)));
  CHECK(in_center(AlgebraElement::unit(a.quiver, f)));
  CHECK(in_center(AlgebraElement::central(a.quiver, f, 0)));
}

TEST_CASE("element orders and the semisimplified order of x1") {
  Field f = Field::Q();
  auto hw3 = h0(build_Wk(3, f), 20);
  const FiniteDimAlgebra& a = *hw3.algebra;
  CHECK(element_order(a.table, a.table.one, 5) == 1);
  CHECK_THROWS_AS(element_order(a.table, a.coords(AlgebraElement::zero(a.quiver, f)), 5),
                  std::domain_error);

  for (int k = 2; k <= 4; ++k) {
    auto hw = h0(build_Wk(k, f), 4 * k + 8);
    REQUIRE(hw.outcome == Outcome::Pass);
    SemisimplifiedOrderResult so = central_semisimplified_order(*hw.algebra, "x1", 2 * k + 4);
    CHECK(so.outcome == Outcome::Pass);
    CHECK(so.order == k);
    CHECK(corner_order_oracle(*hw.algebra, 2 * k + 4) == k);
  }
}

TEST_CASE("1 + t has order 2 in F2[t]/(t^2)") {
  auto q = make_quiver({"0"}, {{"t", 0, 0, 0}}, {});
  Field f = Field::Fp(2);
  AlgebraElement t = AlgebraElement::arrow(q, f, 0);
  DgPresentation dual{"dual", q, f, {t * t}, {}};
  auto r = h0(dual, 8);
  Vec u = r.algebra->coords(t + AlgebraElement::unit(q, f));
  CHECK(element_order(r.algebra->table, u, 10) == 2);
  UnitGroupReport ur = unit_group(*r.algebra, "", 1 << 20);
  CHECK(ur.units == 2);  // 1 and 1 + t
}

TEST_CASE("unit enumeration: F2[Z2] and H0 over F2") {
  // F2[Z2] as a one-loop quiver with g^2 = 1
  auto q = make_quiver({"0"}, {{"g", 0, 0, 0}}, {});
  Field f = Field::Fp(2);
  AlgebraElement g = AlgebraElement::arrow(q, f, 0);
  DgPresentation grp{"f2z2", q, f, {g * g - AlgebraElement::unit(q, f)}, {}};
  auto r = h0(grp, 8);
  REQUIRE(r.algebra->dim() == 2);
  UnitGroupReport ur = unit_group(*r.algebra, "", 1 << 20);
  CHECK(ur.units == 2);  // 1 and g

  // regression: the full unit group of H0 at k = 2 over F2
  auto hw = h0(build_Wk(2, f), 16);
  UnitGroupReport uw = unit_group(*hw.algebra, "x1", 1 << 20);
  CHECK(uw.scanned == 1024);
  CHECK(uw.units == 256);
  CHECK(uw.element_order == 4);

  // budget exceeded is inconclusive, not an error
  UnitGroupReport ub = unit_group(*hw.algebra, "x1", 100);
  CHECK(ub.outcome == Outcome::Inconclusive);
}

TEST_CASE("the induced H0 map is an isomorphism of algebras") {
  for (Field f : {Field::Q(), Field::Fp(3)}) {
    for (int k = 1; k <= 3; ++k) {
      auto hg = h0(build_Gk(k, f, GinzMode::Explicit), 4 * k + 8);
      auto ha = h0(build_Ak(k, f), 4 * k + 8);
      REQUIRE(hg.outcome == Outcome::Pass);
      REQUIRE(ha.outcome == Outcome::Pass);
      CHECK(algebra_iso_check(*hg.algebra, *ha.algebra, {{"e", "a"}, {"f", "b"}}, {0, 1})
                .passed());
    }
  }
  // a wrong generator map fails the structure-constant check
  Field f = Field::Q();
  auto hg = h0(build_Gk(2, f, GinzMode::Explicit), 16);
  auto ha = h0(build_Ak(2, f), 16);
  CHECK(!algebra_iso_check(*hg.algebra, *ha.algebra, {{"e", "b"}, {"f", "a"}}, {0, 1}).passed());
}

TEST_CASE("nilradical members certify as nilpotent") {
  Field f = Field::Q();
  auto hw = h0(build_Wk(2, f), 16);
  auto nil = nilradical_of_center(*hw.algebra);
  CHECK(!nil.empty());
  for (const auto& v : nil)
    CHECK(hw.algebra->table.is_zero_vec(hw.algebra->table.power(v, hw.algebra->dim() + 1)));
  // over F5 the Frobenius route is used
  auto hw5 = h0(build_Wk(2, Field::Fp(5)), 16);
  auto nil5 = nilradical_of_center(*hw5.algebra);
  for (const auto& v : nil5)
    CHECK(hw5.algebra->table.is_zero_vec(hw5.algebra->table.power(v, hw5.algebra->dim() + 1)));
}
