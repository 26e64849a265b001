#include <doctest.h>

#include "oracles.hpp"
#include "palg/ginzburg.hpp"

using namespace palg;

namespace {

BigInt binom(int n, int r) {
  BigInt b = 1;
  for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

TEST_CASE("cyclic derivative of g h g h'") {
  auto q = make_quiver({"0"}, {{"g", 0, 0, 0}, {"h", 0, 0, 0}, {"hp", 0, 0, 0}}, {});
  Field f = Field::Q();
  auto arrow = [&](const char* n) { return AlgebraElement::arrow(q, f, q->arrow_index(n)); };
  Potential w{arrow("g") * arrow("h") * arrow("g") * arrow("hp")};
  AlgebraElement want =
      arrow("h") * arrow("g") * arrow("hp") + arrow("hp") * arrow("g") * arrow("h");
  CHECK(cyclic_derivative(w, "g", DerivMode::Literal) == want);
  CHECK(cyclic_derivative(w, "g", DerivMode::CyclicOrbit) == want);  // no cyclic symmetry

  // occurrence-enumeration oracle agrees: contributions hgh' and h'gh
  auto words = oracle::cyclic_derivative_words({0, 1, 0, 2}, 0, false);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == std::vector<int>{1, 0, 2});
  CHECK(words[1] == std::vector<int>{2, 0, 1});

  // absent arrow differentiates to zero
  CHECK(cyclic_derivative(w, "hp", DerivMode::Literal) ==
        arrow("g") * arrow("h") * arrow("g"));
  Potential w2{arrow("h") * arrow("hp")};
  CHECK(cyclic_derivative(w2, "g", DerivMode::Literal).is_zero());
}

TEST_CASE("cyclic derivative of efef: multiplicity 2 literal, 1 per orbit") {
  auto q = two_cycle_quiver();
  Field f = Field::Q();
  auto e = AlgebraElement::arrow(q, f, 0), ff = AlgebraElement::arrow(q, f, 1);
  Potential w{e * ff * e * ff};
  AlgebraElement fef = ff * e * ff;
  CHECK(cyclic_derivative(w, "e", DerivMode::Literal) == fef + fef);
  CHECK(cyclic_derivative(w, "e", DerivMode::CyclicOrbit) == fef);
  auto words = oracle::cyclic_derivative_words({0, 1, 0, 1}, 0, false);
  CHECK(words.size() == 2);
  auto orbit = oracle::cyclic_derivative_words({0, 1, 0, 1}, 0, true);
  CHECK(orbit.size() == 1);
}

TEST_CASE("literal mode contribution count equals occurrence count") {
  auto q = two_cycle_quiver();
  Field f = Field::Q();
  for (int k = 1; k <= 5; ++k) {
    Potential w = build_potential_wk(k, f);
    // sum over monomials of (coeff * occurrences) = sum of derivative coeffs
    BigRat lhs = 0, rhs = 0;
    for (const auto& [key, c] : w.element.terms()) {
      long occ = 0;
      for (int a : key.arrows)
        if (a == 0) ++occ;
      lhs += c.value() * occ;
    }
    for (const auto& [key, c] : cyclic_derivative(w, "e", DerivMode::Literal).terms())
      rhs += c.value();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("w_k expands to e((fe+1)^k - 1)f") {
  Field f = Field::Q();
  auto q = two_cycle_quiver();
  auto e = AlgebraElement::arrow(q, f, 0), ff = AlgebraElement::arrow(q, f, 1);
  auto one = AlgebraElement::unit(q, f);
  CHECK(build_potential_wk(1, f).element == e * ff * e * ff);
  CHECK(build_potential_wk(2, f).element ==
        e * ff * e * ff * e * ff + (e * ff * e * ff) * Scalar(f, 2));
  for (int k = 1; k <= 8; ++k) {
    AlgebraElement telescoped = e * ((ff * e + one).pow(unsigned(k)) - one) * ff;
    CHECK(build_potential_wk(k, f).element == telescoped);
  }
  // every monomial is a cycle at vertex 0
  Potential w = build_potential_wk(4, f);
  for (const auto& [key, c] : w.element.terms()) {
    CHECK(key.src == 0);
    CHECK(q->arrows()[key.arrows.back()].dst == 0);
  }
  CHECK_THROWS_AS(build_potential_wk(0, f), std::invalid_argument);
}

TEST_CASE("enhanced quivers") {
  auto q2 = enhance_quiver(*two_cycle_quiver());
  REQUIRE(q2->num_arrows() == 6);
  auto deg = [&](const char* n) { return q2->arrows()[q2->arrow_index(n)].degree; };
  CHECK(deg("e") == 0);
  CHECK(deg("f") == 0);
  CHECK(deg("e_star") == -1);
  CHECK(deg("f_star") == -1);
  CHECK(deg("h0") == -2);
  CHECK(deg("h1") == -2);
  CHECK(q2->arrows()[q2->arrow_index("e_star")].src == 1);
  CHECK(q2->arrows()[q2->arrow_index("e_star")].dst == 0);

  auto vertex_only = enhance_quiver(*make_quiver({"0", "1"}, {}, {}));
  CHECK(vertex_only->num_arrows() == 2);  // h0, h1 only
  CHECK(vertex_only->arrows()[0].degree == -2);

  auto loop = enhance_quiver(*make_quiver({"0"}, {{"g", 0, 0, 0}}, {}));
  CHECK(loop->num_arrows() == 3);
  CHECK(loop->arrows()[loop->arrow_index("g_star")].src == 0);

  CHECK_THROWS_AS(enhance_quiver(*make_quiver({"0"}, {{"g", 0, 0, -1}}, {})),
                  std::invalid_argument);
}

TEST_CASE("the k = 1 dg algebra in both modes") {
  Field f = Field::Q();
  DgPresentation exp = build_Gk(1, f, GinzMode::Explicit);
  auto q = exp.quiver;
  auto p = [&](const std::string& s) { return parse_element(s, q, f); };
  CHECK(exp.differentials.at("e_star") == p("f*e*f"));
  CHECK(exp.differentials.at("f_star") == p("e*f*e"));
  CHECK(exp.differentials.at("h0") == p("e*e_star - f_star*f"));
  CHECK(exp.differentials.at("h1") == p("f*f_star - e_star*e"));

  DgPresentation lit = build_Gk(1, f, GinzMode::CyclicLiteral);
  CHECK(lit.differentials.at("e_star") == p("2*f*e*f"));

  // d(d h0) is exactly zero in explicit mode for k = 1..4
  for (int k = 1; k <= 4; ++k) {
    DgPresentation gk = build_Gk(k, f, GinzMode::Explicit);
    RewriteSystem rs = gk.relation_rewrite(4 * k + 8);
    CHECK(rs.normal_form(gk.d(gk.differentials.at("h0"))).is_zero());
    CHECK(rs.normal_form(gk.d(gk.differentials.at("h1"))).is_zero());
  }
}

TEST_CASE("e * d(e_star) = d(f_star) * f, the telescoping identity") {
  Field f = Field::Q();
  for (int k = 1; k <= 8; ++k) {
    DgPresentation gk = build_Gk(k, f, GinzMode::Explicit);
    auto q = gk.quiver;
    AlgebraElement e = AlgebraElement::arrow(q, f, q->arrow_index("e"));
    AlgebraElement ff = AlgebraElement::arrow(q, f, q->arrow_index("f"));
    CHECK(e * gk.differentials.at("e_star") == gk.differentials.at("f_star") * ff);
  }
}

TEST_CASE("mode comparison: literal coefficient (j+1) C(k,j) vs explicit C(k,j)") {
  Field f = Field::Q();
  for (int k = 1; k <= 4; ++k) {
    ModeComparison cmp = compare_differential_modes(k, f);
    CHECK(!cmp.literal_equals_explicit());
    CHECK(cmp.orbit_equals_explicit());
    for (const auto& entry : cmp.entries) {
      // explicit de* = sum_j C(k,j) (fe)^j f; literal multiplies by (j+1)
      for (const auto& [key, c] : entry.explicit_form.terms()) {
        int j = int(key.arrows.size()) / 2;
        CHECK(c.value() == BigRat(binom(k, j)));
      }
      for (const auto& [key, c] : entry.literal.terms()) {
        int j = int(key.arrows.size()) / 2;
        CHECK(c.value() == BigRat((j + 1) * binom(k, j)));
      }
    }
  }
}

TEST_CASE("explicit mode needs overrides of the right shape") {
  Field f = Field::Q();
  Potential w = build_potential_wk(1, f);
  CHECK_THROWS_AS(ginzburg_dga(two_cycle_quiver(), w, GinzMode::Explicit, {}),
                  std::invalid_argument);
  QuiverPtr eq = enhance_quiver(*two_cycle_quiver());
  std::map<std::string, AlgebraElement> bad;
  bad.insert_or_assign("e_star", parse_element("e*f*e", eq, f));  // wrong endpoints
  bad.insert_or_assign("f_star", parse_element("e*f*e", eq, f));
  CHECK_THROWS_AS(ginzburg_dga(two_cycle_quiver(), w, GinzMode::Explicit, bad),
                  std::invalid_argument);
}
