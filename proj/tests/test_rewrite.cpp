#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "palg/parse.hpp"
#include "palg/rewrite.hpp"

using namespace palg;

namespace {

QuiverPtr deg0_quiver() {
  return make_quiver({"0", "1"}, {{"a", 0, 1, 0}, {"b", 1, 0, 0}}, {"x1", "x2"});
}

std::vector<AlgebraElement> w1_h0_ideal(QuiverPtr q, Field f) {
  auto p = [&](const std::string& s) { return parse_element(s, q, f); };
  return {p("a*b - (x1-1)*e0"), p("b*a - (x1-1)*e1"), p("(x2+1)*e0"), p("(x1+x2)*e1")};
}

// randomized reduction: at each step pick a random reducible term and a
// random applicable rule; confluence demands the same end result
WordPoly randomized_normal_form(const RewriteSystem& rs, WordPoly u, std::mt19937& rng) {
  for (;;) {
    std::vector<std::pair<Word, std::pair<size_t, size_t>>> options;
    for (const auto& [w, c] : u.terms())
      for (auto red : rs.reductions(w)) options.emplace_back(w, red);
    if (options.empty()) return u;
    std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
    auto [w, red] = options[pick(rng)];
    u = rs.apply_rule_at(u, w, red.first, red.second);
  }
}

}  // namespace

TEST_CASE("a single relation completes to a single rule") {
  auto q = deg0_quiver();
  Field f = Field::Q();
  auto rel = parse_element("a*b - (x1-1)*e0", q, f);
  RewriteSystem rs = complete(q, f, {rel}, 12);
  CHECK(rs.complete_below_bound());
  // structural rules: 4 swaps (2 arrows x 2 vars) + 2 commutations, plus ab
  CHECK(rs.rules().size() == 7);
  CHECK(rs.normal_form(parse_element("a*b", q, f)) == parse_element("(x1-1)*e0", q, f));
  CHECK(rs.normal_form(parse_element("a*b*a*b", q, f)) ==
        parse_element("(x1-1)^2*e0", q, f));
  CHECK(rs.normal_form(AlgebraElement::zero(q, f)).is_zero());
}

TEST_CASE("empty generator set completes to the structural system") {
  auto q = deg0_quiver();
  RewriteSystem rs = complete(q, Field::Q(), {}, 8);
  CHECK(rs.complete_below_bound());
  CHECK(rs.rules().size() == 6);
}

TEST_CASE("free path algebra quotient is inconclusive at any bound") {
  auto q = make_quiver({"0", "1"}, {{"e", 0, 1, 0}, {"f", 1, 0, 0}}, {});
  RewriteSystem rs = complete(q, Field::Q(), {}, 9);
  QuotientBasis qb = quotient_basis(rs);
  CHECK(qb.verdict == QuotientBasis::Verdict::InconclusiveAtBound);
}

TEST_CASE("K<t>/(t^2) has basis {1, t}") {
  auto q = make_quiver({"0"}, {{"t", 0, 0, 0}}, {});
  Field f = Field::Q();
  auto t = AlgebraElement::arrow(q, f, 0);
  RewriteSystem rs = complete(q, f, {t * t}, 8);
  QuotientBasis qb = quotient_basis(rs);
  CHECK(qb.verdict == QuotientBasis::Verdict::Finite);
  CHECK(qb.words.size() == 2);
}

TEST_CASE("full k=1 degree-0 ideal: staircase dimension matches the exhaustive oracle") {
  auto q = deg0_quiver();
  for (Field f : {Field::Q(), Field::Fp(2), Field::Fp(3)}) {
    RewriteSystem rs = complete(q, f, w1_h0_ideal(q, f), 12);
    CHECK(rs.complete_below_bound());
    QuotientBasis qb = quotient_basis(rs);
    REQUIRE(qb.verdict == QuotientBasis::Verdict::Finite);
    long dim_oracle = oracle::h0_w1_dimension(f, 8);
    long dim_oracle2 = oracle::h0_w1_dimension(f, 9);
    CHECK(dim_oracle == dim_oracle2);  // stabilized
    CHECK(long(qb.words.size()) == dim_oracle);
    CHECK(qb.words.size() == 6);
  }
}

TEST_CASE("normal form pre: length must stay under the bound") {
  auto q = deg0_quiver();
  Field f = Field::Q();
  RewriteSystem rs = complete(q, f, w1_h0_ideal(q, f), 6);
  auto big = parse_element("a*b*a*b*a*b*a*b", q, f);
  CHECK_THROWS_AS(rs.normal_form(big), LengthOverflow);
}

TEST_CASE("completion rejects generators beyond the bound and zero generators") {
  auto q = deg0_quiver();
  Field f = Field::Q();
  CHECK_THROWS_AS(complete(q, f, {parse_element("a*b*a*b", q, f)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(complete(q, f, {AlgebraElement::zero(q, f)}, 8), std::invalid_argument);
}

TEST_CASE("Church-Rosser below the bound on random elements") {
  auto q = deg0_quiver();
  std::mt19937 rng(31337);
  for (Field f : {Field::Q(), Field::Fp(3)}) {
    RewriteSystem rs = complete(q, f, w1_h0_ideal(q, f), 12);
    for (int i = 0; i < 120; ++i) {
      auto u = oracle::random_element(q, f, rng, 3, 4, 2);
      WordPoly canonical = rs.normal_form(to_words(u));
      WordPoly randomized = randomized_normal_form(rs, to_words(u), rng);
      CHECK(canonical == randomized);
    }
  }
}

TEST_CASE("normal form is idempotent and multiplicative") {
  auto q = deg0_quiver();
  Field f = Field::Q();
  RewriteSystem rs = complete(q, f, w1_h0_ideal(q, f), 14);
  std::mt19937 rng(555);
  for (int i = 0; i < 210; ++i) {
    auto u = oracle::random_element(q, f, rng, 3, 3, 1);
    auto v = oracle::random_element(q, f, rng, 3, 3, 1);
    auto nfu = rs.normal_form(u);
    CHECK(rs.normal_form(nfu) == nfu);
    CHECK(rs.normal_form(u * v) == rs.normal_form(rs.normal_form(u) * rs.normal_form(v)));
  }
}

TEST_CASE("completion is deterministic regardless of generator order") {
  auto q = deg0_quiver();
  Field f = Field::Q();
  auto gens = w1_h0_ideal(q, f);
  RewriteSystem base = complete(q, f, gens, 12);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    RewriteSystem other = complete(q, f, shuffled, 12);
    REQUIRE(other.rules().size() == base.rules().size());
    for (size_t i = 0; i < base.rules().size(); ++i) {
      CHECK(base.rules()[i].lhs == other.rules()[i].lhs);
      CHECK(base.rules()[i].tail == other.rules()[i].tail);
    }
  }
}
