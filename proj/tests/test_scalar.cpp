#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palg/scalar.hpp"

using namespace palg;

TEST_CASE("field parsing") {
  CHECK(Field::parse("q") == Field::Q());
  CHECK(Field::parse("z") == Field::Z());
  CHECK(Field::parse("p:5") == Field::Fp(5));
  CHECK_THROWS(Field::parse("p:4"));
  CHECK_THROWS(Field::parse("bogus"));
}

TEST_CASE("invert(1) is 1 in any field") {
  for (Field f : {Field::Q(), Field::Z(), Field::Fp(2), Field::Fp(7)})
    CHECK(Scalar::one(f).inverse() == Scalar::one(f));
}

TEST_CASE("reduce_mod_p(49, 2) = 1") {
  CHECK(reduce_mod_p(Scalar(Field::Z(), 49), 2) == Scalar::one(Field::Fp(2)));
}

TEST_CASE("invert(2) in F5 is 3, against two independent oracles") {
  Scalar two(Field::Fp(5), 2);
  CHECK(two.inverse() == Scalar(Field::Fp(5), 3));
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(oracle::fp_inverse_bruteforce(2, 5) == 3);
}

TEST_CASE("inversion preconditions") {
  CHECK_THROWS_AS(Scalar::zero(Field::Q()).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar(Field::Z(), 2).inverse(), std::domain_error);
  // rational with denominator divisible by p cannot reduce
  CHECK_THROWS_AS(reduce_mod_p(Scalar(Field::Q(), BigRat(1, 5)), 5), std::domain_error);
  CHECK(reduce_mod_p(Scalar(Field::Q(), BigRat(1, 3)), 5) == Scalar(Field::Fp(5), 2));
}

TEST_CASE("reduce_mod_p is a ring homomorphism on random samples") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (long p : {2L, 3L, 5L, 11L}) {
    for (int i = 0; i < 250; ++i) {
      Scalar a(Field::Z(), d(rng)), b(Field::Z(), d(rng));
      CHECK(reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p));
      CHECK(reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
    }
  }
}

TEST_CASE("prime field values are reduced representatives") {
  Scalar s(Field::Fp(7), -3);
  CHECK(s == Scalar(Field::Fp(7), 4));
  CHECK(s.pow(6) == Scalar::one(Field::Fp(7)));  // Fermat
}

TEST_CASE("mixed-domain arithmetic is rejected") {
  CHECK_THROWS(Scalar::one(Field::Q()) + Scalar::one(Field::Fp(3)));
}
