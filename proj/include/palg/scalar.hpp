// Exact scalar arithmetic over Q, Z and prime fields F_p.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace palg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Integers, PrimeField };

/// Coefficient domain descriptor. PrimeField requires a prime modulus.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  long p = 0;

  static Field Q() { return Field{FieldKind::Rationals, 0}; }
  static Field Z() { return Field{FieldKind::Integers, 0}; }
  static Field Fp(long p);

  /// Parses "q", "z" or "p:<prime>".
  static Field parse(const std::string& s);

  bool is_field() const { return kind != FieldKind::Integers; }
  long characteristic() const { return kind == FieldKind::PrimeField ? p : 0; }
  std::string str() const;

  bool operator==(const Field&) const = default;
};

bool is_prime(long n);

/// An exact scalar tagged with its domain. Prime-field values are reduced
/// representatives in [0, p); rationals are kept in lowest terms by the
/// underlying representation.
class Scalar {
 public:
  Scalar() : field_(Field::Q()), v_(0) {}
  Scalar(Field f, const BigRat& v);
  Scalar(Field f, long v) : Scalar(f, BigRat(v)) {}

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  const BigRat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator(v_) == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse. Throws on zero, and on non-units of Z.
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order on values within one field (for canonical serialization).
  bool operator<(const Scalar& o) const;

  std::string str() const;

 private:
  Field field_;
  BigRat v_;

  void check_same(const Scalar& o) const;
  void normalize();
};

/// Reduction Z (or Q with denominator coprime to p) -> F_p.
Scalar reduce_mod_p(const Scalar& s, long p);

/// Inverse of a mod p via extended Euclid. Throws if gcd(a, p) != 1.
long mod_inverse(long a, long p);

}  // namespace palg
