#include "palg/scalar.hpp"

#include <sstream>

namespace palg {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::Fp(long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime: " + std::to_string(p));
  return Field{FieldKind::PrimeField, p};
}

Field Field::parse(const std::string& s) {
  if (s == "q" || s == "Q") return Q();
  if (s == "z" || s == "Z") return Z();
  if (s.size() > 2 && (s[0] == 'p' || s[0] == 'P') && s[1] == ':')
    return Fp(std::stol(s.substr(2)));
  throw std::invalid_argument("bad field spec '" + s + "' (expected q, z or p:<prime>)");
}

std::string Field::str() const {
  switch (kind) {
    case FieldKind::Rationals: return "q";
    case FieldKind::Integers: return "z";
    case FieldKind::PrimeField: return "p:" + std::to_string(p);
  }
  return "?";
}

long mod_inverse(long a, long p) {
  long r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("not invertible mod " + std::to_string(p));
  return ((s0 % p) + p) % p;
}

Scalar::Scalar(Field f, const BigRat& v) : field_(f), v_(v) { normalize(); }

void Scalar::normalize() {
  if (field_.kind == FieldKind::PrimeField) {
    BigInt p(field_.p);
    BigInt num = numerator(v_) % p;
    if (num < 0) num += p;
    BigInt den = denominator(v_) % p;
    if (den < 0) den += p;
    if (den == 0) throw std::domain_error("denominator not invertible mod " + std::to_string(field_.p));
    if (den != 1) {
      long inv = mod_inverse(den.convert_to<long>(), field_.p);
      num = (num * inv) % p;
    }
    v_ = BigRat(num);
  } else if (field_.kind == FieldKind::Integers) {
    if (denominator(v_) != 1) throw std::domain_error("non-integer value in Z");
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("mixed coefficient domains");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.kind == FieldKind::Integers) {
    if (v_ != 1 && v_ != -1) throw std::domain_error("not a unit of Z: " + str());
    return *this;
  }
  if (field_.kind == FieldKind::PrimeField) {
    long inv = mod_inverse(numerator(v_).convert_to<long>(), field_.p);
    return Scalar(field_, inv);
  }
  return Scalar(field_, 1 / v_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(field_), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }

bool Scalar::operator<(const Scalar& o) const { return v_ < o.v_; }

std::string Scalar::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

Scalar reduce_mod_p(const Scalar& s, long p) {
  if (s.field().kind == FieldKind::PrimeField)
    throw std::invalid_argument("reduce_mod_p expects an integer or rational input");
  return Scalar(Field::Fp(p), s.value());
}

}  // namespace palg
