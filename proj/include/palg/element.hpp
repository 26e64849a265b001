// Path-algebra elements: exact formal sums of (central monomial, path) terms.
#pragma once

#include <compare>
#include <map>
#include <optional>

#include "palg/quiver.hpp"

namespace palg {

/// One monomial: a central-variable exponent vector and a path. Paths of
/// length zero are vertex idempotents, carried by `src`.
struct TermKey {
  std::vector<int> exps;    // one exponent per central variable
  int src = 0;
  std::vector<int> arrows;  // arrow ids, composable left-to-right

  int central_degree() const;
  std::strong_ordering operator<=>(const TermKey& o) const;
  bool operator==(const TermKey& o) const = default;
};

class AlgebraElement {
 public:
  AlgebraElement(QuiverPtr q, Field f) : quiver_(std::move(q)), field_(f) {}

  static AlgebraElement zero(QuiverPtr q, Field f) { return AlgebraElement(std::move(q), f); }
  static AlgebraElement idempotent(QuiverPtr q, Field f, int vertex);
  static AlgebraElement unit(QuiverPtr q, Field f);  // sum of all idempotents
  static AlgebraElement arrow(QuiverPtr q, Field f, int arrow_id);
  static AlgebraElement central(QuiverPtr q, Field f, int var_id);
  static AlgebraElement constant(QuiverPtr q, Field f, const Scalar& c);

  const QuiverPtr& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const TermKey& k, const Scalar& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Scalar& c) const;
  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }
  AlgebraElement pow(unsigned n) const;

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  /// Degree of a term = sum of its arrow degrees.
  int term_degree(const TermKey& k) const;
  /// Degree if homogeneous (zero element has no degree).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;

  /// True when every term is a pure central monomial times an idempotent
  /// (i.e. scalar-like for the purposes of substitution images).
  bool is_central_only() const;

  /// Ring homomorphism fixing arrows and idempotents, sending each mapped
  /// central variable to a central-only polynomial.
  AlgebraElement substitute(const std::map<std::string, AlgebraElement>& map) const;

  std::string str() const;  // canonical serialization (parseable)

 private:
  QuiverPtr quiver_;
  Field field_;
  std::map<TermKey, Scalar> terms_;

  void check_same(const AlgebraElement& o) const;
};

AlgebraElement operator*(const Scalar& c, const AlgebraElement& e);

}  // namespace palg
