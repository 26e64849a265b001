// Commutative polynomials, Buchberger completion, Jacobian ideals and
// Tjurina numbers of the uv - xy((x+1)^k + y - 1) family.
#pragma once

#include <array>
#include <map>

#include "palg/linalg.hpp"
#include "palg/report.hpp"

namespace palg {

using Mono = std::vector<int>;  // exponents, one per variable

/// Degree-reverse-lexicographic order; variable 0 ranks highest.
bool mono_greater_drl(const Mono& a, const Mono& b);

struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const { return mono_greater_drl(a, b); }
};

class CommutativePoly {
 public:
  CommutativePoly(std::shared_ptr<const std::vector<std::string>> vars, Field f)
      : vars_(std::move(vars)), field_(f) {}

  static CommutativePoly zero(std::shared_ptr<const std::vector<std::string>> vars, Field f) {
    return CommutativePoly(std::move(vars), f);
  }
  static CommutativePoly variable(std::shared_ptr<const std::vector<std::string>> vars, Field f,
                                  size_t i);
  static CommutativePoly constant(std::shared_ptr<const std::vector<std::string>> vars, Field f,
                                  const Scalar& c);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return *vars_; }
  std::shared_ptr<const std::vector<std::string>> vars_ptr() const { return vars_; }
  const std::map<Mono, Scalar, MonoGreater>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Mono& leading_mono() const;
  const Scalar& leading_coeff() const;

  void add_term(const Mono& m, const Scalar& c);

  CommutativePoly operator+(const CommutativePoly& o) const;
  CommutativePoly operator-(const CommutativePoly& o) const;
  CommutativePoly operator*(const CommutativePoly& o) const;
  CommutativePoly operator-() const;
  CommutativePoly scaled(const Scalar& c) const;
  CommutativePoly pow(unsigned n) const;

  CommutativePoly derivative(size_t var) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  bool operator==(const CommutativePoly& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
  Field field_;
  std::map<Mono, Scalar, MonoGreater> terms_;
};

/// Parses the shared expression grammar over the given variables.
CommutativePoly parse_poly(const std::string& text,
                           std::shared_ptr<const std::vector<std::string>> vars, Field f);

/// Reduced Groebner basis (Buchberger); terminates in the commutative case.
std::vector<CommutativePoly> buchberger(std::vector<CommutativePoly> gens);

CommutativePoly poly_normal_form(const CommutativePoly& f,
                                 const std::vector<CommutativePoly>& gb);

struct QuotientDim {
  bool finite = false;
  long dimension = 0;                  // meaningful when finite
  std::vector<Mono> standard_monomials;  // meaningful when finite
};

QuotientDim quotient_dimension(const std::vector<CommutativePoly>& gb, size_t nvars);

std::vector<CommutativePoly> jacobian_ideal(const CommutativePoly& f);

/// sigma_k = uv - xy((x+1)^k + y - 1) in variables u > v > x > y.
CommutativePoly sigma_k(int k, Field f);

struct TjurinaResult {
  Outcome outcome = Outcome::Inconclusive;
  long dim_global = -1;        // dim K[u,v,x,y]/(sigma, jacobian)
  long dim_local_origin = -1;  // contribution supported at the origin
  long dim_saturated = -1;     // after saturating away x = -2 (even k), else -1
};

TjurinaResult tjurina_number(int k, Field f);

bool is_singular_point(const CommutativePoly& f, const std::vector<Scalar>& point);

}  // namespace palg
