// H^0 of non-positively graded presentations and finite-dimensional
// algebra analysis: structure constants, centers, radicals, units.
#pragma once

#include "palg/linalg.hpp"
#include "palg/presentation.hpp"

namespace palg {

/// Basis-indexed multiplication table. Quotients of word algebras use this
/// shape too, so the unit/order machinery below works for both.
struct AlgebraTable {
  Field field = Field::Q();
  std::vector<std::vector<Vec>> sc;  // sc[i][j] = coordinates of b_i * b_j
  Vec one;

  size_t dim() const { return one.size(); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec power(Vec a, unsigned long e) const;
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;
  std::optional<Vec> inverse(const Vec& a) const;
  bool associative_on_basis() const;
  bool is_zero_vec(const Vec& a) const;
};

struct FiniteDimAlgebra {
  QuiverPtr quiver;
  Field field;
  RewriteSystem rs;          // retained so expressions can be evaluated
  std::vector<Word> basis;   // irreducible words, ascending word order
  AlgebraTable table;
  std::vector<int> idempotent_index;  // per vertex; -1 if reduced away

  size_t dim() const { return basis.size(); }
  Vec coords(const AlgebraElement& e) const;
  std::string basis_word_str(size_t i) const;
};

struct H0Result {
  Outcome outcome = Outcome::Inconclusive;
  std::string detail;
  std::optional<FiniteDimAlgebra> algebra;
};

/// Degree-0 subalgebra modulo the two-sided ideal generated by the
/// differentials of the degree -1 generators, computed by completion and
/// irreducible-word enumeration. Requires degrees <= 0.
H0Result h0(const DgPresentation& p, int bound);

/// Same computation after identifying all idempotents: the presentation is
/// rebuilt on a one-vertex quiver, keeping the arrow relations and adding
/// g*h = 0 whenever the original endpoints made the product non-composable.
H0Result h0_identified(const DgPresentation& p, int bound);

/// True iff the expression evaluates to 0 in A.
bool verify_identity(const FiniteDimAlgebra& a, const std::string& expr);

/// Basis of the center, via [z, g] = 0 over the generators.
std::vector<Vec> center_basis(const FiniteDimAlgebra& a);

/// Basis of the nilradical of the (commutative) center. Char 0 uses the
/// trace form; char p uses the kernel of the iterated Frobenius map. Each
/// basis vector is certified nilpotent by explicit powering.
std::vector<Vec> nilradical_of_center(const FiniteDimAlgebra& a);

struct QuotientAlgebra {
  AlgebraTable table;
  Mat projection;  // old coordinates -> new coordinates
};

/// Quotient of A by the two-sided ideal generated by the given vectors.
QuotientAlgebra quotient_by_two_sided_ideal(const FiniteDimAlgebra& a,
                                            const std::vector<Vec>& gens);

/// Least n <= max_power with u^n = 1; nullopt if none. Throws on
/// non-invertible u.
std::optional<long> element_order(const AlgebraTable& t, const Vec& u, long max_power);

struct SemisimplifiedOrderResult {
  Outcome outcome = Outcome::Inconclusive;
  long order = 0;
  std::string detail;
};

/// Order of a central variable's image in A/(two-sided ideal generated by
/// the nilradical of the center).
SemisimplifiedOrderResult central_semisimplified_order(const FiniteDimAlgebra& a,
                                                       const std::string& central_var,
                                                       long max_power);

struct UnitGroupReport {
  Outcome outcome = Outcome::Inconclusive;
  long long scanned = 0;
  long long units = 0;
  long element_order = 0;  // order of the requested element, 0 if absent
  std::string detail;
};

/// Exhaustive unit enumeration over F_p; requires p^dim <= budget.
UnitGroupReport unit_group(const FiniteDimAlgebra& a, const std::string& central_var,
                           long long budget);

/// Structure-constant-preserving bijection test for a generator-induced map
/// between two finite-dimensional quotients.
CheckReport algebra_iso_check(const FiniteDimAlgebra& src, const FiniteDimAlgebra& dst,
                              const std::map<std::string, std::string>& arrow_map,
                              const std::vector<int>& vertex_map);

}  // namespace palg
