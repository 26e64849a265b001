// Finite groups (multiplication-table based), coset enumeration, group
// algebras, conjugacy-class sums and central-unit verification.
#pragma once

#include "palg/int_matrix.hpp"
#include "palg/linalg.hpp"
#include "palg/report.hpp"

namespace palg {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;  // letters +(i+1) / -(i+1)
};

class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names,
              std::vector<int> generators);

  size_t order() const { return table_.size(); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return 0; }
  const std::vector<int>& generators() const { return generators_; }
  const std::string& name_of(int a) const { return names_[a]; }

  /// Conjugacy classes sorted by (size, least element index); each class
  /// lists ascending element indices.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int element_order(int a) const;
  std::vector<int> center_elements() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> classes_;

  void validate_and_index();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of a set of permutations of {0..n-1}; elements are sorted
/// lexicographically so the identity has index 0.
GroupPtr permutation_group(int npoints, const std::vector<std::vector<int>>& gen_perms,
                           const std::vector<std::string>& gen_names);

GroupPtr alternating_group(int n);  // n <= 5
GroupPtr symmetric_group(int n);    // n <= 5
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group_perm(int n);  // order 2n, on n points

GroupPresentation cyclic_presentation(int k);
GroupPresentation dihedral_presentation(int n);  // <r, s | r^n, s^2, (r s)^2>
GroupPresentation prism_presentation(int m, int n);  // <x, y | x y x^-1 y, x^2m y^-n>

struct ToddCoxeterResult {
  Outcome outcome = Outcome::Inconclusive;
  GroupPtr group;          // set when the enumeration closed
  size_t cosets_defined = 0;
  std::string detail;
};

/// Coset enumeration over the trivial subgroup (HLT with coincidences).
ToddCoxeterResult todd_coxeter(const GroupPresentation& pres, size_t workspace_bound);

/// Invariant factors of the abelianization: Smith normal form of the
/// exponent-sum matrix. Factors of 1 are dropped; 0 entries report free
/// rank. Cyclic iff at most one nontrivial factor.
std::vector<BigInt> abelianization(const GroupPresentation& pres);
bool is_cyclic_abelianization(const GroupPresentation& pres);

struct GroupAlgebraElement {
  GroupPtr group;
  Field ring = Field::Z();
  Vec coeff;  // indexed by element

  static GroupAlgebraElement zero(GroupPtr g, Field r);
  static GroupAlgebraElement identity(GroupPtr g, Field r);
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
  GroupAlgebraElement scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const GroupAlgebraElement& o) const;
  bool is_central() const;
  std::string str() const;
};

/// One sum per conjugacy class, in canonical class order.
std::vector<GroupAlgebraElement> conjugacy_class_sums(GroupPtr g, Field ring);

/// Element from class-sum coordinates: "49 + 26*C2 - 10*C3 - 16*C4" where
/// C<i> is the i-th canonical class sum (C1 is the identity class).
GroupAlgebraElement parse_class_sum_expr(const std::string& text, GroupPtr g, Field ring);

struct CentralUnitResult {
  Outcome outcome = Outcome::Fail;
  std::string detail;
  std::optional<GroupAlgebraElement> inverse;
};

/// Solves u w = 1 in the center; over Z the solution must be integral, and
/// the certificate u w = w u = 1 is re-verified by convolution.
CentralUnitResult verify_central_unit(const GroupAlgebraElement& u);

GroupAlgebraElement reduce_mod_p(const GroupAlgebraElement& u, long p);

/// Least n <= max_power with u^n = 1, else nullopt.
std::optional<long> group_algebra_element_order(const GroupAlgebraElement& u, long max_power);

struct CenterUnitSurvey {
  Outcome outcome = Outcome::Inconclusive;
  long long scanned = 0;
  long long units = 0;
  std::map<long, long long> order_histogram;
  long long scalar_units = 0;            // lambda * identity
  long long single_class_units = 0;      // lambda * (one class sum)
  std::string detail;
};

/// Exhaustive enumeration of the units of Z(F_p[G]); p^#classes <= budget.
CenterUnitSurvey center_unit_survey(GroupPtr g, long p, long long budget);

struct TrivialityScan {
  long long scanned = 0;
  long long units_found = 0;
  bool all_trivial = true;  // every unit found was +-identity
};

/// Bounded-coefficient sanity scan over central elements of Z[G] with
/// class-sum coefficients in [-bound, bound]. Not exhaustive.
TrivialityScan central_unit_scan(GroupPtr g, long bound);

}  // namespace palg
